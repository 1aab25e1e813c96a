// Acceptance harness: one line per criterion, exit code = number of failures.
// Each criterion re-derives its expectations from an oracle that is
// independent of the code path under test; runtime ceilings are part of the
// criteria and are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gkp/arith.hpp"
#include "gkp/gfun.hpp"
#include "gkp/period.hpp"
#include "gkp/verify.hpp"
#include "oracle_helpers.hpp"

namespace {

using gkp::Nat;
using gkp::PeriodResult;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty())
            detail += "; ";
        detail += why;
    }
};

struct Criterion {
    std::string name;
    double time_limit_s; // 0 = no ceiling
    std::function<Outcome()> run;
};

Outcome oracle_equals_closed_form() {
    Outcome out;
    for (std::int64_t k = 0; k <= 14; ++k) {
        const PeriodResult measured = gkp::oracle_period(k);
        const PeriodResult closed = gkp::exact_period(k);
        if (measured.period != closed.period ||
            measured.period_factored != closed.period_factored ||
            measured.bad_prime != closed.bad_prime ||
            measured.lcm_upto_k_factored != closed.lcm_upto_k_factored) {
            std::ostringstream os;
            os << "k=" << k << ": oracle=" << measured.period << ", closed=" << closed.period;
            out.fail(os.str());
        }
    }
    return out;
}

Outcome golden_period_table() {
    Outcome out;
    const std::vector<std::int64_t> golden{1,   1,   2,   3,    12,   20,  60,
                                           105, 280, 504, 2520, 27720, 27720};
    for (std::int64_t k = 0; k <= 12; ++k) {
        const Nat want(golden[static_cast<std::size_t>(k)]);
        const Nat measured = gkp::oracle_period(k).period;
        const Nat closed = gkp::exact_period(k).period;
        if (measured != want || closed != want) {
            std::ostringstream os;
            os << "k=" << k << ": want " << want << ", oracle " << measured << ", closed "
               << closed;
            out.fail(os.str());
        }
    }
    for (std::int64_t k : {4, 6, 10, 12}) { // k+1 prime forces P_k = lcm(1..k)
        if (gkp::exact_period(k).period != gkp::lcm_range(1, k)) {
            std::ostringstream os;
            os << "k=" << k << ": period != lcm(1..k)";
            out.fail(os.str());
        }
    }
    return out;
}

Outcome three_way_equality() {
    Outcome out;
    std::int64_t points = 0, mismatches = 0;
    for (std::int64_t n = 1; n <= 2000; ++n) {
        const std::vector<Nat> rec = gkp::g_rec_row(n, 10);
        for (std::int64_t k = 0; k <= 10; ++k) {
            ++points;
            const Nat direct = gkp::g_direct(n, k);
            if (direct != rec[static_cast<std::size_t>(k)] ||
                direct != gkp::g_via_primes(n, k))
                ++mismatches;
        }
    }
    std::ostringstream os;
    os << points << " grid points, " << mismatches << " mismatches";
    out.detail = os.str();
    if (mismatches != 0)
        out.ok = false;
    return out;
}

Outcome g0_equals_factorial() {
    Outcome out;
    Nat f = 1;
    for (std::int64_t k = 0; k <= 20; ++k) {
        if (k > 0)
            f *= k;
        if (gkp::g_rec(0, k) != f) {
            std::ostringstream os;
            os << "k=" << k;
            out.fail(os.str());
        }
    }
    return out;
}

Outcome t7_fixed_point() {
    Outcome out;
    const gkp::PrimeTable primes = gkp::sieve(200);
    for (std::int64_t k = 1; k <= 200; ++k) {
        if (!gkp::t7_identity_check(k, gkp::exact_period(k, primes).period)) {
            std::ostringstream os;
            os << "k=" << k;
            out.fail(os.str());
        }
    }
    return out;
}

Outcome sandwich_divisibility() {
    Outcome out;
    const gkp::PrimeTable primes = gkp::sieve(501);
    for (std::int64_t k = 1; k <= 500; ++k) {
        const PeriodResult r = gkp::exact_period(k, primes);
        const gkp::FactoredNat lower = gkp::hong_yang_lower_factored(k, primes);
        if (!lower.divides(r.period_factored) ||
            !r.period_factored.divides(r.lcm_upto_k_factored)) {
            std::ostringstream os;
            os << "k=" << k;
            out.fail(os.str());
        }
    }
    return out;
}

Outcome bad_prime_uniqueness_scan() {
    Outcome out;
    const gkp::CheckReport r = gkp::check_bad_prime_uniqueness(1000000);
    if (!r.passed) {
        out.fail("counterexample: " + r.counterexamples.front());
    }
    out.detail = "2 <= k <= 1e6";
    return out;
}

Outcome six_power_family() {
    Outcome out;
    for (std::int64_t k : {35, 215}) {
        const gkp::PrimeTable primes = gkp::sieve(k);
        const PeriodResult r = gkp::exact_period(k, primes);
        if (r.period != gkp::lcm_range(1, k) ||
            r.period_factored != gkp::factored_lcm_upto(k, primes)) {
            std::ostringstream os;
            os << "k=" << k << ": period != lcm(1..k)";
            out.fail(os.str());
        }
    }
    // cross-check for k = 35: the per-prime hypothesis holds at every p <= 35
    for (std::int64_t p : gkp::sieve(35).primes) {
        if (gkp::vp(p, Nat(36)) >= gkp::e_pk(p, 35)) {
            std::ostringstream os;
            os << "hypothesis fails at p=" << p;
            out.fail(os.str());
        }
    }
    return out;
}

Outcome per_prime_period_bound() {
    Outcome out;
    for (std::int64_t k = 2; k <= 10; ++k) {
        for (std::int64_t p : gkp::sieve(k).primes) {
            const std::int64_t measured = testsupport::per_prime_oracle_period(k, p);
            std::int64_t bound = 1;
            for (int i = 0; i < gkp::e_pk(p, k); ++i)
                bound *= p;
            if (bound % measured != 0) {
                std::ostringstream os;
                os << "k=" << k << ", p=" << p << ": period " << measured
                   << " does not divide " << bound;
                out.fail(os.str());
            }
        }
    }
    return out;
}

Outcome mutation_sensitivity() {
    Outcome out;
    const gkp::CheckReport r = gkp::check_product_formula_vs_oracle(10, /*mutate=*/true);
    if (r.passed) {
        out.fail("inverted closed form was not caught");
        return out;
    }
    if (r.counterexamples.empty()) {
        out.fail("failure reported without a counterexample");
        return out;
    }
    out.detail = "caught: " + r.counterexamples.front();
    return out;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"oracle equals closed form for 0 <= k <= 14", 60.0, oracle_equals_closed_form},
        {"golden period table for k = 0..12", 0.0, golden_period_table},
        {"g_direct = g_rec = g_via_primes on 1<=n<=2000, 0<=k<=10", 10.0,
         three_way_equality},
        {"g_rec(0, k) = k! for 0 <= k <= 20", 0.0, g0_equals_factorial},
        {"t7 identity fixed point for 1 <= k <= 200", 30.0, t7_fixed_point},
        {"divisibility sandwich for 1 <= k <= 500", 0.0, sandwich_divisibility},
        {"bad-prime uniqueness for k <= 1e6", 60.0, bad_prime_uniqueness_scan},
        {"P_k = lcm(1..k) for k = 35 and 215, hypothesis checked", 0.0, six_power_family},
        {"per-prime period divides p^e_pk for 2 <= k <= 10", 0.0, per_prime_period_bound},
        {"inverting the vanishing condition breaks oracle agreement", 0.0,
         mutation_sensitivity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criteria[i].time_limit_s > 0 && secs > criteria[i].time_limit_s) {
            std::ostringstream os;
            os << "exceeded " << criteria[i].time_limit_s << "s ceiling";
            out.fail(os.str());
        }
        if (!out.ok)
            ++failures;
        std::printf("[%s] criterion %02zu: %s (%.2fs)%s%s\n", out.ok ? "PASS" : "FAIL",
                    i + 1, criteria[i].name.c_str(), secs,
                    out.detail.empty() ? "" : " -- ", out.detail.c_str());
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failures,
                criteria.size());
    return failures;
}
