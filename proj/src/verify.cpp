#include "gkp/verify.hpp"

#include <sstream>

#include "gkp/gfun.hpp"
#include "gkp/period.hpp"

namespace gkp {

namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kStatementNames[] = {
    "recursion_consistency", "g0_factorial",       "t7_fixed_point",
    "lcm_absorption",        "hy_divides",         "hy_multiple",
    "valuation_theorem",     "vanishing_lemma",    "product_formula_vs_oracle",
    "bad_prime_uniqueness",  "prime_successor",    "six_power_family",
};

constexpr const char* kClosedFormNote =
    "uses the closed-form period; brute-force tabulation is infeasible at this range";

struct Collector {
    std::vector<std::string> items;
    bool any = false;

    void add(std::string s) {
        any = true;
        if (items.size() < kCounterexampleCap)
            items.push_back(std::move(s));
    }
};

CheckReport finish(StatementId id, std::string params, Collector c, Clock::time_point t0,
                   std::string notes = {}) {
    CheckReport r;
    r.id = id;
    r.params = std::move(params);
    r.passed = !c.any;
    r.counterexamples = std::move(c.items);
    r.elapsed = Clock::now() - t0;
    r.notes = std::move(notes);
    return r;
}

std::string fmt_params(std::int64_t k_max) {
    std::ostringstream os;
    os << "k <= " << k_max;
    return os.str();
}

} // namespace

const char* to_string(StatementId id) {
    return kStatementNames[static_cast<std::size_t>(id)];
}

std::optional<StatementId> parse_statement(std::string_view name) {
    for (StatementId id : kAllStatements)
        if (name == to_string(id))
            return id;
    return std::nullopt;
}

const char* to_string(Profile p) {
    return p == Profile::quick ? "quick" : "full";
}

std::optional<Profile> parse_profile(std::string_view name) {
    if (name == "quick")
        return Profile::quick;
    if (name == "full")
        return Profile::full;
    return std::nullopt;
}

CheckReport check_recursion_consistency(std::int64_t k_max, std::int64_t n_max) {
    const auto t0 = Clock::now();
    if (k_max < 0 || n_max < 1)
        throw std::invalid_argument("check_recursion_consistency: need k_max >= 0, n_max >= 1");
    if (k_max > 12 || n_max > 100000)
        throw resource_limit_error(
            "check_recursion_consistency: guarded at k_max <= 12, n_max <= 1e5");
    Collector c;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const std::vector<Nat> rec = g_rec_row(n, k_max);
        for (std::int64_t k = 0; k <= k_max; ++k) {
            const Nat direct = g_direct(n, k);
            const Nat primes = g_via_primes(n, k);
            if (direct != rec[static_cast<std::size_t>(k)] || direct != primes) {
                std::ostringstream os;
                os << "n=" << n << ", k=" << k << ": direct=" << direct
                   << ", rec=" << rec[static_cast<std::size_t>(k)] << ", primes=" << primes;
                c.add(os.str());
            }
        }
    }
    std::ostringstream params;
    params << "1 <= n <= " << n_max << ", 0 <= k <= " << k_max;
    return finish(StatementId::recursion_consistency, params.str(), std::move(c), t0);
}

CheckReport check_g0_factorial(std::int64_t k_max) {
    const auto t0 = Clock::now();
    if (k_max < 0)
        throw std::invalid_argument("check_g0_factorial: k_max must be >= 0");
    if (k_max > 30)
        throw resource_limit_error("check_g0_factorial: guarded at k_max <= 30");
    Collector c;
    const std::vector<Nat> rec = g_rec_row(0, k_max);
    Nat f = 1;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        if (k > 0)
            f *= k;
        if (rec[static_cast<std::size_t>(k)] != f) {
            std::ostringstream os;
            os << "k=" << k << ": g_rec(0,k)=" << rec[static_cast<std::size_t>(k)]
               << ", k!=" << f;
            c.add(os.str());
        }
    }
    return finish(StatementId::g0_factorial, fmt_params(k_max), std::move(c), t0);
}

CheckReport check_t7_fixed_point(std::int64_t k_max) {
    const auto t0 = Clock::now();
    if (k_max < 1)
        throw std::invalid_argument("check_t7_fixed_point: k_max must be >= 1");
    Collector c;
    const PrimeTable primes = sieve(k_max);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const Nat period = exact_period(k, primes).period;
        if (!t7_identity_check(k, period)) {
            std::ostringstream os;
            os << "k=" << k << ": period=" << period << " is not a fixed point";
            c.add(os.str());
        }
    }
    return finish(StatementId::t7_fixed_point, fmt_params(k_max), std::move(c), t0,
                  kClosedFormNote);
}

CheckReport check_lcm_absorption(std::int64_t k_max) {
    const auto t0 = Clock::now();
    if (k_max < 1)
        throw std::invalid_argument("check_lcm_absorption: k_max must be >= 1");
    Collector c;
    const PrimeTable primes = sieve(k_max);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const Nat period = exact_period(k, primes).period;
        if (!lcm_absorption_check(k, period)) {
            std::ostringstream os;
            os << "k=" << k << ": " << period << " does not divide lcm(P+1,...,P+k)";
            c.add(os.str());
        }
    }
    return finish(StatementId::lcm_absorption, fmt_params(k_max), std::move(c), t0,
                  kClosedFormNote);
}

namespace {

CheckReport sandwich_side(StatementId id, std::int64_t k_max) {
    const auto t0 = Clock::now();
    if (k_max < 1)
        throw std::invalid_argument("check_sandwich: k_max must be >= 1");
    if (k_max > 10000)
        throw resource_limit_error("check_sandwich: guarded at k_max <= 1e4");
    Collector c;
    const PrimeTable primes = sieve(k_max + 1);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const PeriodResult r = exact_period(k, primes);
        if (id == StatementId::hy_divides) {
            if (!r.period_factored.divides(r.lcm_upto_k_factored)) {
                std::ostringstream os;
                os << "k=" << k << ": " << r.period_factored.str()
                   << " does not divide " << r.lcm_upto_k_factored.str();
                c.add(os.str());
            }
        } else {
            const FactoredNat lower = hong_yang_lower_factored(k, primes);
            if (!lower.divides(r.period_factored)) {
                std::ostringstream os;
                os << "k=" << k << ": " << lower.str() << " does not divide "
                   << r.period_factored.str();
                c.add(os.str());
            }
        }
    }
    return finish(id, fmt_params(k_max), std::move(c), t0, kClosedFormNote);
}

} // namespace

CheckReport check_hy_divides(std::int64_t k_max) {
    return sandwich_side(StatementId::hy_divides, k_max);
}

CheckReport check_hy_multiple(std::int64_t k_max) {
    return sandwich_side(StatementId::hy_multiple, k_max);
}

std::array<CheckReport, 2> check_sandwich(std::int64_t k_max) {
    return {check_hy_divides(k_max), check_hy_multiple(k_max)};
}

namespace {

// Shared scan for the two per-prime valuation statements about the oracle
// period: `expect_vanishing` selects which side of the condition is checked.
CheckReport oracle_valuation_scan(StatementId id, std::int64_t k_max, bool expect_vanishing) {
    const auto t0 = Clock::now();
    if (k_max < 0)
        throw std::invalid_argument("oracle valuation scan: k_max must be >= 0");
    if (k_max > 14)
        throw resource_limit_error("oracle valuation scan: guarded at k_max <= 14");
    Collector c;
    for (std::int64_t k = 2; k <= k_max; ++k) {
        const Nat period = oracle_period(k).period;
        for (std::int64_t p : sieve(k).primes) {
            const int e = e_pk(p, k);
            const bool vanishes = vp(p, Nat(k + 1)) >= e;
            if (vanishes != expect_vanishing)
                continue;
            const int got = vp(p, period);
            const int want = expect_vanishing ? 0 : e;
            if (got != want) {
                std::ostringstream os;
                os << "k=" << k << ", p=" << p << ": v_p(P_k)=" << got
                   << ", expected " << want;
                c.add(os.str());
            }
        }
    }
    std::ostringstream params;
    params << "2 <= k <= " << k_max << ", primes p <= k (oracle period)";
    return finish(id, params.str(), std::move(c), t0);
}

} // namespace

CheckReport check_valuation_theorem(std::int64_t k_max) {
    return oracle_valuation_scan(StatementId::valuation_theorem, k_max, false);
}

CheckReport check_vanishing_lemma(std::int64_t k_max) {
    return oracle_valuation_scan(StatementId::vanishing_lemma, k_max, true);
}

CheckReport check_product_formula_vs_oracle(std::int64_t k_max, bool mutate) {
    const auto t0 = Clock::now();
    if (k_max < 0)
        throw std::invalid_argument("check_product_formula_vs_oracle: k_max must be >= 0");
    if (k_max > kOracleKGuard)
        throw resource_limit_error("check_product_formula_vs_oracle: beyond the oracle guard");
    Collector c;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        const PeriodResult closed = mutate ? exact_period_mutated(k) : exact_period(k);
        const PeriodResult measured = oracle_period(k);
        if (closed.period != measured.period ||
            closed.period_factored != measured.period_factored) {
            std::ostringstream os;
            os << "k=" << k << ": closed_form=" << closed.period
               << ", oracle=" << measured.period;
            c.add(os.str());
        }
    }
    return finish(StatementId::product_formula_vs_oracle, fmt_params(k_max), std::move(c), t0,
                  mutate ? "closed form deliberately inverted (sensitivity run)" : "");
}

CheckReport check_bad_prime_uniqueness(std::int64_t k_max) {
    const auto t0 = Clock::now();
    if (k_max < 2)
        throw std::invalid_argument("check_bad_prime_uniqueness: k_max must be >= 2");
    if (k_max > 10000000)
        throw resource_limit_error("check_bad_prime_uniqueness: guarded at k_max <= 1e7");
    Collector c;
    for (std::int64_t k = 2; k <= k_max; ++k) {
        const std::vector<std::int64_t> hits = bad_prime_candidates_fast(k);
        if (hits.size() > 1) {
            std::ostringstream os;
            os << "k=" << k << ": primes";
            for (std::int64_t p : hits)
                os << ' ' << p;
            c.add(os.str());
        }
    }
    std::ostringstream params;
    params << "2 <= k <= " << k_max;
    return finish(StatementId::bad_prime_uniqueness, params.str(), std::move(c), t0);
}

CheckReport check_prime_successor(std::int64_t k_max) {
    const auto t0 = Clock::now();
    if (k_max < 1)
        throw std::invalid_argument("check_prime_successor: k_max must be >= 1");
    if (k_max > 1000000)
        throw resource_limit_error("check_prime_successor: guarded at k_max <= 1e6");
    Collector c;
    const PrimeTable primes = sieve(k_max + 1);
    for (std::int64_t k = 1; k <= k_max; ++k) {
        if (!primes.contains(k + 1))
            continue;
        const PeriodResult r = exact_period(k, primes);
        if (r.bad_prime || r.period_factored != r.lcm_upto_k_factored) {
            std::ostringstream os;
            os << "k=" << k << " (k+1 prime): period=" << r.period_factored.str()
               << ", lcm=" << r.lcm_upto_k_factored.str();
            c.add(os.str());
        }
    }
    std::ostringstream params;
    params << "k <= " << k_max << " with k+1 prime";
    return finish(StatementId::prime_successor, params.str(), std::move(c), t0,
                  kClosedFormNote);
}

CheckReport check_six_power_family(std::span<const int> r_values) {
    const auto t0 = Clock::now();
    Collector c;
    std::ostringstream params;
    params << "r in {";
    for (std::size_t i = 0; i < r_values.size(); ++i)
        params << (i ? ", " : "") << r_values[i];
    params << "}, k = 6^r - 1";
    for (int r : r_values) {
        if (r < 2 || r > 19)
            throw std::invalid_argument("check_six_power_family: requires 2 <= r <= 19");
        std::int64_t k = 1;
        for (int i = 0; i < r; ++i)
            k *= 6;
        k -= 1;
        const PrimeTable primes = sieve(k);
        const PeriodResult res = exact_period(k, primes);
        if (res.bad_prime || res.period_factored != res.lcm_upto_k_factored) {
            std::ostringstream os;
            os << "r=" << r << ", k=" << k << ": period " << res.period_factored.str()
               << " != lcm(1,...,k)";
            c.add(os.str());
        }
        // The closed form is cross-checked against the per-prime hypothesis:
        // every prime p <= k must keep its full power, i.e. v_p(k+1) < e_pk(p,k).
        for (std::int64_t p : primes.primes) {
            if (vp(p, Nat(k + 1)) >= e_pk(p, k)) {
                std::ostringstream os;
                os << "r=" << r << ", p=" << p << ": zero-exponent condition holds unexpectedly";
                c.add(os.str());
            }
        }
    }
    return finish(StatementId::six_power_family, params.str(), std::move(c), t0,
                  "closed form; per-prime hypothesis checked directly at every p <= k");
}

namespace {

struct ProfileParams {
    std::int64_t recursion_k, recursion_n;
    std::int64_t g0_k;
    std::int64_t t7_k;
    std::int64_t absorption_k;
    std::int64_t sandwich_k;
    std::int64_t oracle_k;
    std::int64_t uniqueness_k;
    std::int64_t successor_k;
    std::vector<int> six_r;
};

ProfileParams params_for(Profile p) {
    if (p == Profile::quick)
        return {8, 500, 20, 100, 100, 1000, 10, 1000, 1000, {2, 3}};
    return {10, 2000, 30, 200, 200, 10000, 14, 1000000, 10000, {2, 3}};
}

} // namespace

CheckReport run_statement(StatementId id, Profile profile) {
    const ProfileParams p = params_for(profile);
    switch (id) {
    case StatementId::recursion_consistency:
        return check_recursion_consistency(p.recursion_k, p.recursion_n);
    case StatementId::g0_factorial:
        return check_g0_factorial(p.g0_k);
    case StatementId::t7_fixed_point:
        return check_t7_fixed_point(p.t7_k);
    case StatementId::lcm_absorption:
        return check_lcm_absorption(p.absorption_k);
    case StatementId::hy_divides:
        return check_hy_divides(p.sandwich_k);
    case StatementId::hy_multiple:
        return check_hy_multiple(p.sandwich_k);
    case StatementId::valuation_theorem:
        return check_valuation_theorem(p.oracle_k);
    case StatementId::vanishing_lemma:
        return check_vanishing_lemma(p.oracle_k);
    case StatementId::product_formula_vs_oracle:
        return check_product_formula_vs_oracle(p.oracle_k);
    case StatementId::bad_prime_uniqueness:
        return check_bad_prime_uniqueness(p.uniqueness_k);
    case StatementId::prime_successor:
        return check_prime_successor(p.successor_k);
    case StatementId::six_power_family:
        return check_six_power_family(p.six_r);
    }
    throw std::invalid_argument("run_statement: unknown statement");
}

std::vector<CheckReport> run_all(Profile profile) {
    std::vector<CheckReport> reports;
    reports.reserve(kAllStatements.size());
    for (StatementId id : kAllStatements)
        reports.push_back(run_statement(id, profile));
    return reports;
}

} // namespace gkp
