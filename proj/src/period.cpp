#include "gkp/period.hpp"

#include <limits>
#include <sstream>

#include "gkp/gfun.hpp"

namespace gkp {

namespace mp = boost::multiprecision;

const char* to_string(PeriodMethod m) {
    return m == PeriodMethod::closed_form ? "closed_form" : "oracle";
}

namespace {

// The single source of the vanishing condition; `invert` exists only for
// the mutation hook. Assumes p prime, p <= k, k >= 1.
int rule_exponent(std::int64_t k, std::int64_t p, bool invert) {
    const int e = e_pk(p, k);
    const bool vanishes = vp(p, Nat(k + 1)) >= e;
    if (vanishes != invert)
        return 0;
    return e;
}

PeriodResult assemble_closed_form(std::int64_t k, const PrimeTable& primes, bool invert) {
    if (k < 0)
        throw std::invalid_argument("exact_period: k must be >= 0");
    if (primes.bound < k)
        throw std::invalid_argument("exact_period: prime table bound below k");
    PeriodResult res;
    res.k = k;
    res.method = PeriodMethod::closed_form;
    std::vector<std::int64_t> dropped;
    for (std::int64_t p : primes.primes) {
        if (p > k)
            break;
        res.lcm_upto_k_factored.push(p, e_pk(p, k));
        const int e = rule_exponent(k, p, invert);
        if (e == 0)
            dropped.push_back(p);
        else
            res.period_factored.push(p, e);
    }
    if (!invert && dropped.size() > 1) {
        std::ostringstream os;
        os << "exact_period: " << dropped.size() << " primes vanish at k = " << k
           << ", falsifying the uniqueness statement";
        throw invariant_violation(os.str());
    }
    if (dropped.size() == 1)
        res.bad_prime = dropped.front();
    res.period = res.period_factored.expand();
    return res;
}

// Matches a measured period against the dichotomy: equal to lcm(1,...,k),
// or equal to it with exactly one prime's full power removed.
std::optional<std::int64_t> infer_bad_prime(const FactoredNat& period_f,
                                            const FactoredNat& lcm_f, std::int64_t k) {
    std::vector<std::int64_t> removed;
    for (const auto& [p, e] : lcm_f.factors) {
        const int got = period_f.exponent_of(p);
        if (got == e)
            continue;
        if (got == 0 && e == e_pk(p, k)) {
            removed.push_back(p);
            continue;
        }
        throw invariant_violation("oracle period differs from lcm(1,...,k) at a partial power");
    }
    if (!period_f.divides(lcm_f))
        throw invariant_violation("oracle period does not divide lcm(1,...,k)");
    if (removed.size() > 1)
        throw invariant_violation("oracle period removes more than one prime");
    if (removed.empty())
        return std::nullopt;
    return removed.front();
}

} // namespace

int period_p_exponent(std::int64_t k, std::int64_t p) {
    if (k < 1)
        throw std::invalid_argument("period_p_exponent: k must be >= 1");
    if (p > k)
        throw std::invalid_argument("period_p_exponent: requires p <= k");
    if (!is_prime(p))
        throw std::invalid_argument("period_p_exponent: p must be prime");
    return rule_exponent(k, p, false);
}

PeriodResult exact_period(std::int64_t k) {
    return assemble_closed_form(k, sieve(std::max<std::int64_t>(k, 0)), false);
}

PeriodResult exact_period(std::int64_t k, const PrimeTable& primes) {
    return assemble_closed_form(k, primes, false);
}

PeriodResult exact_period_mutated(std::int64_t k) {
    return assemble_closed_form(k, sieve(std::max<std::int64_t>(k, 0)), true);
}

std::vector<std::int64_t> bad_prime_candidates(std::int64_t k) {
    if (k < 2)
        throw std::invalid_argument("bad_prime_candidates: k must be >= 2");
    std::vector<std::int64_t> hits;
    for (std::int64_t p : sieve(k).primes)
        if (vp(p, Nat(k + 1)) >= e_pk(p, k))
            hits.push_back(p);
    return hits;
}

std::vector<std::int64_t> bad_prime_candidates_fast(std::int64_t k) {
    if (k < 2)
        throw std::invalid_argument("bad_prime_candidates_fast: k must be >= 2");
    std::vector<std::int64_t> hits;
    std::int64_t m = k + 1;
    const auto consider = [&](std::int64_t p, int v) {
        if (p <= k && v >= e_pk(p, k))
            hits.push_back(p);
    };
    for (std::int64_t d = 2; d <= m / d; d == 2 ? d = 3 : d += 2) {
        if (m % d != 0)
            continue;
        int v = 0;
        while (m % d == 0) {
            m /= d;
            ++v;
        }
        consider(d, v);
    }
    if (m > 1)
        consider(m, 1); // leftover factor is prime
    return hits;
}

std::optional<std::int64_t> bad_prime(std::int64_t k) {
    const std::vector<std::int64_t> hits = bad_prime_candidates(k);
    if (hits.size() > 1) {
        std::ostringstream os;
        os << "bad_prime: " << hits.size() << " candidates at k = " << k
           << ", falsifying the uniqueness statement";
        throw invariant_violation(os.str());
    }
    if (hits.empty())
        return std::nullopt;
    return hits.front();
}

std::pair<Nat, Nat> hong_yang_bounds(std::int64_t k) {
    if (k < 1)
        throw std::invalid_argument("hong_yang_bounds: k must be >= 1");
    Nat lower, r;
    mp::divide_qr(lcm_range(1, Nat(k + 1)), Nat(k + 1), lower, r);
    if (r != 0)
        throw invariant_violation("hong_yang_bounds: k+1 does not divide lcm(1,...,k+1)");
    return {lower, lcm_range(1, Nat(k))};
}

FactoredNat hong_yang_lower_factored(std::int64_t k) {
    return hong_yang_lower_factored(k, sieve(k + 1));
}

FactoredNat hong_yang_lower_factored(std::int64_t k, const PrimeTable& primes) {
    if (k < 1)
        throw std::invalid_argument("hong_yang_lower_factored: k must be >= 1");
    if (primes.bound < k + 1)
        throw std::invalid_argument("hong_yang_lower_factored: prime table bound below k+1");
    FactoredNat out;
    const Nat succ(k + 1);
    for (std::int64_t p : primes.primes) {
        if (p > k + 1)
            break;
        const int e = e_pk(p, k + 1) - vp(p, succ);
        if (e > 0)
            out.push(p, e);
    }
    return out;
}

bool t7_identity_check(std::int64_t k, const Nat& P) {
    if (k < 1 || P < 1)
        throw std::invalid_argument("t7_identity_check: requires k >= 1 and P >= 1");
    Nat mult, r;
    mp::divide_qr(lcm_range(1, Nat(k + 1)), Nat(k + 1), mult, r);
    if (r != 0)
        throw invariant_violation("t7_identity_check: k+1 does not divide lcm(1,...,k+1)");
    const Nat window_lcm = lcm_range(P + 1, P + k);
    const Nat succ = P + k + 1;
    return P == mult * mp::gcd(window_lcm % succ, succ);
}

bool lcm_absorption_check(std::int64_t k, const Nat& P) {
    if (k < 1 || P < 1)
        throw std::invalid_argument("lcm_absorption_check: requires k >= 1 and P >= 1");
    return lcm_range(P + 1, P + k) % P == 0;
}

PeriodResult oracle_period(std::int64_t k, int window_multiplier, bool override_guard) {
    if (k < 0)
        throw std::invalid_argument("oracle_period: k must be >= 0");
    if (window_multiplier < 1)
        throw std::invalid_argument("oracle_period: window_multiplier must be >= 1");
    if (k > kOracleKGuard && !override_guard) {
        std::ostringstream os;
        os << "oracle_period: k = " << k << " exceeds the tabulation guard (k <= "
           << kOracleKGuard << "); pass override_guard (CLI flag --force) to proceed";
        throw resource_limit_error(os.str());
    }

    const PrimeTable primes = sieve(std::max<std::int64_t>(k, 2));
    const FactoredNat lcm_f =
        k >= 2 ? factored_lcm_upto(k, primes) : FactoredNat::one();
    const Nat len_nat = lcm_f.expand();
    if (len_nat > std::numeric_limits<std::int64_t>::max() / window_multiplier)
        throw resource_limit_error("oracle_period: tabulation window does not fit in 64 bits");
    const std::int64_t len = len_nat.convert_to<std::int64_t>();
    const std::int64_t total = len * window_multiplier;

    std::vector<Nat> table;
    table.reserve(static_cast<std::size_t>(total));
    for (std::int64_t n = 1; n <= total; ++n)
        table.push_back(g_rec(n, k));

    PeriodResult res;
    res.k = k;
    res.method = PeriodMethod::oracle;
    res.lcm_upto_k_factored = lcm_f;
    res.period = minimal_table_period(table, lcm_f);
    res.period_factored = factor_smooth(res.period, primes);
    res.bad_prime = infer_bad_prime(res.period_factored, lcm_f, std::max<std::int64_t>(k, 1));
    return res;
}

} // namespace gkp
