#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gkp/arith.hpp"

namespace gkp {

enum class PeriodMethod { closed_form, oracle };

const char* to_string(PeriodMethod m);

// The exact (smallest positive) period P_k of g_k, together with its
// factorization and the factorization of lcm(1,...,k). P_k always divides
// lcm(1,...,k); it is either equal to it, or equal to it with one prime's
// full power p^{e_pk(p,k)} removed. That prime, when present, is bad_prime.
struct PeriodResult {
    std::int64_t k = 0;
    FactoredNat period_factored;
    Nat period;
    std::optional<std::int64_t> bad_prime;
    FactoredNat lcm_upto_k_factored;
    PeriodMethod method = PeriodMethod::closed_form;
};

// v_p(P_k) for p <= k:
//   0           when v_p(k+1) >= e_pk(p, k)
//   e_pk(p, k)  otherwise.
// Requires k >= 1 and p prime with p <= k.
int period_p_exponent(std::int64_t k, std::int64_t p);

// P_k assembled from period_p_exponent over every prime p <= k.
// k <= 1 gives period 1 (empty prime set).
PeriodResult exact_period(std::int64_t k);
PeriodResult exact_period(std::int64_t k, const PrimeTable& primes);

// Same assembly with the zero-exponent condition deliberately inverted.
// Exists so the test suite can prove the oracle comparison catches a wrong
// closed form; never used by the real computation.
PeriodResult exact_period_mutated(std::int64_t k);

// All primes p <= k with v_p(k+1) >= e_pk(p, k), scanning every prime <= k.
// The list provably has at most one element; callers that want that enforced
// use bad_prime().
std::vector<std::int64_t> bad_prime_candidates(std::int64_t k);

// Equivalent to bad_prime_candidates but O(sqrt k): a hit needs
// v_p(k+1) >= e_pk(p,k) >= 1, which forces p | k+1, so only the prime
// factors of k+1 are examined.
std::vector<std::int64_t> bad_prime_candidates_fast(std::int64_t k);

// The unique bad prime of k, if any. Throws invariant_violation if two
// candidates turn up (that would falsify the uniqueness statement).
std::optional<std::int64_t> bad_prime(std::int64_t k);

// (lcm(1,...,k+1)/(k+1), lcm(1,...,k)): P_k is a multiple of the first and
// a divisor of the second. Requires k >= 1.
std::pair<Nat, Nat> hong_yang_bounds(std::int64_t k);

// The lower bound in factored form: exponent of p is e_pk(p,k+1) - v_p(k+1).
FactoredNat hong_yang_lower_factored(std::int64_t k);
FactoredNat hong_yang_lower_factored(std::int64_t k, const PrimeTable& primes);

// True iff P = lcm(1,...,k+1)/(k+1) * gcd(P+k+1, lcm(P+1, ..., P+k)).
// P_k is a fixed point of this identity.
bool t7_identity_check(std::int64_t k, const Nat& P);

// True iff lcm(P, P+1, ..., P+k) = lcm(P+1, ..., P+k), i.e. P divides
// lcm(P+1, ..., P+k).
bool lcm_absorption_check(std::int64_t k, const Nat& P);

// Tabulating g_k over [1, lcm(1,...,k)] beyond this k is rejected unless
// overridden (lcm(1,...,21) is already ~2.3e8 entries).
inline constexpr std::int64_t kOracleKGuard = 20;

// Brute-force period: tabulates g_k(n) for n in [1, window_multiplier * L]
// with L = lcm(1,...,k), then returns the smallest divisor d of L with
// g_k(n) = g_k(n+d) for all n in [1, L]. Relies only on the previously
// published facts that g_k is periodic and L is a period; with
// window_multiplier >= 2 even that is re-verified against the table.
PeriodResult oracle_period(std::int64_t k, int window_multiplier = 1,
                           bool override_guard = false);

// Smallest divisor of the table's declared period that is itself a period.
// `table` holds f(1), ..., f(m*L) for some m >= 1, where L is the expansion
// of `period_factored` and is a genuine period of f. For m == 1 positions
// past the table wrap modulo L; for m >= 2 reads are direct and L itself is
// first re-verified. A minimal period always divides any period, so scanning
// divisors of L is exhaustive.
template <class T>
std::int64_t minimal_table_period(const std::vector<T>& table,
                                  const FactoredNat& period_factored) {
    const std::vector<std::int64_t> divs = divisors(period_factored);
    const std::int64_t len = divs.back(); // largest divisor is L itself
    if (table.empty() || table.size() % static_cast<std::size_t>(len) != 0)
        throw std::invalid_argument(
            "minimal_table_period: table length must be a positive multiple of the period");
    const std::size_t mult = table.size() / static_cast<std::size_t>(len);
    if (mult >= 2) {
        for (std::size_t i = 0; i + len < table.size(); ++i)
            if (table[i] != table[i + static_cast<std::size_t>(len)])
                throw invariant_violation(
                    "minimal_table_period: declared period is not a period of the table");
    }
    for (std::int64_t d : divs) {
        bool ok = true;
        for (std::int64_t i = 0; i < len; ++i) {
            const std::int64_t j = (mult >= 2) ? i + d : (i + d) % len;
            if (table[static_cast<std::size_t>(i)] != table[static_cast<std::size_t>(j)]) {
                ok = false;
                break;
            }
        }
        if (ok)
            return d;
    }
    throw invariant_violation("minimal_table_period: no divisor of the declared period works");
}

} // namespace gkp
