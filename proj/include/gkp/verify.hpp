#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gkp/arith.hpp"

namespace gkp {

// One verifiable statement each; run_all executes all twelve.
enum class StatementId {
    recursion_consistency,
    g0_factorial,
    t7_fixed_point,
    lcm_absorption,
    hy_divides,
    hy_multiple,
    valuation_theorem,
    vanishing_lemma,
    product_formula_vs_oracle,
    bad_prime_uniqueness,
    prime_successor,
    six_power_family,
};

inline constexpr std::array<StatementId, 12> kAllStatements = {
    StatementId::recursion_consistency, StatementId::g0_factorial,
    StatementId::t7_fixed_point,        StatementId::lcm_absorption,
    StatementId::hy_divides,            StatementId::hy_multiple,
    StatementId::valuation_theorem,     StatementId::vanishing_lemma,
    StatementId::product_formula_vs_oracle, StatementId::bad_prime_uniqueness,
    StatementId::prime_successor,       StatementId::six_power_family,
};

const char* to_string(StatementId id);
std::optional<StatementId> parse_statement(std::string_view name);

inline constexpr std::size_t kCounterexampleCap = 10;

struct CheckReport {
    StatementId id{};
    std::string params; // parameter ranges the check scanned
    bool passed = false;
    std::vector<std::string> counterexamples; // first kCounterexampleCap, scan order
    std::chrono::duration<double> elapsed{};
    std::string notes; // e.g. marks checks that rely on the closed form
};

// Every point of the grid 1 <= n <= n_max, 0 <= k <= k_max agrees across
// g_direct, g_rec, and g_via_primes. Guards: k_max <= 12, n_max <= 1e5.
CheckReport check_recursion_consistency(std::int64_t k_max, std::int64_t n_max);

// g_rec(0, k) = k! for 0 <= k <= k_max. Guard: k_max <= 30.
CheckReport check_g0_factorial(std::int64_t k_max);

// The period is a fixed point of
//   P = lcm(1,...,k+1)/(k+1) * gcd(P+k+1, lcm(P+1,...,P+k)).
CheckReport check_t7_fixed_point(std::int64_t k_max);

// lcm(P, P+1, ..., P+k) = lcm(P+1, ..., P+k) at P = P_k.
CheckReport check_lcm_absorption(std::int64_t k_max);

// P_k divides lcm(1,...,k), on factored forms.
CheckReport check_hy_divides(std::int64_t k_max);

// lcm(1,...,k+1)/(k+1) divides P_k, on factored forms.
CheckReport check_hy_multiple(std::int64_t k_max);

// Both directions of the divisibility sandwich. Guard: k_max <= 1e4.
std::array<CheckReport, 2> check_sandwich(std::int64_t k_max);

// For primes p <= k with v_p(k+1) < e_pk(p,k): v_p(P_k) = e_pk(p,k),
// with P_k measured by the brute-force oracle. Guard: k_max <= 14.
CheckReport check_valuation_theorem(std::int64_t k_max);

// For primes p <= k with v_p(k+1) >= e_pk(p,k): v_p(P_k) = 0, with P_k
// measured by the brute-force oracle. Guard: k_max <= 14.
CheckReport check_vanishing_lemma(std::int64_t k_max);

// Closed form equals the brute-force oracle for every k <= k_max.
// `mutate` swaps in the deliberately inverted closed form; the run must
// then fail, proving the comparison is not vacuous.
CheckReport check_product_formula_vs_oracle(std::int64_t k_max, bool mutate = false);

// No k in [2, k_max] has two primes with v_p(k+1) >= e_pk(p,k).
// Guard: k_max <= 1e7.
CheckReport check_bad_prime_uniqueness(std::int64_t k_max);

// Whenever k+1 is prime, P_k = lcm(1,...,k).
CheckReport check_prime_successor(std::int64_t k_max);

// For k = 6^r - 1, P_k = lcm(1,...,k), and the zero-exponent condition
// fails at every prime p <= k (checked directly).
CheckReport check_six_power_family(std::span<const int> r_values);

enum class Profile { quick, full };

const char* to_string(Profile p);
std::optional<Profile> parse_profile(std::string_view name);

// Runs all twelve statements with the profile's parameter ranges; quick
// finishes in seconds, full in minutes.
std::vector<CheckReport> run_all(Profile profile);

CheckReport run_statement(StatementId id, Profile profile);

} // namespace gkp
