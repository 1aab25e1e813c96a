#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "gkp/errors.hpp"

namespace gkp {

// Arbitrary-precision nonnegative integer. lcm(1,...,k) outgrows 64 bits
// around k = 47, so every value-level quantity in this library uses Nat.
using Nat = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// gcd(0, 0) == 0.
Nat gcd(const Nat& a, const Nat& b);

// Least common multiple; both operands must be >= 1.
Nat lcm(const Nat& a, const Nat& b);

// lcm of every integer in [a, b]; requires 1 <= a <= b.
Nat lcm_range(const Nat& a, const Nat& b);

Nat factorial(std::int64_t k);

// Largest e with p^e | n. Requires p >= 2 prime and n >= 1 (v_p(0) is
// infinite and rejected).
int vp(std::int64_t p, const Nat& n);

// Largest e >= 0 with p^e <= k, i.e. max of v_p(i) over 1 <= i <= k.
// Integer arithmetic only; exact at prime-power boundaries.
int e_pk(std::int64_t p, std::int64_t k);

// Deterministic trial division; intended for the small p that occur here.
bool is_prime(std::int64_t n);

struct PrimeTable {
    std::int64_t bound = 0;
    std::vector<std::int64_t> primes; // all primes in [2, bound], ascending

    bool contains(std::int64_t p) const;
};

PrimeTable sieve(std::int64_t bound);

struct PrimePower {
    std::int64_t prime = 0;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer held as its factorization: strictly increasing primes,
// exponents >= 1. The empty list is 1.
struct FactoredNat {
    std::vector<PrimePower> factors;

    static FactoredNat one() { return {}; }

    // Appends (p, e); p must exceed the last prime already present.
    void push(std::int64_t p, int e);

    Nat expand() const;
    int exponent_of(std::int64_t p) const; // 0 when p does not occur
    bool divides(const FactoredNat& m) const;
    FactoredNat without(std::int64_t p) const;
    std::string str() const; // "2^3 * 3 * 5", "1" for the empty product

    friend bool operator==(const FactoredNat&, const FactoredNat&) = default;
};

// Factorization of lcm(1,...,k): exponent of p is e_pk(p, k). Requires k >= 1.
FactoredNat factored_lcm_upto(std::int64_t k);
FactoredNat factored_lcm_upto(std::int64_t k, const PrimeTable& primes);

// Factors n over the given table; n must have no prime factor outside it.
FactoredNat factor_smooth(const Nat& n, const PrimeTable& primes);

// All divisors, ascending. The expanded value must fit in 64 bits.
std::vector<std::int64_t> divisors(const FactoredNat& f);

} // namespace gkp
