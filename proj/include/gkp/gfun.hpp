#pragma once

#include <cstdint>
#include <vector>

#include "gkp/arith.hpp"

namespace gkp {

// The window {n, n+1, ..., n+k} of k+1 consecutive integers.
struct Window {
    std::int64_t n = 0;
    std::int64_t k = 0;
};

// g_k(n) = n(n+1)...(n+k) / lcm(n, ..., n+k), the quotient definition.
// Requires n >= 1; the extension to all of Z goes through g_rec.
Nat g_direct(std::int64_t n, std::int64_t k);

// g_0(n) = 1; g_k(n) = gcd(k!, (n+k) * g_{k-1}(n)). Defined for every
// integer n, and equal to g_direct(n, k) when n >= 1.
Nat g_rec(std::int64_t n, std::int64_t k);

// The whole row g_0(n), g_1(n), ..., g_kmax(n) in one linear pass.
std::vector<Nat> g_rec_row(std::int64_t n, std::int64_t k_max);

// Number of multiples of p^e in the window, floor((n+k)/p^e) - floor((n-1)/p^e).
// Requires w.n >= 1, p >= 2, e >= 1.
std::int64_t count_multiples(const Window& w, std::int64_t p, int e);

// v_p(g_k(n)), computed without forming g_k(n):
//   sum over e = 1..e_pk(p,k) of (#{m in window : p^e | m} - 1).
// Each summand is >= 0 since p^e <= k puts a multiple of p^e in any k+1
// consecutive integers. Requires n >= 1, k >= 1, p prime.
int g_p(std::int64_t n, std::int64_t k, std::int64_t p);

// Reassembles g_k(n) as prod over primes p <= k of p^{g_p(n,k,p)}.
// For k <= 1 the product is empty and the value is 1.
Nat g_via_primes(std::int64_t n, std::int64_t k);

} // namespace gkp
