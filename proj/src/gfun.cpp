#include "gkp/gfun.hpp"

#include <cassert>

namespace gkp {

namespace mp = boost::multiprecision;

Nat g_direct(std::int64_t n, std::int64_t k) {
    if (n < 1)
        throw std::invalid_argument("g_direct: requires n >= 1 (use g_rec for the Z extension)");
    if (k < 0)
        throw std::invalid_argument("g_direct: k must be >= 0");
    Nat prod = n, l = n;
    for (std::int64_t i = 1; i <= k; ++i) {
        const Nat m(n + i);
        prod *= m;
        l = l / mp::gcd(l, m) * m;
    }
    Nat q, r;
    mp::divide_qr(prod, l, q, r);
    if (r != 0)
        throw invariant_violation("g_direct: window product not divisible by window lcm");
    return q;
}

Nat g_rec(std::int64_t n, std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("g_rec: k must be >= 0");
    Nat g = 1, f = 1;
    for (std::int64_t j = 1; j <= k; ++j) {
        f *= j; // j!
        const Nat t = Nat(n + j) * g;
        g = mp::gcd(f, mp::abs(t)); // gcd(f, 0) = f covers n + j == 0
    }
    return g;
}

std::vector<Nat> g_rec_row(std::int64_t n, std::int64_t k_max) {
    if (k_max < 0)
        throw std::invalid_argument("g_rec_row: k_max must be >= 0");
    std::vector<Nat> row;
    row.reserve(static_cast<std::size_t>(k_max) + 1);
    Nat g = 1, f = 1;
    row.push_back(g);
    for (std::int64_t j = 1; j <= k_max; ++j) {
        f *= j;
        const Nat t = Nat(n + j) * g;
        g = mp::gcd(f, mp::abs(t));
        row.push_back(g);
    }
    return row;
}

std::int64_t count_multiples(const Window& w, std::int64_t p, int e) {
    if (w.n < 1)
        throw std::invalid_argument("count_multiples: window must start at n >= 1");
    if (w.k < 0)
        throw std::invalid_argument("count_multiples: window length must be >= 1");
    if (p < 2 || e < 1)
        throw std::invalid_argument("count_multiples: need p >= 2 and e >= 1");
    const std::int64_t hi = w.n + w.k;
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) {
        if (q > hi / p)
            return 0; // p^e exceeds the window's top element
        q *= p;
    }
    return hi / q - (w.n - 1) / q;
}

int g_p(std::int64_t n, std::int64_t k, std::int64_t p) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("g_p: requires n >= 1 and k >= 1");
    if (!is_prime(p))
        throw std::invalid_argument("g_p: p must be prime");
    const int emax = e_pk(p, k);
    int sum = 0;
    for (int e = 1; e <= emax; ++e) {
        const std::int64_t c = count_multiples({n, k}, p, e);
        assert(c >= 1);
        sum += static_cast<int>(c) - 1;
    }
    return sum;
}

Nat g_via_primes(std::int64_t n, std::int64_t k) {
    if (n < 1)
        throw std::invalid_argument("g_via_primes: requires n >= 1");
    if (k < 0)
        throw std::invalid_argument("g_via_primes: k must be >= 0");
    Nat out = 1;
    if (k <= 1)
        return out; // no primes <= 1; matches g_0 = g_1 = 1
    for (std::int64_t p : sieve(k).primes)
        out *= mp::pow(Nat(p), static_cast<unsigned>(g_p(n, k, p)));
    return out;
}

} // namespace gkp
