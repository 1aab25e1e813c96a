#include "gkp/arith.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace gkp {

namespace mp = boost::multiprecision;

Nat gcd(const Nat& a, const Nat& b) {
    return mp::gcd(a, b);
}

Nat lcm(const Nat& a, const Nat& b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("lcm: operands must be >= 1");
    return a / mp::gcd(a, b) * b;
}

Nat lcm_range(const Nat& a, const Nat& b) {
    if (a < 1 || a > b)
        throw std::invalid_argument("lcm_range: requires 1 <= a <= b");
    Nat acc = a;
    for (Nat i = a + 1; i <= b; ++i) {
        // gcd(acc, i) = gcd(acc mod i, i); the accumulator dwarfs i, so one
        // division keeps the gcd itself on small operands.
        acc = acc / mp::gcd(acc % i, i) * i;
    }
    return acc;
}

Nat factorial(std::int64_t k) {
    if (k < 0)
        throw std::invalid_argument("factorial: k must be >= 0");
    Nat f = 1;
    for (std::int64_t j = 2; j <= k; ++j)
        f *= j;
    return f;
}

int vp(std::int64_t p, const Nat& n) {
    if (p < 2)
        throw std::invalid_argument("vp: p must be a prime >= 2");
    if (n == 0)
        throw std::invalid_argument("vp: v_p(0) is infinite");
    const Nat pn(p);
    Nat m = n, q, r;
    int e = 0;
    for (;;) {
        mp::divide_qr(m, pn, q, r);
        if (r != 0)
            break;
        m.swap(q);
        ++e;
    }
    return e;
}

int e_pk(std::int64_t p, std::int64_t k) {
    if (p < 2)
        throw std::invalid_argument("e_pk: p must be a prime >= 2");
    if (k < 1)
        throw std::invalid_argument("e_pk: k must be >= 1");
    if (p > k)
        return 0;
    // pw <= k/p  <=>  pw*p <= k, so the loop never overflows.
    std::int64_t pw = p;
    int e = 1;
    while (pw <= k / p) {
        pw *= p;
        ++e;
    }
    return e;
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0 || n % 3 == 0)
        return false;
    for (std::int64_t d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0)
            return false;
    }
    return true;
}

bool PrimeTable::contains(std::int64_t p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

PrimeTable sieve(std::int64_t bound) {
    if (bound < 0)
        throw std::invalid_argument("sieve: bound must be >= 0");
    PrimeTable table;
    table.bound = bound;
    if (bound < 2)
        return table;
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        table.primes.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return table;
}

void FactoredNat::push(std::int64_t p, int e) {
    if (p < 2 || e < 1)
        throw std::invalid_argument("FactoredNat::push: need p >= 2 and e >= 1");
    if (!factors.empty() && factors.back().prime >= p)
        throw std::invalid_argument("FactoredNat::push: primes must be strictly increasing");
    factors.push_back({p, e});
}

Nat FactoredNat::expand() const {
    Nat v = 1;
    for (const auto& [p, e] : factors)
        v *= mp::pow(Nat(p), static_cast<unsigned>(e));
    return v;
}

int FactoredNat::exponent_of(std::int64_t p) const {
    for (const auto& f : factors)
        if (f.prime == p)
            return f.exponent;
    return 0;
}

bool FactoredNat::divides(const FactoredNat& m) const {
    for (const auto& f : factors)
        if (f.exponent > m.exponent_of(f.prime))
            return false;
    return true;
}

FactoredNat FactoredNat::without(std::int64_t p) const {
    FactoredNat out;
    for (const auto& f : factors)
        if (f.prime != p)
            out.factors.push_back(f);
    return out;
}

std::string FactoredNat::str() const {
    if (factors.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first)
            os << " * ";
        first = false;
        os << p;
        if (e > 1)
            os << '^' << e;
    }
    return os.str();
}

FactoredNat factored_lcm_upto(std::int64_t k) {
    return factored_lcm_upto(k, sieve(k));
}

FactoredNat factored_lcm_upto(std::int64_t k, const PrimeTable& primes) {
    if (k < 1)
        throw std::invalid_argument("factored_lcm_upto: k must be >= 1");
    if (primes.bound < k)
        throw std::invalid_argument("factored_lcm_upto: prime table bound below k");
    FactoredNat out;
    for (std::int64_t p : primes.primes) {
        if (p > k)
            break;
        out.push(p, e_pk(p, k));
    }
    return out;
}

FactoredNat factor_smooth(const Nat& n, const PrimeTable& primes) {
    if (n < 1)
        throw std::invalid_argument("factor_smooth: n must be >= 1");
    FactoredNat out;
    Nat m = n, q, r;
    for (std::int64_t p : primes.primes) {
        if (m == 1)
            break;
        const Nat pn(p);
        int e = 0;
        for (;;) {
            mp::divide_qr(m, pn, q, r);
            if (r != 0)
                break;
            m.swap(q);
            ++e;
        }
        if (e > 0)
            out.push(p, e);
    }
    if (m != 1)
        throw invariant_violation("factor_smooth: value has a prime factor outside the table");
    return out;
}

std::vector<std::int64_t> divisors(const FactoredNat& f) {
    if (f.expand() > std::numeric_limits<std::int64_t>::max())
        throw std::invalid_argument("divisors: value exceeds 64 bits");
    std::vector<std::int64_t> divs{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = divs.size();
        std::int64_t pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace gkp
