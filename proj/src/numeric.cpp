#include "eps/numeric.hpp"
#include "eps/errors.hpp"

#include <numeric>
#include <stdexcept>

namespace eps::num {

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    __int128 r = static_cast<__int128>(a) * b % m;
    if (r < 0)
        r += m;
    return static_cast<std::int64_t>(r);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m)
{
    if (m == 1)
        return 0;
    if (exp < 0)
        return pow_mod(inv_mod(base, m), -exp, m);
    std::int64_t acc = 1, b = mod(base, m);
    while (exp > 0) {
        if (exp & 1)
            acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    return acc;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m)
{
    std::int64_t r0 = m, r1 = mod(a, m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw std::domain_error("inv_mod: argument not invertible");
    return mod(s0, m);
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t phi = n;
    for (std::int64_t p : prime_factors(n))
        phi = phi / p * (p - 1);
    return phi;
}

std::int64_t radical(std::int64_t n)
{
    std::int64_t r = 1;
    for (std::int64_t p : prime_factors(n))
        r *= p;
    return r;
}

std::int64_t ipow(std::int64_t b, std::int64_t e)
{
    if (e < 0)
        throw std::domain_error("ipow: negative exponent");
    __int128 acc = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        acc *= b;
        if (acc > INT64_MAX || acc < INT64_MIN)
            throw std::overflow_error("ipow: 64-bit overflow");
    }
    return static_cast<std::int64_t>(acc);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b, std::int64_t limit)
{
    __int128 l = static_cast<__int128>(a) / std::gcd(a, b) * b;
    if (l > limit)
        throw too_large_error("lcm exceeds configured bound");
    return static_cast<std::int64_t>(l);
}

Valuation p_valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0)
        throw std::domain_error("p_valuation: zero argument");
    Valuation val{0, n};
    while (val.unit % p == 0) {
        val.unit /= p;
        ++val.v;
    }
    return val;
}

std::int64_t primitive_root(std::int64_t p)
{
    if (p == 2)
        throw unsupported_prime_error("p = 2 is not supported");
    if (!is_prime(p))
        throw std::invalid_argument("primitive_root: p is not prime");
    const std::int64_t m = p * p;
    const std::int64_t order = p * (p - 1);
    const auto factors = prime_factors(order);
    for (std::int64_t g = 2; g < m; ++g) {
        if (g % p == 0)
            continue;
        bool primitive = true;
        for (std::int64_t q : factors) {
            if (pow_mod(g, order / q, m) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            return g;
    }
    throw invariant_violation_error("primitive_root: search exhausted");
}

} // namespace eps::num
