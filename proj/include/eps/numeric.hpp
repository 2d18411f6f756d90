#pragma once

// Small integer number theory helpers. Everything here works on quantities
// that fit comfortably in 64 bits (levels, moduli and exponents in this
// library stay below ~10^6).

#include <cstdint>
#include <vector>

namespace eps::num {

// Mathematically correct remainder in [0, m).
std::int64_t mod(std::int64_t a, std::int64_t m);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

// Distinct prime factors in increasing order.
std::vector<std::int64_t> prime_factors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

// Product of the distinct primes dividing n (1 for n = 1).
std::int64_t radical(std::int64_t n);

// b^e with overflow checking.
std::int64_t ipow(std::int64_t b, std::int64_t e);

// Checked lcm; throws eps::too_large_error if the result exceeds `limit`.
std::int64_t lcm_checked(std::int64_t a, std::int64_t b,
                         std::int64_t limit = (std::int64_t(1) << 40));

// Largest v with p^v | n, plus the cofactor n / p^v. Requires n != 0.
struct Valuation {
    std::int64_t v;
    std::int64_t unit;
};
Valuation p_valuation(std::int64_t n, std::int64_t p);

// Smallest positive primitive root modulo p^2 for an odd prime p. Such a
// root generates (Z/p^a Z)^x for every a >= 1.
std::int64_t primitive_root(std::int64_t p);

} // namespace eps::num
