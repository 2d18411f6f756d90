#pragma once

// Explicit finite fields F_{p^s} for odd p, with a deterministic modulus and
// generator, full discrete-log tables, the canonical trace additive
// character, multiplicative characters, and classical Gauss sums.

#include <cstdint>
#include <memory>
#include <vector>

#include "eps/cyclotomic.hpp"

namespace eps {

class FiniteField;
using FiniteFieldPtr = std::shared_ptr<const FiniteField>;

class FFElement {
public:
    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    std::int64_t encoding() const noexcept;
    bool is_zero() const noexcept;
    const FiniteFieldPtr& field() const noexcept { return field_; }

    FFElement operator+(const FFElement& o) const;
    FFElement operator-(const FFElement& o) const;
    FFElement operator*(const FFElement& o) const;
    FFElement pow(std::int64_t e) const;

    bool operator==(const FFElement& o) const;
    bool operator!=(const FFElement& o) const { return !(*this == o); }

private:
    friend class FiniteField;
    FFElement(FiniteFieldPtr field, std::vector<std::int64_t> coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs))
    {
    }
    FiniteFieldPtr field_;
    std::vector<std::int64_t> coeffs_; // length s, entries in [0, p)
};

class FiniteField : public std::enable_shared_from_this<FiniteField> {
public:
    // Deterministic construction: the modulus is the smallest monic
    // irreducible polynomial of degree s (coefficient vectors ordered with
    // the constant term least significant), the generator the smallest
    // element of multiplicative order q - 1 in the same ordering.
    static FiniteFieldPtr build(std::int64_t p, std::int64_t s,
                                std::int64_t size_bound = 100000);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t s() const noexcept { return s_; }
    std::int64_t q() const noexcept { return q_; }
    const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }

    FFElement zero() const;
    FFElement one() const;
    FFElement generator() const;
    FFElement element(std::vector<std::int64_t> coeffs) const;
    FFElement element_from_encoding(std::int64_t enc) const;
    FFElement from_integer(std::int64_t n) const;

    // Tr(x) = sum of the Frobenius orbit, an element of the prime field.
    std::int64_t trace(const FFElement& x) const;

    // Discrete log base the generator; throws std::domain_error at zero.
    std::int64_t dlog(const FFElement& x) const;
    FFElement generator_power(std::int64_t k) const;

    bool same(const FiniteField& o) const noexcept;

private:
    FiniteField() = default;
    std::int64_t p_ = 0, s_ = 0, q_ = 0;
    std::vector<std::int64_t> modulus_; // monic, length s + 1
    std::int64_t generator_enc_ = 0;
    std::vector<std::int32_t> dlog_;    // by encoding; -1 at zero
    std::vector<std::int32_t> pow_;     // encodings of generator powers
    std::vector<std::int64_t> trace_basis_; // Tr(x^j) for j < s

    std::vector<std::int64_t> mul_raw(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) const;
    std::vector<std::int64_t> pow_raw(std::vector<std::int64_t> base,
                                      std::int64_t e) const;
    std::int64_t encode(const std::vector<std::int64_t>& coeffs) const;
    std::vector<std::int64_t> decode(std::int64_t enc) const;

    friend class FFElement;
};

// The canonical additive character psi_q = psi_p o Tr, valued in p-th roots
// of unity.
struct FFAddChar {
    FiniteFieldPtr field;

    static FFAddChar canonical(FiniteFieldPtr f) { return {std::move(f)}; }
    RootOfUnity eval(const FFElement& x) const;
};

// Multiplicative character determined by chi(generator) = zeta_{q-1}^t.
struct FFMultChar {
    FiniteFieldPtr field;
    std::int64_t t;

    static FFMultChar make(FiniteFieldPtr f, std::int64_t t);
    static FFMultChar trivial(FiniteFieldPtr f) { return make(std::move(f), 0); }
    static FFMultChar quadratic(FiniteFieldPtr f);
    bool is_trivial() const noexcept { return t == 0; }
    // Defined on nonzero elements only (throws std::domain_error at zero).
    RootOfUnity eval(const FFElement& x) const;
};

// G(chi, psi) = sum over nonzero x of chi(x) psi(x), exact; the level
// divides lcm(q - 1, p).
CyclotomicNumber gauss_sum(const FFMultChar& chi, const FFAddChar& psi);

// The closed form of the quadratic Gauss sum over F_{p^s}, with sqrt(p)
// (resp. i*sqrt(p)) expressed through the prime-field quadratic Gauss sum,
// computed here independently via Legendre symbols.
CyclotomicNumber quadratic_gauss_closed_form(std::int64_t p, std::int64_t s);

// Sum over all x in F_q of psi(x^2); equals the quadratic Gauss sum.
CyclotomicNumber sum_of_square_values(const FiniteFieldPtr& field);

} // namespace eps
