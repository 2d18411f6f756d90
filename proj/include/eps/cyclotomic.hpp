#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N). A CyclotomicNumber is a
// dense rational coordinate vector on the canonical power basis
// {zeta_N^j : 0 <= j < phi(N)} after reduction modulo the N-th cyclotomic
// polynomial, so equality at a common level is coefficient equality.
//
// Reduction uses Phi_N(x) = Phi_rad(x^{N/rad}) with rad the radical of N;
// only the tiny polynomial Phi_rad is ever divided by, which keeps sums with
// tens of thousands of terms cheap.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eps/rational.hpp"

namespace eps {

namespace detail {
struct LevelInfo;
using LevelInfoPtr = std::shared_ptr<const LevelInfo>;
LevelInfoPtr level_info(std::int64_t level);
} // namespace detail

// A root of unity zeta_order^exponent in normal form: the exponent is
// reduced into [0, order) and order/exponent are divided by their gcd, so
// the stored order is the exact multiplicative order.
class RootOfUnity {
public:
    RootOfUnity() noexcept : order_(1), exponent_(0) {}

    static RootOfUnity make(std::int64_t order, std::int64_t exponent);

    std::int64_t order() const noexcept { return order_; }
    std::int64_t exponent() const noexcept { return exponent_; }
    bool is_one() const noexcept { return order_ == 1; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(std::int64_t k) const;

    bool operator==(const RootOfUnity&) const noexcept = default;

    std::string to_string() const;

private:
    std::int64_t order_;
    std::int64_t exponent_;
};

class CyclotomicNumber {
public:
    // Zero at level 1.
    CyclotomicNumber();

    static CyclotomicNumber from_rational(const Rational& r);
    static CyclotomicNumber from_integer(std::int64_t n);

    // Canonical form of zeta_level^{(level/r.order) * r.exponent}; the order
    // of r must divide the level.
    static CyclotomicNumber embed(const RootOfUnity& r, std::int64_t level);

    // Exact sum of w * zeta_level^e over the given (e, w) pairs.
    static CyclotomicNumber
    from_terms(std::int64_t level,
               const std::vector<std::pair<std::int64_t, Rational>>& terms);

    std::int64_t level() const noexcept { return level_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    // The rational value when is_rational(), otherwise throws.
    Rational as_rational() const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;

    CyclotomicNumber scaled(const Rational& r) const;

    // Image under zeta_N -> zeta_N^{-1}; an involutive ring homomorphism.
    CyclotomicNumber conjugate() const;

    // The same algebraic number at level M; the current level must divide M.
    CyclotomicNumber lift(std::int64_t target_level) const;

    // Recognizes x = zeta_M^k exactly (M divides 2 * level), empty otherwise.
    std::optional<RootOfUnity> as_root_of_unity() const;

    // Floating approximation of the standard embedding zeta_N -> e^{2pi i/N}.
    // Display only; never used for equality decisions. digits >= 1 bounds the
    // honest precision of the result and is clamped to what a long double
    // carries.
    std::pair<double, double> approx_complex(int digits = 15) const;

    // Equality as algebraic numbers: both sides are lifted to the lcm of the
    // levels and compared coefficient-wise.
    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::int64_t level_;
    std::vector<Rational> coeffs_; // size phi(level)
    detail::LevelInfoPtr info_;

    CyclotomicNumber(std::int64_t level, std::vector<Rational> coeffs,
                     detail::LevelInfoPtr info);
    friend class RootSum;
};

// Accumulates weighted roots of unity and materializes the exact sum as a
// CyclotomicNumber at the lcm of the term orders (level 1 when empty).
class RootSum {
public:
    RootSum() = default;

    void add(const RootOfUnity& r, const Rational& w = Rational(1));

    std::size_t term_count() const noexcept { return terms_.size(); }
    std::int64_t level() const noexcept { return level_; }

    CyclotomicNumber value() const;

private:
    struct Term {
        std::int64_t order;
        std::int64_t exponent;
        Rational weight;
    };
    std::int64_t level_ = 1;
    std::vector<Term> terms_;
};

} // namespace eps
