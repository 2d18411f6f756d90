#include "eps/finite_field.hpp"

#include <stdexcept>

#include "eps/errors.hpp"
#include "eps/numeric.hpp"

namespace eps {

namespace {

// Remainder of a by the monic modulus, coefficients mod p.
void reduce_in_place(std::vector<std::int64_t>& a,
                     const std::vector<std::int64_t>& modulus, std::int64_t p)
{
    const std::int64_t s = static_cast<std::int64_t>(modulus.size()) - 1;
    for (std::int64_t i = static_cast<std::int64_t>(a.size()) - 1; i >= s; --i) {
        const std::int64_t c = num::mod(a[i], p);
        if (c != 0)
            for (std::int64_t k = 0; k <= s; ++k)
                a[i - s + k] = num::mod(a[i - s + k] - c * modulus[k], p);
        a[i] = 0;
    }
    a.resize(s);
    for (auto& c : a)
        c = num::mod(c, p);
}

bool divides(const std::vector<std::int64_t>& divisor,
             std::vector<std::int64_t> poly, std::int64_t p)
{
    reduce_in_place(poly, divisor, p);
    for (std::int64_t c : poly)
        if (c != 0)
            return false;
    return true;
}

bool is_irreducible(const std::vector<std::int64_t>& poly, std::int64_t p)
{
    const std::int64_t s = static_cast<std::int64_t>(poly.size()) - 1;
    // Trial division by every monic polynomial of degree between 1 and s/2.
    for (std::int64_t d = 1; 2 * d <= s; ++d) {
        const std::int64_t count = num::ipow(p, d);
        for (std::int64_t enc = 0; enc < count; ++enc) {
            std::vector<std::int64_t> divisor(d + 1, 0);
            std::int64_t v = enc;
            for (std::int64_t k = 0; k < d; ++k) {
                divisor[k] = v % p;
                v /= p;
            }
            divisor[d] = 1;
            if (divides(divisor, poly, p))
                return false;
        }
    }
    return true;
}

} // namespace

// ---------------------------------------------------------------------------
// FFElement

std::int64_t FFElement::encoding() const noexcept
{
    return field_->encode(coeffs_);
}

bool FFElement::is_zero() const noexcept
{
    for (std::int64_t c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

FFElement FFElement::operator+(const FFElement& o) const
{
    if (!field_->same(*o.field_))
        throw std::invalid_argument("FFElement: field mismatch");
    std::vector<std::int64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = num::mod(coeffs_[i] + o.coeffs_[i], field_->p());
    return FFElement(field_, std::move(c));
}

FFElement FFElement::operator-(const FFElement& o) const
{
    if (!field_->same(*o.field_))
        throw std::invalid_argument("FFElement: field mismatch");
    std::vector<std::int64_t> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = num::mod(coeffs_[i] - o.coeffs_[i], field_->p());
    return FFElement(field_, std::move(c));
}

FFElement FFElement::operator*(const FFElement& o) const
{
    if (!field_->same(*o.field_))
        throw std::invalid_argument("FFElement: field mismatch");
    return FFElement(field_, field_->mul_raw(coeffs_, o.coeffs_));
}

FFElement FFElement::pow(std::int64_t e) const
{
    if (e < 0)
        throw std::invalid_argument("FFElement::pow: negative exponent");
    return FFElement(field_, field_->pow_raw(coeffs_, e));
}

bool FFElement::operator==(const FFElement& o) const
{
    return field_->same(*o.field_) && coeffs_ == o.coeffs_;
}

// ---------------------------------------------------------------------------
// FiniteField

FiniteFieldPtr FiniteField::build(std::int64_t p, std::int64_t s,
                                  std::int64_t size_bound)
{
    if (p == 2)
        throw unsupported_prime_error("finite fields of characteristic 2 are not supported");
    if (!num::is_prime(p))
        throw std::invalid_argument("build: p is not prime");
    if (s < 1)
        throw std::invalid_argument("build: s must be positive");
    __int128 q128 = 1;
    for (std::int64_t i = 0; i < s; ++i)
        q128 *= p;
    if (q128 > size_bound)
        throw too_large_error("finite field size exceeds the configured bound");

    auto field = std::shared_ptr<FiniteField>(new FiniteField());
    field->p_ = p;
    field->s_ = s;
    field->q_ = static_cast<std::int64_t>(q128);

    // Smallest monic irreducible modulus, constant term upward.
    field->modulus_.assign(s + 1, 0);
    field->modulus_[s] = 1;
    if (s > 1) {
        bool found = false;
        for (std::int64_t enc = 0; enc < field->q_ && !found; ++enc) {
            std::vector<std::int64_t> poly(s + 1, 0);
            std::int64_t v = enc;
            for (std::int64_t k = 0; k < s; ++k) {
                poly[k] = v % p;
                v /= p;
            }
            poly[s] = 1;
            if (is_irreducible(poly, p)) {
                field->modulus_ = poly;
                found = true;
            }
        }
        if (!found)
            throw invariant_violation_error("build: no irreducible modulus found");
    }

    // Smallest generator of the multiplicative group.
    const std::int64_t group = field->q_ - 1;
    const auto factors = num::prime_factors(group);
    field->generator_enc_ = 0;
    for (std::int64_t enc = 2; enc < field->q_; ++enc) {
        const auto cand = field->decode(enc);
        bool ok = true;
        for (std::int64_t ell : factors) {
            auto power = field->pow_raw(cand, group / ell);
            if (field->encode(power) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            field->generator_enc_ = enc;
            break;
        }
    }
    if (field->generator_enc_ == 0)
        throw invariant_violation_error("build: no generator found");

    // Discrete-log and power tables.
    field->dlog_.assign(field->q_, -1);
    field->pow_.assign(group, 0);
    std::vector<std::int64_t> cur(s, 0);
    cur[0] = 1;
    const auto gen = field->decode(field->generator_enc_);
    for (std::int64_t k = 0; k < group; ++k) {
        const std::int64_t enc = field->encode(cur);
        field->pow_[k] = static_cast<std::int32_t>(enc);
        if (field->dlog_[enc] != -1)
            throw invariant_violation_error("build: generator order too small");
        field->dlog_[enc] = static_cast<std::int32_t>(k);
        cur = field->mul_raw(cur, gen);
    }
    if (field->encode(cur) != 1)
        throw invariant_violation_error("build: generator power table broken");

    // Traces of the basis monomials; Tr is F_p-linear.
    field->trace_basis_.assign(s, 0);
    for (std::int64_t j = 0; j < s; ++j) {
        std::vector<std::int64_t> basis(s, 0);
        basis[j] = 1;
        std::vector<std::int64_t> orbit_sum(s, 0);
        for (std::int64_t i = 0; i < s; ++i) {
            const auto frob = field->pow_raw(basis, num::ipow(p, i));
            for (std::int64_t k = 0; k < s; ++k)
                orbit_sum[k] = num::mod(orbit_sum[k] + frob[k], p);
        }
        for (std::int64_t k = 1; k < s; ++k)
            if (orbit_sum[k] != 0)
                throw invariant_violation_error("build: trace left the prime field");
        field->trace_basis_[j] = orbit_sum[0];
    }

    return field;
}

FFElement FiniteField::zero() const
{
    return FFElement(shared_from_this(), std::vector<std::int64_t>(s_, 0));
}

FFElement FiniteField::one() const
{
    return from_integer(1);
}

FFElement FiniteField::generator() const
{
    return element_from_encoding(generator_enc_);
}

FFElement FiniteField::element(std::vector<std::int64_t> coeffs) const
{
    if (static_cast<std::int64_t>(coeffs.size()) != s_)
        throw std::invalid_argument("element: wrong coefficient count");
    for (auto& c : coeffs)
        c = num::mod(c, p_);
    return FFElement(shared_from_this(), std::move(coeffs));
}

FFElement FiniteField::element_from_encoding(std::int64_t enc) const
{
    if (enc < 0 || enc >= q_)
        throw std::invalid_argument("element_from_encoding: out of range");
    return FFElement(shared_from_this(), decode(enc));
}

FFElement FiniteField::from_integer(std::int64_t n) const
{
    std::vector<std::int64_t> c(s_, 0);
    c[0] = num::mod(n, p_);
    return FFElement(shared_from_this(), std::move(c));
}

std::int64_t FiniteField::trace(const FFElement& x) const
{
    std::int64_t tr = 0;
    for (std::int64_t j = 0; j < s_; ++j)
        tr = num::mod(tr + trace_basis_[j] * x.coeffs()[j], p_);
    return tr;
}

std::int64_t FiniteField::dlog(const FFElement& x) const
{
    if (x.is_zero())
        throw std::domain_error("dlog: zero has no discrete logarithm");
    return dlog_[encode(x.coeffs())];
}

FFElement FiniteField::generator_power(std::int64_t k) const
{
    return element_from_encoding(pow_[num::mod(k, q_ - 1)]);
}

bool FiniteField::same(const FiniteField& o) const noexcept
{
    return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
}

std::vector<std::int64_t>
FiniteField::mul_raw(const std::vector<std::int64_t>& a,
                     const std::vector<std::int64_t>& b) const
{
    std::vector<std::int64_t> conv(2 * s_ - 1, 0);
    for (std::int64_t i = 0; i < s_; ++i) {
        if (a[i] == 0)
            continue;
        for (std::int64_t j = 0; j < s_; ++j)
            conv[i + j] += a[i] * b[j];
    }
    reduce_in_place(conv, modulus_, p_);
    return conv;
}

std::vector<std::int64_t> FiniteField::pow_raw(std::vector<std::int64_t> base,
                                               std::int64_t e) const
{
    std::vector<std::int64_t> acc(s_, 0);
    acc[0] = 1;
    while (e > 0) {
        if (e & 1)
            acc = mul_raw(acc, base);
        base = mul_raw(base, base);
        e >>= 1;
    }
    return acc;
}

std::int64_t FiniteField::encode(const std::vector<std::int64_t>& coeffs) const
{
    std::int64_t enc = 0;
    for (std::int64_t k = s_ - 1; k >= 0; --k)
        enc = enc * p_ + coeffs[k];
    return enc;
}

std::vector<std::int64_t> FiniteField::decode(std::int64_t enc) const
{
    std::vector<std::int64_t> coeffs(s_, 0);
    for (std::int64_t k = 0; k < s_; ++k) {
        coeffs[k] = enc % p_;
        enc /= p_;
    }
    return coeffs;
}

// ---------------------------------------------------------------------------
// Characters and Gauss sums

RootOfUnity FFAddChar::eval(const FFElement& x) const
{
    return RootOfUnity::make(field->p(), field->trace(x));
}

FFMultChar FFMultChar::make(FiniteFieldPtr f, std::int64_t t)
{
    const std::int64_t group = f->q() - 1;
    return {std::move(f), num::mod(t, group)};
}

FFMultChar FFMultChar::quadratic(FiniteFieldPtr f)
{
    const std::int64_t group = f->q() - 1;
    return make(std::move(f), group / 2);
}

RootOfUnity FFMultChar::eval(const FFElement& x) const
{
    if (x.is_zero())
        throw std::domain_error("multiplicative character: zero argument");
    return RootOfUnity::make(field->q() - 1, t * field->dlog(x));
}

CyclotomicNumber gauss_sum(const FFMultChar& chi, const FFAddChar& psi)
{
    if (!chi.field->same(*psi.field))
        throw std::invalid_argument("gauss_sum: field mismatch");
    const auto& field = *chi.field;
    const std::int64_t group = field.q() - 1;
    RootSum sum;
    for (std::int64_t k = 0; k < group; ++k) {
        const auto x = field.generator_power(k);
        sum.add(RootOfUnity::make(group, chi.t * k) *
                RootOfUnity::make(field.p(), field.trace(x)));
    }
    return sum.value();
}

CyclotomicNumber quadratic_gauss_closed_form(std::int64_t p, std::int64_t s)
{
    if (p == 2)
        throw unsupported_prime_error("quadratic Gauss sums need odd p");
    if (!num::is_prime(p))
        throw std::invalid_argument("quadratic_gauss_closed_form: p is not prime");
    if (s < 1)
        throw std::invalid_argument("quadratic_gauss_closed_form: s must be positive");

    if (s % 2 == 0) {
        // q^{1/2} = p^{s/2} is an integer and the value is rational.
        const std::int64_t mag = num::ipow(p, s / 2);
        std::int64_t sign;
        if (p % 4 == 1)
            sign = -1; // (-1)^{s-1}, s even
        else
            sign = ((s / 2) % 2 == 0) ? -1 : 1; // (-1)^{s-1} i^s, s even
        return CyclotomicNumber::from_integer(sign * mag).lift(p);
    }

    // Odd s: express sqrt(p) (p = 1 mod 4) or i*sqrt(p) (p = 3 mod 4) as the
    // prime-field quadratic Gauss sum, computed via Legendre symbols so that
    // this route stays independent of the table-driven gauss_sum above.
    std::vector<std::pair<std::int64_t, Rational>> terms;
    terms.reserve(p - 1);
    for (std::int64_t x = 1; x < p; ++x) {
        const bool square = num::pow_mod(x, (p - 1) / 2, p) == 1;
        terms.push_back({x, Rational(square ? 1 : -1)});
    }
    const CyclotomicNumber base = CyclotomicNumber::from_terms(p, terms);

    const std::int64_t mag = num::ipow(p, (s - 1) / 2);
    std::int64_t sign = 1;
    if (p % 4 == 3 && ((s - 1) / 2) % 2 == 1)
        sign = -1;
    return base.scaled(Rational(sign * mag));
}

CyclotomicNumber sum_of_square_values(const FiniteFieldPtr& field)
{
    std::vector<std::pair<std::int64_t, Rational>> terms;
    terms.reserve(field->q());
    for (std::int64_t enc = 0; enc < field->q(); ++enc) {
        const auto x = field->element_from_encoding(enc);
        terms.push_back({field->trace(x * x), Rational(1)});
    }
    return CyclotomicNumber::from_terms(field->p(), terms);
}

} // namespace eps
