#include "eps/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "eps/errors.hpp"
#include "eps/numeric.hpp"

namespace eps {

namespace detail {

namespace {

// Exact polynomial division over Z; the remainder must vanish.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> a,
                                         const std::vector<std::int64_t>& b)
{
    const std::int64_t db = static_cast<std::int64_t>(b.size()) - 1;
    const std::int64_t da = static_cast<std::int64_t>(a.size()) - 1;
    std::vector<std::int64_t> q(da - db + 1, 0);
    for (std::int64_t i = da; i >= db; --i) {
        std::int64_t c = a[i]; // b is monic
        if (c == 0)
            continue;
        q[i - db] = c;
        for (std::int64_t k = 0; k <= db; ++k)
            a[i - db + k] -= c * b[k];
    }
    for (std::int64_t v : a)
        if (v != 0)
            throw invariant_violation_error("poly_div_exact: nonzero remainder");
    return q;
}

// Phi_n via iterated division of x^n - 1 by Phi_d over the proper divisors d.
// Guarded by the registry mutex below.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n)
{
    static std::map<std::int64_t, std::vector<std::int64_t>> memo;
    auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0)
            poly = poly_div_exact(std::move(poly), cyclotomic_polynomial(d));
    return memo.emplace(n, std::move(poly)).first->second;
}

constexpr std::int64_t kMaxLevel = 10'000'000;
constexpr std::int64_t kRowCoeffLimit = std::int64_t(1) << 40;
constexpr std::int64_t kMaxRowEntries = 8'000'000;

} // namespace

// Per-level reduction data. The canonical basis at level N has size
// phi(N) = phi(rad) * cofactor, and x^e reduces through the small table of
// y^q mod Phi_rad (y = x^cofactor), q in [phi(rad), rad).
struct LevelInfo {
    std::int64_t level;
    std::int64_t phi;
    std::int64_t rad;
    std::int64_t cofactor;
    std::int64_t phi_rad;
    std::vector<std::vector<std::int64_t>> rows;

    // coeffs += w * canonical(x^e), for e in [0, level).
    void scatter(std::vector<Rational>& coeffs, std::int64_t e,
                 const Rational& w) const
    {
        const std::int64_t q = e / cofactor;
        const std::int64_t r = e % cofactor;
        if (q < phi_rad) {
            coeffs[q * cofactor + r] += w;
            return;
        }
        const auto& row = rows[q - phi_rad];
        for (std::int64_t k = 0; k < phi_rad; ++k)
            if (row[k] != 0)
                coeffs[k * cofactor + r] += w * Rational(row[k]);
    }
};

LevelInfoPtr level_info(std::int64_t level)
{
    if (level < 1)
        throw std::invalid_argument("cyclotomic level must be positive");
    if (level > kMaxLevel)
        throw too_large_error("cyclotomic level exceeds configured bound");

    static std::mutex mutex;
    static std::map<std::int64_t, LevelInfoPtr> cache;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(level);
    if (it != cache.end())
        return it->second;

    auto info = std::make_shared<LevelInfo>();
    info->level = level;
    info->rad = num::radical(level);
    info->cofactor = level / info->rad;
    info->phi_rad = num::euler_phi(info->rad);
    info->phi = info->phi_rad * info->cofactor;
    if ((info->rad - info->phi_rad) * info->phi_rad > kMaxRowEntries)
        throw too_large_error("cyclotomic level has an intractable radical");

    const auto& phi_poly = cyclotomic_polynomial(info->rad);
    info->rows.reserve(info->rad - info->phi_rad);
    std::vector<std::int64_t> cur(info->phi_rad);
    for (std::int64_t k = 0; k < info->phi_rad; ++k)
        cur[k] = -phi_poly[k];
    for (std::int64_t q = info->phi_rad; q < info->rad; ++q) {
        if (q > info->phi_rad) {
            const std::int64_t lead = cur[info->phi_rad - 1];
            for (std::int64_t k = info->phi_rad - 1; k >= 1; --k)
                cur[k] = cur[k - 1];
            cur[0] = 0;
            if (lead != 0)
                for (std::int64_t k = 0; k < info->phi_rad; ++k)
                    cur[k] -= lead * phi_poly[k];
        }
        for (std::int64_t v : cur)
            if (v > kRowCoeffLimit || v < -kRowCoeffLimit)
                throw too_large_error("cyclotomic reduction coefficients too large");
        info->rows.push_back(cur);
    }

    cache.emplace(level, info);
    return info;
}

} // namespace detail

// ---------------------------------------------------------------------------
// RootOfUnity

RootOfUnity RootOfUnity::make(std::int64_t order, std::int64_t exponent)
{
    if (order < 1)
        throw std::invalid_argument("RootOfUnity: order must be positive");
    exponent = num::mod(exponent, order);
    const std::int64_t g = std::gcd(order, exponent == 0 ? order : exponent);
    RootOfUnity r;
    r.order_ = order / g;
    r.exponent_ = exponent / g;
    return r;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const
{
    const std::int64_t l = num::lcm_checked(order_, o.order_);
    return make(l, exponent_ * (l / order_) + o.exponent_ * (l / o.order_));
}

RootOfUnity RootOfUnity::inverse() const
{
    return make(order_, order_ - exponent_);
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const
{
    return make(order_, num::mul_mod(exponent_, num::mod(k, order_), order_));
}

std::string RootOfUnity::to_string() const
{
    if (order_ == 1)
        return "1";
    if (order_ == 2)
        return "-1";
    return "zeta(" + std::to_string(order_) + ")^" + std::to_string(exponent_);
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

CyclotomicNumber::CyclotomicNumber()
    : level_(1), coeffs_(1, Rational(0)), info_(detail::level_info(1))
{
}

CyclotomicNumber::CyclotomicNumber(std::int64_t level,
                                   std::vector<Rational> coeffs,
                                   detail::LevelInfoPtr info)
    : level_(level), coeffs_(std::move(coeffs)), info_(std::move(info))
{
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& r)
{
    return CyclotomicNumber(1, {r}, detail::level_info(1));
}

CyclotomicNumber CyclotomicNumber::from_integer(std::int64_t n)
{
    return from_rational(Rational(n));
}

CyclotomicNumber CyclotomicNumber::embed(const RootOfUnity& r,
                                         std::int64_t level)
{
    if (level < 1)
        throw std::invalid_argument("embed: level must be positive");
    if (level % r.order() != 0)
        throw level_mismatch_error("embed: root order does not divide level");
    return from_terms(level, {{(level / r.order()) * r.exponent(), Rational(1)}});
}

CyclotomicNumber CyclotomicNumber::from_terms(
    std::int64_t level,
    const std::vector<std::pair<std::int64_t, Rational>>& terms)
{
    auto info = detail::level_info(level);
    std::vector<Rational> coeffs(info->phi);
    for (const auto& [e, w] : terms)
        if (!w.is_zero())
            info->scatter(coeffs, num::mod(e, level), w);
    return CyclotomicNumber(level, std::move(coeffs), std::move(info));
}

bool CyclotomicNumber::is_zero() const noexcept
{
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

bool CyclotomicNumber::is_rational() const noexcept
{
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero())
            return false;
    return true;
}

Rational CyclotomicNumber::as_rational() const
{
    if (!is_rational())
        throw std::domain_error("as_rational: value is not rational");
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const
{
    const std::int64_t l = num::lcm_checked(level_, o.level_);
    CyclotomicNumber a = lift(l), b = o.lift(l);
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
        a.coeffs_[j] += b.coeffs_[j];
    return a;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const
{
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& r) const
{
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_)
        c *= r;
    return out;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const
{
    const std::int64_t l = num::lcm_checked(level_, o.level_);
    const CyclotomicNumber a = lift(l), b = o.lift(l);
    const std::int64_t n = static_cast<std::int64_t>(a.coeffs_.size());

    auto integral = [](const std::vector<Rational>& v) {
        return std::all_of(v.begin(), v.end(),
                           [](const Rational& c) { return c.is_integer(); });
    };

    std::vector<Rational> conv(2 * n - 1);
    if (integral(a.coeffs_) && integral(b.coeffs_)) {
        // Integer coefficients are the common case (sums of roots of unity);
        // convolve in machine integers.
        std::vector<std::int64_t> av(n), bv(n);
        for (std::int64_t j = 0; j < n; ++j) {
            av[j] = a.coeffs_[j].num();
            bv[j] = b.coeffs_[j].num();
        }
        std::vector<__int128> acc(2 * n - 1, 0);
        for (std::int64_t i = 0; i < n; ++i) {
            if (av[i] == 0)
                continue;
            const __int128 ai = av[i];
            for (std::int64_t j = 0; j < n; ++j)
                acc[i + j] += ai * bv[j];
        }
        for (std::int64_t e = 0; e < 2 * n - 1; ++e) {
            if (acc[e] > INT64_MAX || acc[e] < INT64_MIN)
                throw std::overflow_error("cyclotomic product overflow");
            conv[e] = Rational(static_cast<std::int64_t>(acc[e]));
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            if (a.coeffs_[i].is_zero())
                continue;
            for (std::int64_t j = 0; j < n; ++j)
                if (!b.coeffs_[j].is_zero())
                    conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }

    std::vector<Rational> coeffs(a.info_->phi);
    for (std::int64_t e = 0; e < 2 * n - 1; ++e)
        if (!conv[e].is_zero())
            a.info_->scatter(coeffs, e % l, conv[e]);
    return CyclotomicNumber(l, std::move(coeffs), a.info_);
}

CyclotomicNumber CyclotomicNumber::conjugate() const
{
    std::vector<Rational> coeffs(info_->phi);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero())
            info_->scatter(coeffs,
                           num::mod(level_ - static_cast<std::int64_t>(j), level_),
                           coeffs_[j]);
    return CyclotomicNumber(level_, std::move(coeffs), info_);
}

CyclotomicNumber CyclotomicNumber::lift(std::int64_t target_level) const
{
    if (target_level == level_)
        return *this;
    if (target_level < 1 || target_level % level_ != 0)
        throw level_mismatch_error("lift: current level must divide target level");
    auto info = detail::level_info(target_level);
    std::vector<Rational> coeffs(info->phi);
    const std::int64_t stride = target_level / level_;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero())
            info->scatter(coeffs, static_cast<std::int64_t>(j) * stride,
                          coeffs_[j]);
    return CyclotomicNumber(target_level, std::move(coeffs), std::move(info));
}

std::optional<RootOfUnity> CyclotomicNumber::as_root_of_unity() const
{
    // Roots of unity inside Q(zeta_N) are exactly +-zeta_N^e, and the
    // canonical coordinates of zeta_N^e are a single +-1 or one of the
    // precomputed reduction rows. Recognize that pattern directly.
    const std::int64_t f = info_->cofactor;
    const std::int64_t phi_rad = info_->phi_rad;

    std::int64_t first = -1;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero())
            continue;
        if (!coeffs_[j].is_integer())
            return std::nullopt;
        if (first < 0)
            first = static_cast<std::int64_t>(j);
        else if (static_cast<std::int64_t>(j) % f != first % f)
            return std::nullopt;
    }
    if (first < 0)
        return std::nullopt; // zero

    const std::int64_t r0 = first % f;
    std::vector<std::int64_t> vy(phi_rad);
    for (std::int64_t k = 0; k < phi_rad; ++k)
        vy[k] = coeffs_[k * f + r0].num();

    std::int64_t e = -1, sign = 0;
    std::int64_t nonzero = 0, k0 = -1;
    for (std::int64_t k = 0; k < phi_rad; ++k)
        if (vy[k] != 0) {
            ++nonzero;
            k0 = k;
        }
    if (nonzero == 1 && (vy[k0] == 1 || vy[k0] == -1)) {
        e = k0 * f + r0;
        sign = vy[k0];
    } else {
        for (std::size_t q = 0; q < info_->rows.size() && sign == 0; ++q) {
            const auto& row = info_->rows[q];
            bool plus = true, minus = true;
            for (std::int64_t k = 0; k < phi_rad; ++k) {
                plus = plus && vy[k] == row[k];
                minus = minus && vy[k] == -row[k];
            }
            if (plus || minus) {
                e = (static_cast<std::int64_t>(q) + phi_rad) * f + r0;
                sign = plus ? 1 : -1;
            }
        }
    }
    if (sign == 0)
        return std::nullopt;
    if (sign > 0)
        return RootOfUnity::make(level_, e);
    if (level_ % 2 == 0)
        return RootOfUnity::make(level_, e + level_ / 2);
    return RootOfUnity::make(2 * level_, 2 * e + level_);
}

std::pair<double, double> CyclotomicNumber::approx_complex(int digits) const
{
    if (digits < 1)
        throw std::invalid_argument("approx_complex: digits must be >= 1");
    const long double two_pi = 6.283185307179586476925286766559L;
    long double re = 0, im = 0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero())
            continue;
        const long double c = static_cast<long double>(coeffs_[j].num()) /
                              static_cast<long double>(coeffs_[j].den());
        const long double angle =
            two_pi * static_cast<long double>(j) / static_cast<long double>(level_);
        re += c * std::cos(angle);
        im += c * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const
{
    if (level_ == o.level_)
        return coeffs_ == o.coeffs_;
    if (o.level_ % level_ == 0)
        return lift(o.level_).coeffs_ == o.coeffs_;
    if (level_ % o.level_ == 0)
        return coeffs_ == o.lift(level_).coeffs_;
    const std::int64_t l = num::lcm_checked(level_, o.level_);
    return lift(l).coeffs_ == o.lift(l).coeffs_;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream out;
    bool any = false;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero())
            continue;
        if (any)
            out << " + ";
        out << coeffs_[j].to_string();
        if (j > 0)
            out << "*z^" << j;
        any = true;
    }
    if (!any)
        out << "0";
    out << " (level " << level_ << ")";
    return out.str();
}

// ---------------------------------------------------------------------------
// RootSum

void RootSum::add(const RootOfUnity& r, const Rational& w)
{
    std::int64_t order = r.order();
    std::int64_t exponent = r.exponent();
    Rational weight = w;
    // A root of order 2m with m odd equals -zeta_m^{(e-m)/2 mod m} (the
    // exponent is odd after normalization, so e - m is even); fold the sign
    // into the weight so that plain signs never force an even level.
    if (order % 2 == 0 && (order / 2) % 2 == 1) {
        const std::int64_t m = order / 2;
        exponent = num::mod((exponent - m) / 2, m);
        order = m;
        weight = -weight;
    }
    level_ = num::lcm_checked(level_, order);
    terms_.push_back({order, exponent, weight});
}

CyclotomicNumber RootSum::value() const
{
    auto info = detail::level_info(level_);
    std::vector<Rational> coeffs(info->phi);
    for (const auto& t : terms_)
        info->scatter(coeffs, t.exponent * (level_ / t.order), t.weight);
    return CyclotomicNumber(level_, std::move(coeffs), std::move(info));
}

} // namespace eps
