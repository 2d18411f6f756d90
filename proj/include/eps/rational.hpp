#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator. Every quantity
// in this library is a short integer combination of roots of unity (or a
// power of a small prime), so fixed-width storage with overflow checking is
// sufficient; any overflow throws instead of wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eps {

class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) noexcept : num_(n), den_(1) {}

    Rational(std::int64_t n, std::int64_t d)
    {
        if (d == 0)
            throw std::domain_error("Rational: zero denominator");
        assign(static_cast<__int128>(n), static_cast<__int128>(d));
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }
    bool is_one() const noexcept { return num_ == 1 && den_ == 1; }

    Rational operator-() const noexcept
    {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational operator+(const Rational& o) const
    {
        if (den_ == 1 && o.den_ == 1) {
            __int128 n = static_cast<__int128>(num_) + o.num_;
            return from_int128(n);
        }
        Rational r;
        r.assign(static_cast<__int128>(num_) * o.den_ +
                     static_cast<__int128>(o.num_) * den_,
                 static_cast<__int128>(den_) * o.den_);
        return r;
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const
    {
        if (den_ == 1 && o.den_ == 1) {
            __int128 n = static_cast<__int128>(num_) * o.num_;
            return from_int128(n);
        }
        Rational r;
        r.assign(static_cast<__int128>(num_) * o.num_,
                 static_cast<__int128>(den_) * o.den_);
        return r;
    }

    Rational operator/(const Rational& o) const
    {
        if (o.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        Rational r;
        r.assign(static_cast<__int128>(num_) * o.den_,
                 static_cast<__int128>(den_) * o.num_);
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const noexcept
    {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const noexcept { return !(*this == o); }

    bool operator<(const Rational& o) const noexcept
    {
        return static_cast<__int128>(num_) * o.den_ <
               static_cast<__int128>(o.num_) * den_;
    }

    // Integer power with nonnegative exponent.
    Rational pow(std::int64_t e) const
    {
        if (e < 0)
            throw std::domain_error("Rational::pow: negative exponent");
        Rational acc(1), base = *this;
        while (e > 0) {
            if (e & 1)
                acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    double to_double() const noexcept
    {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Serialized as "num/den", always with an explicit denominator.
    std::string to_string() const
    {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "n" or "n/d".
    static Rational parse(const std::string& s)
    {
        auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)),
                        std::stoll(s.substr(slash + 1)));
    }

private:
    std::int64_t num_;
    std::int64_t den_;

    static std::int64_t narrow(__int128 v)
    {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("Rational: 64-bit overflow");
        return static_cast<std::int64_t>(v);
    }

    static Rational from_int128(__int128 n)
    {
        Rational r;
        r.num_ = narrow(n);
        r.den_ = 1;
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) noexcept
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign(__int128 n, __int128 d)
    {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        __int128 g = gcd128(n, d);
        num_ = narrow(n / g);
        den_ = narrow(d / g);
    }
};

} // namespace eps
