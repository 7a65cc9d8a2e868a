#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace nuinv {

// Plain value semantics (no expression templates): every arithmetic
// expression yields an Int again, so Rational and the series code can
// consume results directly.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Strict decimal integer parse: optional sign, then digits.
inline Int parse_int(std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw std::invalid_argument("parse_int: malformed integer '" + std::string(s) + "'");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_int: malformed integer '" + std::string(s) + "'");
    return Int(std::string(s));
}

inline Int floor_div(const Int& a, const Int& b) {
    if (b <= 0)
        throw std::invalid_argument("floor_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

// Least non-negative residue of a mod m, m >= 1.
inline Int floor_mod(const Int& a, const Int& m) {
    if (m < 1)
        throw std::invalid_argument("floor_mod: modulus must be >= 1");
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

// Inverse of a mod m in [0, m); extended Euclid. m = 1 gives 0.
inline Int mod_inverse(const Int& a, const Int& m) {
    if (m < 1)
        throw std::invalid_argument("mod_inverse: modulus must be >= 1");
    if (m == 1)
        return Int(0);
    Int r0 = m, r1 = floor_mod(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1)
        throw std::invalid_argument("mod_inverse: arguments are not coprime");
    return floor_mod(t0, m);
}

// Exact rational number. Canonical form throughout: gcd(|num|, den) = 1,
// den >= 1, zero stored as 0/1. Comparisons cross-multiply; nothing here
// ever rounds.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    template <std::integral T>
    Rational(T n) : num_(n), den_(1) {}

    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

    // Accepts "n", "n/d", optional leading sign on n; d unsigned digits.
    static Rational parse(std::string_view s) {
        const auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(s));
        std::string_view den = s.substr(slash + 1);
        if (den.empty() || den.front() == '-' || den.front() == '+')
            throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(s) + "'");
        return Rational(parse_int(s.substr(0, slash)), parse_int(den));
    }

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Int floor() const {
        Int q = num_ / den_;
        if (num_ < 0 && q * den_ != num_)
            --q;
        return q;
    }

    std::string str() const {
        if (den_ == 1)
            return num_.str();
        return num_.str() + "/" + den_.str();
    }

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    friend Rational operator-(const Rational& a) { return raw(-a.num_, a.den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational pow(long long e) const {
        Rational base = *this;
        unsigned long long n;
        if (e < 0) {
            if (is_zero())
                throw std::domain_error("Rational::pow: negative power of zero");
            base = raw(num_ < 0 ? -den_ : den_, abs(num_));
            n = 0ULL - static_cast<unsigned long long>(e);
        } else {
            n = static_cast<unsigned long long>(e);
        }
        Rational result(1);
        while (n != 0) {
            if (n & 1)
                result *= base;
            n >>= 1;
            if (n != 0)
                base *= base;
        }
        return result;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const Int l = a.num_ * b.den_;
        const Int r = b.num_ * a.den_;
        if (l < r)
            return std::strong_ordering::less;
        if (l > r)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    // Trusted already-canonical input, skips the gcd pass.
    static Rational raw(Int n, Int d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void canonicalize() {
        if (den_ == 0)
            throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Int g = gcd(abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

} // namespace nuinv
