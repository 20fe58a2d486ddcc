#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "horadam/errors.hpp"

namespace horadam {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Canonical form: denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
/// Equality is structural, which the canonical form makes exact.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    explicit Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Rational operator-() const { return raw(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        // Cross-cancel first; keeps intermediates small for long power chains.
        BigInt g1 = boost::multiprecision::gcd(boost::multiprecision::abs(a.num_), b.den_);
        BigInt g2 = boost::multiprecision::gcd(boost::multiprecision::abs(b.num_), a.den_);
        return raw((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DivisionByZero();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt l = a.num_ * b.den_, r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// Canonical text form "num/den", with "/den" omitted for integers.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses the canonical text form. Accepts an optional leading '-'.
    static Rational from_string(std::string_view text);

private:
    static Rational raw(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void reduce() {
        if (den_ == 0) throw DivisionByZero();
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_{0};
    BigInt den_{1};
};

inline Rational inverse(const Rational& r) {
    if (r.is_zero()) throw DivisionByZero();
    return Rational(r.denominator(), r.numerator());
}

inline Rational pow(const Rational& base, long long exp) {
    if (exp < 0) return pow(inverse(base), -exp);
    Rational acc(1);
    Rational sq = base;
    for (unsigned long long e = static_cast<unsigned long long>(exp); e != 0; e >>= 1) {
        if (e & 1) acc *= sq;
        if (e > 1) sq *= sq;
    }
    return acc;
}

inline Rational Rational::from_string(std::string_view text) {
    auto parse_int = [&](std::string_view s) -> BigInt {
        if (s.empty()) throw ParamParseError(std::string(text));
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParamParseError(std::string(text));
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw ParamParseError(std::string(text));
        return BigInt(std::string(s));
    };
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace horadam
