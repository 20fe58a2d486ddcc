#pragma once

#include <string>
#include <utility>

#include "horadam/errors.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// Element x + y*sqrt(D) of the ring Q[t]/(t^2 - D) for an integer D.
///
/// This is a plain commutative ring, not necessarily a field: when D is a
/// perfect square the ring has zero divisors, and inverse() guards on the
/// field-norm x^2 - y^2 D instead of assuming invertibility. All arithmetic
/// requires both operands to carry the same D.
class QuadExt {
public:
    QuadExt(Rational rat, Rational surd, BigInt disc)
        : rat_(std::move(rat)), surd_(std::move(surd)), disc_(std::move(disc)) {}

    /// The canonical embedding of a rational into Q[sqrt(D)].
    static QuadExt embed(Rational value, BigInt disc) {
        return QuadExt(std::move(value), Rational(0), std::move(disc));
    }
    static QuadExt zero(BigInt disc) { return embed(Rational(0), std::move(disc)); }
    static QuadExt one(BigInt disc) { return embed(Rational(1), std::move(disc)); }

    const Rational& rat_part() const { return rat_; }
    const Rational& surd_part() const { return surd_; }
    const BigInt& discriminant() const { return disc_; }

    bool is_rational() const { return surd_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-rat_, -surd_, disc_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        a.require_same_ring(b);
        return QuadExt(a.rat_ + b.rat_, a.surd_ + b.surd_, a.disc_);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        a.require_same_ring(b);
        return QuadExt(a.rat_ - b.rat_, a.surd_ - b.surd_, a.disc_);
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        a.require_same_ring(b);
        Rational d{BigInt(a.disc_)};
        return QuadExt(a.rat_ * b.rat_ + a.surd_ * b.surd_ * d,
                       a.rat_ * b.surd_ + a.surd_ * b.rat_, a.disc_);
    }

    // Mixed arithmetic with rationals embeds into this value's ring.
    friend QuadExt operator+(const QuadExt& a, const Rational& r) { return a + embed(r, a.disc_); }
    friend QuadExt operator+(const Rational& r, const QuadExt& a) { return embed(r, a.disc_) + a; }
    friend QuadExt operator-(const QuadExt& a, const Rational& r) { return a - embed(r, a.disc_); }
    friend QuadExt operator-(const Rational& r, const QuadExt& a) { return embed(r, a.disc_) - a; }
    friend QuadExt operator*(const QuadExt& a, const Rational& r) {
        return QuadExt(a.rat_ * r, a.surd_ * r, a.disc_);
    }
    friend QuadExt operator*(const Rational& r, const QuadExt& a) { return a * r; }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    /// Values from different rings compare equal only when both are plain
    /// rationals (the embedding is canonical).
    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.rat_ != b.rat_ || a.surd_ != b.surd_) return false;
        return a.disc_ == b.disc_ || a.surd_.is_zero();
    }

    /// Canonical text form "x + y*sqrt(D)".
    std::string to_string() const {
        return rat_.to_string() + " + " + surd_.to_string() + "*sqrt(" + disc_.str() + ")";
    }

private:
    void require_same_ring(const QuadExt& o) const {
        if (disc_ != o.disc_) throw DiscriminantMismatch(disc_.str(), o.disc_.str());
    }

    Rational rat_;
    Rational surd_;
    BigInt disc_;
};

/// Ring automorphism sqrt(D) -> -sqrt(D).
inline QuadExt conj(const QuadExt& x) {
    return QuadExt(x.rat_part(), -x.surd_part(), x.discriminant());
}

/// x * conj(x) = x^2 - y^2 D, always rational. Zero exactly when x is
/// a zero divisor (or zero).
inline Rational field_norm(const QuadExt& x) {
    return x.rat_part() * x.rat_part() -
           x.surd_part() * x.surd_part() * Rational(BigInt(x.discriminant()));
}

inline QuadExt inverse(const QuadExt& x) {
    Rational fn = field_norm(x);
    if (fn.is_zero()) throw ZeroDivisorInverse();
    return QuadExt(x.rat_part() / fn, -(x.surd_part() / fn), x.discriminant());
}

inline QuadExt pow(const QuadExt& base, long long exp) {
    if (exp < 0) return pow(inverse(base), -exp);
    QuadExt acc = QuadExt::one(base.discriminant());
    QuadExt sq = base;
    for (unsigned long long e = static_cast<unsigned long long>(exp); e != 0; e >>= 1) {
        if (e & 1) acc *= sq;
        if (e > 1) sq *= sq;
    }
    return acc;
}

/// Extracts the rational part of a value known to be rational.
inline Rational to_rational(const QuadExt& x) {
    if (!x.is_rational()) throw NotRational(x.to_string());
    return x.rat_part();
}

}  // namespace horadam
