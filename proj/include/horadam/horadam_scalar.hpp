#pragma once

#include <string>
#include <utility>
#include <vector>

#include "horadam/errors.hpp"
#include "horadam/quad_ext.hpp"
#include "horadam/rational.hpp"

namespace horadam {

/// Parameters of the second-order recurrence
///   W_0 = a,  W_1 = b,  W_n = p W_{n-1} + q W_{n-2}.
struct HoradamParams {
    Rational a, b, p, q;

    Rational discriminant() const { return p * p + Rational(4) * q; }

    friend bool operator==(const HoradamParams&, const HoradamParams&) = default;

    std::string to_string() const {
        return "(" + a.to_string() + "," + b.to_string() + ";" + p.to_string() + "," +
               q.to_string() + ")";
    }

    /// Parses "a,b,p,q" with each entry a rational in canonical text form.
    static HoradamParams parse(const std::string& text) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = text.find(',', start);
            if (comma == std::string::npos) {
                parts.push_back(text.substr(start));
                break;
            }
            parts.push_back(text.substr(start, comma - start));
            start = comma + 1;
        }
        if (parts.size() != 4) throw ParamParseError(text);
        return {Rational::from_string(parts[0]), Rational::from_string(parts[1]),
                Rational::from_string(parts[2]), Rational::from_string(parts[3])};
    }
};

/// W_0 .. W_n by forward iteration. Valid for every parameter choice,
/// including q = 0 and repeated roots.
inline std::vector<Rational> w_sequence(const HoradamParams& params, long long n) {
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(n) + 1);
    w.push_back(params.a);
    if (n >= 1) w.push_back(params.b);
    for (long long k = 2; k <= n; ++k)
        w.push_back(params.p * w[static_cast<std::size_t>(k - 1)] +
                    params.q * w[static_cast<std::size_t>(k - 2)]);
    return w;
}

inline Rational w_recurrence(const HoradamParams& params, long long n) {
    return w_sequence(params, n).back();
}

/// The characteristic roots alpha, beta of x^2 - px - q and the Binet
/// coefficients A = b - a beta, B = b - a alpha, all exact.
///
/// For rational p, q the discriminant p^2 + 4q = N/M is rational; the roots
/// live in Q[sqrt(NM)] since sqrt(N/M) = sqrt(NM)/M. Perfect-square and
/// negative discriminants use the same formal ring.
struct Roots {
    QuadExt alpha, beta;
    QuadExt big_a, big_b;
    Rational disc;

    QuadExt sqrt_disc() const { return alpha - beta; }
};

inline Roots make_roots(const HoradamParams& params) {
    Rational disc = params.discriminant();
    if (disc.is_zero()) throw RepeatedRoot();
    BigInt ring_disc = disc.numerator() * disc.denominator();
    Rational half_p = params.p / Rational(2);
    Rational half_surd(BigInt(1), 2 * disc.denominator());
    QuadExt alpha(half_p, half_surd, ring_disc);
    QuadExt beta(half_p, -half_surd, ring_disc);
    QuadExt big_a = params.b - params.a * beta;
    QuadExt big_b = params.b - params.a * alpha;
    return {std::move(alpha), std::move(beta), std::move(big_a), std::move(big_b),
            std::move(disc)};
}

/// T_n = (alpha^n - beta^n) / (alpha - beta), with T_{-1} = 1/q obtained by
/// running the recurrence backward (T_1 = p T_0 + q T_{-1}).
inline Rational t_n(const HoradamParams& params, long long n) {
    if (n == -1) {
        if (params.q.is_zero()) throw ZeroQ();
        if (params.discriminant().is_zero()) throw RepeatedRoot();
        return inverse(params.q);
    }
    Roots r = make_roots(params);
    return to_rational((pow(r.alpha, n) - pow(r.beta, n)) * inverse(r.sqrt_disc()));
}

/// W_n = (A alpha^n - B beta^n) / (alpha - beta). Equals w_recurrence.
inline Rational w_binet(const HoradamParams& params, long long n) {
    Roots r = make_roots(params);
    return to_rational((r.big_a * pow(r.alpha, n) - r.big_b * pow(r.beta, n)) *
                       inverse(r.sqrt_disc()));
}

/// W_n = b T_n + a q T_{n-1}. Equals w_recurrence; needs q != 0 for T_{-1}.
inline Rational w_via_t(const HoradamParams& params, long long n) {
    if (params.q.is_zero()) throw ZeroQ();
    return params.b * t_n(params, n) + params.a * params.q * t_n(params, n - 1);
}

}  // namespace horadam
