#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "horadam/horadam_quaternion.hpp"
#include "horadam/horadam_scalar.hpp"
#include "horadam/quaternion.hpp"

namespace horadam {

/// Truncated expansion of (Q_0 + (Q_1 - p Q_0) t) / (1 - p t - q t^2) with
/// quaternion coefficients and a central indeterminate t. Coefficient k
/// equals Q_{w,k}, and coefficients beyond index 1 satisfy
/// c_k = p c_{k-1} + q c_{k-2}.
struct QuatSeries {
    std::vector<Quaternion<Rational>> coefficients;

    std::size_t truncation_order() const { return coefficients.size() - 1; }
};

/// The numerator pair (Q_0, Q_1 - p Q_0).
inline std::pair<Quaternion<Rational>, Quaternion<Rational>> gf_numerator(
    const HoradamParams& params) {
    Quaternion<Rational> q0 = qw_recurrence(params, 0);
    Quaternion<Rational> q1 = qw_recurrence(params, 1);
    return {q0, q1 - q0 * params.p};
}

/// Long division of the numerator by 1 - p t - q t^2, carried out as the
/// linear coefficient recursion it induces. Exact and O(order).
inline QuatSeries gf_expand(const HoradamParams& params, long long order) {
    if (order < 0) throw InvalidRange("series order must be >= 0");
    auto [c0, linear] = gf_numerator(params);
    QuatSeries series;
    series.coefficients.reserve(static_cast<std::size_t>(order) + 1);
    series.coefficients.push_back(c0);
    if (order >= 1) series.coefficients.push_back(linear + c0 * params.p);
    for (long long k = 2; k <= order; ++k) {
        const auto& c = series.coefficients;
        series.coefficients.push_back(c[static_cast<std::size_t>(k - 1)] * params.p +
                                      c[static_cast<std::size_t>(k - 2)] * params.q);
    }
    return series;
}

}  // namespace horadam
