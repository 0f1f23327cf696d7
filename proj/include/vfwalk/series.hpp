#pragma once

#include <complex>
#include <vector>

#include "vfwalk/graph.hpp"

namespace vfwalk {

// Truncated power-series helpers.  Coefficient vectors are ascending in the
// formal variable; index 0 is the constant term.

// exp(sum_{k>=1} a[k] u^k) through `order`; a[0] is ignored.
std::vector<double> series_exp_from_log(const std::vector<double>& a, int order);

// log of a series with p[0] == 1, through `order`.
std::vector<double> series_log(const std::vector<double>& p, int order);

// log det(I - u M) = -sum_{k>=1} tr(M^k)/k u^k through `order`.
// Exact apart from rounding in the small matrix powers, which is what the
// coefficient-level comparisons at order <= 8 need.
std::vector<double> log_det_series(const Matrix& m, int order);

// Same for the quadratic pencil I - u A + u^2 Q via its block companion
// [[A, -Q], [I, 0]].
std::vector<double> log_det_series_quadratic(const Matrix& a, const Matrix& q,
                                             int order);

// Adds c * log(1 - u^2) to a log-series in place.
void add_log_one_minus_u2(std::vector<double>& series, double c);

}  // namespace vfwalk
