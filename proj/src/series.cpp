#include "vfwalk/series.hpp"

#include "vfwalk/errors.hpp"

namespace vfwalk {

std::vector<double> series_exp_from_log(const std::vector<double>& a, int order) {
  if (order < 0) throw InvalidInput("series order must be nonnegative");
  std::vector<double> g(order + 1, 0.0);
  g[0] = 1.0;
  // g' = a' g  =>  j g_j = sum_{i=1..j} i a_i g_{j-i}
  for (int j = 1; j <= order; ++j) {
    double s = 0.0;
    for (int i = 1; i <= j; ++i) {
      const double ai = i < static_cast<int>(a.size()) ? a[i] : 0.0;
      s += i * ai * g[j - i];
    }
    g[j] = s / j;
  }
  return g;
}

std::vector<double> series_log(const std::vector<double>& p, int order) {
  if (p.empty() || p[0] != 1.0)
    throw InvalidInput("series_log needs constant term 1");
  std::vector<double> l(order + 1, 0.0);
  // p' = l' p  =>  j p_j = sum_{i=1..j} i l_i p_{j-i}
  for (int j = 1; j <= order; ++j) {
    double s = 0.0;
    for (int i = 1; i < j; ++i) {
      const double pj = (j - i) < static_cast<int>(p.size()) ? p[j - i] : 0.0;
      s += i * l[i] * pj;
    }
    const double pj = j < static_cast<int>(p.size()) ? p[j] : 0.0;
    l[j] = (j * pj - s) / j;
  }
  return l;
}

std::vector<double> log_det_series(const Matrix& m, int order) {
  std::vector<double> out(order + 1, 0.0);
  Matrix power = Matrix::Identity(m.rows(), m.cols());
  for (int k = 1; k <= order; ++k) {
    power = power * m;
    out[k] = -power.trace() / k;
  }
  return out;
}

std::vector<double> log_det_series_quadratic(const Matrix& a, const Matrix& q,
                                             int order) {
  const int n = static_cast<int>(a.rows());
  Matrix c = Matrix::Zero(2 * n, 2 * n);
  c.topLeftCorner(n, n) = a;
  c.topRightCorner(n, n) = -q;
  c.bottomLeftCorner(n, n) = Matrix::Identity(n, n);
  return log_det_series(c, order);
}

void add_log_one_minus_u2(std::vector<double>& series, double c) {
  for (int j = 1; 2 * j < static_cast<int>(series.size()); ++j)
    series[2 * j] -= c / j;
}

}  // namespace vfwalk
