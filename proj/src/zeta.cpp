#include "vfwalk/zeta.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>

#include "vfwalk/errors.hpp"
#include "vfwalk/quadrature.hpp"
#include "vfwalk/series.hpp"

namespace vfwalk {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

std::vector<double> negated(std::vector<double> v) {
  for (double& x : v) x = -x;
  return v;
}

std::vector<double> scaled(std::vector<double> v, double s) {
  for (double& x : v) x *= s;
  return v;
}

SeriesComparison compare_series(std::vector<double> oracle,
                                std::vector<double> determinant) {
  SeriesComparison out;
  out.oracle = std::move(oracle);
  out.determinant = std::move(determinant);
  size_t len = std::min(out.oracle.size(), out.determinant.size());
  out.residuals.resize(len);
  for (size_t j = 0; j < len; ++j) {
    double b = out.determinant[j];
    out.residuals[j] = std::abs(out.oracle[j] - b) / std::max(1.0, std::abs(b));
  }
  return out;
}

std::string format_angles(const std::vector<double>& theta) {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < theta.size(); ++j)
    os << (j ? ", " : "") << fmt17(theta[j]);
  os << ")";
  return os.str();
}

}  // namespace

Complex log_det(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("log_det needs a square matrix");
  if (m.rows() == 0) return Complex(0.0);
  Eigen::PartialPivLU<ComplexMatrix> lu(m);
  Complex sum = 0.0;
  const auto diag = lu.matrixLU().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    if (diag(i) == Complex(0.0))
      throw NumericalFailure("log_det: matrix is singular");
    sum += std::log(diag(i));
  }
  if (lu.permutationP().determinant() < 0) sum += Complex(0.0, kPi);
  return sum;
}

Complex ihara_bass_log(const Graph& g, Complex u) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Matrix a = adjacency_matrix(g);
  Matrix q = degree_matrix(g) - Matrix::Identity(n, n);
  ComplexMatrix pencil = ComplexMatrix::Identity(n, n) -
                         u * a.cast<Complex>() + u * u * q.cast<Complex>();
  return static_cast<double>(m - n) * std::log(1.0 - u * u) + log_det(pencil);
}

Complex positive_support_zeta_log(const Graph& g, Complex u) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) < 2)
      throw InvalidInput(
          "positive support route needs minimum degree >= 2");
  Matrix s = positive_support(grover_matrix(g));
  const int dim = g.arc_count();
  return log_det(ComplexMatrix::Identity(dim, dim) - u * s.cast<Complex>());
}

GroverZetaLogs grover_zeta_logs(const Graph& g, Complex u) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Matrix grover = grover_matrix(g);
  GroverZetaLogs out;
  out.determinant = log_det(ComplexMatrix::Identity(2 * m, 2 * m) -
                            u * grover.cast<Complex>());
  ComplexMatrix pencil = (1.0 + u * u) * ComplexMatrix::Identity(n, n) -
                         2.0 * u * transition_matrix(g).cast<Complex>();
  out.closed_form =
      static_cast<double>(m - n) * std::log(1.0 - u * u) + log_det(pencil);
  return out;
}

SeriesComparison ihara_series_comparison(const Graph& g, int order,
                                         EnumerationBudget budget) {
  std::vector<long long> counts = reduced_cycle_counts(g, order, budget);
  SeriesOracle oracle = series_exp(counts, order);

  Matrix a = adjacency_matrix(g);
  Matrix q = degree_matrix(g) - Matrix::Identity(a.rows(), a.cols());
  std::vector<double> log_recip = log_det_series_quadratic(a, q, order);
  add_log_one_minus_u2(log_recip, g.edge_count() - g.vertex_count());
  std::vector<double> det_series = series_exp_from_log(negated(log_recip), order);
  return compare_series(oracle.coeffs, det_series);
}

SeriesComparison generalized_zeta_series(const Graph& g, int x0,
                                         GeneralizedFlavor flavor, int order,
                                         EnumerationBudget budget) {
  const double inv_n = 1.0 / g.vertex_count();
  std::vector<double> oracle, log_recip;
  if (flavor == GeneralizedFlavor::ihara) {
    std::vector<long long> counts = reduced_x0_cycle_counts(g, x0, order, budget);
    oracle = series_exp(counts, order).coeffs;
    Matrix a = adjacency_matrix(g);
    Matrix q = degree_matrix(g) - Matrix::Identity(a.rows(), a.cols());
    log_recip = log_det_series_quadratic(a, q, order);
    add_log_one_minus_u2(log_recip, g.edge_count() - g.vertex_count());
  } else {
    std::vector<double> sums = weighted_x0_cycle_sums(g, x0, order, budget);
    oracle = series_exp(sums, order).coeffs;
    log_recip = log_det_series(grover_matrix(g), order);
  }
  std::vector<double> det_series =
      series_exp_from_log(scaled(negated(std::move(log_recip)), inv_n), order);
  return compare_series(std::move(oracle), std::move(det_series));
}

Complex walk_determinant_log(const TorusSpec& spec, const CoinSpec& coin,
                             Complex u) {
  ComplexMatrix walk = coin_walk_matrix(spec, coin);
  const auto dim = walk.rows();
  return log_det(ComplexMatrix::Identity(dim, dim) - u * walk);
}

Complex walk_fourier_product_log(const TorusSpec& spec, const CoinSpec& coin,
                                 Complex u) {
  spec.validate();
  const int d = spec.dimension;
  const int side = spec.side;
  const int block = spec.coin_size();
  std::vector<int> k(d, 0);
  std::vector<double> w(d, 0.0);
  Complex sum = 0.0;
  for (;;) {
    for (int j = 0; j < d; ++j)
      w[j] = kTwoPi * (static_cast<double>(k[j]) / side);
    ComplexMatrix f = ComplexMatrix::Identity(block, block) -
                      u * fourier_symbol(coin, w);
    Complex det = f.determinant();
    if (std::abs(det) < 1e-12) {
      std::ostringstream os;
      os << "singular point: det(I - u M^) vanishes at k~ = (";
      for (int j = 0; j < d; ++j) os << (j ? ", " : "") << k[j];
      os << ") of side " << side;
      throw NumericalFailure(os.str());
    }
    sum += std::log(det);
    int axis = d - 1;
    while (axis >= 0 && ++k[axis] == side) k[axis--] = 0;
    if (axis < 0) break;
  }
  return sum;
}

Complex walk_limit_integral_log(const CoinSpec& coin, int dimension, Complex u,
                                int grid) {
  if (dimension < 1) throw InvalidInput("walk limit needs dimension >= 1");
  const int block = 2 * dimension;
  return periodic_integral_complex(
      [&](const std::vector<double>& theta) {
        ComplexMatrix f = ComplexMatrix::Identity(block, block) -
                          u * fourier_symbol(coin, theta);
        Complex det = f.determinant();
        if (std::abs(det) < 1e-12)
          throw NumericalFailure("singular point: det(I - u M^) vanishes at theta = " +
                                 format_angles(theta));
        return std::log(det);
      },
      GridSpec{dimension, grid});
}

WalkZetaLogs walk_zeta_logs(const TorusSpec& spec, const CoinSpec& coin,
                            Complex u, int grid) {
  WalkZetaLogs out;
  out.determinant = walk_determinant_log(spec, coin, u);
  out.fourier_product = walk_fourier_product_log(spec, coin, u);
  out.limit_integral = walk_limit_integral_log(coin, spec.dimension, u, grid);
  return out;
}

Complex vf_logdet(const EmbeddedGraph& emb, Complex u) {
  Matrix walk = vertex_face_transition(emb);
  const auto dim = walk.rows();
  return log_det(ComplexMatrix::Identity(dim, dim) - u * walk.cast<Complex>());
}

namespace {

// Shared shape of the three (1-u)/(1+u)-prefactored face-pencil routes.
Complex face_pencil_log(const EmbeddedGraph& emb, Complex minus_base,
                        Complex plus_base, const ComplexMatrix& pencil) {
  const int n = emb.graph().vertex_count();
  const int m = emb.graph().edge_count();
  const int k = emb.face_count();
  return static_cast<double>(2 * m - n - k) * std::log(minus_base) +
         static_cast<double>(n - k) * std::log(plus_base) + log_det(pencil);
}

}  // namespace

Complex vf_factorization_log(const EmbeddedGraph& emb, Complex u) {
  Matrix overlap = face_overlap_matrix(emb).incidence;
  const int k = emb.face_count();
  ComplexMatrix pencil = (1.0 + u) * (1.0 + u) * ComplexMatrix::Identity(k, k) -
                         4.0 * u * overlap.cast<Complex>();
  return face_pencil_log(emb, 1.0 - u, 1.0 + u, pencil);
}

Complex vf_char_factorization_log(const EmbeddedGraph& emb, Complex lambda) {
  Matrix overlap = face_overlap_matrix(emb).incidence;
  const int k = emb.face_count();
  ComplexMatrix pencil =
      (lambda + 1.0) * (lambda + 1.0) * ComplexMatrix::Identity(k, k) -
      4.0 * lambda * overlap.cast<Complex>();
  return face_pencil_log(emb, lambda - 1.0, lambda + 1.0, pencil);
}

Complex dual_quadratic_log(const EmbeddedGraph& emb, Complex u) {
  Matrix a = adjacency_matrix(dual_graph(emb));
  const int k = emb.face_count();
  ComplexMatrix pencil = (1.0 + u) * (1.0 + u) * ComplexMatrix::Identity(k, k) -
                         (u / 4.0) * (a * a + 2.0 * a).cast<Complex>();
  return face_pencil_log(emb, 1.0 - u, 1.0 + u, pencil);
}

namespace {

// The quadratic factor of the literal finite-torus display at momentum
// (2 pi k1 / N, 2 pi k2 / N): z^2 - z q + 1 with
// q = 1/4 (cos a + cos b)^2 + cos a + cos b - 2.
Complex display_quadratic(int side, int k1, int k2, Complex z) {
  double c = std::cos(kTwoPi * (static_cast<double>(k1) / side)) +
             std::cos(kTwoPi * (static_cast<double>(k2) / side));
  double q = 0.25 * c * c + c - 2.0;
  return z * z - z * q + 1.0;
}

}  // namespace

Complex vf_cos_product_log(int side, Complex u) {
  if (side < 3) throw InvalidInput("non-simple torus: side length must be >= 3");
  Complex sum = 2.0 * static_cast<double>(side) * static_cast<double>(side) *
                std::log(1.0 - u);
  for (int k1 = 0; k1 < side; ++k1)
    for (int k2 = 0; k2 < side; ++k2)
      sum += std::log(display_quadratic(side, k1, k2, u));
  return sum;
}

Complex vf_cos_char_product_log(int side, Complex lambda) {
  if (side < 3) throw InvalidInput("non-simple torus: side length must be >= 3");
  Complex sum = 2.0 * static_cast<double>(side) * static_cast<double>(side) *
                std::log(lambda - 1.0);
  for (int k1 = 0; k1 < side; ++k1)
    for (int k2 = 0; k2 < side; ++k2)
      sum += std::log(display_quadratic(side, k1, k2, lambda));
  return sum;
}

double torus_limit_integral_log(LimitKind kind, int dimension, double u,
                                int grid) {
  if (dimension < 1) throw InvalidInput("limit integral needs dimension >= 1");
  if (kind == LimitKind::vertex_face && dimension != 2)
    throw InvalidInput("the vertex-face limit integrand is two-dimensional");
  if (!(u > -1.0 && u < 1.0))
    throw InvalidInput("limit integrals need real u in (-1, 1)");

  auto log_positive = [&](double arg, const std::vector<double>& theta) {
    if (arg <= 0.0)
      throw NumericalFailure(
          "branch crossing: integrand sign change at theta = " +
          format_angles(theta));
    return std::log(arg);
  };

  double prefactor;
  std::function<double(const std::vector<double>&)> integrand;
  switch (kind) {
    case LimitKind::grover:
      prefactor = (dimension - 1) * std::log(1.0 - u * u);
      integrand = [&, u, dimension](const std::vector<double>& theta) {
        double cos_sum = 0.0;
        for (double t : theta) cos_sum += std::cos(t);
        return log_positive((1.0 + u * u) - (2.0 * u / dimension) * cos_sum,
                            theta);
      };
      break;
    case LimitKind::ihara:
      prefactor = (dimension - 1) * std::log(1.0 - u * u);
      integrand = [&, u, dimension](const std::vector<double>& theta) {
        double cos_sum = 0.0;
        for (double t : theta) cos_sum += std::cos(t);
        return log_positive((1.0 + (2.0 * dimension - 1.0) * u * u) -
                                2.0 * u * cos_sum,
                            theta);
      };
      break;
    case LimitKind::vertex_face:
    default:
      prefactor = 2.0 * std::log(1.0 - u);
      integrand = [&, u](const std::vector<double>& theta) {
        double c = std::cos(theta[0]) + std::cos(theta[1]);
        double q = 0.25 * c * c + c - 2.0;
        return log_positive(u * u - u * q + 1.0, theta);
      };
      break;
  }
  return prefactor + periodic_integral(integrand, GridSpec{dimension, grid});
}

}  // namespace vfwalk
