#include "vfwalk/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vfwalk/errors.hpp"
#include "vfwalk/walk_matrices.hpp"

namespace vfwalk {

namespace {

constexpr int kCharPolyCap = 512;
constexpr double kOverlapSlack = 1e-10;

// union-find clustering at the given distance tolerance
Spectrum cluster_values(std::vector<Complex> values, double tol) {
  const int n = static_cast<int>(values.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) <= tol) parent[find(i)] = find(j);

  std::vector<Complex> sum(n, 0.0);
  std::vector<int> count(n, 0);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    sum[r] += values[i];
    ++count[r];
  }
  Spectrum s;
  for (int i = 0; i < n; ++i)
    if (count[i] > 0)
      s.entries.push_back({sum[i] / static_cast<double>(count[i]), count[i]});
  std::sort(s.entries.begin(), s.entries.end(), [](const auto& a, const auto& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return s;
}

double angle_in_0_2pi(Complex z) {
  double a = std::arg(z);  // (-pi, pi], branch cut rotated to angle 0
  if (a < 0) a += 2.0 * M_PI;
  return a;
}

}  // namespace

int Spectrum::total_multiplicity() const {
  int t = 0;
  for (const auto& e : entries) t += e.multiplicity;
  return t;
}

std::vector<Complex> Spectrum::expanded() const {
  std::vector<Complex> out;
  out.reserve(total_multiplicity());
  for (const auto& e : entries)
    for (int i = 0; i < e.multiplicity; ++i) out.push_back(e.value);
  return out;
}

Spectrum Spectrum::cluster(std::vector<Complex> values, double tol) {
  return cluster_values(std::move(values), tol);
}

std::vector<Complex> eigenvalue_list(const Matrix& m) {
  Eigen::EigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("real eigensolver did not converge");
  const auto ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> eigenvalue_list(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("complex eigensolver did not converge");
  const auto ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Spectrum eigenvalues(const Matrix& m, double cluster_tol) {
  return cluster_values(eigenvalue_list(m), cluster_tol);
}

Spectrum eigenvalues(const ComplexMatrix& m, double cluster_tol) {
  return cluster_values(eigenvalue_list(m), cluster_tol);
}

Complex Polynomial::eval(Complex z) const {
  Complex acc = 0.0;
  for (int i = degree(); i >= 0; --i) acc = acc * z + coeffs[i];
  return acc;
}

void Polynomial::trim(double tol) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= tol) coeffs.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
  Polynomial p;
  p.coeffs = {1.0};
  for (Complex r : roots) {
    p.coeffs.push_back(0.0);
    for (int i = static_cast<int>(p.coeffs.size()) - 1; i >= 1; --i)
      p.coeffs[i] = p.coeffs[i - 1] - r * p.coeffs[i];
    p.coeffs[0] *= -r;
  }
  return p;
}

Polynomial char_poly(const ComplexMatrix& m) {
  const int n = static_cast<int>(m.rows());
  if (n != m.cols()) throw InvalidInput("characteristic polynomial needs a square matrix");
  if (n > kCharPolyCap)
    throw InvalidInput("char_poly capped at 512x512; evaluate det(lambda I - M) pointwise");
  // Faddeev–LeVerrier: works on exact/small problems, which is all we ask of it
  std::vector<Complex> c(n + 1, 0.0);
  c[n] = 1.0;
  ComplexMatrix mk = ComplexMatrix::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * ComplexMatrix::Identity(n, n);
    c[n - k] = -(m * mk).trace() / static_cast<double>(k);
  }
  // the recurrence above computes coefficients of det(lambda I - M) directly
  Polynomial p;
  p.coeffs = std::move(c);
  return p;
}

Polynomial char_poly(const Matrix& m) { return char_poly(ComplexMatrix(m.cast<Complex>())); }

Complex char_poly_at(const ComplexMatrix& m, Complex lambda) {
  ComplexMatrix shifted = -m;
  shifted.diagonal().array() += lambda;
  return Eigen::PartialPivLU<ComplexMatrix>(shifted).determinant();
}

PredictedSpectrum vf_spectrum_via_overlap(const EmbeddedGraph& emb) {
  const Graph& g = emb.graph();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int k = emb.face_count();
  const int plus = 2 * m - n - k;
  const int minus = n - k;
  if (plus < 0 || minus < 0)
    throw InvalidInput("inconsistent embedding: negative predicted multiplicity");

  const Matrix overlap = face_overlap_matrix(emb).incidence;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(overlap);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("overlap eigensolver did not converge");

  PredictedSpectrum out;
  out.plus_one_multiplicity = plus;
  out.minus_one_multiplicity = minus;
  std::vector<Complex> values;
  values.reserve(2 * m);
  for (int i = 0; i < k; ++i) {
    double mu = solver.eigenvalues()[i];
    out.overlap_eigenvalues.push_back(mu);
    if (mu < -kOverlapSlack || mu > 1.0 + kOverlapSlack) out.anomalies.push_back(mu);
    mu = std::clamp(mu, 0.0, 1.0);  // Gram matrix of a contraction
    // the square root turns O(eps) eigensolver noise at the edges into
    // O(sqrt(eps)) imaginary parts, so fold exact degeneracies first
    if (mu < 1e-12) mu = 0.0;
    if (mu > 1.0 - 1e-12) mu = 1.0;
    const double re = 2.0 * mu - 1.0;
    const double im = 2.0 * std::sqrt(mu * (1.0 - mu));
    values.push_back({re, im});
    values.push_back({re, -im});
  }
  for (int i = 0; i < plus; ++i) values.push_back(1.0);
  for (int i = 0; i < minus; ++i) values.push_back(-1.0);
  out.spectrum = Spectrum::cluster(std::move(values));
  return out;
}

Spectrum torus_adjacency_spectrum(int side) {
  if (side < 3) throw InvalidInput("non-simple torus: side length must be >= 3");
  std::vector<Complex> values;
  values.reserve(static_cast<size_t>(side) * side);
  for (int k1 = 0; k1 < side; ++k1)
    for (int k2 = 0; k2 < side; ++k2)
      values.push_back(2.0 * std::cos(2.0 * M_PI * k1 / side) +
                       2.0 * std::cos(2.0 * M_PI * k2 / side));
  return Spectrum::cluster(std::move(values));
}

SpectraMatch spectra_match(const Spectrum& a, const Spectrum& b, double tol) {
  SpectraMatch result;
  if (a.total_multiplicity() != b.total_multiplicity()) {
    result.ok = false;
    result.note = "multiplicity totals differ: " +
                  std::to_string(a.total_multiplicity()) + " vs " +
                  std::to_string(b.total_multiplicity());
    result.max_gap = std::numeric_limits<double>::infinity();
    return result;
  }
  const auto prepare = [](const Spectrum& s) {
    auto v = s.expanded();
    for (auto& z : v)  // collapse rounding fuzz so conjugate pairs sort stably
      if (std::abs(z.imag()) <= 1e-9 * (1.0 + std::abs(z.real())))
        z = Complex(z.real(), 0.0);
    std::sort(v.begin(), v.end(), [](Complex x, Complex y) {
      const bool cx = std::abs(std::abs(x) - 1.0) <= 1e-6;
      const bool cy = std::abs(std::abs(y) - 1.0) <= 1e-6;
      if (cx != cy) return cx;
      if (cx) {  // both on the unit circle: angle, then magnitude
        const double ax = angle_in_0_2pi(x), ay = angle_in_0_2pi(y);
        if (ax != ay) return ax < ay;
        return std::abs(x) < std::abs(y);
      }
      const double mx = std::abs(x), my = std::abs(y);
      if (mx != my) return mx < my;
      return angle_in_0_2pi(x) < angle_in_0_2pi(y);
    });
    return v;
  };
  const auto va = prepare(a);
  const auto vb = prepare(b);
  double gap = 0.0;
  for (size_t i = 0; i < va.size(); ++i)
    gap = std::max(gap, std::abs(va[i] - vb[i]));
  result.max_gap = gap;
  result.ok = gap <= tol;
  if (!result.ok) result.note = "max matched distance " + fmt17(gap);
  return result;
}

}  // namespace vfwalk
