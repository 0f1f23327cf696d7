#include "vfwalk/walk_matrices.hpp"

#include <Eigen/QR>
#include <cmath>
#include <string>

#include "vfwalk/errors.hpp"
#include "vfwalk/util.hpp"

namespace vfwalk {

namespace {
constexpr double kFlagTol = 1e-12;
constexpr int kDenseWalkLimit = 4096;
}  // namespace

Matrix grover_matrix(const Graph& g) {
  const int arcs = g.arc_count();
  Matrix u = Matrix::Zero(arcs, arcs);
  for (int f = 0; f < arcs; ++f) {
    const int head = g.arc_terminus(f);
    const double base = 2.0 / g.degree(head);
    for (int e : g.out_arcs(head)) u(e, f) = base;
    u(g.arc_inverse(f), f) -= 1.0;
  }
  return u;
}

Matrix positive_support(const Matrix& m) {
  return (m.array() > 0.0).cast<double>().matrix();
}

Matrix arc_face_incidence(const EmbeddedGraph& emb) {
  const int arcs = emb.graph().arc_count();
  Matrix m = Matrix::Zero(arcs, emb.face_count());
  for (int a = 0; a < arcs; ++a) m(a, emb.face_of_arc(a)) = 1.0;
  return m;
}

Matrix arc_origin_incidence(const Graph& g) {
  Matrix m = Matrix::Zero(g.arc_count(), g.vertex_count());
  for (int a = 0; a < g.arc_count(); ++a) m(a, g.arc_origin(a)) = 1.0;
  return m;
}

Matrix normalize_columns(const Matrix& m) {
  Matrix out = m;
  for (int c = 0; c < out.cols(); ++c) {
    const double norm = out.col(c).norm();
    if (norm == 0.0) throw InvalidInput("cannot normalize a zero column");
    out.col(c) /= norm;
  }
  return out;
}

Matrix vertex_face_transition(const EmbeddedGraph& emb) {
  if (!is_circular(emb))
    throw InvalidInput(
        "vertex-face walk needs a circular embedding "
        "(every face a vertex-simple cycle)");
  const int arcs = emb.graph().arc_count();
  const Matrix mh = normalize_columns(arc_face_incidence(emb));
  const Matrix nh = normalize_columns(arc_origin_incidence(emb.graph()));
  const Matrix id = Matrix::Identity(arcs, arcs);
  return (2.0 * mh * mh.transpose() - id) * (2.0 * nh * nh.transpose() - id);
}

FaceOverlap face_overlap_matrix(const EmbeddedGraph& emb) {
  if (!is_circular(emb))
    throw InvalidInput("face overlap needs a circular embedding");
  const Graph& g = emb.graph();
  const Matrix mh = normalize_columns(arc_face_incidence(emb));
  const Matrix nh = normalize_columns(arc_origin_incidence(g));
  FaceOverlap out;
  const Matrix x = mh.transpose() * nh;  // k x n
  out.incidence = x * x.transpose();

  const int k = emb.face_count();
  std::vector<std::vector<int>> verts(k);
  for (int f = 0; f < k; ++f) verts[f] = emb.face_vertices(f);
  out.direct = Matrix::Zero(k, k);
  for (int f = 0; f < k; ++f)
    for (int h = 0; h < k; ++h) {
      double s = 0.0;
      for (int v : verts[f])
        for (int w : verts[h])
          if (v == w) s += 1.0 / g.degree(v);
      out.direct(f, h) =
          s / std::sqrt(static_cast<double>(verts[f].size()) * verts[h].size());
    }
  out.residual = (out.incidence - out.direct).cwiseAbs().maxCoeff();
  return out;
}

CoinSpec CoinSpec::from_matrix(ComplexMatrix a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw InvalidInput("coin must be a nonempty square matrix");
  CoinSpec c;
  c.entries = std::move(a);
  const int n = c.size();
  c.unitary = (c.entries.adjoint() * c.entries - ComplexMatrix::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff() <= kFlagTol;
  c.column_stochastic = true;
  for (int j = 0; j < n && c.column_stochastic; ++j) {
    Complex sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const Complex z = c.entries(i, j);
      if (std::abs(z.imag()) > kFlagTol || z.real() < -kFlagTol ||
          z.real() > 1.0 + kFlagTol)
        c.column_stochastic = false;
      sum += z;
    }
    if (std::abs(sum - 1.0) > kFlagTol) c.column_stochastic = false;
  }
  return c;
}

CoinSpec CoinSpec::identity(int size) {
  return from_matrix(ComplexMatrix::Identity(size, size));
}

CoinSpec CoinSpec::grover(int size) {
  if (size < 1) throw InvalidInput("coin size must be positive");
  ComplexMatrix a = ComplexMatrix::Constant(size, size, 2.0 / size);
  a -= ComplexMatrix::Identity(size, size);
  return from_matrix(std::move(a));
}

CoinSpec CoinSpec::grover_reversal(int dimension) {
  const int size = 2 * dimension;
  ComplexMatrix a = ComplexMatrix::Constant(size, size, 2.0 / size);
  for (int j = 0; j < dimension; ++j) {
    a(2 * j, 2 * j + 1) -= 1.0;
    a(2 * j + 1, 2 * j) -= 1.0;
  }
  return from_matrix(std::move(a));
}

CoinSpec CoinSpec::random_unitary(int size, std::uint64_t seed) {
  DeterministicRng rng(seed);
  ComplexMatrix z(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) z(i, j) = rng.gaussian_pair();
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < size; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return from_matrix(std::move(q));
}

ComplexMatrix coin_walk_matrix(const TorusSpec& spec, const CoinSpec& coin) {
  spec.validate();
  const int d = spec.dimension;
  if (coin.size() != 2 * d)
    throw InvalidInput("coin size must be twice the torus dimension");
  const long long n = spec.vertex_count();
  const long long dim = 2 * d * n;
  if (dim > kDenseWalkLimit)
    throw InvalidInput(
        "dense walk matrix capped at 4096 rows; use the momentum-space route");

  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (long long x = 0; x < n; ++x) {
    const auto coords = spec.vertex_coords(x);
    for (int j = 0; j < d; ++j) {
      auto fwd = coords, bwd = coords;
      fwd[j] = (fwd[j] + 1) % spec.side;
      bwd[j] = (bwd[j] - 1 + spec.side) % spec.side;
      const long long yf = spec.vertex_index(fwd);
      const long long yb = spec.vertex_index(bwd);
      for (int l = 0; l < 2 * d; ++l) {
        m(2 * d * x + 2 * j, 2 * d * yf + l) = coin.entries(2 * j, l);
        m(2 * d * x + 2 * j + 1, 2 * d * yb + l) = coin.entries(2 * j + 1, l);
      }
    }
  }
  if (coin.unitary) {
    const double err =
        (m.adjoint() * m - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (err > kFlagTol)
      throw NumericalFailure("walk matrix lost unitarity: " + fmt17(err));
  }
  return m;
}

ComplexMatrix fourier_symbol(const CoinSpec& coin, const std::vector<double>& w) {
  const int d = static_cast<int>(w.size());
  if (coin.size() != 2 * d)
    throw InvalidInput("coin size must be twice the angle count");
  ComplexMatrix m = coin.entries;
  for (int j = 0; j < d; ++j) {
    const Complex phase = std::exp(Complex(0.0, w[j]));
    m.row(2 * j) *= phase;
    m.row(2 * j + 1) *= std::conj(phase);
  }
  return m;
}

std::vector<int> torus_arc_to_state_permutation(const TorusSpec& spec) {
  spec.validate();
  const Graph g = build_torus(spec);
  const int d = spec.dimension;
  std::vector<int> perm(g.arc_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& slots = g.out_arcs(v);
    for (int s = 0; s < 2 * d; ++s) {
      const int a = slots[s];
      perm[a] = 2 * d * g.arc_terminus(a) + (s ^ 1);
    }
  }
  return perm;
}

}  // namespace vfwalk
