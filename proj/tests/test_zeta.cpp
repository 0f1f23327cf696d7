#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "vfwalk/embedding.hpp"
#include "vfwalk/errors.hpp"
#include "vfwalk/graph.hpp"
#include "vfwalk/util.hpp"
#include "vfwalk/walk_matrices.hpp"
#include "vfwalk/zeta.hpp"

using namespace vfwalk;

TEST_CASE("log_det on explicit matrices") {
  ComplexMatrix m(2, 2);
  m << Complex(2, 0), Complex(1, 0), Complex(0, 0), Complex(3, 0);
  CHECK(std::abs(std::exp(log_det(m)) - Complex(6, 0)) < 1e-12);
  // a negative determinant picks up the i*pi branch term
  ComplexMatrix flip(2, 2);
  flip << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  CHECK(std::abs(std::exp(log_det(flip)) - Complex(-1, 0)) < 1e-12);
  ComplexMatrix sing = ComplexMatrix::Zero(2, 2);
  CHECK_THROWS_AS(log_det(sing), NumericalFailure);
}

TEST_CASE("bass determinant on C3 at u = 1/2") {
  Graph c3 = cycle_graph(3);
  Complex z = std::exp(ihara_bass_log(c3, Complex(0.5, 0)));
  CHECK(std::abs(z - Complex(0.765625, 0)) < 1e-12);  // (1 - u^3)^2
}

TEST_CASE("cycle count series equals the determinant series") {
  Graph c3 = cycle_graph(3);
  SeriesComparison cmp = ihara_series_comparison(c3, 6);
  std::vector<double> expect = {1, 0, 0, 2, 0, 0, 3};
  REQUIRE(cmp.oracle.size() == expect.size());
  for (size_t j = 0; j < expect.size(); ++j) {
    CHECK(cmp.oracle[j] == doctest::Approx(expect[j]).epsilon(1e-12));
    CHECK(cmp.determinant[j] == doctest::Approx(expect[j]).epsilon(1e-10));
    CHECK(cmp.residuals[j] < 1e-10);
  }

  SeriesComparison k4 = ihara_series_comparison(complete_graph(4), 8);
  for (double r : k4.residuals) CHECK(r < 1e-8);
}

TEST_CASE("positive support route matches the bass route") {
  for (Complex u : {Complex(0.4, 0), Complex(0.15, 0.2), Complex(-0.3, 0.1)}) {
    for (const Graph& g : {cycle_graph(5), complete_graph(4),
                           build_torus(TorusSpec{2, 3})}) {
      double r = log_relative_residual(positive_support_zeta_log(g, u),
                                       ihara_bass_log(g, u));
      CHECK(r < 1e-10);
    }
  }
}

TEST_CASE("positive support requires minimum degree two") {
  Graph k2 = complete_graph(2);
  CHECK_THROWS_AS(positive_support_zeta_log(k2, Complex(0.3, 0)), InvalidInput);
}

TEST_CASE("grover determinant equals its closed form") {
  for (Complex u : {Complex(0.3, 0), Complex(0.7, 0), Complex(0.2, -0.4)}) {
    for (const Graph& g : {cycle_graph(4), complete_graph(4),
                           build_torus(TorusSpec{2, 3})}) {
      GroverZetaLogs logs = grover_zeta_logs(g, u);
      CHECK(log_relative_residual(logs.determinant, logs.closed_form) < 1e-10);
    }
  }
  // C4: det(I - uU) = (1 - u^4)^2
  Complex u(0.3, 0);
  Complex z = std::exp(grover_zeta_logs(cycle_graph(4), u).determinant);
  Complex expect = std::pow(1.0 - std::pow(u, 4), 2);
  CHECK(std::abs(z - expect) < 1e-12);
}

TEST_CASE("rooted generalized series against the whole-graph root") {
  // vertex-transitive cases: both flavors agree coefficient by coefficient
  SeriesComparison a =
      generalized_zeta_series(cycle_graph(4), 0, GeneralizedFlavor::grover, 6);
  for (double r : a.residuals) CHECK(r < 1e-9);
  SeriesComparison b = generalized_zeta_series(build_torus(TorusSpec{2, 3}), 0,
                                               GeneralizedFlavor::ihara, 6);
  for (double r : b.residuals) CHECK(r < 1e-8);
  // a tree has no cycles at all: both sides are the constant series 1
  SeriesComparison t =
      generalized_zeta_series(complete_graph(2), 0, GeneralizedFlavor::ihara, 4);
  for (size_t j = 0; j < t.oracle.size(); ++j) {
    CHECK(t.oracle[j] == doctest::Approx(j == 0 ? 1.0 : 0.0));
    CHECK(t.residuals[j] < 1e-12);
  }
}

TEST_CASE("coined walk routes agree") {
  TorusSpec spec{2, 3};
  CoinSpec coin = CoinSpec::random_unitary(4, 0xA11CE);
  for (Complex u : {Complex(0.2, 0), Complex(0.1, 0.3), Complex(-0.4, -0.2)}) {
    WalkZetaLogs logs = walk_zeta_logs(spec, coin, u, 16);
    CHECK(log_relative_residual(logs.determinant, logs.fourier_product) < 1e-10);
    CHECK(std::isfinite(logs.limit_integral.real()));
  }
}

TEST_CASE("identity coin walk on one axis in closed form") {
  TorusSpec spec{1, 3};
  Complex u(0.5, 0);
  Complex z = std::exp(walk_determinant_log(spec, CoinSpec::identity(2), u));
  Complex expect = std::pow(1.0 - std::pow(u, 3), 2);
  CHECK(std::abs(z - expect) < 1e-12);
  CHECK(std::abs(std::exp(walk_fourier_product_log(spec, CoinSpec::identity(2), u)) -
                 expect) < 1e-12);
}

TEST_CASE("walk routes at u = 0 are exactly one") {
  TorusSpec spec{2, 3};
  CHECK(std::abs(walk_determinant_log(spec, CoinSpec::grover(4), Complex(0, 0))) <
        1e-15);
  CHECK(std::abs(walk_fourier_product_log(spec, CoinSpec::grover(4),
                                          Complex(0, 0))) < 1e-15);
}

TEST_CASE("singular momentum block is reported") {
  TorusSpec spec{1, 3};
  CoinSpec doubled = CoinSpec::from_matrix(2.0 * ComplexMatrix::Identity(2, 2));
  CHECK_THROWS_AS(walk_fourier_product_log(spec, doubled, Complex(0.5, 0)),
                  NumericalFailure);
}

TEST_CASE("walk limit integral approaches the finite-torus mean") {
  CoinSpec coin = CoinSpec::grover(4);
  Complex u(0.2, 0);
  Complex per_site_64 =
      walk_fourier_product_log(TorusSpec{2, 64}, coin, u) / 4096.0;
  Complex lim = walk_limit_integral_log(coin, 2, u, 64);
  CHECK(std::abs(per_site_64 - lim) < 1e-12);  // same nodes, same mean
  Complex lim128 = walk_limit_integral_log(coin, 2, u, 128);
  CHECK(std::abs(lim128 - lim) < 1e-6);
}

TEST_CASE("vertex-face determinant equals the face factorization") {
  for (int side : {3, 4}) {
    EmbeddedGraph emb = torus_embedding(side);
    for (Complex u : {Complex(0.2, 0), Complex(0.3, 0.3), Complex(-0.5, 0.1)}) {
      CHECK(log_relative_residual(vf_logdet(emb, u),
                                  vf_factorization_log(emb, u)) < 1e-10);
    }
    for (Complex lam : {Complex(0.4, 0.2), Complex(-1.3, 0.5)}) {
      ComplexMatrix m = Complex(1, 0) * lam *
                            ComplexMatrix::Identity(emb.graph().arc_count(),
                                                    emb.graph().arc_count()) -
                        vertex_face_transition(emb).cast<Complex>();
      CHECK(log_relative_residual(log_det(m), vf_char_factorization_log(emb, lam)) <
            1e-10);
    }
  }
  Graph c3 = cycle_graph(3);
  EmbeddedGraph sphere = trace_faces(c3, default_rotation(c3));
  CHECK(log_relative_residual(vf_logdet(sphere, Complex(0.3, 0.2)),
                              vf_factorization_log(sphere, Complex(0.3, 0.2))) <
        1e-10);
}

TEST_CASE("the trigonometric display disagrees with the walk determinant") {
  EmbeddedGraph emb = torus_embedding(3);
  Complex u(0.3, 0);
  double r = log_relative_residual(vf_logdet(emb, u), vf_cos_product_log(3, u));
  CHECK(std::isfinite(r));
  CHECK(r > 1e-4);  // structurally different polynomials, not a rounding gap
  double rq = log_relative_residual(vf_logdet(emb, u), dual_quadratic_log(emb, u));
  CHECK(std::isfinite(rq));
  CHECK(rq > 1e-4);
}

TEST_CASE("limit integrands reproduce the side-three grid means") {
  Complex u(0.3, 0);
  Graph t = build_torus(TorusSpec{2, 3});
  double grover3 = torus_limit_integral_log(LimitKind::grover, 2, u.real(), 3);
  CHECK(std::abs(grover3 - grover_zeta_logs(t, u).determinant.real() / 9.0) <
        1e-10);
  double ihara3 = torus_limit_integral_log(LimitKind::ihara, 2, u.real(), 3);
  CHECK(std::abs(ihara3 - ihara_bass_log(t, u).real() / 9.0) < 1e-10);
  double vf3 = torus_limit_integral_log(LimitKind::vertex_face, 2, 0.2, 3);
  CHECK(std::abs(vf3 - vf_cos_product_log(3, Complex(0.2, 0)).real() / 9.0) <
        1e-10);
}

TEST_CASE("limit integrands reject out-of-domain requests") {
  CHECK_THROWS_AS(torus_limit_integral_log(LimitKind::ihara, 2, 0.9, 16),
                  NumericalFailure);  // sign change across the grid
  CHECK_THROWS_AS(torus_limit_integral_log(LimitKind::vertex_face, 3, 0.2, 16),
                  InvalidInput);
  CHECK_THROWS_AS(torus_limit_integral_log(LimitKind::grover, 2, 1.5, 16),
                  InvalidInput);
  CHECK_THROWS_AS(torus_limit_integral_log(LimitKind::grover, 0, 0.2, 16),
                  InvalidInput);
}
