#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "vfwalk/embedding.hpp"
#include "vfwalk/errors.hpp"
#include "vfwalk/graph.hpp"
#include "vfwalk/util.hpp"
#include "vfwalk/walk_matrices.hpp"

using namespace vfwalk;

TEST_CASE("grover matrix entries and orthogonality on K4") {
  Graph k4 = complete_graph(4);
  Matrix u = grover_matrix(k4);
  REQUIRE(u.rows() == 12);
  for (int f = 0; f < 12; ++f) {
    for (int e = 0; e < 12; ++e) {
      double expect = 0.0;
      if (k4.arc_terminus(f) == k4.arc_origin(e)) expect = 2.0 / 3.0;
      if (e == k4.arc_inverse(f)) expect -= 1.0;
      CHECK(u(e, f) == doctest::Approx(expect).epsilon(1e-15));
    }
  }
  Matrix gram = u.transpose() * u - Matrix::Identity(12, 12);
  CHECK(gram.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("positive support keeps strictly positive entries only") {
  Graph k4 = complete_graph(4);
  Matrix b = positive_support(grover_matrix(k4));
  for (int e = 0; e < 12; ++e) {
    // feeds from deg(o(e)) arcs, minus the reversal whose entry went negative
    CHECK(b.row(e).sum() == doctest::Approx(2.0));
    CHECK(b(e, k4.arc_inverse(e)) == 0.0);
  }
  // degree-2 graphs turn the support into the backtrack-free permutation
  Graph c3 = cycle_graph(3);
  Matrix p = positive_support(grover_matrix(c3));
  for (int e = 0; e < 6; ++e) CHECK(p.row(e).sum() == doctest::Approx(1.0));
  CHECK((p * p * p - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("face incidence structure of the square torus") {
  EmbeddedGraph emb = torus_embedding(3);
  Matrix m = arc_face_incidence(emb);
  REQUIRE(m.rows() == 36);
  REQUIRE(m.cols() == 9);
  for (int f = 0; f < 9; ++f) CHECK(m.col(f).sum() == doctest::Approx(4.0));

  Matrix mhat = normalize_columns(m);
  for (int a = 0; a < 36; ++a)
    for (int f = 0; f < 9; ++f) {
      double v = mhat(a, f);
      CHECK((v == 0.0 || std::abs(v - 0.5) < 1e-15));
    }

  Matrix nhat = normalize_columns(arc_origin_incidence(emb.graph()));
  CHECK((mhat.transpose() * mhat - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK((nhat.transpose() * nhat - Matrix::Identity(9, 9)).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("face overlap matrix of the square torus") {
  EmbeddedGraph emb = torus_embedding(3);
  FaceOverlap overlap = face_overlap_matrix(emb);
  CHECK(overlap.residual < 1e-12);
  const Matrix& k = overlap.incidence;
  Graph dual = dual_graph(emb);
  for (int f = 0; f < 9; ++f) {
    CHECK(k(f, f) == doctest::Approx(0.25).epsilon(1e-14));
    for (int h = 0; h < 9; ++h) {
      if (h == f) continue;
      if (dual.adjacent(f, h))
        CHECK(k(f, h) == doctest::Approx(0.125).epsilon(1e-14));
    }
  }
}

TEST_CASE("vertex-face walk is a product of two reflections") {
  for (int side : {3, 4}) {
    EmbeddedGraph emb = torus_embedding(side);
    Matrix u = vertex_face_transition(emb);
    int dim = emb.graph().arc_count();
    CHECK((u.transpose() * u - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <
          1e-12);
    Matrix mhat = normalize_columns(arc_face_incidence(emb));
    Matrix r = 2.0 * mhat * mhat.transpose() - Matrix::Identity(dim, dim);
    CHECK((r * r - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("triangle on the sphere has the flat overlap matrix") {
  Graph c3 = cycle_graph(3);
  EmbeddedGraph emb = trace_faces(c3, default_rotation(c3));
  FaceOverlap overlap = face_overlap_matrix(emb);
  REQUIRE(overlap.incidence.rows() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(overlap.incidence(i, j) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("non-circular embeddings are rejected") {
  Graph k2 = complete_graph(2);
  EmbeddedGraph emb = trace_faces(k2, default_rotation(k2));
  CHECK_THROWS_AS(vertex_face_transition(emb), InvalidInput);
}

TEST_CASE("coin specs") {
  CoinSpec id = CoinSpec::identity(2);
  CHECK(id.unitary);
  CoinSpec grover = CoinSpec::grover(4);
  CHECK(grover.unitary);
  // 2/d J - I with d = 4: diagonal -1/2, off-diagonal 1/2
  CHECK(grover.entries(0, 0).real() == doctest::Approx(-0.5));
  CHECK(grover.entries(0, 1).real() == doctest::Approx(0.5));
  CoinSpec rnd = CoinSpec::random_unitary(4, 7);
  ComplexMatrix gram = rnd.entries.adjoint() * rnd.entries;
  CHECK((gram - ComplexMatrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(rnd.unitary);
  CoinSpec doubled = CoinSpec::from_matrix(2.0 * ComplexMatrix::Identity(2, 2));
  CHECK(!doubled.unitary);
}

TEST_CASE("identity coin walk permutes each axis independently") {
  TorusSpec spec{1, 3};
  ComplexMatrix m = coin_walk_matrix(spec, CoinSpec::identity(2));
  REQUIRE(m.rows() == 6);
  // unitary permutation whose cube is the identity on each slot chain
  CHECK((m * m.adjoint() - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() <
        1e-14);
  ComplexMatrix m3 = m * m * m;
  CHECK((m3 - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("coined walk with unitary coin is unitary") {
  TorusSpec spec{2, 3};
  ComplexMatrix m = coin_walk_matrix(spec, CoinSpec::random_unitary(4, 11));
  int dim = 4 * 9;
  CHECK((m.adjoint() * m - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("reversal-coin walk is the arc-permuted grover matrix") {
  TorusSpec spec{2, 3};
  Graph g = build_torus(spec);
  Matrix grover = grover_matrix(g);
  ComplexMatrix walk = coin_walk_matrix(spec, CoinSpec::grover_reversal(2));
  std::vector<int> perm = torus_arc_to_state_permutation(spec);
  REQUIRE(static_cast<int>(perm.size()) == g.arc_count());
  double worst = 0.0;
  for (int e = 0; e < g.arc_count(); ++e)
    for (int f = 0; f < g.arc_count(); ++f)
      worst = std::max(worst,
                       std::abs(walk(perm[e], perm[f]) - Complex(grover(e, f))));
  CHECK(worst < 1e-15);
}

TEST_CASE("fourier symbol at zero momentum is the coin itself") {
  CoinSpec coin = CoinSpec::random_unitary(4, 3);
  ComplexMatrix symbol = fourier_symbol(coin, {0.0, 0.0});
  CHECK((symbol - coin.entries).cwiseAbs().maxCoeff() < 1e-15);
  ComplexMatrix at_pi = fourier_symbol(CoinSpec::identity(2), {3.141592653589793});
  CHECK(std::abs(at_pi(0, 0) + 1.0) < 1e-12);
  CHECK(std::abs(at_pi(1, 1) + 1.0) < 1e-12);
}

TEST_CASE("dense walk size cap") {
  TorusSpec big{2, 64};
  CHECK_THROWS_AS(coin_walk_matrix(big, CoinSpec::grover(4)), InvalidInput);
}

TEST_CASE("coin size must match the torus dimension") {
  TorusSpec spec{2, 3};
  CHECK_THROWS_AS(coin_walk_matrix(spec, CoinSpec::identity(2)), InvalidInput);
}
