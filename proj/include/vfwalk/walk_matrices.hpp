#pragma once

#include <cstdint>
#include <vector>

#include "vfwalk/embedding.hpp"
#include "vfwalk/graph.hpp"

namespace vfwalk {

// Arc-to-arc scattering matrix of the degree-normalized walk: entry (e, f) is
// 2/deg(t(f)) when f feeds into e (t(f) = o(e)), reduced by 1 when e reverses
// f, zero otherwise.  Real orthogonal.
Matrix grover_matrix(const Graph& g);

// Entrywise indicator of strictly positive entries.
Matrix positive_support(const Matrix& m);

// Arc-face incidence (2m x k): entry (a, f) = 1 iff arc a lies on face f.
Matrix arc_face_incidence(const EmbeddedGraph& emb);

// Arc-origin incidence (2m x n): entry (a, v) = 1 iff arc a starts at v.
Matrix arc_origin_incidence(const Graph& g);

// Columns scaled to unit Euclidean norm; throws on a zero column.
Matrix normalize_columns(const Matrix& m);

// Two-reflection arc walk U = (2 M^ M^T - I)(2 N^ N^T - I) built from the
// normalized arc-face and arc-origin incidences.  Requires a circular
// embedding (each face bounded by a vertex-simple cycle).
Matrix vertex_face_transition(const EmbeddedGraph& emb);

// Face-overlap Gram matrix K = M^T N^ N^T M^ (k x k), computed both through
// the incidences and directly from shared boundary vertices
// (K_fh = sum_{v in f⋂h} 1/deg(v) / sqrt(|f||h|)); `residual` is their
// max-norm difference.
struct FaceOverlap {
  Matrix incidence;
  Matrix direct;
  double residual;
};
FaceOverlap face_overlap_matrix(const EmbeddedGraph& emb);

// Coin matrix together with structure flags (recomputed, tolerance 1e-12).
struct CoinSpec {
  ComplexMatrix entries;
  bool unitary = false;
  bool column_stochastic = false;

  int size() const { return static_cast<int>(entries.rows()); }

  static CoinSpec from_matrix(ComplexMatrix a);
  static CoinSpec identity(int size);
  // entries 2/size - delta_ij
  static CoinSpec grover(int size);
  // Grover coin composed with the direction-reversal swap (slots 2j <-> 2j+1).
  // The lattice walk with this coin is a re-indexing of the arc scattering
  // matrix above; the plain Grover coin is not (the reversal lands on the coin
  // diagonal only after the swap).
  static CoinSpec grover_reversal(int dimension);
  static CoinSpec random_unitary(int size, std::uint64_t seed);
};

// Coined shift walk on the d-torus (2d N^d square).  State components are
// (vertex, slot); slot 2j advances along +e_{j+1} pull-back (collects from
// x + e_{j+1}), slot 2j+1 from x - e_{j+1}.  Coin size must equal 2d.
ComplexMatrix coin_walk_matrix(const TorusSpec& spec, const CoinSpec& coin);

// Momentum-space block of the same walk: D(w) * A with phases
// diag(e^{i w_1}, e^{-i w_1}, ..., e^{i w_d}, e^{-i w_d}).
ComplexMatrix fourier_symbol(const CoinSpec& coin, const std::vector<double>& w);

// Permutation that renames arc a of the torus to state (t(a), reversed slot),
// under which grover_matrix(build_torus(spec)) equals
// coin_walk_matrix(spec, grover_reversal(d)) entry for entry.
std::vector<int> torus_arc_to_state_permutation(const TorusSpec& spec);

}  // namespace vfwalk
