#pragma once

#include <vector>

#include "vfwalk/cycles.hpp"
#include "vfwalk/embedding.hpp"
#include "vfwalk/graph.hpp"
#include "vfwalk/util.hpp"
#include "vfwalk/walk_matrices.hpp"

namespace vfwalk {

// Every zeta function handled here is passed around as the LOGARITHM of its
// reciprocal.  Fractional powers (1/n, 1/N^d) are applied to the log, never
// to the value, so no root-of-unity branch is ever chosen; comparisons divide
// out the 2*pi*i ambiguity through log_relative_residual.

// log det of a dense square matrix via LU (sum over the diagonal of the
// triangular factor plus the permutation sign).
Complex log_det(const ComplexMatrix& m);

// (r - 1) log(1 - u^2) + log det(I - u A + u^2 (D - I)), r = m - n + 1.
Complex ihara_bass_log(const Graph& g, Complex u);

// log det(I - u S) with S the positive support of the arc scattering matrix.
Complex positive_support_zeta_log(const Graph& g, Complex u);

struct GroverZetaLogs {
  Complex determinant;  // log det(I - u U)
  Complex closed_form;  // (m - n) log(1-u^2) + log det((1+u^2) I - 2u P)
};
GroverZetaLogs grover_zeta_logs(const Graph& g, Complex u);

// Coefficient-level comparison of the non-backtracking cycle oracle against
// the Bass determinant route, both expanded as series of the zeta itself.
struct SeriesComparison {
  std::vector<double> oracle;
  std::vector<double> determinant;
  std::vector<double> residuals;  // |a_j - b_j| / max(1, |b_j|) per order
};
SeriesComparison ihara_series_comparison(const Graph& g, int order,
                                         EnumerationBudget budget = {});

enum class GeneralizedFlavor { ihara, grover };

// Rooted generalized zeta at x0 against the n-th root of the whole-graph
// zeta (the vertex-transitive identity).  Flavor "ihara" counts reduced
// x0-cycles against the Bass determinant; flavor "grover" sums weighted
// x0-walks against det(I - uU).
SeriesComparison generalized_zeta_series(const Graph& g, int x0,
                                         GeneralizedFlavor flavor, int order,
                                         EnumerationBudget budget = {});

// --- Coined torus walk routes ------------------------------------------------

// Unscaled log det(I - u M_A) over the full torus.
Complex walk_determinant_log(const TorusSpec& spec, const CoinSpec& coin,
                             Complex u);
// Sum over the momentum grid k~ in {0, 2pi/N, ...}^d of
// log det(I_{2d} - u M^(2 pi k~ / N)); equals the determinant route exactly.
// A grid block with |det| < 1e-12 raises a singular-point error naming k~.
Complex walk_fourier_product_log(const TorusSpec& spec, const CoinSpec& coin,
                                 Complex u);
// Per-site quadrature of the same block logarithm over [0, 2pi)^d at the
// given grid; approximates the N -> infinity limit.
Complex walk_limit_integral_log(const CoinSpec& coin, int dimension, Complex u,
                                int grid);

struct WalkZetaLogs {
  Complex determinant;      // unscaled
  Complex fourier_product;  // unscaled (N^d times the per-site value)
  Complex limit_integral;   // per-site
};
WalkZetaLogs walk_zeta_logs(const TorusSpec& spec, const CoinSpec& coin,
                            Complex u, int grid);

// --- Vertex-face walk routes -------------------------------------------------

// log det(I - u U) from the first-principles reflection product.
Complex vf_logdet(const EmbeddedGraph& emb, Complex u);
// (2m-n-k) log(1-u) + (n-k) log(1+u) + log det((1+u)^2 I_k - 4u K),
// K the face-overlap matrix from the incidences.
Complex vf_factorization_log(const EmbeddedGraph& emb, Complex u);
// Same factorization for det(lambda I - U):
// (2m-n-k) log(lambda-1) + (n-k) log(lambda+1)
//   + log det((lambda+1)^2 I_k - 4 lambda K).
Complex vf_char_factorization_log(const EmbeddedGraph& emb, Complex lambda);

// Dual-adjacency surrogate route: the factorization with 4K replaced by
// (1/4)(A^2 + 2A) of the dual graph.  Measured against vf_logdet, never
// trusted as an oracle.
Complex dual_quadratic_log(const EmbeddedGraph& emb, Complex u);

// Literal trigonometric displays on the N x N torus (unscaled: the 2 N^2
// log(1-u) prefactor plus the sum over momenta of
// log(u^2 - u (1/4 (cos a + cos b)^2 + cos a + cos b - 2) + 1)).
Complex vf_cos_product_log(int side, Complex u);
// Characteristic-polynomial form of the same display at lambda.
Complex vf_cos_char_product_log(int side, Complex lambda);

// --- Limit integrals ---------------------------------------------------------

enum class LimitKind { grover, ihara, vertex_face };

// Per-site logarithm of the infinite-torus reciprocal zeta:
//   grover:       (d-1) log(1-u^2) + mean log((1+u^2)   - (2u/d) sum cos)
//   ihara:        (d-1) log(1-u^2) + mean log((1+(2d-1)u^2) - 2u sum cos)
//   vertex_face:  2 log(1-u)       + mean log(u^2 - u(...) + 1), d = 2 only
// u must be real in (-1, 1); an integrand sign change on the grid raises a
// branch-crossing error naming the offending angles.  Grid nodes are formed
// as 2 pi (j / G), so at G = N the mean term coincides bit for bit with the
// finite-torus product routes.
double torus_limit_integral_log(LimitKind kind, int dimension, double u,
                                int grid);

}  // namespace vfwalk
