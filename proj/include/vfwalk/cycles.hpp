#pragma once

#include <cstdint>
#include <vector>

#include "vfwalk/graph.hpp"

namespace vfwalk {

struct EnumerationBudget {
  long long max_nodes = 10'000'000;  // DFS node visits before giving up
};

// Counts of closed non-backtracking arc sequences (e_1, ..., e_k), rooted and
// oriented: every starting arc and direction counts separately.  Both the
// sequence and its doubled concatenation must be backtrack-free, so the wrap
// pair (e_k, e_1) is constrained too.  Entry [k] is the length-k count;
// entry [0] is unused (zero).  Brute-force DFS — this is the oracle the
// determinant routes are checked against, so it deliberately shares no code
// with them.
std::vector<long long> reduced_cycle_counts(const Graph& g, int k_max,
                                            EnumerationBudget budget = {});

// Same, restricted to sequences based at x0 (origin of e_1 is x0).
std::vector<long long> reduced_x0_cycle_counts(const Graph& g, int x0, int k_max,
                                               EnumerationBudget budget = {});

// Weighted closed-walk sums at x0: ALL closed arc sequences of length r based
// at x0 (backtracking allowed), each weighted by the product of transition
// weights around the full cycle including the wrap step.  A transition e -> f
// with t(e) = o(f) weighs 2/deg(t(e)), minus 1 when f is the reversal of e;
// incompatible pairs weigh zero.
std::vector<double> weighted_x0_cycle_sums(const Graph& g, int x0, int r_max,
                                           EnumerationBudget budget = {});

struct SeriesOracle {
  int order = 0;
  std::vector<double> coeffs;  // coeffs[0..order], coeffs[0] == 1
};

// exp(sum_k counts[k] u^k / k) truncated at `order`; `counts` is 1-indexed
// (counts[0] ignored) and must extend at least to `order`.
SeriesOracle series_exp(const std::vector<double>& counts, int order);
SeriesOracle series_exp(const std::vector<long long>& counts, int order);

}  // namespace vfwalk
