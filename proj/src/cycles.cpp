#include "vfwalk/cycles.hpp"

#include <string>

#include "vfwalk/errors.hpp"
#include "vfwalk/series.hpp"

namespace vfwalk {

namespace {

constexpr int kMaxLength = 12;

void check_length(int k_max) {
  if (k_max < 1) throw InvalidInput("cycle length bound must be >= 1");
  if (k_max > kMaxLength)
    throw InvalidInput("cycle length bound capped at 12 (enumeration blow-up)");
}

struct NodeBudget {
  long long left;
  void spend() {
    if (--left < 0)
      throw BudgetExceeded("cycle enumeration exceeded its node budget");
  }
};

// Extends a non-backtracking arc path and records closures at every length.
// `first` stays fixed; closure additionally requires the wrap pair
// (current, first) to be backtrack-free.
void extend_reduced(const Graph& g, int first, int current, int depth, int k_max,
                    std::vector<long long>& counts, NodeBudget& budget) {
  if (g.arc_terminus(current) == g.arc_origin(first) &&
      g.arc_inverse(current) != first)
    ++counts[depth];
  if (depth == k_max) return;
  for (int next : g.out_arcs(g.arc_terminus(current))) {
    if (next == g.arc_inverse(current)) continue;
    budget.spend();
    extend_reduced(g, first, next, depth + 1, k_max, counts, budget);
  }
}

std::vector<long long> reduced_counts_from(const Graph& g,
                                           const std::vector<int>& start_arcs,
                                           int k_max, EnumerationBudget budget) {
  check_length(k_max);
  std::vector<long long> counts(k_max + 1, 0);
  NodeBudget nodes{budget.max_nodes};
  for (int a : start_arcs) {
    nodes.spend();
    extend_reduced(g, a, a, 1, k_max, counts, nodes);
  }
  return counts;
}

double step_weight(const Graph& g, int e, int f) {
  if (g.arc_terminus(e) != g.arc_origin(f)) return 0.0;
  const double base = 2.0 / g.degree(g.arc_terminus(e));
  return f == g.arc_inverse(e) ? base - 1.0 : base;
}

void extend_weighted(const Graph& g, int first, int current, int depth, int r_max,
                     double weight, std::vector<double>& sums,
                     NodeBudget& budget) {
  if (g.arc_terminus(current) == g.arc_origin(first)) {
    const double wrap = step_weight(g, current, first);
    if (wrap != 0.0) sums[depth] += weight * wrap;
  }
  if (depth == r_max) return;
  for (int next : g.out_arcs(g.arc_terminus(current))) {
    const double w = step_weight(g, current, next);
    if (w == 0.0) continue;
    budget.spend();
    extend_weighted(g, first, next, depth + 1, r_max, weight * w, sums, budget);
  }
}

}  // namespace

std::vector<long long> reduced_cycle_counts(const Graph& g, int k_max,
                                            EnumerationBudget budget) {
  std::vector<int> starts(g.arc_count());
  for (int a = 0; a < g.arc_count(); ++a) starts[a] = a;
  return reduced_counts_from(g, starts, k_max, budget);
}

std::vector<long long> reduced_x0_cycle_counts(const Graph& g, int x0, int k_max,
                                               EnumerationBudget budget) {
  if (x0 < 0 || x0 >= g.vertex_count())
    throw InvalidInput("base vertex out of range");
  return reduced_counts_from(g, g.out_arcs(x0), k_max, budget);
}

std::vector<double> weighted_x0_cycle_sums(const Graph& g, int x0, int r_max,
                                           EnumerationBudget budget) {
  check_length(r_max);
  if (x0 < 0 || x0 >= g.vertex_count())
    throw InvalidInput("base vertex out of range");
  std::vector<double> sums(r_max + 1, 0.0);
  NodeBudget nodes{budget.max_nodes};
  for (int a : g.out_arcs(x0)) {
    nodes.spend();
    extend_weighted(g, a, a, 1, r_max, 1.0, sums, nodes);
  }
  return sums;
}

SeriesOracle series_exp(const std::vector<double>& counts, int order) {
  if (order >= static_cast<int>(counts.size()))
    throw InvalidInput("series order exceeds available counts");
  std::vector<double> log_coeffs(order + 1, 0.0);
  for (int k = 1; k <= order; ++k) log_coeffs[k] = counts[k] / k;
  SeriesOracle s;
  s.order = order;
  s.coeffs = series_exp_from_log(log_coeffs, order);
  return s;
}

SeriesOracle series_exp(const std::vector<long long>& counts, int order) {
  std::vector<double> as_double(counts.begin(), counts.end());
  return series_exp(as_double, order);
}

}  // namespace vfwalk
