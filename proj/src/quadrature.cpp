#include "vfwalk/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "vfwalk/errors.hpp"

namespace vfwalk {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_grid(const GridSpec& grid) {
  if (grid.dimension < 1) throw InvalidInput("grid dimension must be >= 1");
  if (grid.points_per_axis < 1)
    throw InvalidInput("grid must have at least one point per axis");
  double total = std::pow(static_cast<double>(grid.points_per_axis),
                          static_cast<double>(grid.dimension));
  if (total > 5e8) throw InvalidInput("grid too large");
}

[[noreturn]] void non_finite_at(const std::vector<double>& theta) {
  std::string msg = "integrand is not finite at node (";
  for (size_t j = 0; j < theta.size(); ++j) {
    if (j) msg += ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", theta[j]);
    msg += buf;
  }
  msg += ")";
  throw NumericalFailure(msg);
}

// Walks the lattice in lexicographic order, calling visit(theta) per node.
template <typename Visit>
void for_each_node(const GridSpec& grid, Visit&& visit) {
  const int d = grid.dimension;
  const int g = grid.points_per_axis;
  std::vector<int> index(d, 0);
  std::vector<double> theta(d, 0.0);
  for (;;) {
    for (int j = 0; j < d; ++j)
      theta[j] = kTwoPi * (static_cast<double>(index[j]) / g);
    visit(theta);
    int axis = d - 1;
    while (axis >= 0 && ++index[axis] == g) index[axis--] = 0;
    if (axis < 0) break;
  }
}

}  // namespace

double periodic_integral(const std::function<double(const std::vector<double>&)>& f,
                         const GridSpec& grid) {
  check_grid(grid);
  KahanSum sum;
  long long nodes = 0;
  for_each_node(grid, [&](const std::vector<double>& theta) {
    double v = f(theta);
    if (!std::isfinite(v)) non_finite_at(theta);
    sum.add(v);
    ++nodes;
  });
  return sum.value() / static_cast<double>(nodes);
}

Complex periodic_integral_complex(
    const std::function<Complex(const std::vector<double>&)>& f,
    const GridSpec& grid) {
  check_grid(grid);
  KahanSum re, im;
  long long nodes = 0;
  for_each_node(grid, [&](const std::vector<double>& theta) {
    Complex v = f(theta);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) non_finite_at(theta);
    re.add(v.real());
    im.add(v.imag());
    ++nodes;
  });
  return Complex(re.value(), im.value()) / static_cast<double>(nodes);
}

ConvergedIntegral converged_integral(
    const std::function<double(const std::vector<double>&)>& f, int dimension,
    double tol, int grid_max) {
  if (grid_max < 8) throw InvalidInput("grid_max must be >= 8");
  ConvergedIntegral out;
  out.grid_used = 8;
  out.value = periodic_integral(f, GridSpec{dimension, 8});
  if (std::isinf(tol)) {
    out.converged = true;
    out.gap = 0.0;
    return out;
  }
  for (int g = 16; g <= grid_max; g *= 2) {
    double next = periodic_integral(f, GridSpec{dimension, g});
    out.gap = std::abs(next - out.value);
    out.value = next;
    out.grid_used = g;
    if (out.gap <= tol) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

}  // namespace vfwalk
