#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "vfwalk/util.hpp"

namespace vfwalk {

struct GridSpec {
  int dimension = 1;
  int points_per_axis = 8;
};

// Mean of f over the uniform lattice {2 pi j / G : j = 0..G-1}^d — the
// periodic trapezoid rule, spectrally accurate for analytic integrands.
// Nodes are formed as (j / G) * 2 pi so a grid with G equal to a torus side
// shares its node set bit for bit with the finite product routes.
// Summation is compensated and runs in a fixed lexicographic order.
double periodic_integral(const std::function<double(const std::vector<double>&)>& f,
                         const GridSpec& grid);
Complex periodic_integral_complex(
    const std::function<Complex(const std::vector<double>&)>& f,
    const GridSpec& grid);

struct ConvergedIntegral {
  double value = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  int grid_used = 0;
  bool converged = false;
};

// Doubles the per-axis grid from 8 until successive values differ by at most
// tol (or grid_max is reached, in which case `converged` stays false and the
// last gap is reported).  tol = infinity returns the G = 8 value immediately.
ConvergedIntegral converged_integral(
    const std::function<double(const std::vector<double>&)>& f, int dimension,
    double tol, int grid_max);

}  // namespace vfwalk
