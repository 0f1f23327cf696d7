#include "vfwalk/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "vfwalk/errors.hpp"

namespace vfwalk {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double DeterministicRng::uniform() {
  // 53 random mantissa bits
  return std::ldexp(static_cast<double>(engine_() >> 11), -53);
}

double DeterministicRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

Complex DeterministicRng::gaussian_pair() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

std::vector<Complex> sample_u_disk(std::uint64_t seed, int count,
                                   double radius, double exclusion) {
  if (count < 0) throw InvalidInput("sample count must be nonnegative");
  DeterministicRng rng(seed);
  std::vector<Complex> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const Complex u(rng.uniform(-radius, radius), rng.uniform(-radius, radius));
    if (std::abs(u) > radius) continue;
    if (std::abs(u - 1.0) < exclusion || std::abs(u + 1.0) < exclusion) continue;
    out.push_back(u);
  }
  return out;
}

double log_relative_residual(Complex lhs_log, Complex rhs_log) {
  const Complex d = lhs_log - rhs_log;
  if (d.real() > 690.0) return 1e300;  // exp would overflow; report saturated
  const double r = std::abs(std::exp(d) - 1.0);
  return std::min(r, 1e300);
}

void KahanSum::add(double x) {
  const double y = x - carry_;
  const double t = sum_ + y;
  carry_ = (t - sum_) - y;
  sum_ = t;
}

int thread_budget() {
  if (const char* env = std::getenv("VFWALK_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace vfwalk
