#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace vfwalk {

using Complex = std::complex<double>;

// "%.17g" — round-trip safe text form used for all numeric file output.
std::string fmt17(double x);

// Uniform double in [0, 1) built from the full 64-bit engine output, so the
// stream is identical on every platform (std::uniform_real_distribution is
// implementation-defined).
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  Complex gaussian_pair();             // standard complex gaussian (Box–Muller)

 private:
  std::mt19937_64 engine_;
};

// Sample points for identity checks: complex u in the disk |u| <= radius,
// kept at least `exclusion` away from the real branch points +1 and -1.
std::vector<Complex> sample_u_disk(std::uint64_t seed, int count,
                                   double radius = 0.9, double exclusion = 0.05);

// |exp(a - b) - 1|: relative residual between two quantities handed around as
// logarithms.  Insensitive to 2*pi*i branch offsets between the two logs and
// never materializes the (possibly huge) underlying values.  Clamped so the
// result stays representable in JSON.
double log_relative_residual(Complex lhs_log, Complex rhs_log);

// Compensated (Kahan) summation over a fixed iteration order.
class KahanSum {
 public:
  void add(double x);
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// Thread cap for claim execution: VFWALK_THREADS, else hardware concurrency.
int thread_budget();

}  // namespace vfwalk
