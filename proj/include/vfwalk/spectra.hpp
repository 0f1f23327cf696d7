#pragma once

#include <complex>
#include <string>
#include <vector>

#include "vfwalk/embedding.hpp"
#include "vfwalk/graph.hpp"
#include "vfwalk/util.hpp"

namespace vfwalk {

// Eigenvalue multiset with multiplicities merged by distance clustering.
struct Spectrum {
  struct Entry {
    Complex value;
    int multiplicity;
  };
  std::vector<Entry> entries;

  int total_multiplicity() const;
  std::vector<Complex> expanded() const;  // value repeated by multiplicity
  static Spectrum cluster(std::vector<Complex> values, double tol = 1e-8);
};

// Raw eigenvalues, one per instance, via a dense solver.
std::vector<Complex> eigenvalue_list(const Matrix& m);
std::vector<Complex> eigenvalue_list(const ComplexMatrix& m);

Spectrum eigenvalues(const Matrix& m, double cluster_tol = 1e-8);
Spectrum eigenvalues(const ComplexMatrix& m, double cluster_tol = 1e-8);

// Polynomial with ascending complex coefficients.
struct Polynomial {
  std::vector<Complex> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex eval(Complex z) const;
  void trim(double tol = 1e-12);
  static Polynomial from_roots(const std::vector<Complex>& roots);
};

// det(lambda I - M) by the Faddeev–LeVerrier recurrence.  Dimension capped at
// 512; beyond that use char_poly_at, which evaluates the determinant directly.
Polynomial char_poly(const ComplexMatrix& m);
Polynomial char_poly(const Matrix& m);
Complex char_poly_at(const ComplexMatrix& m, Complex lambda);

// Spectrum of the vertex-face walk predicted from the face-overlap matrix:
// each overlap eigenvalue mu contributes the conjugate pair
// (2 mu - 1) +- 2 i sqrt(mu (1 - mu)), padded with +1 (multiplicity 2m-n-k)
// and -1 (multiplicity n-k).  Overlap eigenvalues are clamped to [0, 1];
// values further than 1e-10 outside are recorded in `anomalies`.
struct PredictedSpectrum {
  Spectrum spectrum;
  std::vector<double> overlap_eigenvalues;
  std::vector<double> anomalies;
  int plus_one_multiplicity;
  int minus_one_multiplicity;
};
PredictedSpectrum vf_spectrum_via_overlap(const EmbeddedGraph& emb);

// Closed-form adjacency spectrum of the N x N torus:
// 2 cos(2 pi k1 / N) + 2 cos(2 pi k2 / N).
Spectrum torus_adjacency_spectrum(int side);

// Greedy matching of two spectra: multiplicity totals must agree; values are
// angle-sorted on the unit circle (principal branch cut at angle 0) and
// magnitude-sorted off it, then paired index by index.  Mismatched totals
// yield ok = false with a note rather than an exception, so claim checks can
// record the failure.
struct SpectraMatch {
  bool ok = false;
  double max_gap = 0.0;
  std::string note;
};
SpectraMatch spectra_match(const Spectrum& a, const Spectrum& b, double tol);

}  // namespace vfwalk
