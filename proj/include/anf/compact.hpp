#pragma once

#include <complex>
#include <vector>

#include "anf/harmonics.hpp"
#include "anf/rng.hpp"
#include "anf/weights.hpp"

namespace anf {

// Element of U(n) or O(n), row-major entries (real entries have zero imaginary part).
struct CompactGroupElement {
  GroupKind group = GroupKind::Orthogonal;
  int n = 1;
  std::vector<std::complex<double>> entries;  // n*n, row-major

  std::complex<double>& at(int i, int j) { return entries[i * n + j]; }
  const std::complex<double>& at(int i, int j) const { return entries[i * n + j]; }

  // max |(k k*)_{ij} - delta_{ij}|
  double unitarity_residual() const;
};

// Haar-distributed sample: QR of a Gaussian matrix with the R-diagonal phase/sign
// correction. Deterministic for a given rng state.
CompactGroupElement haar_sample(GroupKind group, int n, Rng& rng);

// Row vector e_n k^{-1} (the last row of the inverse = conjugated last column of k).
std::vector<std::complex<double>> last_row_of_inverse(const CompactGroupElement& k);

// Row vector z * k.
std::vector<std::complex<double>> apply_right(const std::vector<std::complex<double>>& z,
                                              const CompactGroupElement& k);

struct ResidualEstimate {
  double residual = 0.0;
  double std_error = 0.0;  // 0 for exact (deterministic) quadratures
};

// |P(z) - dim tau * int_K P(e_n k^{-1}) P0(z k) dk| where P0 is the zonal of the space.
// The group integral is an exact parametrized quadrature for U(1), O(2), U(2) and
// Monte-Carlo with reported standard error for larger groups.
ResidualEstimate reproducing_residual(FieldKind field, int n, long long p, long long q,
                                      const HarmonicPoly& P,
                                      const std::vector<std::complex<double>>& z);

// |int P(x) exp(-d_F pi x conj(x)^t) conj(psi)(x conj(w)^t) dx - i^{-deg} P(w) exp(-d_F pi w conj(w)^t)|,
// the Fourier self-reproduction of harmonic Gaussians. Tensor-product quadrature over
// d_F * n real dimensions; throws unsupported_error when n * d_F > 6.
double hecke_residual(FieldKind field, int n, const HarmonicPoly& P,
                      const std::vector<std::complex<double>>& w);

}  // namespace anf
