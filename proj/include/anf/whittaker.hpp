#pragma once

#include <complex>
#include <vector>

#include "anf/descriptor.hpp"
#include "anf/quadrature.hpp"
#include "anf/special.hpp"

namespace anf {

// Point of the diagonal torus diag(a_1, ..., a_n). Entries must be nonzero, and real
// when the field is R.
struct TorusPoint {
  LocalField field;
  std::vector<Complex> entries;

  TorusPoint(LocalField f, std::vector<Complex> diag);
  int n() const { return static_cast<int>(entries.size()); }
};

// Invertible matrix over F carrying its Iwasawa factorization m = u * a * k with u unit
// upper triangular, a a positive diagonal, and k orthogonal/unitary. The factors are
// produced at construction by Gram-Schmidt on the rows from the bottom up (with one
// reorthogonalization pass) and the reassembled product must match the input to 1e-12
// relative, else the constructor throws. det is cached.
struct GroupPoint {
  LocalField field{};
  int n = 0;
  std::vector<Complex> m;     // row-major entries
  std::vector<Complex> iw_u;  // row-major, unit upper triangular
  std::vector<double> iw_a;   // diagonal entries, all positive
  std::vector<Complex> iw_k;  // row-major element of O(n) / U(n)
  Complex det{};

  GroupPoint(LocalField f, int n, std::vector<Complex> entries);

  static GroupPoint identity(LocalField f, int n);
  static GroupPoint diagonal(const TorusPoint& a);
  // diag(y, 1) in GL_2.
  static GroupPoint gl2_torus(LocalField f, Complex y);
  // Element of O(2): rotation by theta, optionally right-multiplied by diag(1,-1).
  static GroupPoint rotation(double theta, bool reflected = false);

  Complex at(int i, int j) const { return m[static_cast<std::size_t>(i) * n + j]; }
  double iwasawa_residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

GroupPoint multiply(const GroupPoint& g, const GroupPoint& h);

// diag(g, 1_{n - g.n}).
GroupPoint embed_upper_left(const GroupPoint& g, int n);

// omega_pi(z): product over components of chi^kappa(z)|z|^t (characters) and
// sgn(z)^kappa |z|^{2t} (discrete series).
Complex central_character(const ReprDescriptor& rep, Complex z);

// Rank 1: W(x) = chi^kappa(x) |x|^t. Throws domain_error at x = 0.
Complex whittaker_gl1(const ReprDescriptor& rep, Complex x);

// Value at diag(y, 1) of the normalized Whittaker newform, rank 2. Right invariance
// under diag(K_1, 1) means the value depends on y only through |y|; the three closed
// forms are
//   R, two characters:   2 |y|^{(t1+t2+1+k1+k2)/2} K_{(t1-t2+k1-k2)/2}(2 pi |y|)
//   C, two characters:   4 Y^{(t1+t2+1)/2 + (|k1|+|k2|)/4} K_{t1-t2+(|k1|-|k2|)/2}(4 pi Y^{1/2})
//   R, discrete series:  |y|^{t+kappa/2} exp(-2 pi |y|)
// with Y = y conj(y). Throws domain_error at y = 0.
Complex whittaker_gl2_closed(const ReprDescriptor& rep, Complex y);

// Rank-2 value at any group point, by integrating the canonically normalized induced-
// model section over the unipotent radical against the inverse additive character.
// Restricted to the region of absolute convergence: two characters need
// Re t_1 > Re t_2 (in the order listed); the discrete-series integral always converges.
// The oscillatory line integral is evaluated as a panel-resolved central window plus
// integration-by-parts tail expansions; convergence_error on region violation or if
// the window/tail scheme fails to stabilize.
Complex whittaker_gl2_jacquet(const ReprDescriptor& rep, const GroupPoint& g,
                              const QuadratureSpec& spec = {});

// Rank-2 value at any group point: spherical descriptors go through the Iwasawa
// factorization and the closed form, everything else through whittaker_gl2_jacquet.
Complex whittaker_gl2(const ReprDescriptor& rep, const GroupPoint& g,
                      const QuadratureSpec& spec = {});

// W(diag(g, 1)) for rank n in {2, 3} computed from the rank n-1 newform: the first
// component is peeled off and the remainder enters through a Gaussian-weighted
// integral over GL_{n-1}. A leading discrete series is replaced by the auxiliary
// character |.|^{t + (kappa+1)/2} acting on the same remainder. Supported shapes:
//   n = 2: both fields, any validated descriptor;
//   n = 3: R only; the rank-2 remainder must be spherical, a discrete series, or
//          (with allow_expensive) a ramified pair of characters, since the last case
//          needs an oscillatory rank-2 integral at every quadrature node.
// Throws unsupported_error otherwise.
Complex whittaker_propagate(const ReprDescriptor& rep, const GroupPoint& g,
                            const QuadratureSpec& spec = {}, bool allow_expensive = false);

// Spherical rank-3 torus value through the alternative recursion in the conjugate
// character model: a rank-2 closed form under a two-dimensional oscillatory Gaussian
// layer, five nested quadratures in total. Cross-checks whittaker_propagate.
Complex whittaker_gl3_spherical_alt(const ReprDescriptor& rep, const TorusPoint& a,
                                    const QuadratureSpec& spec = {});

// |LHS - L(s, rep) W(h)| where LHS integrates W(h g) against the Gaussian-harmonic
// test function of the newform K-type over GL_n, n in {1, 2} (n = 2 over R only:
// one unipotent, two torus and one rotation dimension plus the reflection average).
// Convergence region: Re s > -Re t_j for character components and
// Re s > -Re t_j + (kappa_j - 1)/2 for discrete series.
double pieri_residual(const ReprDescriptor& rep, Complex s, const GroupPoint& h,
                      const QuadratureSpec& spec = {});

}  // namespace anf
