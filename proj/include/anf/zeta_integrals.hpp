#pragma once

#include <complex>
#include <string>
#include <vector>

#include "anf/descriptor.hpp"
#include "anf/quadrature.hpp"
#include "anf/special.hpp"

namespace anf {

// Local zeta integrals against the distinguished vectors: the Whittaker newvector
// W, the spherical newvector W' of the second factor, and the Gaussian-harmonic
// Schwartz function built from the conjugated K-type zonal. Each integral below is
// evaluated by direct quadrature and, per the identities the tests pin down, equals
// the corresponding product of Gamma-type Euler factors on its convergence region.

// Haar normalizations every integral in this module folds in. The multiplicative
// measure is d*x = zeta_F(1) dx/|x|_F with dx the psi-self-dual additive measure
// (Lebesgue over R, twice Lebesgue over C); compact groups carry probability mass.
// The derived constants:
//   fold_even_R : 2 zeta_R(1),      integral over R^x of an even function as
//                 fold * int_0^inf ... dx/x
//   circle_fold_C: 4 pi zeta_C(1),  integral over C^x as fold * int_0^inf of the
//                 angular average, dr/r
//   plane_fold_C: 4 pi,             additive integral over C as fold * int_0^inf of
//                 the angular average, r dr
// measure_conventions() computes the zeta values once and throws std::logic_error
// if they disagree with the pinned constants (1 and 1/pi).
struct MeasureConventions {
  double mult_zeta1_R;
  double mult_zeta1_C;
  double fold_even_R;
  double circle_fold_C;
  double plane_fold_C;
  double compact_mass;
};
const MeasureConventions& measure_conventions();

// GL(1) x GL(1) pairing: integral over F^x of W(x) W'(x) Phi(x) |x|^s d*x with
// Phi(x) = conj(P)(x) exp(-d pi x xbar) for the K-type zonal P of rep. Equals
// rs_l_factor(rep, sph, s). rep and sph must be rank 1 over the same field and
// sph must be spherical. Throws convergence_error outside the region where the
// defining integral converges absolutely.
Complex tate_integral(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
                      const QuadratureSpec& spec = {});

// Matrix-coefficient integral over GL(1): integral of beta(x) Phi(x) |x|^{s} d*x
// where beta is the (unitarily normalized) matrix coefficient of rep against the
// lowest K-type vector, realised through the same Whittaker data as tate_integral
// with no auxiliary twist. Equals l_factor(rep, s).
Complex gj_integral(const ReprDescriptor& rep, Complex s, const QuadratureSpec& spec = {});

// GL(2) x GL(1) pairing: integral over F^x of W(diag(x,1)) W'(x) |x|^{s-1/2} d*x
// for rank-2 rep and rank-1 spherical sph. Equals rs_l_factor(rep, sph, s).
Complex rs_21(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
              const QuadratureSpec& spec = {});

// GL(2) x GL(2) pairing with the Schwartz function: integral over N\GL(2) of
// W(g) W'(g) Phi(e_2 g) |det g|^s dg, with Phi the dim-weighted Gaussian zonal of
// rep's K-type. Real field only (the complex case is out of scope here and throws
// unsupported_error); sph must be rank-2 spherical. Equals rs_l_factor(rep, sph, s).
Complex rs_22(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
              const QuadratureSpec& spec = {});

// GL(3) x GL(2) pairing, evaluated through the one-step reduction: the last two
// components of rep must be unramified characters, rep real; sph rank-2 spherical.
// Strips one spherical line to a GL(2) x GL(2) pairing times the complementary
// Euler factor. Equals rs_l_factor(rep, sph, s).
Complex rs_32(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
              const QuadratureSpec& spec = {});

// Same pairing computed without the reduction step: the defining two-variable torus
// integral of W(diag(a1,a2,1)) against the classical GL(2) radial part of sph,
// using the full orthogonal-invariance of the newvector to collapse the compact
// average. Real spherical rep only. Cross-checks rs_32.
Complex rs_32_direct(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
                     const QuadratureSpec& spec = {});

// Largest deviation |Phi_twisted(w) - i^{c} Phi_hat(w)| over a fixed sample of
// points, where Phi is the rank-1 Gaussian zonal of rep, Phi_hat its Fourier
// transform against the conjugated additive character, and Phi_twisted the
// Gaussian zonal with conjugated polynomial argument. Numerically zero exactly
// because the epsilon factor of rep is i^{-c}.
double epsilon_fourier_residual(const ReprDescriptor& rep, const QuadratureSpec& spec = {});

// One evaluation point of a verification identity: both sides, the residual, and
// the quadrature error estimate that residual should be judged against. For the
// Euler-factor identities (tate, gj, rs_21, rs_22, rs_32, rs_32_direct) the residual
// is relative, |lhs/rhs - 1|; for the checks that are residuals by construction
// (pieri, hecke, reproducing, epsilon_fourier, oldform) it is |lhs| itself, with
// rhs = 0 or the exact count.
struct VerificationPoint {
  Complex s;
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double quad_err = 0.0;
};

struct VerificationReport {
  std::string identity;
  std::string descriptor;  // rep, plus the second factor when there is one
  std::vector<VerificationPoint> points;
  double tolerance = 0.0;
  bool pass = false;
  double seconds = 0.0;
  std::string error;  // nonempty when the check aborted before producing points
};

struct VerifyCheck {
  std::string identity;  // tate, gj, rs_21, rs_22, rs_32, rs_32_direct, pieri,
                         // hecke, reproducing, epsilon_fourier, oldform
  std::string rep;       // descriptor string, parsed per check
  std::string sph;       // second-factor descriptor where applicable, else empty
  std::vector<Complex> s_grid;
  double tolerance = 1e-6;
  QuadratureSpec spec;
};

struct VerifyConfig {
  std::vector<VerifyCheck> checks;
};

// Built-in check lists. "fast" covers the identities that run in seconds; "slow"
// appends the rank-2 x rank-2 and rank-3 x rank-2 pairings.
VerifyConfig verify_profile(const std::string& name);

// Runs one check; never throws. Abort conditions (parse failures, unsupported
// combinations, convergence failures) come back as a report with pass=false and
// the error string filled in.
VerificationReport run_check(const VerifyCheck& check);

// Runs every check in order. Deterministic for a fixed config.
std::vector<VerificationReport> verify_suite(const VerifyConfig& config);

// JSON rendering of the reports. seconds fields are zeroed unless requested, so
// the default output is byte-stable across runs.
std::string reports_json(const std::vector<VerificationReport>& reports,
                         bool include_seconds = false);

}  // namespace anf
