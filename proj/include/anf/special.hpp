#pragma once

#include <complex>

#include "anf/descriptor.hpp"

namespace anf {

using Complex = std::complex<double>;

// Lanczos approximation (g = 7, 9 terms), reflection formula for Re z < 1/2.
// Throws pole_error at nonpositive integers.
Complex gamma_complex(Complex z);

// zeta_R(s) = pi^{-s/2} Gamma(s/2);  zeta_C(s) = 2 (2 pi)^{-s} Gamma(s).
Complex zeta_F(FieldKind field, Complex s);

// Standard-L factor of the descriptor, product over components:
//   C character:       zeta_C(s + t + |kappa|/2)
//   R character:       zeta_R(s + t + kappa)
//   R discrete series: zeta_C(s + t + (kappa-1)/2)
// pole_error carries the index of the offending component.
Complex l_factor(const ReprDescriptor& rep, Complex s);

// L(s, rep x sph) for a spherical twist: product over the twist's t' of
// l_factor(rep, s + t'). Throws unsupported_error if sph is not spherical
// or the fields differ.
Complex rs_l_factor(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s);

// K-Bessel function of complex order at x > 0, via the integral representation
// int_0^infty exp(-x cosh t) cosh(nu t) dt with double-exponential-quality trapezoid.
Complex bessel_k(Complex nu, double x);

}  // namespace anf
