#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "anf/descriptor.hpp"
#include "anf/exact.hpp"
#include "anf/field.hpp"

namespace anf {

// Multivariate polynomial with exact coefficients, tagged with the harmonic-space
// metadata it is meant to live in. Exponent layout:
//   R: length n,  variables x_1..x_n;
//   C: length 2n, variables z_1..z_n followed by conj(z_1)..conj(z_n).
// (p,q) records the intended bidegree (q is always 0 over R); the terms of a
// polynomial produced by zonal()/zonal_product() all have exactly that (bi)degree and
// are annihilated by the Laplacian. laplacian() outputs reuse the type and need not be
// homogeneous or harmonic.
struct HarmonicPoly {
  FieldKind field = FieldKind::Real;
  int n = 1;
  long long p = 0;
  long long q = 0;  // always 0 over R
  std::map<std::vector<int>, GaussianRational> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const std::vector<int>& exps, const GaussianRational& coeff);
  std::string str() const;  // human-readable, deterministic term order

  friend HarmonicPoly operator+(const HarmonicPoly& a, const HarmonicPoly& b);
  friend HarmonicPoly operator*(const HarmonicPoly& a, const HarmonicPoly& b);
};

HarmonicPoly poly_constant(FieldKind field, int n, const GaussianRational& c);
HarmonicPoly poly_scale(const HarmonicPoly& a, const GaussianRational& c);

// d/d(var). Over C, var indexes the doubled list: var < n differentiates in z_{var+1},
// var >= n in conj(z_{var-n+1}) (Wirtinger derivatives).
HarmonicPoly derivative(const HarmonicPoly& a, int var);

// sum_j d^2/dx_j^2 over R;  4 sum_j d^2/(dz_j d conj(z_j)) over C.
HarmonicPoly laplacian(const HarmonicPoly& a);

// dim of the space of homogeneous harmonic polynomials: degree p on R^n, bidegree
// (p,q) on C^n. Exact. Throws domain_error for invalid degree combinations
// (negative; R with n=1 and p >= 2; C with n=1 and p*q != 0).
BigInt dim_harmonics(FieldKind field, int n, long long p, long long q = 0);

// The K_{n-1}-invariant harmonic with zonal(...)(e_n) = 1:
//   C, n>=2: sum_nu (-1)^nu C(p,nu)C(q,nu)/C(nu+n-2,n-2) |z'|^{2 nu} z_n^{p-nu} conj(z_n)^{q-nu}
//   R, n>=2: the even-nu sum with coefficients p! Gamma((n-1)/2) i^nu / (2^nu (nu/2)! (p-nu)! Gamma((nu+n-1)/2))
//   n=1:     x_1^p over R (p in {0,1}), z^p conj(z)^q with p*q = 0 over C.
HarmonicPoly zonal(FieldKind field, int n, long long p, long long q = 0);

// Product of the component zonals in block variables: a character block j contributes
// its factor in the last coordinate of the block, a discrete-series block contributes
// ((x_{l+1} - i x_l)^kappa + (x_{l+1} + i x_l)^kappa)/2 in its two coordinates.
// Harmonic of degree mu_1 (R) / bidegree (mu_1, -mu_n) (C) for the newform K-type mu.
HarmonicPoly zonal_product(const ReprDescriptor& rep);

// The zonal of the descriptor's newform K-type: zonal(field, n, p, q) with the
// (bi)degree read off the K-type weight (R: the conductor exponent; C: the positive
// and negative kappa sums). This is the polynomial of the Gaussian-harmonic test
// functions in the recursion and pairing identities; it differs from zonal_product
// whenever the descriptor has more than one ramified block.
HarmonicPoly ktype_zonal(const ReprDescriptor& rep);

// Evaluation at a point of F^n (conjugate variables derived from the point over C).
std::complex<double> eval_poly(const HarmonicPoly& P, const std::vector<std::complex<double>>& point);

// The polynomial with conj_poly(P)(x) = conj(P(x)) for all x in F^n: coefficients are
// conjugated and, over C, the z / conj(z) exponent blocks are swapped. Bidegree (p,q)
// becomes (q,p) over C.
HarmonicPoly conj_poly(const HarmonicPoly& P);

}  // namespace anf
