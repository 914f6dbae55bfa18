#pragma once

#include <complex>

#include "anf/descriptor.hpp"
#include "anf/exact.hpp"
#include "anf/weights.hpp"

namespace anf {

// epsilon(s, pi, psi) for the standard additive characters used throughout: the value
// is i^power_of_i with power_of_i = (-conductor) mod 4, independent of s.
struct EpsilonFactor {
  int power_of_i = 0;  // in {0,1,2,3}

  std::complex<double> value() const {
    switch (power_of_i & 3) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  friend bool operator==(const EpsilonFactor&, const EpsilonFactor&) = default;
};

// c(pi) = sum over components: |kappa| for a C-character, kappa for an R-character
// (0 or 1) and for a discrete series. Independent of the twists t.
long long conductor_exponent(const ReprDescriptor& rep);

// Highest weight mu0 of the distinguished K-type carrying the newform:
//   C: (sum of positive kappa_j, 0, ..., 0, sum of negative kappa_j)
//   R: (sum of kappa_j, 0, ..., 0)
HighestWeight newform_ktype(const ReprDescriptor& rep);

// Dimension of the space of vectors fixed by the level-m congruence subgroup of K_n:
// C((m-c)/2 + n-2, n-2) when m >= c(pi) and m = c(pi) mod 2, else 0.
// Rank 1 is not covered by this formula; throws unsupported_error for n < 2.
BigInt oldform_dim(const ReprDescriptor& rep, long long m);

EpsilonFactor epsilon_factor(const ReprDescriptor& rep);

// Unitary: sum |mu_j|.  Orthogonal: sum mu_j.
long long howe_degree(const HighestWeight& w);

// Unitary: sum (mu_j + n + 1 - 2j)^2.
// Orthogonal: sum_{j<=m} (mu_j + n - 2j)^2 + sum_{m<j<=floor(n/2)} (n - 2j)^2,
// with m from the parsed weight shape.
long long vogan_norm_sq(const HighestWeight& w);

// Induction from C^x to GL_2(R), applied componentwise:
//   kappa = 0:  chi^0 |.|^t  ->  chi^0 |.|^t (+) chi^1 |.|^t
//   kappa != 0: chi^kappa |.|^t  ->  D_{|kappa|+1} (x) |det|^t
// Doubles the rank and raises the conductor exponent by n. Throws domain_error
// when the input field is R.
ReprDescriptor automorphic_induction(const ReprDescriptor& rep);

}  // namespace anf
