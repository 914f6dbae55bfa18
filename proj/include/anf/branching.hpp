#pragma once

#include <utility>
#include <vector>

#include "anf/descriptor.hpp"
#include "anf/exact.hpp"
#include "anf/weights.hpp"

namespace anf {

// One constituent of a restriction from K_n to K_{n-1} x K_1 (or K_{n-2} x K_2):
// tau_nu (x) tau_lambda occurring with the given multiplicity.
//
// det_weight is the K_1 weight: any integer for U(1), 0/1 for O(1). For restrict_o2
// it holds lambda_1 of the O(2) weight (lambda_1, 0); the O(2) weight (1,1) never
// occurs in that restriction.
struct BranchTerm {
  HighestWeight nu;
  long long det_weight = 0;
  BigInt multiplicity = 1;

  friend bool operator==(const BranchTerm&, const BranchTerm&) = default;
};

// U(n) -> U(n-1) x U(1): all nu with mu_1 >= nu_1 >= mu_2 >= ... >= nu_{n-1} >= mu_n,
// paired with lambda = sum(mu) - sum(nu), each with multiplicity one.
std::vector<BranchTerm> restrict_u(const HighestWeight& mu);

// O(n) -> O(n-1) x O(1): all valid O(n-1) labels nu satisfying the same literal
// interlacing inequalities, with lambda in {0,1} fixed by sum(nu) = sum(mu) - lambda mod 2.
std::vector<BranchTerm> restrict_o(const HighestWeight& mu);

// O(n) -> O(n-2) x O(2) for single-row mu = (mu_1, 0, ..., 0), n >= 3:
// terms nu = (nu_1, 0, ..., 0), lambda = (lambda_1, 0) with lambda_1 <= mu_1,
// nu_1 <= mu_1 - lambda_1 and nu_1 = mu_1 - lambda_1 mod 2, multiplicity one.
std::vector<BranchTerm> restrict_o2(const HighestWeight& mu);

// dim Hom_{K_n}(tau, pi|_{K_n}) for K_n = U(n) or O(n), by iterated restriction
// down to the block subgroup K_{n_1} x ... x K_{n_r} attached to the components:
// each character block consumes a matching K_1 weight, each discrete-series block
// D_kappa consumes an O(2) weight (l, 0) with l >= kappa, l = kappa mod 2.
BigInt mult_chain(const ReprDescriptor& rep, const HighestWeight& tau);

// Whether tau restricted to K_{n-1} contains the trivial representation
// (then necessarily with multiplicity one).
std::pair<bool, BigInt> trivial_on_restriction(const HighestWeight& tau);

// Both sides of  sum_{j=0}^{k} C(j+m, m) C(k-j+n, n) = C(k+m+n+1, m+n+1),
// computed independently (summation vs closed form).
std::pair<BigInt, BigInt> binom_identity(long long k, long long m, long long n);

// Weyl dimension formula for U(n); exact. Used as an independent oracle for the
// branching sum rule and small-rank dimension checks.
BigInt weyl_dim_u(const HighestWeight& mu);

}  // namespace anf
