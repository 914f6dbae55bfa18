#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace anf {

enum class Scheme { GaussLegendre, DoubleExponential, TensorProduct, MonteCarlo };

struct QuadratureSpec {
  Scheme scheme = Scheme::DoubleExponential;
  int points = 16;       // Gauss-Legendre nodes per panel
  int max_level = 12;    // refinement ceiling for nested rules
  double tolerance = 1e-10;
  long long max_evals = 80'000'000;
  unsigned long long seed = 0x9e3779b97f4a7c15ull;  // Monte-Carlo only

  QuadratureSpec with_tolerance(double tol) const {
    QuadratureSpec s = *this;
    s.tolerance = tol;
    return s;
  }
};

struct QuadResult {
  std::complex<double> value{0.0, 0.0};
  double error_estimate = 0.0;  // nested-rule difference (absolute)
  bool converged = true;
  long long evals = 0;
};

// Integration region of one real variable. Half-lines and the full line assume the
// integrand decays fast enough at infinity (exponentially, for the maps used here);
// double-exponential maps tolerate integrable endpoint singularities.
struct Domain1D {
  double a = 0.0, b = 1.0;
  bool a_infinite = false;
  bool b_infinite = false;

  static Domain1D box(double a, double b) { return {a, b, false, false}; }
  static Domain1D half_line(double a = 0.0) { return {a, 0.0, false, true}; }
  static Domain1D line() { return {0.0, 0.0, true, true}; }
};

using Integrand1 = std::function<std::complex<double>(double)>;
using IntegrandN = std::function<std::complex<double>(const std::vector<double>&)>;

QuadResult integrate(const Integrand1& f, const Domain1D& domain, const QuadratureSpec& spec = {});

// Multi-dimensional product domains. GaussLegendre / DoubleExponential act as the
// 1-dim rule applied in a nested fashion (equivalent to TensorProduct); MonteCarlo
// requires every factor to be a finite box.
QuadResult integrate(const IntegrandN& f, const std::vector<Domain1D>& domains,
                     const QuadratureSpec& spec = {});

// n-point Gauss-Legendre rule on [-1,1]; nodes/weights computed once per n and cached.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre_rule(int n);

// Equal-weight trapezoid sum (1/n) sum f(2*pi*k/n): the normalized integral over a
// period, exact for trigonometric polynomials of degree < n.
std::complex<double> periodic_average(const Integrand1& f, int n);

}  // namespace anf
