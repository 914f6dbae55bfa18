#include "anf/special.hpp"

#include <cmath>
#include <numbers>

#include "anf/errors.hpp"

namespace anf {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for g = 7, 9 terms (the set used by Boost and GSL docs).
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(Complex z, double eps = 1e-13) {
  if (std::abs(z.imag()) > eps) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= eps * std::max(1.0, std::abs(z.real()));
}

Complex gamma_positive_half(Complex z) {
  // Valid for Re z >= 0.5.
  const Complex zm1 = z - 1.0;
  Complex acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (zm1 + static_cast<double>(k));
  const Complex t = zm1 + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) * acc;
}

}  // namespace

Complex gamma_complex(Complex z) {
  if (near_nonpositive_integer(z)) throw pole_error("gamma_complex: pole at nonpositive integer", z);
  if (z.real() >= 0.5) return gamma_positive_half(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return kPi / (std::sin(kPi * z) * gamma_positive_half(1.0 - z));
}

Complex zeta_F(FieldKind field, Complex s) {
  try {
    if (field == FieldKind::Real) return std::pow(kPi, -s / 2.0) * gamma_complex(s / 2.0);
    return 2.0 * std::pow(2.0 * kPi, -s) * gamma_complex(s);
  } catch (const pole_error&) {
    throw pole_error("zeta_F: pole", s);
  }
}

Complex l_factor(const ReprDescriptor& rep, Complex s) {
  validate(rep);
  Complex product = 1.0;
  for (std::size_t j = 0; j < rep.components.size(); ++j) {
    const auto& c = rep.components[j];
    try {
      if (c.field == FieldKind::Complex) {
        product *= zeta_F(FieldKind::Complex, s + c.t + std::abs(static_cast<double>(c.kappa)) / 2.0);
      } else if (c.kind == RepKind::Character) {
        product *= zeta_F(FieldKind::Real, s + c.t + static_cast<double>(c.kappa));
      } else {
        product *= zeta_F(FieldKind::Complex, s + c.t + (c.kappa - 1) / 2.0);
      }
    } catch (const pole_error& p) {
      throw pole_error("l_factor: pole in component " + std::to_string(j + 1), p.where,
                       static_cast<int>(j));
    }
  }
  return product;
}

Complex rs_l_factor(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s) {
  if (!is_spherical(sph))
    throw unsupported_error("rs_l_factor: twist must be spherical (all kappa = 0)");
  if (sph.field != rep.field) throw unsupported_error("rs_l_factor: field mismatch");
  Complex product = 1.0;
  for (const auto& twist : sph.components) product *= l_factor(rep, s + twist.t);
  return product;
}

Complex bessel_k(Complex nu, double x) {
  if (!(x > 0.0)) throw domain_error("bessel_k: argument must be positive");
  // Even integrand: trapezoid on t >= 0 with half weight at 0 converges
  // geometrically (the integrand extends to a smooth, rapidly decaying even
  // function of t). Truncate where exp(-x cosh t + |Re nu| t) is negligible.
  const double re_nu = std::abs(nu.real());
  double t_max = 1.0;
  while (x * std::cosh(t_max) - re_nu * t_max - x < 46.0 && t_max < 700.0) t_max += 0.5;

  auto sample = [&](double h) {
    Complex sum = 0.5 * std::exp(-x);  // t = 0 term: cosh(0)=1
    for (double t = h; t <= t_max; t += h) {
      const double damp = -x * std::cosh(t);
      if (damp < -745.0) break;
      sum += std::exp(damp) * std::cosh(nu * t);
    }
    return sum * h;
  };

  Complex prev = sample(0.5);
  for (double h = 0.25; h > 1e-4; h /= 2.0) {
    const Complex cur = sample(h);
    if (std::abs(cur - prev) <= 1e-13 * std::max(1.0, std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace anf
