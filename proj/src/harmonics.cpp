#include "anf/harmonics.hpp"

#include <algorithm>

#include "anf/errors.hpp"
#include "anf/invariants.hpp"

namespace anf {

namespace {

int var_count(FieldKind field, int n) { return field == FieldKind::Complex ? 2 * n : n; }

void check_same_space(const HarmonicPoly& a, const HarmonicPoly& b, const char* who) {
  if (a.field != b.field || a.n != b.n)
    throw domain_error(std::string(who) + ": operands live on different spaces");
}

}  // namespace

void HarmonicPoly::add_term(const std::vector<int>& exps, const GaussianRational& coeff) {
  if (static_cast<int>(exps.size()) != var_count(field, n))
    throw domain_error("add_term: exponent vector has wrong length");
  if (coeff.is_zero()) return;
  auto it = terms.find(exps);
  if (it == terms.end()) {
    terms.emplace(exps, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms.erase(it);
}

HarmonicPoly operator+(const HarmonicPoly& a, const HarmonicPoly& b) {
  check_same_space(a, b, "operator+");
  HarmonicPoly out = a;
  for (const auto& [e, c] : b.terms) out.add_term(e, c);
  return out;
}

HarmonicPoly operator*(const HarmonicPoly& a, const HarmonicPoly& b) {
  check_same_space(a, b, "operator*");
  HarmonicPoly out;
  out.field = a.field;
  out.n = a.n;
  out.p = a.p + b.p;
  out.q = a.q + b.q;
  std::vector<int> exps(var_count(a.field, a.n));
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (std::size_t j = 0; j < exps.size(); ++j) exps[j] = ea[j] + eb[j];
      out.add_term(exps, ca * cb);
    }
  return out;
}

HarmonicPoly poly_constant(FieldKind field, int n, const GaussianRational& c) {
  HarmonicPoly out;
  out.field = field;
  out.n = n;
  out.add_term(std::vector<int>(var_count(field, n), 0), c);
  return out;
}

HarmonicPoly poly_scale(const HarmonicPoly& a, const GaussianRational& c) {
  HarmonicPoly out;
  out.field = a.field;
  out.n = a.n;
  out.p = a.p;
  out.q = a.q;
  if (c.is_zero()) return out;
  for (const auto& [e, coeff] : a.terms) out.terms.emplace(e, coeff * c);
  return out;
}

HarmonicPoly derivative(const HarmonicPoly& a, int var) {
  if (var < 0 || var >= var_count(a.field, a.n)) throw domain_error("derivative: variable out of range");
  HarmonicPoly out;
  out.field = a.field;
  out.n = a.n;
  std::vector<int> exps;
  for (const auto& [e, c] : a.terms) {
    if (e[var] == 0) continue;
    exps = e;
    exps[var] -= 1;
    out.add_term(exps, c * GaussianRational(e[var]));
  }
  return out;
}

HarmonicPoly laplacian(const HarmonicPoly& a) {
  HarmonicPoly out;
  out.field = a.field;
  out.n = a.n;
  if (a.field == FieldKind::Real) {
    for (int j = 0; j < a.n; ++j) out = out + derivative(derivative(a, j), j);
    return out;
  }
  for (int j = 0; j < a.n; ++j) out = out + derivative(derivative(a, j), a.n + j);
  return poly_scale(out, GaussianRational(4));
}

BigInt dim_harmonics(FieldKind field, int n, long long p, long long q) {
  if (n < 1 || p < 0 || q < 0) throw domain_error("dim_harmonics: invalid parameters");
  if (field == FieldKind::Real) {
    if (q != 0) throw domain_error("dim_harmonics: q must be 0 over R");
    if (n == 1) {
      if (p > 1) throw domain_error("dim_harmonics: no harmonics of degree >= 2 on R^1");
      return 1;
    }
    if (p == 0) return 1;
    // (2p+n-2)/(p+n-2) * C(p+n-2, n-2); the division is exact.
    BigInt num = BigInt(2 * p + n - 2) * binomial(p + n - 2, n - 2);
    return num / BigInt(p + n - 2);
  }
  if (n == 1) {
    if (p != 0 && q != 0) throw domain_error("dim_harmonics: C^1 harmonics need p*q = 0");
    return 1;
  }
  // (p+q+n-1)/(n-1) * C(p+n-2,n-2) * C(q+n-2,n-2); exact division.
  BigInt num = BigInt(p + q + n - 1) * binomial(p + n - 2, n - 2) * binomial(q + n - 2, n - 2);
  return num / BigInt(n - 1);
}

namespace {

// (x_1^2 + ... + x_m^2)^k over R^n (first m coordinates), exact multinomial expansion.
HarmonicPoly radial_power_real(int n, int m, long long k) {
  HarmonicPoly result = poly_constant(FieldKind::Real, n, GaussianRational(1));
  HarmonicPoly base;
  base.field = FieldKind::Real;
  base.n = n;
  for (int j = 0; j < m; ++j) {
    std::vector<int> e(n, 0);
    e[j] = 2;
    base.add_term(e, GaussianRational(1));
  }
  for (long long i = 0; i < k; ++i) result = result * base;
  return result;
}

// (z_1 conj(z_1) + ... + z_m conj(z_m))^k over C^n.
HarmonicPoly radial_power_complex(int n, int m, long long k) {
  HarmonicPoly result = poly_constant(FieldKind::Complex, n, GaussianRational(1));
  HarmonicPoly base;
  base.field = FieldKind::Complex;
  base.n = n;
  for (int j = 0; j < m; ++j) {
    std::vector<int> e(2 * n, 0);
    e[j] = 1;
    e[n + j] = 1;
    base.add_term(e, GaussianRational(1));
  }
  for (long long i = 0; i < k; ++i) result = result * base;
  return result;
}

HarmonicPoly monomial_real(int n, int var, long long power, const GaussianRational& c) {
  HarmonicPoly out;
  out.field = FieldKind::Real;
  out.n = n;
  std::vector<int> e(n, 0);
  e[var] = static_cast<int>(power);
  out.add_term(e, c);
  return out;
}

HarmonicPoly monomial_complex(int n, int var, long long zp, long long zq, const GaussianRational& c) {
  HarmonicPoly out;
  out.field = FieldKind::Complex;
  out.n = n;
  std::vector<int> e(2 * n, 0);
  e[var] = static_cast<int>(zp);
  e[n + var] = static_cast<int>(zq);
  out.add_term(e, c);
  return out;
}

}  // namespace

HarmonicPoly zonal(FieldKind field, int n, long long p, long long q) {
  dim_harmonics(field, n, p, q);  // validates the degree combination
  HarmonicPoly out;
  out.field = field;
  out.n = n;
  out.p = p;
  out.q = field == FieldKind::Complex ? q : 0;

  if (field == FieldKind::Real) {
    if (n == 1) {
      out = monomial_real(1, 0, p, GaussianRational(1));
      out.p = p;
      return out;
    }
    for (long long nu = 0; nu <= p; nu += 2) {
      // p! / ( (nu/2)! (p-nu)! 2^{nu/2} prod_{j<nu/2}(n-1+2j) ), sign (-1)^{nu/2}.
      Rational coeff(factorial(p), factorial(nu / 2) * factorial(p - nu));
      BigInt denom = 1;
      for (long long j = 0; j < nu / 2; ++j) denom *= 2 * (n - 1 + 2 * j);
      coeff /= Rational(denom);
      if ((nu / 2) & 1) coeff = -coeff;
      HarmonicPoly term = radial_power_real(n, n - 1, nu / 2) *
                          monomial_real(n, n - 1, p - nu, GaussianRational(coeff));
      out = out + term;
    }
    out.p = p;
    return out;
  }

  if (n == 1) {
    out = monomial_complex(1, 0, p, q, GaussianRational(1));
    out.p = p;
    out.q = q;
    return out;
  }
  for (long long nu = 0; nu <= std::min(p, q); ++nu) {
    Rational coeff(binomial(p, nu) * binomial(q, nu), binomial(nu + n - 2, n - 2));
    if (nu & 1) coeff = -coeff;
    HarmonicPoly term = radial_power_complex(n, n - 1, nu) *
                        monomial_complex(n, n - 1, p - nu, q - nu, GaussianRational(coeff));
    out = out + term;
  }
  out.p = p;
  out.q = q;
  return out;
}

HarmonicPoly zonal_product(const ReprDescriptor& rep) {
  validate(rep);
  const int n = rep.rank();
  HarmonicPoly out = poly_constant(rep.field, n, GaussianRational(1));
  int offset = 0;  // 0-based start coordinate of the current block
  long long pos = 0, neg = 0;
  for (const auto& comp : rep.components) {
    if (comp.block_size() == 1) {
      if (rep.field == FieldKind::Complex) {
        const long long zp = std::max<long long>(comp.kappa, 0);
        const long long zq = -std::min<long long>(comp.kappa, 0);
        out = out * monomial_complex(n, offset, zp, zq, GaussianRational(1));
        pos += zp;
        neg += zq;
      } else if (comp.kappa == 1) {
        out = out * monomial_real(n, offset, 1, GaussianRational(1));
        pos += 1;
      }
      offset += 1;
    } else {
      // ((x_{l+1} - i x_l)^kappa + (x_{l+1} + i x_l)^kappa) / 2 on coordinates (l, l+1).
      HarmonicPoly minus = monomial_real(n, offset + 1, 1, GaussianRational(1)) +
                           monomial_real(n, offset, 1, GaussianRational(Rational(0), Rational(-1)));
      HarmonicPoly plus = monomial_real(n, offset + 1, 1, GaussianRational(1)) +
                          monomial_real(n, offset, 1, GaussianRational(Rational(0), Rational(1)));
      HarmonicPoly pow_minus = poly_constant(FieldKind::Real, n, GaussianRational(1));
      HarmonicPoly pow_plus = pow_minus;
      for (long long i = 0; i < comp.kappa; ++i) {
        pow_minus = pow_minus * minus;
        pow_plus = pow_plus * plus;
      }
      out = out * poly_scale(pow_minus + pow_plus, GaussianRational(Rational(1, 2)));
      pos += comp.kappa;
      offset += 2;
    }
  }
  out.p = pos;
  out.q = rep.field == FieldKind::Complex ? neg : 0;
  return out;
}

HarmonicPoly ktype_zonal(const ReprDescriptor& rep) {
  validate(rep);
  const int n = rep.rank();
  if (rep.field == FieldKind::Real) return zonal(FieldKind::Real, n, conductor_exponent(rep));
  long long p = 0, q = 0;
  for (const auto& c : rep.components) {
    p += std::max<long long>(c.kappa, 0);
    q -= std::min<long long>(c.kappa, 0);
  }
  return zonal(FieldKind::Complex, n, p, q);
}

HarmonicPoly conj_poly(const HarmonicPoly& P) {
  HarmonicPoly out;
  out.field = P.field;
  out.n = P.n;
  out.p = P.field == FieldKind::Complex ? P.q : P.p;
  out.q = P.field == FieldKind::Complex ? P.p : 0;
  for (const auto& [e, c] : P.terms) {
    std::vector<int> exps = e;
    if (P.field == FieldKind::Complex)
      for (int j = 0; j < P.n; ++j) std::swap(exps[j], exps[P.n + j]);
    out.add_term(exps, c.conj());
  }
  return out;
}

std::complex<double> eval_poly(const HarmonicPoly& P, const std::vector<std::complex<double>>& point) {
  if (static_cast<int>(point.size()) != P.n) throw domain_error("eval_poly: point dimension mismatch");
  std::complex<double> total = 0.0;
  for (const auto& [e, c] : P.terms) {
    std::complex<double> m = c.to_complex();
    for (int j = 0; j < P.n; ++j) {
      for (int k = 0; k < e[j]; ++k) m *= point[j];
      if (P.field == FieldKind::Complex)
        for (int k = 0; k < e[P.n + j]; ++k) m *= std::conj(point[j]);
    }
    total += m;
  }
  return total;
}

std::string HarmonicPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")";
    for (int j = 0; j < n; ++j) {
      if (e[j] > 0) {
        s += (field == FieldKind::Complex ? "*z" : "*x") + std::to_string(j + 1);
        if (e[j] > 1) s += "^" + std::to_string(e[j]);
      }
      if (field == FieldKind::Complex && e[n + j] > 0) {
        s += "*zb" + std::to_string(j + 1);
        if (e[n + j] > 1) s += "^" + std::to_string(e[n + j]);
      }
    }
  }
  return s;
}

}  // namespace anf
