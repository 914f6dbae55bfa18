#include "anf/compact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "anf/errors.hpp"
#include "anf/quadrature.hpp"

namespace anf {

namespace {
constexpr double kPi = std::numbers::pi;
using Cx = std::complex<double>;
}  // namespace

double CompactGroupElement::unitarity_residual() const {
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cx dot = 0.0;
      for (int k = 0; k < n; ++k) dot += at(i, k) * std::conj(at(j, k));
      worst = std::max(worst, std::abs(dot - (i == j ? Cx(1.0) : Cx(0.0))));
    }
  return worst;
}

CompactGroupElement haar_sample(GroupKind group, int n, Rng& rng) {
  CompactGroupElement k;
  k.group = group;
  k.n = n;
  k.entries.assign(static_cast<std::size_t>(n) * n, Cx(0.0));
  // Gaussian matrix, column-wise modified Gram-Schmidt with re-orthogonalization.
  // Forcing the R-diagonal positive makes the QR factorization unique, so Q inherits
  // the Haar distribution from the rotation invariance of the Gaussian ensemble.
  std::vector<std::vector<Cx>> cols(n, std::vector<Cx>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      cols[j][i] = (group == GroupKind::Unitary) ? Cx(rng.gaussian(), rng.gaussian())
                                                 : Cx(rng.gaussian(), 0.0);
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i < j; ++i) {
        Cx proj = 0.0;
        for (int r = 0; r < n; ++r) proj += std::conj(cols[i][r]) * cols[j][r];
        for (int r = 0; r < n; ++r) cols[j][r] -= proj * cols[i][r];
      }
    }
    double norm = 0.0;
    for (int r = 0; r < n; ++r) norm += std::norm(cols[j][r]);
    norm = std::sqrt(norm);
    for (int r = 0; r < n; ++r) cols[j][r] /= norm;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) k.at(i, j) = cols[j][i];
  return k;
}

std::vector<Cx> last_row_of_inverse(const CompactGroupElement& k) {
  std::vector<Cx> row(k.n);
  for (int j = 0; j < k.n; ++j) row[j] = std::conj(k.at(j, k.n - 1));
  return row;
}

std::vector<Cx> apply_right(const std::vector<Cx>& z, const CompactGroupElement& k) {
  std::vector<Cx> out(k.n, Cx(0.0));
  for (int j = 0; j < k.n; ++j)
    for (int i = 0; i < k.n; ++i) out[j] += z[i] * k.at(i, j);
  return out;
}

namespace {

void check_space_membership(FieldKind field, int n, long long p, long long q,
                            const HarmonicPoly& P) {
  if (P.field != field || P.n != n)
    throw domain_error("reproducing_residual: polynomial lives on a different space");
  for (const auto& [e, c] : P.terms) {
    long long dz = 0, dzb = 0;
    for (int j = 0; j < n; ++j) {
      dz += e[j];
      if (field == FieldKind::Complex) dzb += e[n + j];
    }
    const bool ok = (field == FieldKind::Real) ? (dz == p) : (dz == p && dzb == q);
    if (!ok) throw domain_error("reproducing_residual: polynomial is not homogeneous of the stated degree");
  }
}

CompactGroupElement rotation2(double theta, bool reflect) {
  CompactGroupElement k;
  k.group = GroupKind::Orthogonal;
  k.n = 2;
  const double c = std::cos(theta), s = std::sin(theta);
  k.entries = {Cx(c), Cx(-s), Cx(s), Cx(c)};
  if (reflect) {  // right-multiply by diag(1,-1)
    k.at(0, 1) = -k.at(0, 1);
    k.at(1, 1) = -k.at(1, 1);
  }
  return k;
}

CompactGroupElement u2_element(double phi, double theta, double alpha, double beta) {
  CompactGroupElement k;
  k.group = GroupKind::Unitary;
  k.n = 2;
  const Cx ph = std::polar(1.0, phi);
  const Cx a = std::polar(std::cos(theta), alpha);
  const Cx b = std::polar(std::sin(theta), beta);
  k.entries = {ph * a, ph * b, -ph * std::conj(b), ph * std::conj(a)};
  return k;
}

}  // namespace

ResidualEstimate reproducing_residual(FieldKind field, int n, long long p, long long q,
                                      const HarmonicPoly& P, const std::vector<Cx>& z) {
  check_space_membership(field, n, p, q, P);
  if (static_cast<int>(z.size()) != n) throw domain_error("reproducing_residual: point dimension mismatch");
  const HarmonicPoly P0 = zonal(field, n, p, q);
  const double dim = dim_harmonics(field, n, p, q).convert_to<double>();

  auto F = [&](const CompactGroupElement& k) {
    return dim * eval_poly(P, last_row_of_inverse(k)) * eval_poly(P0, apply_right(z, k));
  };
  const Cx target = eval_poly(P, z);

  if (field == FieldKind::Complex && n == 1) {
    const int N = static_cast<int>(4 * (p + q)) + 8;
    Cx mean = periodic_average(
        [&](double alpha) {
          CompactGroupElement k;
          k.group = GroupKind::Unitary;
          k.n = 1;
          k.entries = {std::polar(1.0, alpha)};
          return F(k);
        },
        N);
    return {std::abs(target - mean), 0.0};
  }
  if (field == FieldKind::Real && n == 2) {
    const int N = static_cast<int>(4 * p) + 8;
    Cx mean = 0.5 * periodic_average([&](double th) { return F(rotation2(th, false)); }, N) +
              0.5 * periodic_average([&](double th) { return F(rotation2(th, true)); }, N);
    return {std::abs(target - mean), 0.0};
  }
  if (field == FieldKind::Real && n == 1) {
    // O(1) = {1, -1}.
    CompactGroupElement plus{GroupKind::Orthogonal, 1, {Cx(1.0)}};
    CompactGroupElement minus{GroupKind::Orthogonal, 1, {Cx(-1.0)}};
    return {std::abs(target - 0.5 * (F(plus) + F(minus))), 0.0};
  }
  if (field == FieldKind::Complex && n == 2) {
    // U(2) = phase x SU(2); SU(2) = S^3 with sin(theta)cos(theta) dtheta dalpha dbeta.
    // Substituting s = sin^2(theta) turns the theta-part into a polynomial integral on
    // [0,1] (only even powers of sin, cos survive the angle averages), so Gauss-Legendre
    // in s and trapezoids in the three angles integrate F exactly up to roundoff.
    const int Nang = static_cast<int>(4 * (p + q)) + 6;
    const GaussRule& rule = gauss_legendre_rule(static_cast<int>(p + q) + 6);
    Cx mean = 0.0;
    for (std::size_t is = 0; is < rule.nodes.size(); ++is) {
      const double s = (rule.nodes[is] + 1.0) / 2.0;
      const double theta = std::asin(std::sqrt(s));
      Cx angle_mean = periodic_average(
          [&](double phi) {
            return periodic_average(
                [&](double alpha) {
                  return periodic_average(
                      [&](double beta) { return F(u2_element(phi, theta, alpha, beta)); }, Nang);
                },
                Nang);
          },
          Nang);
      mean += rule.weights[is] / 2.0 * angle_mean;
    }
    return {std::abs(target - mean), 0.0};
  }

  // Monte-Carlo fallback with standard error.
  Rng rng(0x5eedc0ffee123abcULL + 1000003ULL * n + 101ULL * static_cast<unsigned long long>(p) +
          static_cast<unsigned long long>(q));
  const long long N = 60000;
  Cx mean = 0.0;
  double m2 = 0.0;
  for (long long i = 1; i <= N; ++i) {
    const CompactGroupElement k = haar_sample(
        field == FieldKind::Complex ? GroupKind::Unitary : GroupKind::Orthogonal, n, rng);
    const Cx v = F(k);
    const Cx delta = v - mean;
    mean += delta / static_cast<double>(i);
    m2 += std::norm(delta) * (i - 1.0) / i;
  }
  const double se = std::sqrt(m2 / (N - 1.0) / N);
  return {std::abs(target - mean), se};
}

namespace {

// int x^e exp(-gamma pi x^2) exp(-2 pi i omega x) dx by composite Gauss-Legendre.
Cx gaussian_moment(int e, double gamma, double omega) {
  static std::map<std::tuple<int, long long, long long>, Cx> cache;
  static std::mutex mutex;
  const auto key = std::make_tuple(e, static_cast<long long>(gamma * 1024),
                                   static_cast<long long>(std::round(omega * (1LL << 40))));
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const double L = 4.6 / std::sqrt(gamma);
  QuadratureSpec spec;
  spec.scheme = Scheme::GaussLegendre;
  spec.points = 24;
  spec.max_level = 10;
  spec.tolerance = 1e-13;
  QuadResult r = integrate(
      [&](double x) {
        return std::pow(x, e) * std::exp(-gamma * kPi * x * x) *
               std::polar(1.0, -2.0 * kPi * omega * x);
      },
      Domain1D::box(-L, L), spec);
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(key, r.value);
  return r.value;
}

}  // namespace

double hecke_residual(FieldKind field, int n, const HarmonicPoly& P, const std::vector<Cx>& w) {
  const int d_F = field == FieldKind::Complex ? 2 : 1;
  if (n * d_F > 6) throw unsupported_error("hecke_residual: more than 6 real dimensions");
  if (P.field != field || P.n != n) throw domain_error("hecke_residual: polynomial/space mismatch");
  if (static_cast<int>(w.size()) != n) throw domain_error("hecke_residual: point dimension mismatch");

  // Total degree (homogeneity required by the identity).
  long long deg = -1;
  for (const auto& [e, c] : P.terms) {
    long long d = 0;
    for (int v : e) d += v;
    if (deg < 0) deg = d;
    if (d != deg) throw domain_error("hecke_residual: polynomial is not homogeneous");
  }
  if (deg < 0) deg = 0;  // zero polynomial

  Cx lhs = 0.0;
  double wnorm = 0.0;
  if (field == FieldKind::Real) {
    for (const auto& wj : w)
      if (wj.imag() != 0.0) throw domain_error("hecke_residual: real field needs a real point");
    for (const auto& [e, c] : P.terms) {
      Cx term = c.to_complex();
      for (int j = 0; j < n; ++j) term *= gaussian_moment(e[j], 1.0, w[j].real());
      lhs += term;
    }
    for (const auto& wj : w) wnorm += wj.real() * wj.real();
  } else {
    // Per coordinate: z^a conj(z)^b = sum_{k,l} C(a,k)C(b,l) i^{a-k} (-i)^{b-l} x^{k+l} y^{a+b-k-l},
    // then separable x/y Gaussian moments against exp(-4 pi i (x Re w + y Im w)).
    for (const auto& [e, c] : P.terms) {
      Cx term = c.to_complex();
      for (int j = 0; j < n && term != Cx(0.0); ++j) {
        const int a = e[j], b = e[n + j];
        Cx coord = 0.0;
        for (int k = 0; k <= a; ++k)
          for (int l = 0; l <= b; ++l) {
            Cx coef = binomial(a, k).convert_to<double>() * binomial(b, l).convert_to<double>() *
                      std::pow(Cx(0.0, 1.0), a - k) * std::pow(Cx(0.0, -1.0), b - l);
            coord += coef * gaussian_moment(k + l, 2.0, 2.0 * w[j].real()) *
                     gaussian_moment(a + b - k - l, 2.0, 2.0 * w[j].imag());
          }
        term *= 2.0 * coord;  // dz = twice Lebesgue per complex coordinate
      }
      lhs += term;
    }
    for (const auto& wj : w) wnorm += std::norm(wj);
  }

  const Cx i_pow = std::pow(Cx(0.0, 1.0), static_cast<double>(((-deg) % 4 + 4) % 4));
  const Cx rhs = i_pow * eval_poly(P, w) * std::exp(-d_F * kPi * wnorm);
  return std::abs(lhs - rhs);
}

}  // namespace anf
