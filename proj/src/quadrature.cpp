#include "anf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <random>

#include "anf/errors.hpp"

namespace anf {

namespace {

constexpr double kPi = std::numbers::pi;

GaussRule compute_gauss_rule(int n) {
  // Newton iteration on Legendre polynomials, nodes symmetric about 0.
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre_rule(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_rule(n)).first;
  return it->second;
}

std::complex<double> periodic_average(const Integrand1& f, int n) {
  std::complex<double> sum = 0.0;
  for (int k = 0; k < n; ++k) sum += f(2.0 * kPi * k / n);
  return sum / static_cast<double>(n);
}

namespace {

// Change of variables mapping t in (-inf, inf) to the integration variable.
// tanh-sinh on a finite box, exp-sinh on half-lines, sinh-sinh on the full line.
struct DEMap {
  const Domain1D d;

  // Returns (x, dx/dt); weight 0 signals overflow/underflow territory.
  std::pair<double, double> operator()(double t) const {
    const double st = std::sinh(t) * kPi / 2.0;
    if (d.a_infinite && d.b_infinite) {
      return {std::sinh(st), std::cosh(st) * std::cosh(t) * kPi / 2.0};
    }
    if (d.b_infinite) {  // [a, inf)
      const double ex = std::exp(st);
      return {d.a + ex, ex * std::cosh(t) * kPi / 2.0};
    }
    if (d.a_infinite) {  // (-inf, b]
      const double ex = std::exp(st);
      return {d.b - ex, ex * std::cosh(t) * kPi / 2.0};
    }
    const double c = (d.b + d.a) / 2.0, r = (d.b - d.a) / 2.0;
    const double ch = std::cosh(st);
    return {c + r * std::tanh(st), r * kPi / 2.0 * std::cosh(t) / (ch * ch)};
  }
};

bool usable(double x, double w) { return std::isfinite(x) && std::isfinite(w) && w != 0.0; }

QuadResult integrate_de(const Integrand1& f, const Domain1D& d, const QuadratureSpec& spec) {
  const DEMap map{d};
  const double t_max = 6.5;  // far enough that the weight underflows for smooth decay
  QuadResult res;
  std::complex<double> prev = 0.0;
  double h = 1.0;
  std::complex<double> sum = 0.0;

  auto add_point = [&](double t) {
    auto [x, w] = map(t);
    if (!usable(x, w)) return;
    const std::complex<double> v = f(x);
    ++res.evals;
    if (std::isfinite(v.real()) && std::isfinite(v.imag())) sum += w * v;
  };

  // Level 0 at h = 1.
  add_point(0.0);
  for (int k = 1; k * h <= t_max; ++k) {
    add_point(k * h);
    add_point(-k * h);
  }
  prev = sum * h;
  res.error_estimate = std::abs(prev);  // no comparison yet

  for (int level = 1; level <= spec.max_level; ++level) {
    h /= 2.0;
    // Only the new (odd-multiple) points.
    for (int k = 1; k * h <= t_max; k += 2) {
      add_point(k * h);
      add_point(-k * h);
      if (res.evals > spec.max_evals) {
        res.value = sum * h;
        res.converged = false;
        return res;
      }
    }
    const std::complex<double> cur = sum * h;
    res.error_estimate = std::abs(cur - prev);
    res.value = cur;
    prev = cur;
    if (level >= 3 && res.error_estimate <= spec.tolerance * std::max(1.0, std::abs(cur))) {
      return res;
    }
  }
  res.converged = res.error_estimate <= spec.tolerance * std::max(1.0, std::abs(res.value));
  return res;
}

QuadResult integrate_gl(const Integrand1& f, const Domain1D& d, const QuadratureSpec& spec) {
  if (d.a_infinite || d.b_infinite)
    return integrate_de(f, d, spec);  // GL needs a finite box; fall back
  const GaussRule& rule = gauss_legendre_rule(spec.points);
  QuadResult res;
  std::complex<double> prev = 0.0;
  for (int level = 0; level <= spec.max_level; ++level) {
    const int panels = 1 << level;
    std::complex<double> sum = 0.0;
    const double width = (d.b - d.a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = d.a + p * width;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(lo + width * (rule.nodes[i] + 1.0) / 2.0);
        ++res.evals;
      }
    }
    sum *= width / 2.0;
    res.value = sum;
    if (level > 0) {
      res.error_estimate = std::abs(sum - prev);
      if (res.error_estimate <= spec.tolerance * std::max(1.0, std::abs(sum))) return res;
    }
    prev = sum;
    if (res.evals > spec.max_evals) break;
  }
  res.converged = res.error_estimate <= spec.tolerance * std::max(1.0, std::abs(res.value));
  return res;
}

QuadResult integrate_mc(const IntegrandN& f, const std::vector<Domain1D>& domains,
                        const QuadratureSpec& spec) {
  double volume = 1.0;
  for (const auto& d : domains) {
    if (d.a_infinite || d.b_infinite)
      throw unsupported_error("Monte-Carlo integration requires finite boxes");
    volume *= d.b - d.a;
  }
  std::mt19937_64 eng(spec.seed);
  auto uniform = [&eng]() {
    return (eng() >> 11) * 0x1.0p-53;  // 53-bit mantissa in [0,1)
  };
  const long long N = std::max<long long>(1000, std::min<long long>(spec.max_evals, 200000));
  std::vector<double> x(domains.size());
  std::complex<double> mean = 0.0;
  double m2 = 0.0;
  for (long long i = 1; i <= N; ++i) {
    for (std::size_t j = 0; j < domains.size(); ++j)
      x[j] = domains[j].a + (domains[j].b - domains[j].a) * uniform();
    const std::complex<double> v = f(x);
    const std::complex<double> delta = v - mean;
    mean += delta / static_cast<double>(i);
    m2 += std::norm(delta) * (i - 1.0) / i;
  }
  QuadResult res;
  res.value = mean * volume;
  res.error_estimate = volume * std::sqrt(m2 / (N - 1.0) / N);  // standard error of the mean
  res.evals = N;
  res.converged = true;  // stochastic: the estimate is the 1-sigma band
  return res;
}

}  // namespace

QuadResult integrate(const Integrand1& f, const Domain1D& domain, const QuadratureSpec& spec) {
  switch (spec.scheme) {
    case Scheme::GaussLegendre: return integrate_gl(f, domain, spec);
    case Scheme::MonteCarlo: {
      IntegrandN g = [&f](const std::vector<double>& x) { return f(x[0]); };
      return integrate_mc(g, {domain}, spec);
    }
    default: return integrate_de(f, domain, spec);
  }
}

QuadResult integrate(const IntegrandN& f, const std::vector<Domain1D>& domains,
                     const QuadratureSpec& spec) {
  if (domains.empty()) throw domain_error("integrate: empty domain list");
  if (spec.scheme == Scheme::MonteCarlo) return integrate_mc(f, domains, spec);
  if (domains.size() == 1) {
    Integrand1 g = [&f](double x) { return f({x}); };
    return integrate(g, domains[0], spec);
  }

  // Nested (tensor-product) integration: outermost variable outside.
  QuadratureSpec inner_spec = spec.with_tolerance(spec.tolerance / 4.0);
  std::vector<Domain1D> rest(domains.begin() + 1, domains.end());
  long long evals = 0;
  double worst_inner = 0.0;
  bool inner_ok = true;
  Integrand1 outer = [&](double x0) {
    IntegrandN g = [&f, x0](const std::vector<double>& xs) {
      std::vector<double> full;
      full.reserve(xs.size() + 1);
      full.push_back(x0);
      full.insert(full.end(), xs.begin(), xs.end());
      return f(full);
    };
    QuadResult inner = integrate(g, rest, inner_spec);
    evals += inner.evals;
    worst_inner = std::max(worst_inner, inner.error_estimate);
    inner_ok = inner_ok && inner.converged;
    return inner.value;
  };
  QuadResult res = integrate(outer, domains[0], spec);
  res.evals = evals;
  res.error_estimate += worst_inner;  // crude but honest: inner error leaks into the outer sum
  res.converged = res.converged && inner_ok;
  return res;
}

}  // namespace anf
