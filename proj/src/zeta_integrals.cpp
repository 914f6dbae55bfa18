#include "anf/zeta_integrals.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "anf/branching.hpp"
#include "anf/compact.hpp"
#include "anf/errors.hpp"
#include "anf/harmonics.hpp"
#include "anf/invariants.hpp"
#include "anf/special.hpp"
#include "anf/weights.hpp"
#include "anf/whittaker.hpp"

namespace anf {

namespace {

constexpr double kPi = std::numbers::pi;

Complex cpow(double x, Complex w) { return std::exp(w * std::log(x)); }  // x > 0
Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

// Exponent of the zeta factor a component contributes at twist t': positive real
// part is exactly absolute convergence of the corresponding radial integral.
Complex component_zeta_arg(const SquareIntegrableRep& comp, Complex s, Complex tp) {
  double shift;
  if (comp.kind == RepKind::DiscreteSeries)
    shift = 0.5 * static_cast<double>(comp.kappa - 1);
  else if (comp.field == FieldKind::Real)
    shift = static_cast<double>(comp.kappa);
  else
    shift = 0.5 * static_cast<double>(std::llabs(comp.kappa));
  return s + tp + comp.t + shift;
}

void require_pair_convergent(const ReprDescriptor& rep, const std::vector<Complex>& twists,
                             Complex s, const char* what) {
  for (const auto& comp : rep.components)
    for (const Complex& tp : twists)
      if (component_zeta_arg(comp, s, tp).real() <= 0.0)
        throw convergence_error(std::string(what) +
                                ": s is outside the region of absolute convergence");
}

void require_rank(const ReprDescriptor& rep, int n, const char* what) {
  validate(rep);
  if (rep.rank() != n)
    throw domain_error(std::string(what) + ": first argument must have rank " +
                       std::to_string(n));
}

void require_spherical_twist(const ReprDescriptor& rep, const ReprDescriptor& sph, int n,
                             const char* what) {
  validate(sph);
  if (sph.rank() != n || !is_spherical(sph))
    throw domain_error(std::string(what) + ": second argument must be spherical of rank " +
                       std::to_string(n));
  if (sph.field != rep.field)
    throw domain_error(std::string(what) + ": the two factors live over different fields");
}

std::vector<Complex> spherical_twists(const ReprDescriptor& sph) {
  std::vector<Complex> out;
  out.reserve(sph.components.size());
  for (const auto& c : sph.components) out.push_back(c.t);
  return out;
}

// sum of (block size) * t over components: the |det|-exponent of the central character.
Complex det_twist_sum(const ReprDescriptor& rep) {
  Complex T = 0.0;
  for (const auto& c : rep.components) T += static_cast<double>(c.block_size()) * c.t;
  return T;
}

// Shared radial core of the rank-1 pairings: integral over F^x of
// W(x) |x|^{tp} Pbar(x) exp(-d_F pi x xbar) |x|^s d*x.
Complex pairing_gl1(const ReprDescriptor& rep, Complex tp, Complex s,
                    const QuadratureSpec& spec, const char* what) {
  require_pair_convergent(rep, {tp}, s, what);
  const MeasureConventions& conv = measure_conventions();
  const HarmonicPoly Pbar = conj_poly(ktype_zonal(rep));

  if (rep.field == FieldKind::Real) {
    Integrand1 f = [&](double x) -> Complex {
      const double gaussian = std::exp(-kPi * x * x);
      if (gaussian == 0.0) return 0.0;
      Complex both = 0.0;
      for (double sign : {1.0, -1.0}) {
        const Complex xx(sign * x, 0.0);
        both += whittaker_gl1(rep, xx) * eval_poly(Pbar, {xx});
      }
      return conv.mult_zeta1_R * both * cpow(x, s + tp) * gaussian / x;
    };
    const QuadResult r = integrate(f, Domain1D::half_line(), spec);
    if (!r.converged)
      throw convergence_error(std::string(what) + ": radial integral did not converge");
    return r.value;
  }

  const int ntheta = 2 * static_cast<int>(std::llabs(rep.components[0].kappa)) + 4;
  Integrand1 f = [&](double r) -> Complex {
    const double gaussian = std::exp(-2.0 * kPi * r * r);
    if (gaussian == 0.0) return 0.0;
    const Complex ang = periodic_average(
        [&](double th) -> Complex {
          const Complex z = r * cis(th);
          return whittaker_gl1(rep, z) * eval_poly(Pbar, {z});
        },
        ntheta);
    return ang * cpow(r * r, s + tp) * gaussian / r;
  };
  const QuadResult r = integrate(f, Domain1D::half_line(), spec);
  if (!r.converged)
    throw convergence_error(std::string(what) + ": radial integral did not converge");
  return conv.circle_fold_C * r.value;
}

}  // namespace

const MeasureConventions& measure_conventions() {
  static const MeasureConventions conv = [] {
    const double z1r = zeta_F(FieldKind::Real, 1.0).real();
    const double z1c = zeta_F(FieldKind::Complex, 1.0).real();
    if (std::abs(z1r - 1.0) > 1e-14 || std::abs(z1c - 1.0 / kPi) > 1e-14)
      throw std::logic_error("measure_conventions: zeta_F(1) drifted from the pinned values");
    MeasureConventions c{};
    c.mult_zeta1_R = z1r;
    c.mult_zeta1_C = z1c;
    c.fold_even_R = 2.0 * z1r;
    c.circle_fold_C = 4.0 * kPi * z1c;
    c.plane_fold_C = 4.0 * kPi;
    c.compact_mass = 1.0;
    return c;
  }();
  return conv;
}

Complex tate_integral(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
                      const QuadratureSpec& spec) {
  require_rank(rep, 1, "rank-1 pairing");
  require_spherical_twist(rep, sph, 1, "rank-1 pairing");
  return pairing_gl1(rep, sph.components[0].t, s, spec, "rank-1 pairing");
}

Complex gj_integral(const ReprDescriptor& rep, Complex s, const QuadratureSpec& spec) {
  require_rank(rep, 1, "matrix-coefficient integral");
  return pairing_gl1(rep, 0.0, s, spec, "matrix-coefficient integral");
}

Complex rs_21(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
              const QuadratureSpec& spec) {
  require_rank(rep, 2, "rank-2 x rank-1 pairing");
  require_spherical_twist(rep, sph, 1, "rank-2 x rank-1 pairing");
  const Complex tp = sph.components[0].t;
  require_pair_convergent(rep, {tp}, s, "rank-2 x rank-1 pairing");
  const MeasureConventions& conv = measure_conventions();

  const bool real = rep.field == FieldKind::Real;
  Integrand1 f = [&](double y) -> Complex {
    const Complex w = whittaker_gl2_closed(rep, Complex(y, 0.0));
    if (w == Complex(0.0)) return 0.0;
    // |y|_F^{s + tp - 1/2} d*y in the radial variable.
    const Complex power = real ? cpow(y, s + tp - 0.5) : cpow(y * y, s + tp - 0.5);
    return w * power / y;
  };
  const QuadResult r = integrate(f, Domain1D::half_line(), spec);
  if (!r.converged)
    throw convergence_error("rank-2 x rank-1 pairing: radial integral did not converge");
  return (real ? conv.fold_even_R : conv.circle_fold_C) * r.value;
}

Complex rs_22(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
              const QuadratureSpec& spec) {
  require_rank(rep, 2, "rank-2 pairing");
  if (rep.field == FieldKind::Complex)
    throw unsupported_error(
        "rank-2 pairing over C needs more quadrature dimensions than the desk-scale budget");
  require_spherical_twist(rep, sph, 2, "rank-2 pairing");
  const std::vector<Complex> twists = spherical_twists(sph);
  require_pair_convergent(rep, twists, s, "rank-2 pairing");

  const long long c = conductor_exponent(rep);
  const Complex zarg = 2.0 * s + static_cast<double>(c) + det_twist_sum(rep) + det_twist_sum(sph);
  if (zarg.real() <= 0.0)
    throw convergence_error("rank-2 pairing: the Schwartz-radius integral diverges");

  const MeasureConventions& conv = measure_conventions();
  const double dim0 = dim_harmonics(FieldKind::Real, 2, c).convert_to<double>();
  const HarmonicPoly Pbar = conj_poly(ktype_zonal(rep));
  const bool spherical_rep = is_spherical(rep);
  const int nang = 2 * static_cast<int>(c) + 4;
  const QuadratureSpec node_spec = spec.with_tolerance(std::max(spec.tolerance * 0.1, 1e-12));

  // Ramified values off the torus cost one oscillatory unipotent integral each; cap
  // the total so a runaway refinement degrades to an explicit failure, not a hang.
  const long long node_budget = std::max<long long>(spec.max_evals / 20000, 256);
  long long nodes_used = 0;

  auto G = [&](double y) -> Complex {
    if (spherical_rep) return whittaker_gl2_closed(rep, Complex(y, 0.0));
    const GroupPoint ay = GroupPoint::gl2_torus(LocalField{FieldKind::Real}, Complex(y, 0.0));
    Complex acc = 0.0;
    for (int refl = 0; refl < 2; ++refl) {
      acc += 0.5 * conv.compact_mass *
             periodic_average(
                 [&](double th) -> Complex {
                   nodes_used += 1;
                   if (nodes_used > node_budget)
                     throw unsupported_error(
                         "rank-2 pairing: ramified node budget exceeded; raise max_evals");
                   const GroupPoint k = GroupPoint::rotation(th, refl == 1);
                   Complex w;
                   try {
                     w = whittaker_gl2(rep, multiply(ay, k), node_spec);
                   } catch (const convergence_error&) {
                     return Complex(0.0);  // far-tail node, analytically negligible
                   } catch (const domain_error&) {
                     return Complex(0.0);
                   }
                   return w * eval_poly(Pbar, {k.at(1, 0), k.at(1, 1)});
                 },
                 nang);
    }
    return acc;
  };

  Integrand1 f = [&](double y) -> Complex {
    const Complex wp = whittaker_gl2_closed(sph, Complex(y, 0.0));
    if (wp == Complex(0.0)) return 0.0;
    return cpow(y, s - 1.0) * wp * G(y) / y;
  };
  const QuadResult r = integrate(f, Domain1D::half_line(), spec);
  if (!r.converged)
    throw convergence_error("rank-2 pairing: radial integral did not converge");
  return conv.fold_even_R * dim0 * zeta_F(FieldKind::Real, zarg) * r.value;
}

Complex rs_32(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
              const QuadratureSpec& spec) {
  require_rank(rep, 3, "rank-3 x rank-2 pairing");
  if (rep.field != FieldKind::Real || rep.components.size() != 3 ||
      rep.components[1].kappa != 0 || rep.components[2].kappa != 0)
    throw unsupported_error(
        "rank-3 x rank-2 pairing: need a real character plus a spherical rank-2 part");
  require_spherical_twist(rep, sph, 2, "rank-3 x rank-2 pairing");
  require_pair_convergent(rep, spherical_twists(sph), s, "rank-3 x rank-2 pairing");

  const ReprDescriptor head{rep.field, {rep.components[0]}};
  const ReprDescriptor rest{rep.field, {rep.components[1], rep.components[2]}};
  // Peeling the leading character trades the pairing for a rank-2 one against the
  // head's Euler factor; the rank-2 pairing is then evaluated by quadrature.
  return rs_22(rest, sph, s, spec) * rs_l_factor(head, sph, s);
}

Complex rs_32_direct(const ReprDescriptor& rep, const ReprDescriptor& sph, Complex s,
                     const QuadratureSpec& spec) {
  require_rank(rep, 3, "direct rank-3 x rank-2 pairing");
  if (rep.field != FieldKind::Real || !is_spherical(rep))
    throw unsupported_error("direct rank-3 x rank-2 pairing: real spherical rank 3 only");
  require_spherical_twist(rep, sph, 2, "direct rank-3 x rank-2 pairing");
  require_pair_convergent(rep, spherical_twists(sph), s, "direct rank-3 x rank-2 pairing");

  const MeasureConventions& conv = measure_conventions();
  const Complex Tp = det_twist_sum(sph);
  const QuadratureSpec node_spec = spec.with_tolerance(std::max(spec.tolerance * 0.1, 1e-6));

  // Full right K_2-invariance of the rank-3 newvector and K-invariance of the
  // spherical W' make the compact average trivial, leaving the positive torus with
  // the sign fold. In log coordinates the integrand is analytic, dies doubly
  // exponentially upward (Whittaker decay) and at rate min Re(s + t_j + t'_k)
  // downward, so one tensor Gauss-Legendre rule on a truncated box costs an order
  // of magnitude fewer of the expensive rank-3 values than nested adaptive rules.
  // Node failures deep in the tails are noise on negligible values and are zeroed.
  double sigma_min = std::numeric_limits<double>::infinity();
  for (const auto& comp : rep.components)
    for (Complex tp : spherical_twists(sph))
      sigma_min = std::min(sigma_min, component_zeta_arg(comp, s, tp).real());
  const double x_hi = 2.5;
  const double x_lo = std::max(-60.0, -(6.0 + 21.0 / sigma_min));

  auto f = [&](double x1, double x2) -> Complex {
    const double a1 = std::exp(x1);
    const double a2 = std::exp(x2);
    Complex w3;
    try {
      GroupPoint g(LocalField{FieldKind::Real}, 2,
                   {Complex(a1, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(a2, 0.0)});
      w3 = whittaker_propagate(rep, g, node_spec);
    } catch (const convergence_error&) {
      return Complex(0.0);
    } catch (const domain_error&) {
      return Complex(0.0);
    }
    if (w3 == Complex(0.0)) return 0.0;
    const Complex wp = whittaker_gl2_closed(sph, Complex(a1 / a2, 0.0));
    return w3 * wp * cpow(a2, Tp) * cpow(a1 * a2, s - 0.5) * (a2 / a1);
  };
  auto tensor = [&](int order) -> Complex {
    const GaussRule& rule = gauss_legendre_rule(order);
    const double mid = 0.5 * (x_hi + x_lo);
    const double half = 0.5 * (x_hi - x_lo);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        acc += rule.weights[i] * rule.weights[j] *
               f(mid + half * rule.nodes[i], mid + half * rule.nodes[j]);
    return half * half * acc;
  };
  const int order = std::max(72, static_cast<int>(std::lround(3.2 * (x_hi - x_lo))));
  const Complex coarse = tensor(2 * order / 3);
  const Complex fine = tensor(order);
  if (std::abs(fine - coarse) > spec.tolerance * std::max(1.0, std::abs(fine)))
    throw convergence_error("direct rank-3 x rank-2 pairing: torus integral did not converge");
  return conv.fold_even_R * conv.fold_even_R * conv.compact_mass * fine;
}

double epsilon_fourier_residual(const ReprDescriptor& rep, const QuadratureSpec& spec) {
  require_rank(rep, 1, "Fourier check");
  const MeasureConventions& conv = measure_conventions();
  const HarmonicPoly Pbar = conj_poly(ktype_zonal(rep));
  const Complex eps = epsilon_factor(rep).value();

  double worst = 0.0;
  if (rep.field == FieldKind::Real) {
    auto phi = [&](double x) -> Complex {
      return eval_poly(Pbar, {Complex(x, 0.0)}) * std::exp(-kPi * x * x);
    };
    for (double w : {0.0, 0.35, -0.6, 1.1, 1.6}) {
      Integrand1 f = [&](double x) -> Complex { return phi(x) * cis(-2.0 * kPi * x * w); };
      const QuadResult hat = integrate(f, Domain1D::line(), spec);
      if (!hat.converged)
        throw convergence_error("Fourier check: transform integral did not converge");
      const Complex twisted =
          eval_poly(Pbar, {Complex(w, 0.0)}) * std::exp(-kPi * w * w);
      worst = std::max(worst, std::abs(hat.value - eps * twisted));
    }
    return worst;
  }

  const int ntheta = 160 + 4 * static_cast<int>(std::llabs(rep.components[0].kappa));
  const Complex samples[] = {{0.3, 0.1}, {-0.45, 0.55}, {0.8, -0.25}, {1.05, 0.6}};
  for (const Complex& w : samples) {
    Integrand1 f = [&](double r) -> Complex {
      const double gaussian = std::exp(-2.0 * kPi * r * r);
      if (gaussian == 0.0) return 0.0;
      const Complex ang = periodic_average(
          [&](double th) -> Complex {
            const Complex z = r * cis(th);
            return eval_poly(Pbar, {z}) * cis(-4.0 * kPi * (z * w).real());
          },
          ntheta);
      return ang * gaussian * r;
    };
    const QuadResult hat = integrate(f, Domain1D::half_line(), spec);
    if (!hat.converged)
      throw convergence_error("Fourier check: transform integral did not converge");
    const Complex twisted =
        eval_poly(Pbar, {std::conj(w)}) * std::exp(-2.0 * kPi * std::norm(w));
    worst = std::max(worst, std::abs(conv.plane_fold_C * hat.value - eps * twisted));
  }
  return worst;
}

namespace {

// K-types of Howe degree m that can see the congruence filtration: all valid labels
// of that degree; the chain multiplicity vanishes on those without the right shape.
double oldform_ktype_sum(const ReprDescriptor& rep, long long m) {
  const GroupKind group =
      rep.field == FieldKind::Real ? GroupKind::Orthogonal : GroupKind::Unitary;
  BigInt total = 0;
  for (const HighestWeight& tau : weights_of_degree(group, rep.rank(), m))
    total += mult_chain(rep, tau);
  return total.convert_to<double>();
}

VerificationPoint euler_point(Complex s, Complex lhs, Complex rhs) {
  VerificationPoint p;
  p.s = s;
  p.lhs = lhs;
  p.rhs = rhs;
  p.abs_residual = std::abs(lhs / rhs - 1.0);
  p.quad_err = 0.0;
  return p;
}

VerificationPoint residual_point(Complex s, double residual, double quad_err = 0.0) {
  VerificationPoint p;
  p.s = s;
  p.lhs = residual;
  p.rhs = 0.0;
  p.abs_residual = residual;
  p.quad_err = quad_err;
  return p;
}

// Deterministic off-torus sample for the Fourier/reproducing checks: n entries from
// a fixed pattern, complex parts only over C.
std::vector<Complex> sample_vector(FieldKind field, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double re = 0.4 + 0.3 * j * (j % 2 == 0 ? 1.0 : -1.0);
    const double im = field == FieldKind::Complex ? 0.2 - 0.15 * j : 0.0;
    z[static_cast<std::size_t>(j)] = Complex(re, im);
  }
  return z;
}

GroupPoint pieri_base_point(const ReprDescriptor& rep) {
  const LocalField f{rep.field};
  if (rep.rank() == 1) {
    const Complex h = rep.field == FieldKind::Real ? Complex(1.3, 0.0) : Complex(0.9, 0.3);
    return GroupPoint(f, 1, {h});
  }
  return GroupPoint::gl2_torus(f, Complex(1.0, 0.0));
}

}  // namespace

VerificationReport run_check(const VerifyCheck& check) {
  VerificationReport report;
  report.identity = check.identity;
  report.descriptor = check.rep + (check.sph.empty() ? "" : "  x  " + check.sph);
  report.tolerance = check.tolerance;
  const auto start = std::chrono::steady_clock::now();

  try {
    const ReprDescriptor rep = parse_descriptor(check.rep);
    ReprDescriptor sph;
    if (!check.sph.empty()) sph = parse_descriptor(check.sph);

    if (check.identity == "tate") {
      for (Complex s : check.s_grid)
        report.points.push_back(
            euler_point(s, tate_integral(rep, sph, s, check.spec), rs_l_factor(rep, sph, s)));
    } else if (check.identity == "gj") {
      for (Complex s : check.s_grid)
        report.points.push_back(
            euler_point(s, gj_integral(rep, s, check.spec), l_factor(rep, s)));
    } else if (check.identity == "rs_21") {
      for (Complex s : check.s_grid)
        report.points.push_back(
            euler_point(s, rs_21(rep, sph, s, check.spec), rs_l_factor(rep, sph, s)));
    } else if (check.identity == "rs_22") {
      for (Complex s : check.s_grid)
        report.points.push_back(
            euler_point(s, rs_22(rep, sph, s, check.spec), rs_l_factor(rep, sph, s)));
    } else if (check.identity == "rs_32") {
      for (Complex s : check.s_grid)
        report.points.push_back(
            euler_point(s, rs_32(rep, sph, s, check.spec), rs_l_factor(rep, sph, s)));
    } else if (check.identity == "rs_32_direct") {
      for (Complex s : check.s_grid)
        report.points.push_back(
            euler_point(s, rs_32_direct(rep, sph, s, check.spec), rs_32(rep, sph, s, check.spec)));
    } else if (check.identity == "pieri") {
      const GroupPoint h = pieri_base_point(rep);
      for (Complex s : check.s_grid)
        report.points.push_back(residual_point(s, pieri_residual(rep, s, h, check.spec)));
    } else if (check.identity == "epsilon_fourier") {
      report.points.push_back(
          residual_point(0.0, epsilon_fourier_residual(rep, check.spec)));
    } else if (check.identity == "hecke") {
      const HarmonicPoly P = ktype_zonal(rep);
      report.points.push_back(residual_point(
          0.0, hecke_residual(rep.field, rep.rank(), P, sample_vector(rep.field, rep.rank()))));
    } else if (check.identity == "reproducing") {
      const HarmonicPoly P = ktype_zonal(rep);
      const ResidualEstimate est = reproducing_residual(
          rep.field, rep.rank(), P.p, P.q, P, sample_vector(rep.field, rep.rank()));
      report.points.push_back(residual_point(0.0, est.residual, 3.0 * est.std_error));
    } else if (check.identity == "oldform") {
      const long long c = conductor_exponent(rep);
      for (Complex sk : check.s_grid) {
        const long long k = std::llround(sk.real());
        const long long m = c + 2 * k;
        const double lhs = oldform_dim(rep, m).convert_to<double>();
        const double rhs = oldform_ktype_sum(rep, m);
        VerificationPoint p;
        p.s = sk;
        p.lhs = lhs;
        p.rhs = rhs;
        p.abs_residual = std::abs(lhs - rhs);
        report.points.push_back(p);
      }
    } else {
      throw domain_error("unknown identity: " + check.identity);
    }

    report.pass = !report.points.empty();
    for (const VerificationPoint& p : report.points)
      if (!(p.abs_residual <= check.tolerance + p.quad_err)) report.pass = false;
  } catch (const std::exception& e) {
    report.pass = false;
    report.error = e.what();
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> verify_suite(const VerifyConfig& config) {
  // Checks are pure, so they run concurrently; reports keep the configured order.
  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(config.checks.size());
  for (const VerifyCheck& check : config.checks)
    futures.push_back(std::async(std::launch::async, run_check, check));
  std::vector<VerificationReport> out;
  out.reserve(futures.size());
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

VerifyConfig verify_profile(const std::string& name) {
  if (name != "fast" && name != "slow")
    throw domain_error("verify_profile: expected \"fast\" or \"slow\"");

  const std::vector<Complex> grid8 = {1.0,           {1.25, 0.2}, 1.5, {1.75, -0.15},
                                      2.0,           {2.3, 0.1},  2.6, 3.0};
  const std::vector<Complex> counts = {0, 1, 2, 3, 4};

  VerifyConfig cfg;
  auto add = [&](std::string identity, std::string rep, std::string sph,
                 std::vector<Complex> grid, double tol, double quad_tol) {
    VerifyCheck c;
    c.identity = std::move(identity);
    c.rep = std::move(rep);
    c.sph = std::move(sph);
    c.s_grid = std::move(grid);
    c.tolerance = tol;
    c.spec = QuadratureSpec{}.with_tolerance(quad_tol);
    cfg.checks.push_back(std::move(c));
  };

  add("tate", "R: chi^0 t=0", "R: chi^0 t=0.1", grid8, 1e-8, 1e-10);
  add("tate", "R: chi^1 t=0.2", "R: chi^0 t=-0.1", grid8, 1e-8, 1e-10);
  add("tate", "C: chi^0 t=0", "C: chi^0 t=0.2", grid8, 1e-8, 1e-10);
  add("tate", "C: chi^3 t=0.1", "C: chi^0 t=0", grid8, 1e-8, 1e-10);
  add("gj", "R: chi^0 t=0", "", grid8, 1e-8, 1e-10);
  add("gj", "R: chi^1 t=0.7", "", grid8, 1e-8, 1e-10);
  add("gj", "C: chi^-2 t=0", "", grid8, 1e-8, 1e-10);
  add("gj", "C: chi^5 t=-0.3", "", grid8, 1e-8, 1e-10);
  add("rs_21", "R: chi^0 t=0.25; chi^0 t=-0.25", "R: chi^0 t=0", grid8, 1e-5, 1e-9);
  add("rs_21", "R: chi^1 t=0.3; chi^0 t=-0.3", "R: chi^0 t=0.1", grid8, 1e-5, 1e-9);
  add("rs_21", "R: D^3 t=0", "R: chi^0 t=0", grid8, 1e-5, 1e-9);
  add("rs_21", "C: chi^1 t=0.2; chi^-1 t=-0.2", "C: chi^0 t=0", grid8, 1e-5, 1e-9);
  add("epsilon_fourier", "R: chi^1 t=0", "", {0.0}, 1e-6, 1e-10);
  add("epsilon_fourier", "C: chi^3 t=0", "", {0.0}, 1e-6, 1e-10);
  add("epsilon_fourier", "C: chi^-2 t=0.4", "", {0.0}, 1e-6, 1e-10);
  add("pieri", "R: chi^1 t=0.3", "", {1.2}, 1e-8, 1e-10);
  add("pieri", "C: chi^-2 t=0", "", {1.2}, 1e-8, 1e-10);
  add("hecke", "R: D^3 t=0", "", {0.0}, 1e-6, 1e-10);
  add("hecke", "C: chi^2 t=0; chi^-1 t=0", "", {0.0}, 1e-6, 1e-10);
  add("reproducing", "C: chi^2 t=0", "", {0.0}, 1e-8, 1e-10);
  add("reproducing", "R: D^2 t=0", "", {0.0}, 1e-8, 1e-10);
  add("reproducing", "C: chi^1 t=0; chi^-1 t=0", "", {0.0}, 1e-8, 1e-10);
  add("oldform", "R: D^3 t=0; chi^1 t=0", "", counts, 1e-9, 1e-10);
  add("oldform", "C: chi^2 t=0; chi^-1 t=0.1", "", counts, 1e-9, 1e-10);

  if (name == "slow") {
    add("rs_22", "R: chi^0 t=0.3; chi^0 t=-0.3", "R: chi^0 t=0.2; chi^0 t=-0.2",
        {1.1, 1.6, 2.2}, 1e-3, 1e-7);
    add("rs_22", "R: chi^1 t=0.4; chi^0 t=-0.4", "R: chi^0 t=0.15; chi^0 t=-0.15", {1.5},
        1e-3, 1e-5);
    cfg.checks.back().spec.max_evals = 400'000'000;  // ~20k ramified nodes
    add("rs_32", "R: chi^0 t=0.4; chi^0 t=0; chi^0 t=-0.4", "R: chi^0 t=0.2; chi^0 t=-0.2",
        {1.2, 1.8}, 1e-3, 1e-7);
    add("rs_32", "R: chi^1 t=0.3; chi^0 t=0.1; chi^0 t=-0.4", "R: chi^0 t=0.2; chi^0 t=-0.2",
        {1.4}, 1e-3, 1e-5);
    add("rs_32_direct", "R: chi^0 t=0.4; chi^0 t=0; chi^0 t=-0.4",
        "R: chi^0 t=0.2; chi^0 t=-0.2", {1.5}, 1e-2, 2e-3);
    add("pieri", "R: chi^0 t=0.3; chi^0 t=-0.3", "", {1.5}, 1e-3, 1e-4);
  }
  return cfg;
}

std::string reports_json(const std::vector<VerificationReport>& reports,
                         bool include_seconds) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  auto c2j = [](Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); };
  for (const VerificationReport& r : reports) {
    nlohmann::ordered_json jr;
    jr["identity"] = r.identity;
    jr["descriptor"] = r.descriptor;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const VerificationPoint& p : r.points) {
      nlohmann::ordered_json jp;
      jp["s"] = c2j(p.s);
      jp["lhs"] = c2j(p.lhs);
      jp["rhs"] = c2j(p.rhs);
      jp["abs_residual"] = p.abs_residual;
      jp["quad_err"] = p.quad_err;
      pts.push_back(std::move(jp));
    }
    jr["points"] = std::move(pts);
    jr["tolerance"] = r.tolerance;
    jr["verdict"] = r.pass ? "pass" : "fail";
    jr["seconds"] = include_seconds ? r.seconds : 0.0;
    jr["error"] = r.error;
    arr.push_back(std::move(jr));
  }
  return arr.dump(2);
}

}  // namespace anf
