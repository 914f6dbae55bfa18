#include "anf/invariants.hpp"

#include <cstdlib>

#include "anf/errors.hpp"

namespace anf {

long long conductor_exponent(const ReprDescriptor& rep) {
  long long c = 0;
  for (const auto& comp : rep.components)
    c += (comp.field == FieldKind::Complex) ? std::llabs(comp.kappa) : comp.kappa;
  return c;
}

HighestWeight newform_ktype(const ReprDescriptor& rep) {
  const int n = rep.rank();
  HighestWeight w;
  w.entries.assign(n, 0);
  if (rep.field == FieldKind::Complex) {
    w.group = GroupKind::Unitary;
    long long pos = 0, neg = 0;
    for (const auto& comp : rep.components) {
      if (comp.kappa > 0) pos += comp.kappa;
      if (comp.kappa < 0) neg += comp.kappa;
    }
    w.entries.front() += pos;
    w.entries.back() += neg;
  } else {
    w.group = GroupKind::Orthogonal;
    w.entries.front() = conductor_exponent(rep);
  }
  return w;
}

BigInt oldform_dim(const ReprDescriptor& rep, long long m) {
  const int n = rep.rank();
  if (n < 2)
    throw unsupported_error("oldform_dim: dimension formula requires rank >= 2 (rank-1 spaces are a convention, see the CLI)");
  if (m < 0) throw domain_error("oldform_dim: level must be nonnegative");
  const long long c = conductor_exponent(rep);
  if (m < c || ((m - c) & 1)) return 0;
  return binomial((m - c) / 2 + n - 2, n - 2);
}

EpsilonFactor epsilon_factor(const ReprDescriptor& rep) {
  const long long c = conductor_exponent(rep);
  return EpsilonFactor{static_cast<int>(((-c) % 4 + 4) % 4)};
}

long long howe_degree(const HighestWeight& w) {
  if (!is_valid_weight(w)) throw domain_error("howe_degree: invalid weight " + to_string(w));
  long long d = 0;
  for (long long e : w.entries) d += (w.group == GroupKind::Unitary) ? std::llabs(e) : e;
  return d;
}

long long vogan_norm_sq(const HighestWeight& w) {
  if (!is_valid_weight(w)) throw domain_error("vogan_norm_sq: invalid weight " + to_string(w));
  const long long n = w.n();
  long long total = 0;
  if (w.group == GroupKind::Unitary) {
    for (long long j = 1; j <= n; ++j) {
      const long long term = w.entries[j - 1] + n + 1 - 2 * j;
      total += term * term;
    }
    return total;
  }
  const auto shape = orthogonal_shape(w);
  for (long long j = 1; j <= shape.m; ++j) {
    const long long term = w.entries[j - 1] + n - 2 * j;
    total += term * term;
  }
  for (long long j = shape.m + 1; j <= n / 2; ++j) total += (n - 2 * j) * (n - 2 * j);
  return total;
}

ReprDescriptor automorphic_induction(const ReprDescriptor& rep) {
  if (rep.field != FieldKind::Complex)
    throw domain_error("automorphic_induction: defined for descriptors over C only");
  ReprDescriptor out;
  out.field = FieldKind::Real;
  for (const auto& comp : rep.components) {
    if (comp.kappa == 0) {
      out.components.push_back({FieldKind::Real, RepKind::Character, 0, comp.t});
      out.components.push_back({FieldKind::Real, RepKind::Character, 1, comp.t});
    } else {
      out.components.push_back(
          {FieldKind::Real, RepKind::DiscreteSeries, std::llabs(comp.kappa) + 1, comp.t});
    }
  }
  validate(out);
  return out;
}

}  // namespace anf
