#include "anf/branching.hpp"

#include <algorithm>
#include <map>

#include "anf/errors.hpp"

namespace anf {

namespace {

void check_restriction_input(const HighestWeight& mu, GroupKind expect, const char* who) {
  if (mu.group != expect) throw domain_error(std::string(who) + ": wrong group kind");
  if (mu.n() < 2) throw domain_error(std::string(who) + ": rank must be at least 2");
  if (!is_valid_weight(mu)) throw domain_error(std::string(who) + ": invalid weight " + to_string(mu));
}

// All integer vectors nu with mu_1 >= nu_1 >= mu_2 >= ... >= nu_{n-1} >= mu_n,
// in lexicographic order.
template <typename Visit>
void enumerate_interlacing(const std::vector<long long>& mu, Visit visit) {
  const std::size_t k = mu.size() - 1;
  std::vector<long long> nu(k);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == k) {
      visit(nu);
      return;
    }
    for (long long v = mu[j]; v >= mu[j + 1]; --v) {
      nu[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<BranchTerm> restrict_u(const HighestWeight& mu) {
  check_restriction_input(mu, GroupKind::Unitary, "restrict_u");
  const long long total = mu.degree_sum();
  std::vector<BranchTerm> out;
  enumerate_interlacing(mu.entries, [&](const std::vector<long long>& nu) {
    BranchTerm term;
    term.nu = HighestWeight{GroupKind::Unitary, nu};
    term.det_weight = total - term.nu.degree_sum();
    out.push_back(std::move(term));
  });
  return out;
}

std::vector<BranchTerm> restrict_o(const HighestWeight& mu) {
  check_restriction_input(mu, GroupKind::Orthogonal, "restrict_o");
  const long long total = mu.degree_sum();
  std::vector<BranchTerm> out;
  enumerate_interlacing(mu.entries, [&](const std::vector<long long>& nu) {
    BranchTerm term;
    term.nu = HighestWeight{GroupKind::Orthogonal, nu};
    if (!is_valid_weight(term.nu)) return;  // interlacing pattern without an O(n-1) label
    term.det_weight = (total - term.nu.degree_sum()) & 1;
    out.push_back(std::move(term));
  });
  return out;
}

std::vector<BranchTerm> restrict_o2(const HighestWeight& mu) {
  check_restriction_input(mu, GroupKind::Orthogonal, "restrict_o2");
  const int n = mu.n();
  if (n < 3) throw domain_error("restrict_o2: rank must be at least 3");
  for (int j = 1; j < n; ++j)
    if (mu.entries[j] != 0)
      throw unsupported_error("restrict_o2: only single-row weights (p,0,...,0) are handled, got " +
                              to_string(mu));
  const long long p = mu.entries[0];
  std::vector<BranchTerm> out;
  for (long long lambda1 = 0; lambda1 <= p; ++lambda1) {
    for (long long nu1 = (p - lambda1) & 1; nu1 <= p - lambda1; nu1 += 2) {
      BranchTerm term;
      term.nu = HighestWeight{GroupKind::Orthogonal, std::vector<long long>(n - 2, 0)};
      term.nu.entries[0] = nu1;
      term.det_weight = lambda1;
      out.push_back(std::move(term));
    }
  }
  return out;
}

namespace {

using StateMap = std::map<std::vector<long long>, BigInt>;

// Peel one block off the right end of the restriction chain.
StateMap peel_block(const StateMap& states, GroupKind group, const SquareIntegrableRep& comp) {
  StateMap next;
  for (const auto& [entries, mult] : states) {
    HighestWeight w{group, entries};
    if (comp.block_size() == 1) {
      const auto terms = (group == GroupKind::Unitary) ? restrict_u(w) : restrict_o(w);
      for (const auto& term : terms)
        if (term.det_weight == comp.kappa) next[term.nu.entries] += mult * term.multiplicity;
    } else {
      // Discrete series: O(2) factor contributes every (l,0) with l >= kappa, l = kappa mod 2.
      for (const auto& term : restrict_o2(w))
        if (term.det_weight >= comp.kappa && ((term.det_weight - comp.kappa) & 1) == 0)
          next[term.nu.entries] += mult * term.multiplicity;
    }
  }
  return next;
}

// Multiplicity of the final block's K_{n_1}-types inside the residual weight.
BigInt match_base_block(const std::vector<long long>& entries, GroupKind group,
                        const SquareIntegrableRep& comp) {
  if (comp.block_size() == 1) {
    if (group == GroupKind::Orthogonal)
      return (entries.size() == 1 && entries[0] == (comp.kappa & 1)) ? 1 : 0;
    return (entries.size() == 1 && entries[0] == comp.kappa) ? 1 : 0;
  }
  // O(2) weight against D_kappa: accept (l, 0), l >= kappa and l = kappa mod 2.
  if (entries.size() != 2 || entries[1] != 0) return 0;
  return (entries[0] >= comp.kappa && ((entries[0] - comp.kappa) & 1) == 0) ? 1 : 0;
}

}  // namespace

BigInt mult_chain(const ReprDescriptor& rep, const HighestWeight& tau) {
  validate(rep);
  const GroupKind group =
      rep.field == FieldKind::Complex ? GroupKind::Unitary : GroupKind::Orthogonal;
  if (tau.group != group) throw domain_error("mult_chain: weight group does not match the field");
  if (tau.n() != rep.rank()) throw domain_error("mult_chain: weight rank does not match the descriptor");
  if (!is_valid_weight(tau)) throw domain_error("mult_chain: invalid weight " + to_string(tau));

  StateMap states;
  states[tau.entries] = 1;
  for (std::size_t j = rep.components.size(); j-- > 1;) {
    states = peel_block(states, group, rep.components[j]);
    if (states.empty()) return 0;
  }
  BigInt total = 0;
  for (const auto& [entries, mult] : states)
    total += mult * match_base_block(entries, group, rep.components.front());
  return total;
}

std::pair<bool, BigInt> trivial_on_restriction(const HighestWeight& tau) {
  if (!is_valid_weight(tau)) throw domain_error("trivial_on_restriction: invalid weight " + to_string(tau));
  if (tau.n() < 2) throw domain_error("trivial_on_restriction: rank must be at least 2");
  const auto& e = tau.entries;
  const int n = tau.n();
  bool ok;
  if (tau.group == GroupKind::Unitary) {
    ok = e.front() >= 0 && e.back() <= 0;
    for (int j = 1; ok && j < n - 1; ++j) ok = (e[j] == 0);
  } else {
    ok = true;
    for (int j = 1; ok && j < n; ++j) ok = (e[j] == 0);
  }
  return {ok, ok ? BigInt(1) : BigInt(0)};
}

std::pair<BigInt, BigInt> binom_identity(long long k, long long m, long long n) {
  BigInt lhs = 0;
  for (long long j = 0; j <= k; ++j) lhs += binomial(j + m, m) * binomial(k - j + n, n);
  return {lhs, binomial(k + m + n + 1, m + n + 1)};
}

BigInt weyl_dim_u(const HighestWeight& mu) {
  if (mu.group != GroupKind::Unitary || !is_valid_weight(mu))
    throw domain_error("weyl_dim_u: needs a dominant U(n) weight");
  const int n = mu.n();
  BigInt num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= mu.entries[i - 1] - mu.entries[j - 1] + j - i;
      den *= j - i;
    }
  return num / den;  // exact: den divides num for dominant weights
}

}  // namespace anf
