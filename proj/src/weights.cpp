#include "anf/weights.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "anf/errors.hpp"

namespace anf {

long long HighestWeight::degree_sum() const {
  return std::accumulate(entries.begin(), entries.end(), 0LL);
}

namespace {

bool nonincreasing(const std::vector<long long>& v) {
  for (std::size_t j = 1; j < v.size(); ++j)
    if (v[j - 1] < v[j]) return false;
  return true;
}

}  // namespace

bool is_valid_weight(const HighestWeight& w) {
  if (w.entries.empty()) return false;
  if (w.group == GroupKind::Unitary) return nonincreasing(w.entries);

  // Orthogonal: (mu_1,...,mu_m, eta x (n-2m), 0 x m), mu_m >= 1, eta in {0,1}.
  if (!nonincreasing(w.entries)) return false;
  const int n = w.n();
  for (long long e : w.entries)
    if (e < 0) return false;
  int nonzero = 0;
  while (nonzero < n && w.entries[nonzero] > 0) ++nonzero;
  if (2 * nonzero <= n) return true;  // m = nonzero, eta = 0
  // Too many nonzero entries for eta = 0; only works if the overflow is a run of ones.
  const int zeros = n - nonzero;  // candidate m = zeros, middle run length n - 2*zeros
  if (n - 2 * zeros < 1) return false;
  for (int j = zeros; j < n - zeros; ++j)
    if (w.entries[j] != 1) return false;
  return true;
}

OrthogonalShape orthogonal_shape(const HighestWeight& w) {
  if (w.group != GroupKind::Orthogonal) throw domain_error("orthogonal_shape: weight is not orthogonal");
  if (!is_valid_weight(w)) throw domain_error("orthogonal_shape: not a valid O(n) weight: " + to_string(w));
  const int n = w.n();
  int nonzero = 0;
  while (nonzero < n && w.entries[nonzero] > 0) ++nonzero;
  if (2 * nonzero <= n) return {nonzero, 0};
  return {n - nonzero, 1};
}

std::string to_string(const HighestWeight& w) {
  std::string s = "(";
  for (std::size_t j = 0; j < w.entries.size(); ++j) {
    if (j) s += ",";
    s += std::to_string(w.entries[j]);
  }
  return s + ")";
}

std::vector<HighestWeight> weights_of_degree(GroupKind group, int n, long long degree) {
  if (n < 1 || degree < 0) throw domain_error("weights_of_degree: n >= 1 and degree >= 0 required");
  std::vector<HighestWeight> out;
  std::vector<long long> cur(static_cast<std::size_t>(n));
  const long long floor_entry = group == GroupKind::Unitary ? -degree : 0;
  // Depth-first over nonincreasing sequences, pruning on the remaining |.|-budget.
  auto rec = [&](auto&& self, int pos, long long prev, long long budget) -> void {
    if (pos == n) {
      if (budget != 0) return;
      HighestWeight w{group, cur};
      if (is_valid_weight(w)) out.push_back(std::move(w));
      return;
    }
    const long long hi = std::min(prev, budget);
    for (long long v = hi; v >= floor_entry; --v) {
      const long long cost = v < 0 ? -v : v;
      if (cost > budget) continue;
      // Entries only get smaller; once v < 0 the cheapest completion costs |v| per slot.
      if (v < 0 && cost * (n - pos) > budget) break;
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v, budget - cost);
    }
  };
  rec(rec, 0, degree, degree);
  return out;
}

}  // namespace anf
