#pragma once

#include <string>
#include <vector>

namespace anf {

enum class GroupKind { Unitary, Orthogonal };

// Dominant weight of U(n) or equivalence-class label of an irreducible O(n) representation.
//
// Unitary:    entries = (mu_1 >= ... >= mu_n), any integers.
// Orthogonal: entries has length n and must have the shape
//                 (mu_1, ..., mu_m, eta, ..., eta, 0, ..., 0)
//             with mu_1 >= ... >= mu_m >= 1, eta in {0,1} repeated n-2m times,
//             and a final run of m zeros, for some 0 <= m <= floor(n/2).
struct HighestWeight {
  GroupKind group = GroupKind::Unitary;
  std::vector<long long> entries;

  int n() const { return static_cast<int>(entries.size()); }
  long long degree_sum() const;  // sum of entries (O: this is the Howe degree)

  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;
};

bool is_valid_weight(const HighestWeight& w);

// Shape parameters of a valid orthogonal weight. m is uniquely determined by the entries.
struct OrthogonalShape {
  int m = 0;        // number of leading entries allowed to exceed 1
  int eta = 0;      // value of the middle run (0 or 1)
};
// Throws domain_error when the weight is not a valid O(n) label.
OrthogonalShape orthogonal_shape(const HighestWeight& w);

std::string to_string(const HighestWeight& w);

// Every valid weight of U(n) (any integers) or O(n) (valid labels) whose Howe degree
// equals `degree`: sum |mu_j| for unitary, sum mu_j for orthogonal. Finite list,
// lexicographically decreasing. Degree must be >= 0.
std::vector<HighestWeight> weights_of_degree(GroupKind group, int n, long long degree);

}  // namespace anf
