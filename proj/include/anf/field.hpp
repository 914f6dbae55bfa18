#pragma once

#include <string>

namespace anf {

enum class FieldKind { Real, Complex };

// An archimedean local field: R or C.
struct LocalField {
  FieldKind kind = FieldKind::Real;

  // Degree over R: 1 for R, 2 for C.
  int degree() const { return kind == FieldKind::Real ? 1 : 2; }
  char letter() const { return kind == FieldKind::Real ? 'R' : 'C'; }

  friend bool operator==(const LocalField&, const LocalField&) = default;
};

inline std::string to_string(FieldKind k) { return k == FieldKind::Real ? "R" : "C"; }

}  // namespace anf
