#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "anf/field.hpp"

namespace anf {

enum class RepKind { Character, DiscreteSeries };

// One factor of an isobaric sum: a twisted character chi^kappa |.|^t of R^x or C^x,
// or a twisted discrete series D^kappa (x) |det|^t of GL_2(R).
//
// Parameter ranges:
//   R character:       kappa in {0,1}       (sign character exponent), block size 1
//   C character:       kappa in Z           (z -> (z/|z|)^kappa twist), block size 1
//   R discrete series:  kappa >= 2,          block size 2
// Discrete series over C do not exist and are rejected at construction/parse time.
struct SquareIntegrableRep {
  FieldKind field = FieldKind::Real;
  RepKind kind = RepKind::Character;
  long long kappa = 0;
  std::complex<double> t{0.0, 0.0};

  int block_size() const { return kind == RepKind::DiscreteSeries ? 2 : 1; }

  friend bool operator==(const SquareIntegrableRep&, const SquareIntegrableRep&) = default;
};

// An irreducible generic representation of GL_n(F) presented as an isobaric sum of
// square-integrable pieces. rank() is n = sum of block sizes.
struct ReprDescriptor {
  FieldKind field = FieldKind::Real;
  std::vector<SquareIntegrableRep> components;

  int rank() const {
    int n = 0;
    for (const auto& c : components) n += c.block_size();
    return n;
  }

  // True when components are listed with Re(t_1) >= Re(t_2) >= ... (the order in which
  // the closed formulas below are stated).
  bool is_standard_ordered() const;

  friend bool operator==(const ReprDescriptor&, const ReprDescriptor&) = default;
};

// Throws domain_error if the component parameters are outside the ranges above
// or mix fields. Used by the parser and available to callers constructing by hand.
void validate(const ReprDescriptor& rep);

// Grammar (whitespace between tokens is ignored):
//   rep       := FIELD ':' component (';' component)*
//   FIELD     := 'R' | 'C'
//   component := 'chi^' SIGNED_INT 't=' COMPLEX
//              | 'D^'   INT        't=' COMPLEX
//   COMPLEX   := FLOAT | FLOAT SIGN FLOAT 'i' | FLOAT 'i'
// Examples: "R: chi^0 t=0.5; chi^1 t=-0.5",  "C: chi^-2 t=1+0.5i",  "R: D^3 t=0".
// Throws parse_error (with position) on bad syntax, domain_error on bad parameters.
ReprDescriptor parse_descriptor(std::string_view text);

// Inverse of parse_descriptor: emits exactly the grammar above, one space after
// ':' and after ';', shortest round-trip decimal for floats.
std::string print_descriptor(const ReprDescriptor& rep);

// Stable sort of components by decreasing Re(t). Returns the sorted descriptor and
// whether anything moved.
struct CanonicalizeResult {
  ReprDescriptor rep;
  bool changed;
};
CanonicalizeResult canonicalize(const ReprDescriptor& rep);

// Componentwise dual, then canonicalize:
//   C character:        (kappa, t) -> (-kappa, -t)
//   R character:        (kappa, t) -> (kappa, -t)
//   R discrete series:  (kappa, t) -> (kappa, -t)
ReprDescriptor contragredient(const ReprDescriptor& rep);

// True when every component is an unramified character (kappa = 0, block size 1).
bool is_spherical(const ReprDescriptor& rep);

// Formats a complex number the way the descriptor grammar accepts it.
std::string format_complex(std::complex<double> z);

}  // namespace anf
