#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace anf {

// Thrown by the descriptor parser; `position` is a 0-based offset into the input text.
struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Semantically invalid input (e.g. kappa out of range for the field, wrong field for an operation).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Valid input that this implementation deliberately does not handle (documented non-goals,
// unsupported shapes, dimensions beyond quadrature budgets).
struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation request at (or numerically indistinguishable from) a pole of Gamma / zeta / L.
// `component` is the index of the offending component of an isobaric sum, or -1.
struct pole_error : std::runtime_error {
  std::complex<double> where;
  int component;
  pole_error(const std::string& msg, std::complex<double> z, int comp = -1)
      : std::runtime_error(msg), where(z), component(comp) {}
};

// Parameters outside the absolute-convergence region of an integral representation.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace anf
