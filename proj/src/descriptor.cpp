#include "anf/descriptor.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "anf/errors.hpp"

namespace anf {

bool ReprDescriptor::is_standard_ordered() const {
  for (std::size_t j = 1; j < components.size(); ++j)
    if (components[j - 1].t.real() < components[j].t.real()) return false;
  return true;
}

void validate(const ReprDescriptor& rep) {
  if (rep.components.empty()) throw domain_error("descriptor must have at least one component");
  for (std::size_t j = 0; j < rep.components.size(); ++j) {
    const auto& c = rep.components[j];
    const std::string where = "component " + std::to_string(j + 1) + ": ";
    if (c.field != rep.field) throw domain_error(where + "component field differs from descriptor field");
    if (c.kind == RepKind::DiscreteSeries) {
      if (c.field == FieldKind::Complex)
        throw domain_error(where + "discrete series exist only over R");
      if (c.kappa < 2) throw domain_error(where + "discrete-series weight must be >= 2");
    } else if (c.field == FieldKind::Real) {
      if (c.kappa != 0 && c.kappa != 1)
        throw domain_error(where + "real character exponent must be 0 or 1");
    }
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ReprDescriptor run() {
    ReprDescriptor rep;
    skip_ws();
    rep.field = parse_field();
    expect(':');
    rep.components.push_back(parse_component(rep.field));
    skip_ws();
    while (pos_ < text_.size()) {
      expect(';');
      rep.components.push_back(parse_component(rep.field));
      skip_ws();
    }
    validate(rep);
    return rep;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw parse_error(msg, at); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  FieldKind parse_field() {
    skip_ws();
    char c = peek();
    if (c == 'R') {
      ++pos_;
      return FieldKind::Real;
    }
    if (c == 'C') {
      ++pos_;
      return FieldKind::Complex;
    }
    fail("expected field letter 'R' or 'C'", pos_);
  }

  long long parse_int(bool allow_sign) {
    skip_ws();
    std::size_t start = pos_;
    if (allow_sign && (peek() == '+' || peek() == '-')) ++pos_;
    std::size_t digits_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits_start) fail("expected integer", start);
    long long value = 0;
    auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || p != text_.data() + pos_) fail("integer out of range", start);
    return value;
  }

  // FLOAT := [+-]? (digits ['.' digits*] | '.' digits) [('e'|'E') [+-]? digits]
  double parse_float() {
    skip_ws();
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') ++pos_;
    bool any_digits = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      any_digits = true;
    }
    if (peek() == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        any_digits = true;
      }
    }
    if (!any_digits) fail("expected number", start);
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      std::size_t exp_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == exp_start) fail("expected exponent digits", exp_start);
    }
    std::string token(text_.substr(start, pos_ - start));
    return std::strtod(token.c_str(), nullptr);
  }

  // COMPLEX := FLOAT | FLOAT SIGN FLOAT 'i' | FLOAT 'i'
  std::complex<double> parse_complex() {
    double first = parse_float();
    if (peek() == 'i') {
      ++pos_;
      return {0.0, first};
    }
    if (peek() == '+' || peek() == '-') {
      std::size_t sign_pos = pos_;
      double second = parse_float();
      if (peek() != 'i') fail("expected 'i' after imaginary part", sign_pos);
      ++pos_;
      return {first, second};
    }
    return {first, 0.0};
  }

  SquareIntegrableRep parse_component(FieldKind field) {
    SquareIntegrableRep c;
    c.field = field;
    skip_ws();
    std::size_t start = pos_;
    if (text_.substr(pos_).starts_with("chi^")) {
      pos_ += 4;
      c.kind = RepKind::Character;
      c.kappa = parse_int(/*allow_sign=*/true);
    } else if (text_.substr(pos_).starts_with("D^")) {
      pos_ += 2;
      c.kind = RepKind::DiscreteSeries;
      c.kappa = parse_int(/*allow_sign=*/false);
    } else {
      fail("expected component 'chi^' or 'D^'", start);
    }
    skip_ws();
    if (!text_.substr(pos_).starts_with("t=")) fail("expected 't='", pos_);
    pos_ += 2;
    skip_ws();
    c.t = parse_complex();
    return c;
  }
};

// Shortest decimal that round-trips through strtod.
std::string format_double(double x) {
  if (x == 0.0) return "0";  // also normalizes -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  if (z.real() == 0.0) return format_double(z.imag()) + "i";
  std::string s = format_double(z.real());
  if (!(z.imag() < 0.0)) s += "+";
  return s + format_double(z.imag()) + "i";
}

ReprDescriptor parse_descriptor(std::string_view text) { return Parser(text).run(); }

std::string print_descriptor(const ReprDescriptor& rep) {
  std::string out(1, rep.field == FieldKind::Real ? 'R' : 'C');
  out += ':';
  for (std::size_t j = 0; j < rep.components.size(); ++j) {
    out += (j == 0) ? " " : "; ";
    const auto& c = rep.components[j];
    if (c.kind == RepKind::Character)
      out += "chi^" + std::to_string(c.kappa);
    else
      out += "D^" + std::to_string(c.kappa);
    out += " t=" + format_complex(c.t);
  }
  return out;
}

CanonicalizeResult canonicalize(const ReprDescriptor& rep) {
  CanonicalizeResult result{rep, false};
  std::stable_sort(result.rep.components.begin(), result.rep.components.end(),
                   [](const SquareIntegrableRep& a, const SquareIntegrableRep& b) {
                     return a.t.real() > b.t.real();
                   });
  result.changed = result.rep.components != rep.components;
  return result;
}

ReprDescriptor contragredient(const ReprDescriptor& rep) {
  ReprDescriptor dual = rep;
  for (auto& c : dual.components) {
    if (c.field == FieldKind::Complex) c.kappa = -c.kappa;
    c.t = -c.t;
  }
  return canonicalize(dual).rep;
}

bool is_spherical(const ReprDescriptor& rep) {
  return std::all_of(rep.components.begin(), rep.components.end(), [](const SquareIntegrableRep& c) {
    return c.kind == RepKind::Character && c.kappa == 0;
  });
}

}  // namespace anf
