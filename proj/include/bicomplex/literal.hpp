#pragma once

// Text forms of bicomplex and hyperbolic values.
//
//   standard:    x1 + y1 i + x2 j + y2 ij     (terms in any order, coefficient
//                optional, `*` between coefficient and unit optional)
//   idempotent:  [a + b i | c + d i]          (zeta1 | zeta2)
//
// Printing uses 17 significant digits, so print/parse of either form
// preserves every double exactly in that form.

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/expr.hpp"

namespace bicomplex::expr {

namespace detail {

inline void append_signed(std::string& out, double v, const char* unit, bool first) {
  if (first) {
    out += format_number(v);
  } else {
    out += std::signbit(v) ? " - " : " + ";
    out += format_number(std::abs(v));
  }
  if (*unit != '\0') {
    out += ' ';
    out += unit;
  }
}

inline std::string format_complex_terms(Complex z) {
  std::string out;
  append_signed(out, z.real(), "", true);
  append_signed(out, z.imag(), "i", false);
  return out;
}

enum class Unit { One, I, J, IJ };

/// Accumulates signed `coefficient unit` terms from a string.
class TermScanner {
 public:
  TermScanner(std::string_view text, std::size_t base_offset, bool allow_j)
      : text_(text), base_(base_offset), allow_j_(allow_j) {}

  Complex z1{}, z2{};

  void scan() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(base_ + pos_, "empty number");
    bool first = true;
    while (pos_ < text_.size()) {
      double sign = 1.0;
      bool had_sign = false;
      while (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
        if (had_sign && !first) throw SyntaxError(base_ + pos_, "repeated sign");
        if (text_[pos_] == '-') sign = -sign;
        had_sign = true;
        ++pos_;
        skip_ws();
      }
      if (!first && !had_sign) throw SyntaxError(base_ + pos_, "expected '+' or '-'");
      first = false;
      term(sign);
      skip_ws();
    }
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void term(double sign) {
    const std::size_t start = pos_;
    double coeff = 1.0;
    bool have_number = false;
    std::size_t p = pos_;
    while (p < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[p])) || text_[p] == '.')) ++p;
    if (p > pos_) {
      if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
        if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
          p = q;
          while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        }
      }
      const auto res = std::from_chars(text_.data() + pos_, text_.data() + p, coeff);
      if (res.ec != std::errc{} || res.ptr != text_.data() + p || !std::isfinite(coeff)) {
        throw SyntaxError(base_ + pos_, "malformed number");
      }
      have_number = true;
      pos_ = p;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (pos_ >= text_.size() || (text_[pos_] != 'i' && text_[pos_] != 'j')) {
          throw SyntaxError(base_ + pos_, "expected a unit after '*'");
        }
      }
    }
    Unit unit = Unit::One;
    if (pos_ < text_.size() && (text_[pos_] == 'i' || text_[pos_] == 'j')) {
      const char a = text_[pos_];
      const char b = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
      if ((a == 'i' && b == 'j') || (a == 'j' && b == 'i')) {
        unit = Unit::IJ;
        pos_ += 2;
      } else {
        unit = a == 'i' ? Unit::I : Unit::J;
        pos_ += 1;
      }
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        throw SyntaxError(base_ + pos_, "unknown unit");
      }
      if (!allow_j_ && unit != Unit::I) throw SyntaxError(base_ + start, "only 'i' is allowed here");
    } else if (!have_number) {
      throw SyntaxError(base_ + pos_, "expected a number or unit");
    }
    const double v = sign * coeff;
    switch (unit) {
      case Unit::One: z1 += Complex{v, 0.0}; break;
      case Unit::I: z1 += Complex{0.0, v}; break;
      case Unit::J: z2 += Complex{v, 0.0}; break;
      case Unit::IJ: z2 += Complex{0.0, v}; break;
    }
  }

  std::string_view text_;
  std::size_t base_;
  bool allow_j_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// `x1 + y1 i + x2 j + y2 ij`.
inline std::string format_standard(Complex z1, Complex z2) {
  std::string out;
  detail::append_signed(out, z1.real(), "", true);
  detail::append_signed(out, z1.imag(), "i", false);
  detail::append_signed(out, z2.real(), "j", false);
  detail::append_signed(out, z2.imag(), "ij", false);
  return out;
}

/// Standard-form text of the computed view (z1, z2) of zeta.
inline std::string format_standard(const Bicomplex& zeta) {
  const auto [z1, z2] = zeta.to_standard();
  return format_standard(z1, z2);
}

/// `[zeta1 | zeta2]`, exact for the stored components.
inline std::string format_idempotent(const Bicomplex& zeta) {
  return "[" + detail::format_complex_terms(zeta.zeta1()) + " | " +
         detail::format_complex_terms(zeta.zeta2()) + "]";
}

inline std::string format_complex(Complex z) { return detail::format_complex_terms(z); }

inline std::string format_idempotent(Hyperbolic h) {
  return "[" + format_number(h.eta1) + " | " + format_number(h.eta2) + "]";
}

/// `x + y ij`.
inline std::string format_standard(Hyperbolic h) {
  std::string out;
  detail::append_signed(out, h.real_part(), "", true);
  detail::append_signed(out, h.ij_part(), "ij", false);
  return out;
}

inline Complex parse_complex(std::string_view text, std::size_t base_offset = 0) {
  detail::TermScanner s(text, base_offset, false);
  s.scan();
  return s.z1;
}

/// Exact (z1, z2) coefficients of a standard-form literal.
inline std::pair<Complex, Complex> parse_standard_parts(std::string_view text) {
  detail::TermScanner s(text, 0, true);
  s.scan();
  return {s.z1, s.z2};
}

/// Parses either text form; a leading '[' selects the idempotent form.
inline Bicomplex parse_bicomplex(std::string_view text) {
  std::size_t lead = 0;
  while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) ++lead;
  if (lead < text.size() && text[lead] == '[') {
    const std::size_t bar = text.find('|', lead);
    const std::size_t close = text.find(']', lead);
    if (bar == std::string_view::npos) throw SyntaxError(text.size(), "expected '|'");
    if (close == std::string_view::npos || close < bar) throw SyntaxError(text.size(), "expected ']'");
    for (std::size_t k = close + 1; k < text.size(); ++k) {
      if (!std::isspace(static_cast<unsigned char>(text[k]))) throw SyntaxError(k, "trailing characters");
    }
    const Complex a = parse_complex(text.substr(lead + 1, bar - lead - 1), lead + 1);
    const Complex b = parse_complex(text.substr(bar + 1, close - bar - 1), bar + 1);
    return Bicomplex::idempotent(a, b);
  }
  const auto [z1, z2] = parse_standard_parts(text);
  return Bicomplex::from_standard(z1, z2);
}

}  // namespace bicomplex::expr
