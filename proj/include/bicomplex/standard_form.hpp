#pragma once

// Bicomplex arithmetic carried out in the standard form z1 + j z2, used to
// differentiate holomorphic expressions by a step in the j direction:
// f(z + j h) = f(z) + j h f'(z) + O(h^2), so f'(z) = z2-part / h with no
// subtractive cancellation. The idempotent route cannot do this, because
// z + jh has components z - ih and z + ih that agree to machine precision.
//
// Elementary functions use closed forms for the z2 part (exp, sin, cos) or
// split off the z1 part and treat the small remainder (log, sqrt, atan).

#include <cmath>
#include <complex>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/expr.hpp"

namespace bicomplex {

struct StandardForm {
  Complex z1{};
  Complex z2{};

  friend StandardForm operator+(const StandardForm& a, const StandardForm& b) {
    return {a.z1 + b.z1, a.z2 + b.z2};
  }
  friend StandardForm operator-(const StandardForm& a, const StandardForm& b) {
    return {a.z1 - b.z1, a.z2 - b.z2};
  }
  friend StandardForm operator-(const StandardForm& a) { return {-a.z1, -a.z2}; }
  friend StandardForm operator*(const StandardForm& a, const StandardForm& b) {
    return {a.z1 * b.z1 - a.z2 * b.z2, a.z1 * b.z2 + a.z2 * b.z1};
  }
  friend StandardForm operator*(double s, const StandardForm& a) { return {s * a.z1, s * a.z2}; }

  Bicomplex to_bicomplex() const { return Bicomplex::from_standard(z1, z2); }
};

namespace detail {

inline Complex log1p_complex(Complex u) {
  if (std::abs(u) < 1e-5) return u - 0.5 * u * u + u * u * u / 3.0;
  return std::log(1.0 + u);
}

}  // namespace detail

struct StandardFormArithmetic {
  using value_type = StandardForm;

  static StandardForm constant(Complex c) { return {c, {}}; }

  /// a / b = a (b1 - j b2) / (b1^2 + b2^2).
  static StandardForm divide(const StandardForm& a, const StandardForm& b) {
    const Complex d = b.z1 * b.z1 + b.z2 * b.z2;
    if (d == Complex{}) throw Error(ErrorKind::EvalDomain, "division by a zero divisor");
    const StandardForm num = a * StandardForm{b.z1, -b.z2};
    return {num.z1 / d, num.z2 / d};
  }

  static StandardForm integer_power(StandardForm base, long n) {
    if (n < 0) return divide(constant(1.0), integer_power(base, -n));
    StandardForm result = constant(1.0);
    auto k = static_cast<unsigned long>(n);
    while (k > 0) {
      if (k & 1u) result = result * base;
      k >>= 1u;
      if (k > 0) base = base * base;
    }
    return result;
  }

  static StandardForm exp(const StandardForm& a) {
    const Complex e = std::exp(a.z1);
    return {e * std::cos(a.z2), e * std::sin(a.z2)};
  }

  /// log(z1) + log(1 + j w), w = z2 / z1, with
  /// log(1 + j w) = log(1 + w^2)/2 + j atan(w) near the complex axis.
  static StandardForm log(const StandardForm& a) {
    if (a.z1 == Complex{}) throw Error(ErrorKind::EvalDomain, "log at a point with zero z1 part");
    const Complex w = a.z2 / a.z1;
    return {std::log(a.z1) + 0.5 * detail::log1p_complex(w * w), std::atan(w)};
  }

  static StandardForm power(const StandardForm& base, const StandardForm& exponent) {
    if (base.z1 == Complex{} && base.z2 == Complex{}) {
      if (exponent.z1.real() > 0.0) return {};
      throw Error(ErrorKind::EvalDomain, "zero raised to a non-positive power");
    }
    return exp(exponent * log(base));
  }

  static StandardForm apply(expr::Function fn, const StandardForm& a) {
    using expr::Function;
    switch (fn) {
      case Function::Exp: return exp(a);
      case Function::Sin:
        return {std::sin(a.z1) * std::cosh(a.z2), std::cos(a.z1) * std::sinh(a.z2)};
      case Function::Cos:
        return {std::cos(a.z1) * std::cosh(a.z2), -std::sin(a.z1) * std::sinh(a.z2)};
      case Function::Log:
        if (a.z1 == Complex{}) throw Error(ErrorKind::EvalDomain, "log of zero");
        return log(a);
      case Function::Sqrt: {
        if (a.z1 == Complex{}) throw Error(ErrorKind::EvalDomain, "sqrt is not differentiable at zero");
        const Complex w = a.z2 / a.z1;
        const StandardForm rest = exp(0.5 * StandardForm{0.5 * detail::log1p_complex(w * w), std::atan(w)});
        return constant(std::sqrt(a.z1)) * rest;
      }
      case Function::Atan: {
        if (a.z1.real() == 0.0 && std::abs(a.z1.imag()) == 1.0) {
          throw Error(ErrorKind::EvalDomain, "atan at a branch point");
        }
        // atan(z1 + j z2) = atan(z1) + atan(q), q = j z2 / (1 + z1 (z1 + j z2)).
        const StandardForm q = divide({Complex{}, a.z2}, constant(1.0) + constant(a.z1) * a);
        const Bicomplex qb = q.to_bicomplex();
        const Bicomplex t = Bicomplex::idempotent(std::atan(qb.zeta1()), std::atan(qb.zeta2()));
        const auto [t1, t2] = t.to_standard();
        return {std::atan(a.z1) + t1, t2};
      }
      case Function::Abs:
      case Function::Re:
      case Function::Im:
      case Function::Step:
      case Function::Conj:
        throw Error(ErrorKind::EvalDomain,
                    std::string("'") + std::string(expr::info(fn).name) + "' is not holomorphic");
    }
    return {};
  }

  static bool finite(const StandardForm& v) { return is_finite(v.z1) && is_finite(v.z2); }
};

/// Derivative of a holomorphic single-variable expression at z by a j-step.
inline Complex bicomplex_step_derivative(const expr::Expr& f, Complex z, double h = 1e-20) {
  const StandardForm arg{z, Complex{h, 0.0}};
  const StandardForm v = expr::evaluate<StandardFormArithmetic>(f, std::span<const StandardForm>(&arg, 1));
  return v.z2 / h;
}

}  // namespace bicomplex
