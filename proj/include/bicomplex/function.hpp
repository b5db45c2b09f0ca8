#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/expr.hpp"
#include "bicomplex/literal.hpp"
#include "bicomplex/standard_form.hpp"

namespace bicomplex {

/// Open interval (lo, hi); either end may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  constexpr bool contains(double v) const { return lo < v && v < hi; }
  constexpr bool valid() const { return lo < hi; }
};

/// Open axis-aligned rectangle in the plane of one idempotent component.
struct Rect {
  Interval x;
  Interval y;

  constexpr bool contains(double px, double py) const { return x.contains(px) && y.contains(py); }
  constexpr bool contains(Complex z) const { return contains(z.real(), z.imag()); }
  constexpr bool valid() const { return x.valid() && y.valid(); }

  static constexpr Rect whole_plane() { return {}; }
  static constexpr Rect upper_half_plane() {
    return {{}, {0.0, std::numeric_limits<double>::infinity()}};
  }
};

/// Product region Omega1 e1 (+) Omega2 e2.
struct Region {
  Rect omega1;
  Rect omega2;

  Region() = default;
  Region(Rect o1, Rect o2) : omega1(o1), omega2(o2) {
    if (!o1.valid() || !o2.valid()) throw Error(ErrorKind::InvalidArgument, "region intervals must be nonempty");
  }
  explicit Region(Rect both) : Region(both, both) {}

  const Rect& component(int k) const { return k == 1 ? omega1 : omega2; }

  bool contains(const Bicomplex& zeta) const {
    return omega1.contains(zeta.zeta1()) && omega2.contains(zeta.zeta2());
  }
};

namespace detail {
inline void require_in(const Region& r, const Bicomplex& zeta) {
  if (!r.contains(zeta)) {
    throw Error(ErrorKind::OutOfDomain, expr::format_idempotent(zeta) + " is outside the region");
  }
}
}  // namespace detail

/// F(zeta) = f1(zeta1) e1 + f2(zeta2) e2 with holomorphic f1, f2 in `z`.
class BCHoloFn {
 public:
  BCHoloFn(expr::Expr f1, expr::Expr f2, Region domain = {})
      : f1_(std::move(f1)), f2_(std::move(f2)), domain_(domain) {
    check(f1_, "f1");
    check(f2_, "f2");
  }

  static BCHoloFn parse(const std::string& f1, const std::string& f2, Region domain = {}) {
    return BCHoloFn(expr::parse(f1, {"z"}), expr::parse(f2, {"z"}), domain);
  }

  const expr::Expr& f1() const { return f1_; }
  const expr::Expr& f2() const { return f2_; }
  const expr::Expr& component(int k) const { return k == 1 ? f1_ : f2_; }
  const Region& domain() const { return domain_; }

  Bicomplex operator()(const Bicomplex& zeta) const {
    detail::require_in(domain_, zeta);
    return Bicomplex::idempotent(expr::eval_complex(f1_, {zeta.zeta1()}),
                                 expr::eval_complex(f2_, {zeta.zeta2()}));
  }

 private:
  static void check(const expr::Expr& f, const char* name) {
    if (f.variables().size() != 1 || f.variables()[0] != "z") {
      throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be an expression in 'z'");
    }
    if (!expr::is_analytic(f)) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(name) + " uses a non-holomorphic function (abs, re, im, step, conj)");
    }
  }

  expr::Expr f1_;
  expr::Expr f2_;
  Region domain_;
};

inline Bicomplex eval_holo(const BCHoloFn& F, const Bicomplex& zeta) { return F(zeta); }

/// F'(zeta) = f1'(zeta1) e1 + f2'(zeta2) e2, each by a step of 1e-20 in j.
inline Bicomplex derivative(const BCHoloFn& F, const Bicomplex& zeta, double h = 1e-20) {
  detail::require_in(F.domain(), zeta);
  return Bicomplex::idempotent(bicomplex_step_derivative(F.f1(), zeta.zeta1(), h),
                               bicomplex_step_derivative(F.f2(), zeta.zeta2(), h));
}

/// Central difference along the real axis in each component; cross-check
/// for `derivative`.
inline Bicomplex derivative_central(const BCHoloFn& F, const Bicomplex& zeta, double h = 1e-6) {
  detail::require_in(F.domain(), zeta);
  auto d = [h](const expr::Expr& f, Complex z) {
    return (expr::eval_complex(f, {z + h}) - expr::eval_complex(f, {z - h})) / (2.0 * h);
  };
  return Bicomplex::idempotent(d(F.f1(), zeta.zeta1()), d(F.f2(), zeta.zeta2()));
}

struct HyperbolicDecomposition {
  Hyperbolic hre;  ///< u1 e1 + u2 e2
  Hyperbolic him;  ///< v1 e1 + v2 e2

  /// hre + i him.
  Bicomplex recombine() const {
    return Bicomplex::idempotent({hre.eta1, him.eta1}, {hre.eta2, him.eta2});
  }
};

/// Splits a value f1 e1 + f2 e2 into [u1 e1 + u2 e2] + i [v1 e1 + v2 e2].
inline HyperbolicDecomposition hyperbolic_decompose(const Bicomplex& value) {
  return {{value.zeta1().real(), value.zeta2().real()}, {value.zeta1().imag(), value.zeta2().imag()}};
}

inline HyperbolicDecomposition hyperbolic_decompose(const BCHoloFn& F, const Bicomplex& zeta) {
  return hyperbolic_decompose(F(zeta));
}

/// A bicomplex hyperbolic function u1(x1, y1) e1 + u2(x2, y2) e2 with real
/// components, u_k defined on omega_k.
class HyperbolicFnPair {
 public:
  using Component = std::function<double(double, double)>;

  HyperbolicFnPair(Component u1, Component u2, Region domain = {})
      : u1_(std::move(u1)), u2_(std::move(u2)), domain_(domain) {}

  /// Components written as real expressions in `x` and `y`.
  static HyperbolicFnPair parse(const std::string& u1, const std::string& u2, Region domain = {}) {
    return HyperbolicFnPair(from_expr(expr::parse(u1, {"x", "y"})), from_expr(expr::parse(u2, {"x", "y"})),
                            domain);
  }

  static Component from_expr(expr::Expr e) {
    return [e = std::move(e)](double x, double y) { return expr::eval_real(e, {x, y}); };
  }

  const Region& domain() const { return domain_; }

  /// Component k (1 or 2) at (x, y), which must lie in omega_k.
  double component(int k, double x, double y) const {
    if (!domain_.component(k).contains(x, y)) {
      throw Error(ErrorKind::OutOfDomain, "(" + expr::format_number(x) + ", " + expr::format_number(y) +
                                              ") is outside omega" + std::to_string(k));
    }
    return k == 1 ? u1_(x, y) : u2_(x, y);
  }

  Hyperbolic operator()(const Bicomplex& zeta) const {
    return {component(1, zeta.zeta1().real(), zeta.zeta1().imag()),
            component(2, zeta.zeta2().real(), zeta.zeta2().imag())};
  }

  const Component& raw(int k) const { return k == 1 ? u1_ : u2_; }

 private:
  Component u1_;
  Component u2_;
  Region domain_;
};

enum class Part { Re, Im };

/// H-Re[F] or H-Im[F] as a hyperbolic function pair on F's domain.
inline HyperbolicFnPair as_hyperbolic_fn(const BCHoloFn& F, Part part) {
  auto make = [part](expr::Expr f) -> HyperbolicFnPair::Component {
    return [f = std::move(f), part](double x, double y) {
      const Complex v = expr::eval_complex(f, {Complex{x, y}});
      return part == Part::Re ? v.real() : v.imag();
    };
  };
  return HyperbolicFnPair(make(F.f1()), make(F.f2()), F.domain());
}

/// For F with f1 == f2 and a complex input z, the classical value f(z).
inline Complex reduce_to_complex(const BCHoloFn& F, Complex z) {
  if (!expr::structurally_equal(F.f1(), F.f2())) {
    throw Error(ErrorKind::ComponentMismatch, "f1 and f2 differ, so F does not reduce to one complex function");
  }
  const Bicomplex v = F(Bicomplex(z));
  if (!v.is_complex()) {
    throw Error(ErrorKind::ComponentMismatch, "idempotent components disagree at a complex input");
  }
  return v.zeta1();
}

}  // namespace bicomplex
