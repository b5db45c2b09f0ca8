#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "bicomplex/error.hpp"

namespace bicomplex {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Real-component element eta1 e1 + eta2 e2 of the hyperbolic numbers.
/// The type spans all of H; membership in H+ is the `is_nonnegative` check.
struct Hyperbolic {
  double eta1 = 0.0;
  double eta2 = 0.0;

  constexpr Hyperbolic() = default;
  constexpr Hyperbolic(double both) : eta1(both), eta2(both) {}
  constexpr Hyperbolic(double e1, double e2) : eta1(e1), eta2(e2) {}

  /// Standard form x + ij y.
  constexpr double real_part() const { return 0.5 * (eta1 + eta2); }
  constexpr double ij_part() const { return 0.5 * (eta1 - eta2); }

  friend constexpr Hyperbolic operator+(Hyperbolic a, Hyperbolic b) {
    return {a.eta1 + b.eta1, a.eta2 + b.eta2};
  }
  friend constexpr Hyperbolic operator-(Hyperbolic a, Hyperbolic b) {
    return {a.eta1 - b.eta1, a.eta2 - b.eta2};
  }
  friend constexpr Hyperbolic operator-(Hyperbolic a) { return {-a.eta1, -a.eta2}; }
  friend constexpr Hyperbolic operator*(Hyperbolic a, Hyperbolic b) {
    return {a.eta1 * b.eta1, a.eta2 * b.eta2};
  }
  friend constexpr bool operator==(Hyperbolic a, Hyperbolic b) = default;
};

constexpr bool is_nonnegative(Hyperbolic h) { return h.eta1 >= 0.0 && h.eta2 >= 0.0; }

inline bool is_finite(Hyperbolic h) { return std::isfinite(h.eta1) && std::isfinite(h.eta2); }

/// Componentwise maximum of absolute values, handy for residual reporting.
inline Hyperbolic abs_components(Hyperbolic h) { return {std::abs(h.eta1), std::abs(h.eta2)}; }

/// A bicomplex number z1 + j z2, stored by its idempotent components:
/// zeta = zeta1 e1 + zeta2 e2 with e1 = (1 + ij)/2, e2 = (1 - ij)/2.
class Bicomplex {
 public:
  constexpr Bicomplex() = default;
  /// Embeds a complex number, which has equal idempotent components.
  constexpr Bicomplex(Complex z) : zeta1_(z), zeta2_(z) {}
  constexpr Bicomplex(double x) : zeta1_(x), zeta2_(x) {}
  constexpr Bicomplex(Hyperbolic h) : zeta1_(h.eta1), zeta2_(h.eta2) {}

  static constexpr Bicomplex idempotent(Complex zeta1, Complex zeta2) {
    Bicomplex b;
    b.zeta1_ = zeta1;
    b.zeta2_ = zeta2;
    return b;
  }

  /// zeta1 = z1 - i z2, zeta2 = z1 + i z2.
  static constexpr Bicomplex from_standard(Complex z1, Complex z2) {
    constexpr Complex i{0.0, 1.0};
    return idempotent(z1 - i * z2, z1 + i * z2);
  }

  /// Point with idempotent components x1 + i y1 and x2 + i y2.
  static constexpr Bicomplex from_components(double x1, double y1, double x2, double y2) {
    return idempotent({x1, y1}, {x2, y2});
  }

  constexpr Complex zeta1() const { return zeta1_; }
  constexpr Complex zeta2() const { return zeta2_; }

  /// z1 = (zeta1 + zeta2)/2.
  constexpr Complex z1() const { return 0.5 * (zeta1_ + zeta2_); }
  /// z2 = i (zeta1 - zeta2)/2.
  constexpr Complex z2() const { return Complex{0.0, 1.0} * (0.5 * (zeta1_ - zeta2_)); }

  constexpr std::pair<Complex, Complex> to_standard() const { return {z1(), z2()}; }

  /// True when the value lies in the complex plane, i.e. zeta1 == zeta2.
  constexpr bool is_complex() const { return zeta1_ == zeta2_; }

  constexpr bool is_hyperbolic() const { return zeta1_.imag() == 0.0 && zeta2_.imag() == 0.0; }

  bool is_finite() const { return bicomplex::is_finite(zeta1_) && bicomplex::is_finite(zeta2_); }

  Bicomplex& operator+=(const Bicomplex& o) {
    zeta1_ += o.zeta1_;
    zeta2_ += o.zeta2_;
    return *this;
  }
  Bicomplex& operator-=(const Bicomplex& o) {
    zeta1_ -= o.zeta1_;
    zeta2_ -= o.zeta2_;
    return *this;
  }
  Bicomplex& operator*=(const Bicomplex& o) {
    zeta1_ *= o.zeta1_;
    zeta2_ *= o.zeta2_;
    return *this;
  }

  friend constexpr Bicomplex operator+(const Bicomplex& a, const Bicomplex& b) {
    return idempotent(a.zeta1_ + b.zeta1_, a.zeta2_ + b.zeta2_);
  }
  friend constexpr Bicomplex operator-(const Bicomplex& a, const Bicomplex& b) {
    return idempotent(a.zeta1_ - b.zeta1_, a.zeta2_ - b.zeta2_);
  }
  friend constexpr Bicomplex operator-(const Bicomplex& a) { return idempotent(-a.zeta1_, -a.zeta2_); }
  friend constexpr Bicomplex operator*(const Bicomplex& a, const Bicomplex& b) {
    return idempotent(a.zeta1_ * b.zeta1_, a.zeta2_ * b.zeta2_);
  }
  friend constexpr bool operator==(const Bicomplex& a, const Bicomplex& b) {
    return a.zeta1_ == b.zeta1_ && a.zeta2_ == b.zeta2_;
  }

 private:
  Complex zeta1_{};
  Complex zeta2_{};
};

namespace units {
inline constexpr Bicomplex one() { return Bicomplex(1.0); }
inline constexpr Bicomplex i() { return Bicomplex(Complex{0.0, 1.0}); }
inline constexpr Bicomplex j() { return Bicomplex::from_standard(0.0, 1.0); }
inline constexpr Bicomplex ij() { return Bicomplex::idempotent(1.0, -1.0); }
inline constexpr Bicomplex e1() { return Bicomplex::idempotent(1.0, 0.0); }
inline constexpr Bicomplex e2() { return Bicomplex::idempotent(0.0, 1.0); }
}  // namespace units

inline Bicomplex from_standard(Complex z1, Complex z2) { return Bicomplex::from_standard(z1, z2); }
inline std::pair<Complex, Complex> to_standard(const Bicomplex& zeta) { return zeta.to_standard(); }

inline Bicomplex add(const Bicomplex& a, const Bicomplex& b) { return a + b; }
inline Bicomplex mul(const Bicomplex& a, const Bicomplex& b) { return a * b; }

/// Product through the standard-form rule (z1 w1 - z2 w2) + j (z1 w2 + w1 z2).
/// Kept alongside the componentwise product as an independent route.
inline Bicomplex mul_standard(const Bicomplex& a, const Bicomplex& b) {
  const auto [z1, z2] = a.to_standard();
  const auto [w1, w2] = b.to_standard();
  return Bicomplex::from_standard(z1 * w1 - z2 * w2, z1 * w2 + w1 * z2);
}

namespace detail {
inline Complex ipow(Complex base, unsigned n) {
  Complex result{1.0, 0.0};
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

inline Complex principal_root(Complex z, unsigned n) {
  if (n == 1) return z;
  if (n == 2) return std::sqrt(z);
  if (z == Complex{}) return z;
  return std::polar(std::pow(std::abs(z), 1.0 / n), std::arg(z) / n);
}
}  // namespace detail

inline Bicomplex pow_int(const Bicomplex& zeta, unsigned n) {
  return Bicomplex::idempotent(detail::ipow(zeta.zeta1(), n), detail::ipow(zeta.zeta2(), n));
}

/// Principal complex n-th root on each idempotent component.
inline Bicomplex nth_root(const Bicomplex& zeta, unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "root order must be at least 1");
  return Bicomplex::idempotent(detail::principal_root(zeta.zeta1(), n),
                               detail::principal_root(zeta.zeta2(), n));
}

/// Exact criterion: zeta is a zero divisor iff one idempotent component is 0.
inline bool is_invertible(const Bicomplex& zeta) {
  return zeta.zeta1() != Complex{} && zeta.zeta2() != Complex{};
}

inline bool near_noninvertible(const Bicomplex& zeta, double eps = 1e-12) {
  return std::abs(zeta.zeta1()) <= eps || std::abs(zeta.zeta2()) <= eps;
}

inline Bicomplex invert(const Bicomplex& zeta) {
  if (!is_invertible(zeta)) {
    throw Error(ErrorKind::NonInvertible, "an idempotent component is zero");
  }
  return Bicomplex::idempotent(1.0 / zeta.zeta1(), 1.0 / zeta.zeta2());
}

inline Bicomplex operator/(const Bicomplex& a, const Bicomplex& b) { return a * invert(b); }

/// |zeta|_H = |zeta1| e1 + |zeta2| e2.
inline Hyperbolic hyp_norm(const Bicomplex& zeta) {
  return {std::abs(zeta.zeta1()), std::abs(zeta.zeta2())};
}

enum class HypOrdering { Equal, Less, Greater, Incomparable };

inline const char* to_string(HypOrdering o) {
  switch (o) {
    case HypOrdering::Equal: return "Equal";
    case HypOrdering::Less: return "Less";
    case HypOrdering::Greater: return "Greater";
    case HypOrdering::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Strict componentwise comparison. A pair that agrees in one component and
/// differs in the other is neither Less nor Greater, so it is Incomparable;
/// use `hyp_le` for the non-strict order.
constexpr HypOrdering hyp_compare(Hyperbolic a, Hyperbolic b) {
  if (a == b) return HypOrdering::Equal;
  if (a.eta1 < b.eta1 && a.eta2 < b.eta2) return HypOrdering::Less;
  if (a.eta1 > b.eta1 && a.eta2 > b.eta2) return HypOrdering::Greater;
  return HypOrdering::Incomparable;
}

constexpr bool hyp_le(Hyperbolic a, Hyperbolic b) { return a.eta1 <= b.eta1 && a.eta2 <= b.eta2; }
constexpr bool hyp_lt(Hyperbolic a, Hyperbolic b) {
  return hyp_compare(a, b) == HypOrdering::Less;
}

/// Open ball { zeta : |zeta - center|_H <_H radius }.
class HyperbolicBall {
 public:
  HyperbolicBall(Bicomplex center, Hyperbolic radius) : center_(center), radius_(radius) {
    if (!(radius.eta1 > 0.0 && radius.eta2 > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, "ball radius must be componentwise positive");
    }
  }

  const Bicomplex& center() const { return center_; }
  Hyperbolic radius() const { return radius_; }

  bool contains(const Bicomplex& zeta) const { return hyp_lt(hyp_norm(zeta - center_), radius_); }

 private:
  Bicomplex center_;
  Hyperbolic radius_;
};

inline bool ball_contains(const HyperbolicBall& ball, const Bicomplex& zeta) {
  return ball.contains(zeta);
}

}  // namespace bicomplex
