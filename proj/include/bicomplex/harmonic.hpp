#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/function.hpp"
#include "bicomplex/grid.hpp"
#include "bicomplex/quadrature.hpp"

namespace bicomplex {

inline constexpr double kDefaultLaplacianStep = 1e-3;
inline constexpr double kDefaultPartialStep = 1e-4;

/// 5-point Laplacian of component k of u at (x, y).
inline double planar_laplacian(const HyperbolicFnPair& u, int k, double x, double y, double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
  const double c = u.component(k, x, y);
  const double sum = u.component(k, x + h, y) + u.component(k, x - h, y) + u.component(k, x, y + h) +
                     u.component(k, x, y - h);
  return (sum - 4.0 * c) / (h * h);
}

/// Bicomplex Laplacian: the planar Laplacian of u1 at (x1, y1) on e1 and of
/// u2 at (x2, y2) on e2.
inline Hyperbolic bc_laplacian(const HyperbolicFnPair& u, const Bicomplex& zeta,
                               double h = kDefaultLaplacianStep) {
  return {planar_laplacian(u, 1, zeta.zeta1().real(), zeta.zeta1().imag(), h),
          planar_laplacian(u, 2, zeta.zeta2().real(), zeta.zeta2().imag(), h)};
}

inline Hyperbolic bc_laplacian(const BCHoloFn& F, Part part, const Bicomplex& zeta,
                               double h = kDefaultLaplacianStep) {
  return bc_laplacian(as_hyperbolic_fn(F, part), zeta, h);
}

struct LaplacianReport {
  Bicomplex point;
  Hyperbolic residual;
  double h = 0.0;
  bool verdict = false;
};

inline LaplacianReport laplacian_report(const HyperbolicFnPair& u, const Bicomplex& zeta, double h,
                                        double tol) {
  const Hyperbolic r = bc_laplacian(u, zeta, h);
  return {zeta, r, h, std::abs(r.eta1) <= tol && std::abs(r.eta2) <= tol};
}

/// 4th-order central difference of component k along x (axis 0) or y (axis 1).
inline double partial(const HyperbolicFnPair& u, int k, int axis, double x, double y,
                      double h = kDefaultPartialStep) {
  auto f = [&](double s) { return axis == 0 ? u.component(k, x + s, y) : u.component(k, x, y + s); };
  return (8.0 * (f(h) - f(-h)) - (f(2.0 * h) - f(-2.0 * h))) / (12.0 * h);
}

/// Per-node Laplacian residuals of component k over its grid.
inline std::vector<double> component_residuals(const HyperbolicFnPair& u, int k, const PlanarGrid& grid,
                                               double h) {
  std::vector<double> out(grid.size());
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const Point p = grid.point(n);
    out[n] = planar_laplacian(u, k, p.x, p.y, h);
  }
  return out;
}

struct HarmonicityReport {
  Hyperbolic max_residual;          ///< max |Laplacian| per component
  std::array<Point, 2> worst_point; ///< where each maximum occurs
  double h = 0.0;
  double tol = 0.0;
  bool component1 = false;
  bool component2 = false;
  bool verdict = false;             ///< both components pass
};

/// Harmonic iff the Laplacian vanishes in both components at once.
inline HarmonicityReport is_bc_harmonic(const HyperbolicFnPair& u, const GridSpec& grid,
                                        double h = kDefaultLaplacianStep, double tol = 1e-4) {
  HarmonicityReport rep;
  rep.h = h;
  rep.tol = tol;
  for (int k = 1; k <= 2; ++k) {
    const PlanarGrid& g = grid.component(k);
    const auto res = component_residuals(u, k, g, h);
    double worst = -1.0;
    Point where{};
    for (std::size_t n = 0; n < res.size(); ++n) {
      const double a = std::abs(res[n]);
      if (!(a <= worst)) {
        worst = a;
        where = g.point(n);
      }
    }
    (k == 1 ? rep.max_residual.eta1 : rep.max_residual.eta2) = worst;
    rep.worst_point[static_cast<std::size_t>(k - 1)] = where;
    (k == 1 ? rep.component1 : rep.component2) = worst <= tol;
  }
  rep.verdict = rep.component1 && rep.component2;
  return rep;
}

enum class PathOrder { VerticalFirst, HorizontalFirst };

struct Basepoints {
  Point p1;
  Point p2;

  const Point& component(int k) const { return k == 1 ? p1 : p2; }
};

/// Optional harmonicity certification run before building a conjugate.
struct Certification {
  GridSpec grid;
  double h = kDefaultLaplacianStep;
  double tol = 1e-4;
};

/// Harmonic conjugate u* of each component, normalized to vanish at the
/// basepoint, realized as the line integral of (-u_y dx + u_x dy) along an
/// axis-aligned path.
class ConjugateFn {
 public:
  ConjugateFn(HyperbolicFnPair base, Basepoints bp, double partial_step = kDefaultPartialStep)
      : base_(std::move(base)), bp_(bp), h_(partial_step) {
    for (int k = 1; k <= 2; ++k) {
      const Point& p = bp_.component(k);
      if (!base_.domain().component(k).contains(p.x, p.y)) {
        throw Error(ErrorKind::OutOfDomain, "basepoint " + std::to_string(k) + " is outside the region");
      }
    }
  }

  const HyperbolicFnPair& base() const { return base_; }
  const Basepoints& basepoints() const { return bp_; }

  /// u_k*(x, y). Vertical-first goes up from the basepoint and then across.
  double value(int k, double x, double y, PathOrder order = PathOrder::VerticalFirst) const {
    if (!base_.domain().component(k).contains(x, y)) {
      throw Error(ErrorKind::OutOfDomain, "conjugate evaluated outside omega" + std::to_string(k));
    }
    const Point& b = bp_.component(k);
    auto ux = [&](double sx, double sy) { return partial(base_, k, 0, sx, sy, h_); };
    auto uy = [&](double sx, double sy) { return partial(base_, k, 1, sx, sy, h_); };
    if (order == PathOrder::VerticalFirst) {
      return segment([&](double s) { return ux(b.x, s); }, b.y, y) -
             segment([&](double s) { return uy(s, y); }, b.x, x);
    }
    return segment([&](double s) { return ux(x, s); }, b.y, y) -
           segment([&](double s) { return uy(s, b.y); }, b.x, x);
  }

  Hyperbolic operator()(const Bicomplex& zeta) const {
    return {value(1, zeta.zeta1().real(), zeta.zeta1().imag()),
            value(2, zeta.zeta2().real(), zeta.zeta2().imag())};
  }

  /// The conjugate as a hyperbolic function pair on the same region.
  HyperbolicFnPair as_pair() const {
    auto self = *this;
    return HyperbolicFnPair([self](double x, double y) { return self.value(1, x, y); },
                            [self](double x, double y) { return self.value(2, x, y); }, base_.domain());
  }

  /// Composite 16-point Gauss–Legendre with at least 8 panels per unit length.
  template <class F>
  static double segment(F&& f, double a, double b) {
    if (a == b) return 0.0;
    const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil(8.0 * std::abs(b - a))));
    return quad::gauss_legendre_16().integrate(f, a, b, panels);
  }

 private:
  HyperbolicFnPair base_;
  Basepoints bp_;
  double h_;
};

inline ConjugateFn harmonic_conjugate(const HyperbolicFnPair& u, const Basepoints& bp,
                                      const std::optional<Certification>& certify = std::nullopt,
                                      double partial_step = kDefaultPartialStep) {
  if (certify) {
    const auto rep = is_bc_harmonic(u, certify->grid, certify->h, certify->tol);
    if (!rep.verdict) {
      throw Error(ErrorKind::NotHarmonic, "Laplacian residual " + expr::format_idempotent(rep.max_residual) +
                                              " exceeds " + expr::format_number(certify->tol));
    }
  }
  return ConjugateFn(u, bp, partial_step);
}

/// F(zeta) = [u1 e1 + u2 e2] + i [u1* e1 + u2* e2], holomorphic with H-Re[F] = u.
class HolomorphicFromHyperbolic {
 public:
  explicit HolomorphicFromHyperbolic(ConjugateFn conj) : conj_(std::move(conj)) {}

  Bicomplex operator()(const Bicomplex& zeta) const {
    const Hyperbolic re = conj_.base()(zeta);
    const Hyperbolic im = conj_(zeta);
    return Bicomplex::idempotent({re.eta1, im.eta1}, {re.eta2, im.eta2});
  }

  const HyperbolicFnPair& real_part() const { return conj_.base(); }
  const ConjugateFn& conjugate() const { return conj_; }

 private:
  ConjugateFn conj_;
};

inline HolomorphicFromHyperbolic holomorphic_from_hyperbolic(
    const HyperbolicFnPair& u, const Basepoints& bp, const std::optional<Certification>& certify = std::nullopt) {
  return HolomorphicFromHyperbolic(harmonic_conjugate(u, bp, certify));
}

/// Max |u_x - u*_y| and |u_y + u*_x| per component over the grid.
inline Hyperbolic cauchy_riemann_residual(const ConjugateFn& conj, const GridSpec& grid,
                                          double h = kDefaultPartialStep) {
  const HyperbolicFnPair v = conj.as_pair();
  const HyperbolicFnPair& u = conj.base();
  Hyperbolic out{0.0, 0.0};
  for (int k = 1; k <= 2; ++k) {
    const PlanarGrid& g = grid.component(k);
    double worst = 0.0;
    for (std::size_t n = 0; n < g.size(); ++n) {
      const Point p = g.point(n);
      const double r1 = partial(u, k, 0, p.x, p.y, h) - partial(v, k, 1, p.x, p.y, h);
      const double r2 = partial(u, k, 1, p.x, p.y, h) + partial(v, k, 0, p.x, p.y, h);
      worst = std::max({worst, std::abs(r1), std::abs(r2)});
    }
    (k == 1 ? out.eta1 : out.eta2) = worst;
  }
  return out;
}

/// Max deviation of (D - mean D) per component, where D is the difference of
/// two conjugate functions; a deviation near zero means D is constant.
inline Hyperbolic max_deviation_from_constant(const HyperbolicFnPair& a, const HyperbolicFnPair& b,
                                              const GridSpec& grid) {
  Hyperbolic out{0.0, 0.0};
  for (int k = 1; k <= 2; ++k) {
    const PlanarGrid& g = grid.component(k);
    std::vector<double> d(g.size());
    double mean = 0.0;
    for (std::size_t n = 0; n < g.size(); ++n) {
      const Point p = g.point(n);
      d[n] = a.component(k, p.x, p.y) - b.component(k, p.x, p.y);
      mean += d[n];
    }
    mean /= static_cast<double>(g.size());
    double worst = 0.0;
    for (double v : d) worst = std::max(worst, std::abs(v - mean));
    (k == 1 ? out.eta1 : out.eta2) = worst;
  }
  return out;
}

/// Two conjugates normalized at different basepoints differ by a hyperbolic
/// constant; returns how far their difference strays from constant.
inline Hyperbolic conjugate_uniqueness_check(const HyperbolicFnPair& u, const Basepoints& a,
                                             const Basepoints& b, const GridSpec& grid) {
  return max_deviation_from_constant(ConjugateFn(u, a).as_pair(), ConjugateFn(u, b).as_pair(), grid);
}

}  // namespace bicomplex
