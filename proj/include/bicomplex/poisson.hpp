#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <vector>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/piecewise.hpp"
#include "bicomplex/quadrature.hpp"

namespace bicomplex {

/// P(x, y) = (1/pi) y / (x^2 + y^2).
inline double complex_poisson_kernel(double x, double y) {
  if (x == 0.0 && y == 0.0) throw Error(ErrorKind::DegenerateKernel, "Poisson kernel at the origin");
  return y / (std::numbers::pi * (x * x + y * y));
}

/// P(x1, y1) e1 + P(x2, y2) e2.
inline Hyperbolic bc_poisson_kernel(double x1, double y1, double x2, double y2) {
  return {complex_poisson_kernel(x1, y1), complex_poisson_kernel(x2, y2)};
}

/// A point (x1 + i y1) e1 + (x2 + i y2) e2 of the bicomplex upper half-plane.
struct UpperHalfPoint {
  double x1, y1, x2, y2;

  UpperHalfPoint(double x1_, double y1_, double x2_, double y2_) : x1(x1_), y1(y1_), x2(x2_), y2(y2_) {
    if (!(y1 > 0.0) || !(y2 > 0.0)) {
      throw Error(ErrorKind::OutOfHalfPlane, "both imaginary parts must be positive");
    }
  }

  /// Same planar point in both components, i.e. a complex input.
  static UpperHalfPoint diagonal(double x, double y) { return {x, y, x, y}; }

  Bicomplex to_bicomplex() const { return Bicomplex::from_components(x1, y1, x2, y2); }
};

inline Hyperbolic bc_poisson_kernel(const UpperHalfPoint& p) { return bc_poisson_kernel(p.x1, p.y1, p.x2, p.y2); }

/// Boundary data u1(t) e1 + u2(t) e2, each piecewise continuous and bounded.
struct BCBoundaryData {
  expr::PiecewiseSpec b1;
  expr::PiecewiseSpec b2;

  const expr::PiecewiseSpec& component(int k) const { return k == 1 ? b1 : b2; }
  Hyperbolic operator()(double t1, double t2) const { return {b1(t1), b2(t2)}; }
};

struct QuadratureConfig {
  std::size_t nodes_per_panel = 32;
  std::size_t panels = 64;
  double abs_tol = 1e-10;
  /// Panel-count doublings allowed while chasing abs_tol.
  int max_refinements = 8;

  void validate() const {
    if (nodes_per_panel == 0 || panels == 0 || !(abs_tol > 0.0) || max_refinements < 0) {
      throw Error(ErrorKind::InvalidArgument, "quadrature settings must be positive");
    }
  }
};

namespace detail {

inline const quad::GaussLegendre& cached_rule(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<quad::GaussLegendre>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<quad::GaussLegendre>(n);
  return *slot;
}

/// (1/pi) * integral over (-pi/2, pi/2) of u(x + y tan(theta)), with the
/// range cut at the preimages of the breakpoints so each piece is integrated
/// separately, and `panels` spread over the cuts by length.
inline double theta_quadrature(const expr::PiecewiseSpec& u, double x, double y, std::size_t panels,
                               const quad::GaussLegendre& rule) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const auto& bps = u.breakpoints();
  std::vector<double> cuts;
  cuts.reserve(bps.size() + 2);
  cuts.push_back(-half_pi);
  for (double s : bps) cuts.push_back(std::atan((s - x) / y));
  cuts.push_back(half_pi);

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double b = cuts[k + 1];
    if (!(b > a)) continue;
    const auto n = static_cast<std::size_t>(
        std::max(1.0, std::ceil(static_cast<double>(panels) * (b - a) / std::numbers::pi)));
    total += rule.integrate([&](double theta) { return u.eval_piece(k, x + y * std::tan(theta)); }, a, b, n);
  }
  return total / std::numbers::pi;
}

}  // namespace detail

/// Harmonic extension of real boundary data to the upper half-plane:
/// u(x, y) = integral of P(x - t, y) u(t) dt, through t = x + y tan(theta).
inline double complex_poisson_integral(const expr::PiecewiseSpec& u, double x, double y,
                                       const QuadratureConfig& q = {}) {
  q.validate();
  if (!(y > 0.0)) throw Error(ErrorKind::OutOfHalfPlane, "y must be positive");
  const auto& rule = detail::cached_rule(q.nodes_per_panel);
  std::size_t panels = q.panels;
  double coarse = detail::theta_quadrature(u, x, y, panels, rule);
  for (int r = 0; r < q.max_refinements; ++r) {
    panels *= 2;
    const double fine = detail::theta_quadrature(u, x, y, panels, rule);
    if (std::abs(fine - coarse) <= q.abs_tol) return fine;
    coarse = fine;
  }
  return coarse;
}

/// u1(x1, y1) e1 + u2(x2, y2) e2: the bicomplex Poisson integral, evaluated
/// one idempotent component at a time.
inline Hyperbolic poisson_extend(const BCBoundaryData& data, const UpperHalfPoint& p,
                                 const QuadratureConfig& q = {}) {
  return {complex_poisson_integral(data.b1, p.x1, p.y1, q), complex_poisson_integral(data.b2, p.x2, p.y2, q)};
}

struct TraceReport {
  std::vector<double> heights;
  std::vector<Hyperbolic> values;
  std::vector<Hyperbolic> errors;  ///< |extension - boundary value| per component
  Hyperbolic boundary;
  bool monotone = false;
  double tol = 0.0;
  bool verdict = false;
};

/// Approaches the boundary point t1 e1 + t2 e2 vertically through the given
/// heights and reports how the extension closes in on the boundary value.
inline TraceReport extension_trace_check(const BCBoundaryData& data, double t1, double t2,
                                         const std::vector<double>& heights, double tol,
                                         const QuadratureConfig& q = {}) {
  TraceReport rep;
  rep.heights = heights;
  rep.tol = tol;
  rep.boundary = data(t1, t2);
  rep.monotone = true;
  for (std::size_t n = 0; n < heights.size(); ++n) {
    if (n > 0 && !(heights[n] < heights[n - 1])) {
      throw Error(ErrorKind::InvalidArgument, "trace heights must decrease");
    }
    const Hyperbolic v = poisson_extend(data, UpperHalfPoint(t1, heights[n], t2, heights[n]), q);
    const Hyperbolic e = abs_components(v - rep.boundary);
    if (n > 0) {
      const Hyperbolic prev = rep.errors.back();
      constexpr double slack = 1e-13;
      if (e.eta1 > prev.eta1 + slack || e.eta2 > prev.eta2 + slack) rep.monotone = false;
    }
    rep.values.push_back(v);
    rep.errors.push_back(e);
  }
  rep.verdict = rep.monotone && !rep.errors.empty() && rep.errors.back().eta1 <= tol &&
                rep.errors.back().eta2 <= tol;
  return rep;
}

/// (2/pi) atan(x1/y1) e1 + (2/pi) atan(x2/y2) e2.
inline Hyperbolic sign_step_closed_form(const UpperHalfPoint& p) {
  return {2.0 / std::numbers::pi * std::atan(p.x1 / p.y1), 2.0 / std::numbers::pi * std::atan(p.x2 / p.y2)};
}

inline BCBoundaryData sign_step_data() {
  return {expr::PiecewiseSpec::sign_step(), expr::PiecewiseSpec::sign_step()};
}

inline constexpr double kRepresentationTolerance = 1e-8;

/// The closed form of the sign-step extension, after confirming that the
/// Poisson quadrature reproduces it at p.
inline Hyperbolic represent_sign_step(const UpperHalfPoint& p, const QuadratureConfig& q = {},
                                     double tol = kRepresentationTolerance) {
  const Hyperbolic closed = sign_step_closed_form(p);
  const Hyperbolic numeric = poisson_extend(sign_step_data(), p, q);
  const Hyperbolic diff = abs_components(closed - numeric);
  if (!(diff.eta1 <= tol && diff.eta2 <= tol)) {
    throw Error(ErrorKind::RepresentationMismatch,
                "quadrature and closed form differ by " + expr::format_idempotent(diff));
  }
  return closed;
}

}  // namespace bicomplex
