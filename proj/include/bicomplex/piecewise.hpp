#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bicomplex/error.hpp"
#include "bicomplex/expr.hpp"

namespace bicomplex::expr {

/// Piecewise real boundary function u(t): piece k lives on the open interval
/// between breakpoints k-1 and k (unbounded at both ends). Each piece must
/// be expressed in the single variable `t`.
class PiecewiseSpec {
 public:
  PiecewiseSpec(std::vector<double> breakpoints, std::vector<Expr> pieces,
                std::optional<double> bound = std::nullopt)
      : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (pieces_.size() != breakpoints_.size() + 1) {
      throw Error(ErrorKind::InvalidArgument, "need exactly one more piece than breakpoints");
    }
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
      if (!std::isfinite(breakpoints_[k])) throw Error(ErrorKind::InvalidArgument, "breakpoints must be finite");
      if (k > 0 && !(breakpoints_[k - 1] < breakpoints_[k])) {
        throw Error(ErrorKind::InvalidArgument, "breakpoints must be strictly increasing");
      }
    }
    for (const auto& p : pieces_) {
      if (p.variables().size() > 1 || (p.variables().size() == 1 && p.variables()[0] != "t")) {
        throw Error(ErrorKind::InvalidArgument, "boundary pieces must use the single variable 't'");
      }
    }
    const double sup = sampled_supremum();
    if (bound) {
      if (!(*bound > 0.0) || !std::isfinite(*bound)) {
        throw Error(ErrorKind::InvalidArgument, "declared bound must be positive and finite");
      }
      if (sup > *bound) {
        throw Error(ErrorKind::InvalidArgument,
                    "boundary data exceeds its declared bound: sampled " + format_number(sup));
      }
      bound_ = *bound;
    } else {
      bound_ = sup > 0.0 ? sup : 1.0;
    }
  }

  /// Parses piece sources in `t`. A single piece with several breakpoints is
  /// reused on every interval.
  static PiecewiseSpec parse(const std::vector<std::string>& sources, std::vector<double> breakpoints,
                             std::optional<double> bound = std::nullopt) {
    if (sources.empty()) throw Error(ErrorKind::InvalidArgument, "no boundary pieces given");
    std::vector<Expr> pieces;
    for (const auto& s : sources) pieces.push_back(expr::parse(s, {"t"}));
    if (pieces.size() == 1 && !breakpoints.empty()) pieces.resize(breakpoints.size() + 1, pieces.front());
    return PiecewiseSpec(std::move(breakpoints), std::move(pieces), bound);
  }

  static PiecewiseSpec constant(double value) {
    return PiecewiseSpec({}, {expr::parse(format_number(value), {"t"})});
  }

  /// -1 for t < 0 and 1 for t > 0.
  static PiecewiseSpec sign_step() { return parse({"-1", "1"}, {0.0}, 1.0); }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<Expr>& pieces() const { return pieces_; }
  double bound() const { return bound_; }

  /// Value of the piece at t; at a breakpoint, the mean of the two one-sided
  /// limits (taken as the adjacent pieces evaluated at the breakpoint).
  double operator()(double t) const {
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto k = static_cast<std::size_t>(it - breakpoints_.begin());
    if (it != breakpoints_.end() && *it == t) {
      return 0.5 * (eval_piece(k, t) + eval_piece(k + 1, t));
    }
    return eval_piece(k, t);
  }

  double eval_piece(std::size_t k, double t) const { return eval_real(pieces_[k], {t}); }

  /// True when t is not a breakpoint.
  bool is_continuity_point(double t) const {
    return !std::binary_search(breakpoints_.begin(), breakpoints_.end(), t);
  }

 private:
  double sampled_supremum() const {
    double sup = 0.0;
    auto probe = [&](std::size_t k, double t) { sup = std::max(sup, std::abs(eval_piece(k, t))); };
    const std::size_t n = pieces_.size();
    for (std::size_t k = 0; k < n; ++k) {
      const bool left_open = k == 0;
      const bool right_open = k + 1 == n;
      const double a = left_open ? 0.0 : breakpoints_[k - 1];
      const double b = right_open ? 0.0 : breakpoints_[k];
      if (!left_open && !right_open) {
        for (int s = 0; s <= 32; ++s) probe(k, a + (b - a) * s / 32.0);
        continue;
      }
      const double anchor = left_open ? (right_open ? 0.0 : b) : a;
      const double dir = left_open ? -1.0 : 1.0;
      for (int e = -3; e <= 8; ++e) {
        const double d = std::pow(10.0, e);
        probe(k, anchor + dir * d);
        if (left_open && right_open) probe(k, anchor - dir * d);
      }
      if (!(left_open && right_open)) probe(k, anchor);
      else probe(k, 0.0);
    }
    return sup;
  }

  std::vector<double> breakpoints_;
  std::vector<Expr> pieces_;
  double bound_ = 1.0;
};

inline double eval_piecewise(const PiecewiseSpec& spec, double t) { return spec(t); }

}  // namespace bicomplex::expr
