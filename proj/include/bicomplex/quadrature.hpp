#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include "bicomplex/error.hpp"

namespace bicomplex::quad {

/// n-point Gauss–Legendre rule on [-1, 1]; nodes from Newton iteration on
/// P_n started at the Chebyshev-like guess cos(pi (k - 1/4) / (n + 1/2)).
class GaussLegendre {
 public:
  explicit GaussLegendre(std::size_t n) : nodes_(n), weights_(n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "quadrature needs at least one node");
    if (n == 1) {
      nodes_[0] = 0.0;
      weights_[0] = 2.0;
      return;
    }
    const std::size_t half = (n + 1) / 2;
    for (std::size_t k = 0; k < half; ++k) {
      double x = std::cos(std::numbers::pi * (static_cast<double>(k) + 0.75) / (static_cast<double>(n) + 0.5));
      double dp = 1.0;
      for (int iter = 0; iter < 100; ++iter) {
        const auto [pn, dpn] = legendre(n, x);
        dp = dpn;
        const double dx = pn / dpn;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      dp = legendre(n, x).second;
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      nodes_[k] = -x;
      weights_[k] = w;
      nodes_[n - 1 - k] = x;
      weights_[n - 1 - k] = w;
    }
    if (n % 2 == 1) nodes_[n / 2] = 0.0;
  }

  std::size_t size() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Single panel on [a, b].
  template <class F>
  auto integrate(F&& f, double a, double b) const {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    decltype(f(mid)) sum{};
    for (std::size_t k = 0; k < nodes_.size(); ++k) sum = sum + weights_[k] * f(mid + half * nodes_[k]);
    return half * sum;
  }

  /// `panels` equal panels on [a, b].
  template <class F>
  auto integrate(F&& f, double a, double b, std::size_t panels) const {
    const double width = (b - a) / static_cast<double>(panels);
    decltype(f(a)) sum{};
    for (std::size_t p = 0; p < panels; ++p) {
      const double lo = a + width * static_cast<double>(p);
      const double hi = p + 1 == panels ? b : lo + width;
      sum = sum + integrate(f, lo, hi);
    }
    return sum;
  }

 private:
  /// (P_n(x), P_n'(x)) by the three-term recurrence.
  static std::pair<double, double> legendre(std::size_t n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t m = 2; m <= n; ++m) {
      const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / static_cast<double>(m);
      p0 = p1;
      p1 = p2;
    }
    return {p1, static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0)};
  }

  std::vector<double> nodes_;
  std::vector<double> weights_;
};

inline const GaussLegendre& gauss_legendre_16() {
  static const GaussLegendre rule(16);
  return rule;
}

inline const GaussLegendre& gauss_legendre_32() {
  static const GaussLegendre rule(32);
  return rule;
}

}  // namespace bicomplex::quad
