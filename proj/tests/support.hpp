#pragma once

// Shared helpers for the test suites: seeded generators and tolerance checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "bicomplex/algebra.hpp"

namespace bicomplex::fixtures {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240209);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex random_complex(double r = 10.0) { return {uniform(-r, r), uniform(-r, r)}; }

inline Bicomplex random_bicomplex(double r = 10.0) {
  return Bicomplex::idempotent(random_complex(r), random_complex(r));
}

/// Magnitude used as the reference for relative tolerances.
inline double scale(const Bicomplex& b) { return std::abs(b.zeta1()) + std::abs(b.zeta2()); }

inline double distance(const Bicomplex& a, const Bicomplex& b) {
  return std::max(std::abs(a.zeta1() - b.zeta1()), std::abs(a.zeta2() - b.zeta2()));
}

inline bool near(const Bicomplex& a, const Bicomplex& b, double abs_tol) { return distance(a, b) <= abs_tol; }

inline bool near(Hyperbolic a, Hyperbolic b, double abs_tol) {
  return std::abs(a.eta1 - b.eta1) <= abs_tol && std::abs(a.eta2 - b.eta2) <= abs_tol;
}

}  // namespace bicomplex::fixtures
