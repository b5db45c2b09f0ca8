#pragma once

#include <cstddef>
#include <string>

#include "bicomplex/error.hpp"

namespace bicomplex {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Closed uniform grid [x_lo, x_hi] x [y_lo, y_hi] with nx * ny nodes.
struct PlanarGrid {
  double x_lo = 0.0, x_hi = 1.0;
  double y_lo = 0.0, y_hi = 1.0;
  std::size_t nx = 2, ny = 2;

  PlanarGrid() = default;
  PlanarGrid(double xl, double xh, double yl, double yh, std::size_t nx_, std::size_t ny_)
      : x_lo(xl), x_hi(xh), y_lo(yl), y_hi(yh), nx(nx_), ny(ny_) {
    validate();
  }

  void validate() const {
    if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw Error(ErrorKind::InvalidArgument, "grid ranges need lo < hi");
    if (nx < 2 || ny < 2) throw Error(ErrorKind::InvalidArgument, "grids need at least 2 nodes per axis");
  }

  std::size_t size() const { return nx * ny; }
  double dx() const { return (x_hi - x_lo) / static_cast<double>(nx - 1); }
  double dy() const { return (y_hi - y_lo) / static_cast<double>(ny - 1); }

  double x(std::size_t i) const { return i + 1 == nx ? x_hi : x_lo + dx() * static_cast<double>(i); }
  double y(std::size_t j) const { return j + 1 == ny ? y_hi : y_lo + dy() * static_cast<double>(j); }

  /// Row-major over y, then x: index = j * nx + i.
  Point point(std::size_t index) const { return {x(index % nx), y(index / nx)}; }
};

/// One planar grid per idempotent component. Node k of grid1 is paired with
/// node k of grid2 when a four-real-variable point is needed, which requires
/// equal node counts.
struct GridSpec {
  PlanarGrid grid1;
  PlanarGrid grid2;

  GridSpec() = default;
  GridSpec(PlanarGrid g1, PlanarGrid g2) : grid1(g1), grid2(g2) {}
  explicit GridSpec(PlanarGrid both) : grid1(both), grid2(both) {}

  const PlanarGrid& component(int k) const { return k == 1 ? grid1 : grid2; }

  bool paired() const { return grid1.nx == grid2.nx && grid1.ny == grid2.ny; }
};

}  // namespace bicomplex
