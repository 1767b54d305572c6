#pragma once

// Canonical deformation of maps S^2 -> S^1 = R/Z to constants: lift to R,
// average over the sphere, and interpolate linearly to the average.

#include "fiberkit/errors.hpp"
#include "fiberkit/rotation.hpp"

#include <functional>
#include <vector>

namespace fiberkit {

/// rows x cols latitude-longitude cells; values live at cell centers and are
/// weighted by exact cell solid angles (summing to 4 pi).
class CellGrid {
 public:
  CellGrid(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return rows_ * cols_; }
  int index(int i, int j) const { return i * cols_ + ((j % cols_) + cols_) % cols_; }

  S2Pointd center(int cell) const;
  double solid_angle(int cell) const { return weights_[cell / cols_]; }

  /// Cells sharing an edge (longitude wraps; no neighbors across the poles).
  std::vector<int> neighbors(int cell) const;

  /// Closed cycles of cells whose wrapped differences must sum to zero for a
  /// lift to exist: the 4-cell loop around every interior grid vertex plus
  /// the ring of cells around each pole.
  std::vector<std::vector<int>> plaquettes() const;

  bool operator==(const CellGrid& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> weights_;
};

/// Map S^2 -> R/Z sampled at cell centers, values in [0, 1).
class SphereToCircleMap {
 public:
  SphereToCircleMap(CellGrid grid, std::vector<double> values);

  /// Samples f at cell centers and reduces mod 1.
  static SphereToCircleMap from_function(const CellGrid& grid, const std::function<double(const S2Pointd&)>& f);
  static SphereToCircleMap constant(const CellGrid& grid, double c);

  const CellGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

 private:
  CellGrid grid_;
  std::vector<double> values_;
};

/// Real-valued map on the same grid.
class LiftedMap {
 public:
  LiftedMap(CellGrid grid, std::vector<double> values);

  const CellGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }

  SphereToCircleMap project() const;
  LiftedMap shifted(double c) const;

 private:
  CellGrid grid_;
  std::vector<double> values_;
};

/// Representative of b - a in [-1/2, 1/2).
double wrapped_difference(double a, double b);

/// Breadth-first unwrapping from the seed cell: each newly reached cell takes
/// the representative nearest its already-lifted neighbor. Throws NonLiftable
/// if adjacent values differ by 1/2 or more mod 1 or a plaquette winds.
LiftedMap lift(const SphereToCircleMap& f, int seed_cell = 0);

/// (1 / 4 pi) * integral of g over S^2, by solid-angle quadrature.
double average(const LiftedMap& g);

/// Projection of (1 - t) f~ + t A(f~). Independent of the lift because
/// integer shifts of f~ shift both endpoints equally.
SphereToCircleMap homotopy_to_constant(const SphereToCircleMap& f, double t, int seed_cell = 0);

}  // namespace fiberkit
