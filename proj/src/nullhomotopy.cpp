#include "fiberkit/nullhomotopy.hpp"

#include <cmath>
#include <numbers>
#include <queue>
#include <string>

namespace fiberkit {

namespace {
constexpr double kPlaquetteTol = 1e-9;
}

CellGrid::CellGrid(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 2 || cols < 3) throw std::invalid_argument("cell grid needs rows >= 2 and cols >= 3");
  const double pi = std::numbers::pi;
  const double dphi = 2.0 * pi / cols;
  weights_.reserve(rows);
  for (int i = 0; i < rows; ++i) {
    const double top = pi * i / rows;
    const double bottom = pi * (i + 1) / rows;
    weights_.push_back(dphi * (std::cos(top) - std::cos(bottom)));
  }
}

S2Pointd CellGrid::center(int cell) const {
  const double pi = std::numbers::pi;
  const int i = cell / cols_;
  const int j = cell % cols_;
  const double theta = pi * (i + 0.5) / rows_;
  const double phi = 2.0 * pi * (j + 0.5) / cols_;
  return S2Pointd::normalized(
      Vec3<double>(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)));
}

std::vector<int> CellGrid::neighbors(int cell) const {
  const int i = cell / cols_;
  const int j = cell % cols_;
  std::vector<int> out{index(i, j - 1), index(i, j + 1)};
  if (i > 0) out.push_back(index(i - 1, j));
  if (i + 1 < rows_) out.push_back(index(i + 1, j));
  return out;
}

std::vector<std::vector<int>> CellGrid::plaquettes() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i + 1 < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      out.push_back({index(i, j), index(i, j + 1), index(i + 1, j + 1), index(i + 1, j)});
  for (int i : {0, rows_ - 1}) {
    std::vector<int> ring;
    for (int j = 0; j < cols_; ++j) ring.push_back(index(i, j));
    out.push_back(std::move(ring));
  }
  return out;
}

SphereToCircleMap::SphereToCircleMap(CellGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size())
    throw std::invalid_argument("value count does not match the cell grid");
  for (double& v : values_) v = wrap01(v);
}

SphereToCircleMap SphereToCircleMap::from_function(const CellGrid& grid,
                                                   const std::function<double(const S2Pointd&)>& f) {
  std::vector<double> values(grid.size());
  for (int c = 0; c < grid.size(); ++c) values[c] = f(grid.center(c));
  return SphereToCircleMap(grid, std::move(values));
}

SphereToCircleMap SphereToCircleMap::constant(const CellGrid& grid, double c) {
  return SphereToCircleMap(grid, std::vector<double>(grid.size(), c));
}

LiftedMap::LiftedMap(CellGrid grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != grid_.size())
    throw std::invalid_argument("value count does not match the cell grid");
}

SphereToCircleMap LiftedMap::project() const { return SphereToCircleMap(grid_, values_); }

LiftedMap LiftedMap::shifted(double c) const {
  std::vector<double> v = values_;
  for (double& x : v) x += c;
  return LiftedMap(grid_, std::move(v));
}

double wrapped_difference(double a, double b) {
  double d = wrap01(b - a);
  return d >= 0.5 ? d - 1.0 : d;
}

LiftedMap lift(const SphereToCircleMap& f, int seed_cell) {
  const CellGrid& grid = f.grid();
  const auto& v = f.values();
  if (seed_cell < 0 || seed_cell >= grid.size()) throw std::invalid_argument("seed cell out of range");

  for (int c = 0; c < grid.size(); ++c) {
    for (int n : grid.neighbors(c)) {
      if (std::abs(wrapped_difference(v[c], v[n])) >= 0.5)
        throw NonLiftable("adjacent cells " + std::to_string(c) + " and " + std::to_string(n) +
                          " differ by half a turn or more");
    }
  }
  for (const auto& cycle : grid.plaquettes()) {
    double winding = 0.0;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      winding += wrapped_difference(v[cycle[k]], v[cycle[(k + 1) % cycle.size()]]);
    if (std::abs(winding) > kPlaquetteTol)
      throw NonLiftable("cells around cell " + std::to_string(cycle.front()) + " wind " +
                        std::to_string(std::lround(winding)) + " times");
  }

  std::vector<double> lifted(grid.size());
  std::vector<bool> seen(grid.size(), false);
  std::queue<int> queue;
  lifted[seed_cell] = v[seed_cell];
  seen[seed_cell] = true;
  queue.push(seed_cell);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop();
    for (int n : grid.neighbors(c)) {
      if (seen[n]) continue;
      lifted[n] = lifted[c] + wrapped_difference(v[c], v[n]);
      seen[n] = true;
      queue.push(n);
    }
  }
  return LiftedMap(grid, std::move(lifted));
}

double average(const LiftedMap& g) {
  const CellGrid& grid = g.grid();
  double sum = 0.0;
  double total = 0.0;
  for (int c = 0; c < grid.size(); ++c) {
    sum += grid.solid_angle(c) * g.values()[c];
    total += grid.solid_angle(c);
  }
  return sum / total;
}

SphereToCircleMap homotopy_to_constant(const SphereToCircleMap& f, double t, int seed_cell) {
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("homotopy parameter must lie in [0, 1]");
  const LiftedMap g = lift(f, seed_cell);
  const double a = average(g);
  std::vector<double> out(g.values().size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = (1.0 - t) * g.values()[c] + t * a;
  return SphereToCircleMap(f.grid(), std::move(out));
}

}  // namespace fiberkit
