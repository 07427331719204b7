#include "hsgeo/grid.hpp"

#include <cmath>
#include <string>

#include "hsgeo/error.hpp"

namespace hsgeo {

Grid Grid::line(std::size_t n, double x_min, double x_max) {
  if (n < 2) throw Error(ErrorKind::GridTooSmall, "line grid needs at least 2 nodes");
  if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    throw Error(ErrorKind::InvalidArgument, "line grid window must satisfy x_min < x_max");
  }
  double h = (x_max - x_min) / static_cast<double>(n - 1);
  return Grid(GridKind::Line, n, x_min, x_max, h);
}

Grid Grid::periodic(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::GridTooSmall, "periodic grid needs at least 3 nodes");
  double h = kPeriod / static_cast<double>(n);
  return Grid(GridKind::Periodic, n, 0.0, static_cast<double>(n - 1) * h, h);
}

double Grid::length() const noexcept {
  return is_periodic() ? kPeriod : x_max_ - x_min_;
}

std::vector<double> Grid::nodes() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = node(i);
  return out;
}

}  // namespace hsgeo
