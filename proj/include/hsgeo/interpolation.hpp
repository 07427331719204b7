#pragma once

#include <utility>
#include <vector>

#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Piecewise quintic Hermite interpolant of grid data from nodal values,
/// slopes and curvatures; cells flagged in `cubic_cells` use the cubic
/// Hermite form on values and slopes only (where a slope limiter acted).
/// Periodic grids wrap; on a line grid, queries outside the window return
/// the end value with zero slope (callers decide whether that is valid).
class HermiteInterpolant {
 public:
  /// Slopes and curvatures from the finite-difference derivatives.
  explicit HermiteInterpolant(const GridFunction& values);
  HermiteInterpolant(const Grid& grid, std::vector<double> values, std::vector<double> slopes,
                     std::vector<double> curvatures, std::vector<char> cubic_cells = {});

  double operator()(double x) const { return eval(x).first; }
  double derivative(double x) const { return eval(x).second; }
  /// Value and slope at x.
  std::pair<double, double> eval(double x) const;

  const Grid& grid() const noexcept { return grid_; }

 private:
  Grid grid_;
  std::vector<double> y_;
  std::vector<double> m_;
  std::vector<double> c_;
  std::vector<char> cubic_;
};

/// Fritsch-Carlson slope limiter on data (y, m). On periodic grids the
/// wrap cell compares y[0] + lift with y[n-1] (lift = 2*pi for circle
/// lifts). Returns the indices of nodes whose slope changed.
std::vector<std::size_t> fritsch_carlson(const Grid& grid, const std::vector<double>& y,
                                         std::vector<double>& m, double lift);

}  // namespace hsgeo
