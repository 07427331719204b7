#include "hsgeo/interpolation.hpp"

#include <cmath>

#include "hsgeo/funcspace.hpp"

namespace hsgeo {

HermiteInterpolant::HermiteInterpolant(const GridFunction& values)
    : grid_(values.grid()), y_(values.values().begin(), values.values().end()) {
  auto d = hsgeo::derivative(values);
  auto dd = second_derivative(values);
  m_.assign(d.values().begin(), d.values().end());
  c_.assign(dd.values().begin(), dd.values().end());
  cubic_.assign(y_.size(), 0);
}

HermiteInterpolant::HermiteInterpolant(const Grid& grid, std::vector<double> values,
                                       std::vector<double> slopes, std::vector<double> curvatures,
                                       std::vector<char> cubic_cells)
    : grid_(grid),
      y_(std::move(values)),
      m_(std::move(slopes)),
      c_(std::move(curvatures)),
      cubic_(std::move(cubic_cells)) {
  if (cubic_.empty()) cubic_.assign(y_.size(), 0);
  if (y_.size() != grid_.size() || m_.size() != grid_.size() || c_.size() != grid_.size() ||
      cubic_.size() != grid_.size()) {
    throw Error(ErrorKind::InvalidArgument, "interpolant data does not match grid");
  }
}

std::vector<std::size_t> fritsch_carlson(const Grid& grid, const std::vector<double>& y,
                                         std::vector<double>& m, double lift) {
  const std::size_t n = y.size();
  const double h = grid.spacing();
  const std::size_t cells = grid.is_periodic() ? n : n - 1;
  std::vector<double> orig = m;
  for (std::size_t i = 0; i < cells; ++i) {
    std::size_t j = (i + 1) % n;
    double yj = y[j] + (j == 0 ? lift : 0.0);
    double delta = (yj - y[i]) / h;
    if (delta == 0.0) {
      m[i] = 0.0;
      m[j] = 0.0;
      continue;
    }
    if (m[i] * delta < 0.0) m[i] = 0.0;
    if (m[j] * delta < 0.0) m[j] = 0.0;
    double a = m[i] / delta;
    double b = m[j] / delta;
    double r = a * a + b * b;
    if (r > 9.0) {
      double tau = 3.0 / std::sqrt(r);
      m[i] = tau * a * delta;
      m[j] = tau * b * delta;
    }
  }
  std::vector<std::size_t> changed;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i] != orig[i]) changed.push_back(i);
  }
  return changed;
}

std::pair<double, double> HermiteInterpolant::eval(double x) const {
  const std::size_t n = y_.size();
  const double h = grid_.spacing();
  std::size_t i;
  double s;
  if (grid_.is_periodic()) {
    double u = std::fmod(x - grid_.x_min(), Grid::kPeriod);
    if (u < 0.0) u += Grid::kPeriod;
    i = static_cast<std::size_t>(std::floor(u / h));
    if (i >= n) i = n - 1;
    s = u / h - static_cast<double>(i);
  } else {
    if (x <= grid_.x_min()) return {y_.front(), 0.0};
    if (x >= grid_.x_max()) return {y_.back(), 0.0};
    i = static_cast<std::size_t>(std::floor((x - grid_.x_min()) / h));
    if (i >= n - 1) i = n - 2;
    s = (x - grid_.node(i)) / h;
  }
  std::size_t j = (i + 1) % n;
  const double y0 = y_[i], y1 = y_[j], m0 = m_[i] * h, m1 = m_[j] * h;
  const double s2 = s * s, s3 = s2 * s;
  if (cubic_[i]) {
    double val = (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * m0 + (-2 * s3 + 3 * s2) * y1 +
                 (s3 - s2) * m1;
    double der = ((6 * s2 - 6 * s) * y0 + (3 * s2 - 4 * s + 1) * m0 + (-6 * s2 + 6 * s) * y1 +
                  (3 * s2 - 2 * s) * m1) /
                 h;
    return {val, der};
  }
  const double c0 = c_[i] * h * h, c1 = c_[j] * h * h;
  const double s4 = s3 * s, s5 = s4 * s;
  double val = (1 - 10 * s3 + 15 * s4 - 6 * s5) * y0 + (10 * s3 - 15 * s4 + 6 * s5) * y1 +
               (s - 6 * s3 + 8 * s4 - 3 * s5) * m0 + (-4 * s3 + 7 * s4 - 3 * s5) * m1 +
               0.5 * (s2 - 3 * s3 + 3 * s4 - s5) * c0 + 0.5 * (s3 - 2 * s4 + s5) * c1;
  double der = (-30 * s2 + 60 * s3 - 30 * s4) * (y0 - y1) +
               (1 - 18 * s2 + 32 * s3 - 15 * s4) * m0 + (-12 * s2 + 28 * s3 - 15 * s4) * m1 +
               0.5 * (2 * s - 9 * s2 + 12 * s3 - 5 * s4) * c0 +
               0.5 * (3 * s2 - 8 * s3 + 5 * s4) * c1;
  return {val, der / h};
}

}  // namespace hsgeo
