#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace hsgeo {

enum class GridKind {
  Line,      // uniform nodes on a truncation window [x_min, x_max] of the real line
  Periodic,  // uniform nodes on [0, 2*pi), last spacing wraps
};

/// Uniform 1-D grid. Nodes are x_min + i*h with the last line node pinned to
/// x_max, so a grid rebuilt from its first and last node (e.g. read back from
/// CSV) is identical node-for-node.
class Grid {
 public:
  static constexpr double kPeriod = 2.0 * std::numbers::pi;

  static Grid line(std::size_t n, double x_min, double x_max);
  static Grid periodic(std::size_t n);

  /// 2001 nodes on [-10, 10].
  static Grid default_line() { return line(2001, -10.0, 10.0); }
  /// 512 nodes on [0, 2*pi).
  static Grid default_periodic() { return periodic(512); }

  GridKind kind() const noexcept { return kind_; }
  bool is_periodic() const noexcept { return kind_ == GridKind::Periodic; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double x_min() const noexcept { return x_min_; }
  /// Last node (for periodic grids this is 2*pi - h).
  double x_max() const noexcept { return x_max_; }
  /// Window length: x_max - x_min on a line, 2*pi on a circle.
  double length() const noexcept;

  double node(std::size_t i) const noexcept {
    return i + 1 == n_ ? x_max_ : x_min_ + static_cast<double>(i) * h_;
  }
  std::vector<double> nodes() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  Grid(GridKind kind, std::size_t n, double x_min, double x_max, double h)
      : kind_(kind), n_(n), x_min_(x_min), x_max_(x_max), h_(h) {}

  GridKind kind_;
  std::size_t n_;
  double x_min_;
  double x_max_;
  double h_;
};

}  // namespace hsgeo
