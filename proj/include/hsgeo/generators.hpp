#pragma once

#include <cstdint>
#include <random>

#include "hsgeo/diffeo.hpp"
#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Seeded source of random test data built from the bump family.
class DataGenerator {
 public:
  explicit DataGenerator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);

  /// Sum of `terms` bumps with amplitudes in [-amp, amp], centers in
  /// [-5, 5] and widths in [0.8, 3]. Compact, nonzero.
  GridFunction bump_field(const Grid& grid, int terms = 3, double amp = 1.0);
  /// Class-A diffeo x + f with f a bump sum scaled so that phi' >= min_slope.
  Diffeo bump_diffeo(const Grid& grid, double min_slope = 0.3);
  /// Trigonometric polynomial of degree <= 3 with zero mean.
  GridFunction trig_field(const Grid& grid, double amp = 1.0);
  /// Circle diffeo x + f, f trigonometric with zero mean, phi' >= min_slope.
  Diffeo trig_diffeo(const Grid& grid, double min_slope = 0.3);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hsgeo
