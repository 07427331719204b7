#include "hsgeo/generators.hpp"

#include <algorithm>
#include <cmath>

#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"

namespace hsgeo {

namespace {

// Scale f so that 1 + s f' >= min_slope.
GridFunction limit_slope(const GridFunction& f, double min_slope) {
  auto df = derivative(f);
  double m = *std::min_element(df.values().begin(), df.values().end());
  double s = m < -(1.0 - min_slope) ? (1.0 - min_slope) / -m : 1.0;
  return f * s;
}

}  // namespace

double DataGenerator::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

GridFunction DataGenerator::bump_field(const Grid& grid, int terms, double amp) {
  auto out = GridFunction::zero(grid);
  for (int j = 0; j < terms; ++j) {
    double a = uniform(-amp, amp);
    if (std::abs(a) < 0.1 * amp) a = std::copysign(0.1 * amp, a);
    FunctionSpec spec("bump", {{"amp", a}, {"center", uniform(-5.0, 5.0)},
                               {"width", uniform(0.8, 3.0)}});
    out += spec.sample(grid);
  }
  return out;
}

Diffeo DataGenerator::bump_diffeo(const Grid& grid, double min_slope) {
  return Diffeo::from_displacement(limit_slope(bump_field(grid, 3, 3.0), min_slope),
                                   GroupClass::A);
}

GridFunction DataGenerator::trig_field(const Grid& grid, double amp) {
  double c[3], s[3];
  for (int m = 0; m < 3; ++m) {
    c[m] = uniform(-amp, amp) / (m + 1);
    s[m] = uniform(-amp, amp) / (m + 1);
  }
  return GridFunction::sample(
      grid,
      [&](double x) {
        double v = 0.0;
        for (int m = 0; m < 3; ++m) v += c[m] * std::cos((m + 1) * x) + s[m] * std::sin((m + 1) * x);
        return v;
      },
      Decay::Periodic);
}

Diffeo DataGenerator::trig_diffeo(const Grid& grid, double min_slope) {
  return Diffeo::from_displacement(limit_slope(trig_field(grid), min_slope),
                                   GroupClass::PeriodicLift);
}

}  // namespace hsgeo
