#include <cmath>

#include <gtest/gtest.h>

#include "hsgeo/funcspace.hpp"
#include "hsgeo/soliton.hpp"

namespace hsgeo {
namespace {

SolitonState pair_state() {
  SolitonState s;
  s.y = {0.0, 1.0};
  s.a = {1.0, -1.0};
  return s;
}

TEST(Soliton, TwoBodyRhs) {
  auto rhs = hamilton_rhs(pair_state());
  EXPECT_NEAR(rhs.da[0], 0.5, 1e-15);
  EXPECT_NEAR(rhs.da[1], -0.5, 1e-15);
  EXPECT_NEAR(rhs.dy[0], 0.0, 1e-15);
  EXPECT_NEAR(rhs.dy[1], -1.0, 1e-15);
  EXPECT_NEAR(soliton_energy(pair_state()), 0.5, 1e-15);
}

TEST(Soliton, Validation) {
  SolitonState s = pair_state();
  s.a[1] = 0.0;
  EXPECT_THROW(s.validate(), Error);
  s = pair_state();
  s.y = {1.0, 0.0};
  EXPECT_THROW(s.validate(), Error);
}

TEST(Soliton, ClosedFormMatchesRk4) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto s0 = random_soliton_state(100 + n, n, -2, 2, 0.5);
    if (soliton_blowup_time(s0) <= 1.2) continue;
    auto rk = soliton_rk4(s0, 1.0, 1e-3);
    auto cf = soliton_flow_closed_form(s0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(rk.y[i], cf.y[i], 1e-9);
      EXPECT_NEAR(rk.a[i], cf.a[i], 1e-9);
    }
    EXPECT_NEAR(soliton_energy(cf), soliton_energy(s0), 1e-12);
  }
}

TEST(Soliton, Blowup) {
  auto s = pair_state();
  double T = soliton_blowup_time(s);
  EXPECT_TRUE(std::isfinite(T));
  try {
    soliton_flow_closed_form(s, T);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SolitonBlowup);
  }
  EXPECT_NO_THROW(soliton_flow_closed_form(s, 0.99 * T));
}

TEST(Soliton, PartialSums) {
  auto S = partial_sums({1.0, 2.0, -3.0});
  ASSERT_EQ(S.size(), 3u);
  EXPECT_NEAR(S.back(), 0.0, 1e-15);
}

TEST(Soliton, MomentumTransport) {
  auto s0 = random_soliton_state(7, 4, -2, 2, 0.5);
  for (double t : {0.3, 0.6}) {
    auto s = soliton_flow_closed_form(s0, t);
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_NEAR(soliton_flow_map(s0, t, s0.y[i]), s.y[i], 1e-12);
    }
  }
}

TEST(Soliton, VelocityField) {
  auto s = random_soliton_state(9, 3, -2, 2, 1.0);
  // Slope between the positions is the one-sided derivative of u.
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    double x = 0.5 * (s.y[i] + s.y[i + 1]);
    double h = 1e-6;
    double fd = (soliton_velocity(s, x + h) - soliton_velocity(s, x - h)) / (2 * h);
    EXPECT_NEAR(soliton_slope(s, x), fd, 1e-6);
  }
  // At a position the slope is the average of the one-sided slopes.
  double y = s.y[1], h = 1e-4;
  EXPECT_NEAR(soliton_slope(s, y), 0.5 * (soliton_slope(s, y - h) + soliton_slope(s, y + h)), 1e-12);
  Grid g = Grid::line(401, -5, 5);
  auto u = soliton_to_velocity(s, g);
  EXPECT_NEAR(u[200], soliton_velocity(s, 0.0), 1e-14);
  try {
    soliton_to_velocity(s, Grid::line(11, -0.1, 0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WindowTooSmall);
  }
}

// Property: Hamilton's equations are the gradient of E.
TEST(SolitonProperty, GradientOfEnergy) {
  for (int seed = 0; seed < 10; ++seed) {
    auto s = random_soliton_state(seed, 2 + seed % 5);
    auto rhs = hamilton_rhs(s);
    const double h = 1e-6;
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto p = s, m = s;
      p.a[i] += h;
      m.a[i] -= h;
      EXPECT_NEAR((soliton_energy(p) - soliton_energy(m)) / (2 * h), rhs.dy[i], 1e-7);
      p = s;
      m = s;
      p.y[i] += h;
      m.y[i] -= h;
      EXPECT_NEAR(-(soliton_energy(p) - soliton_energy(m)) / (2 * h), rhs.da[i], 1e-7);
    }
  }
}

}  // namespace
}  // namespace hsgeo
