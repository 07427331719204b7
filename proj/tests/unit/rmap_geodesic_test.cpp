#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/generators.hpp"
#include "hsgeo/geodesic.hpp"
#include "hsgeo/rmap.hpp"

namespace hsgeo {
namespace {

TEST(RMap, Identity) {
  Grid g = Grid::default_line();
  EXPECT_EQ(r_map(Diffeo::identity(g)).gamma().sup_norm(), 0.0);
  EXPECT_THROW(RPoint::from_gamma(GridFunction::constant(g, -2.0, Decay::Bounded)), Error);
  try {
    r_map(shift_section(g, 0.1, 0.1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidClass);
  }
}

TEST(RMap, ImageOfClassA) {
  Grid g = Grid::default_line();
  DataGenerator gen(21);
  for (int i = 0; i < 10; ++i) {
    auto gam = r_map(gen.bump_diffeo(g)).gamma();
    EXPECT_LT(std::abs(image_defect(gam)), 1e-10);
    EXPECT_GT(gam.values()[0], -2.0);
  }
  // A class-A1 map has nonzero defect 4 Shift.
  auto step = Diffeo::from_displacement(FunctionSpec("logistic", {{"amp", 0.5}, {"rate", 4.0}}).sample(g));
  EXPECT_NEAR(image_defect(r_map(step).gamma()), 4 * 0.5, 1e-8);
}

TEST(RMap, RoundTrips) {
  Grid g = Grid::default_line();
  DataGenerator gen(22);
  for (int i = 0; i < 10; ++i) {
    Diffeo phi = gen.bump_diffeo(g);
    EXPECT_LT(sup_distance(r_inverse(r_map(phi)).f(), phi.f()), 1e-8);
    auto gam = gen.bump_field(g, 3, 0.6);
    EXPECT_LT(sup_distance(r_map(r_inverse(RPoint::from_gamma(gam))).gamma(), gam), 1e-8);
  }
}

TEST(RMap, TangentMatchesFiniteDifference) {
  Grid g = Grid::default_line();
  DataGenerator gen(23);
  const double e = 1e-5;
  int used = 0;
  for (int i = 0; i < 40 && used < 10; ++i) {
    auto phi = Diffeo::from_displacement(gen.bump_field(g, 3, 1.0), GroupClass::A);
    auto h = gen.bump_field(g, 2, 0.3);
    if (phi.min_derivative() < 0.3) continue;
    ++used;
    auto plus = r_map(Diffeo::from_displacement(phi.f() + h * e, GroupClass::A)).gamma();
    auto minus = r_map(Diffeo::from_displacement(phi.f() - h * e, GroupClass::A)).gamma();
    EXPECT_LT(sup_distance((plus - minus) * (0.5 / e), tangent_r(phi, h)), 1e-6);
  }
  EXPECT_EQ(used, 10);
}

// Property: the pullback of the flat metric is the Eulerian Hdot1 metric.
TEST(RMapProperty, Isometry) {
  Grid g = Grid::default_line();
  DataGenerator gen(24);
  for (int i = 0; i < 30; ++i) {
    Diffeo phi = gen.bump_diffeo(g);
    auto h = gen.bump_field(g), k = gen.bump_field(g);
    double e = hdot1_metric(phi, h, k);
    EXPECT_NEAR(pullback_metric(phi, h, k), e, 1e-6 * (1 + std::abs(e)));
  }
}

TEST(Geodesic, EndpointsAndDistance) {
  Grid g = Grid::default_line();
  DataGenerator gen(31);
  Diffeo a = gen.bump_diffeo(g), b = gen.bump_diffeo(g);
  auto path = geodesic_bvp(a, b);
  EXPECT_LT(sup_distance(evaluate_displacement(path, 0.0), a.f()), 1e-8);
  EXPECT_LT(sup_distance(evaluate_displacement(path, 1.0), b.f()), 1e-8);
  EXPECT_TRUE(std::holds_alternative<Diffeo>(evaluate(path, 0.5)));
  double d = distance(a, b);
  EXPECT_NEAR(d, distance(b, a), 1e-14);
  EXPECT_EQ(distance(a, a), 0.0);
  auto root = [](const Diffeo& p) { return p.dphi().map([](double v) { return std::sqrt(v); }, Decay::Bounded); };
  EXPECT_NEAR(d, 2 * l2_norm(root(b) - root(a)), 1e-12);
}

TEST(Geodesic, TriangleInequality) {
  Grid g = Grid::default_line();
  DataGenerator gen(32);
  for (int i = 0; i < 10; ++i) {
    Diffeo a = gen.bump_diffeo(g), b = gen.bump_diffeo(g), c = gen.bump_diffeo(g);
    EXPECT_LE(distance(a, c), distance(a, b) + distance(b, c) + 1e-12);
  }
}

TEST(Geodesic, BlowupTimes) {
  Grid g = Grid::default_line();
  auto k = FunctionSpec("logistic-neg").sample(g);
  auto path = geodesic_from_identity(k);
  EXPECT_NEAR(blowup_time(path, TimeDirection::Forward), 8.0, 1e-9);
  EXPECT_EQ(blowup_time(path, TimeDirection::Backward), -kInfinity);
  EXPECT_FALSE(path.inside(8.0));
  EXPECT_TRUE(path.inside(7.9));
  auto flat = GridFunction::zero(g);
  EXPECT_EQ(blowup_time(geodesic_from_identity(flat), TimeDirection::Forward), kInfinity);
  // Past the exit the map is evaluated but is no longer a diffeo.
  EXPECT_TRUE(std::holds_alternative<MonotoneMap>(evaluate(path, 9.0)));
}

TEST(Geodesic, ShiftPolynomialClassA) {
  Grid g = Grid::default_line();
  DataGenerator gen(33);
  Diffeo a = gen.bump_diffeo(g), b = gen.bump_diffeo(g);
  auto poly = shift_polynomial(geodesic_bvp(a, b));
  auto k = r_map(b).gamma() - r_map(a).gamma();
  double c = 0.25 * integrate(k * k);
  EXPECT_NEAR(poly.c2, c, 1e-12);
  EXPECT_NEAR(poly.c1, -c, 1e-9);
  EXPECT_NEAR(poly.shift(0.0), 0.0, 1e-10);
  EXPECT_NEAR(poly.shift(1.0), 0.0, 1e-9);
  auto roots = poly.shift_roots();
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0], 0.0, 1e-8);
  EXPECT_NEAR(roots[1], 1.0, 1e-8);
  ASSERT_EQ(poly.velocity_roots().size(), 1u);
  EXPECT_NEAR(poly.velocity_roots()[0], 0.5, 1e-8);
}

TEST(Geodesic, ShiftMatchesDirectLimit) {
  Grid g = Grid::default_line();
  DataGenerator gen(34);
  auto path = geodesic_from_identity(gen.bump_field(g, 3, 0.5));
  auto poly = shift_polynomial(path);
  for (double t : {0.0, 0.3, 0.7, 1.0}) {
    double direct = std::visit([](const auto& m) { return shifts(m).second; }, evaluate(path, t));
    EXPECT_NEAR(poly.shift(t), direct, 1e-9);
    EXPECT_EQ(shift_along_geodesic(path, t).first, poly.shift(t));
  }
}

}  // namespace
}  // namespace hsgeo
