#include <algorithm>
#include <functional>
#include <cmath>

#include <gtest/gtest.h>

#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/generators.hpp"

namespace hsgeo {
namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(Diffeo, IdentityAndValidation) {
  Grid g = Grid::default_line();
  Diffeo id = Diffeo::identity(g);
  EXPECT_EQ(id.group_class(), GroupClass::A);
  EXPECT_EQ(id.min_derivative(), 1.0);
  auto steep = FunctionSpec("gaussian", {{"amp", 3.0}}).sample(g);
  EXPECT_EQ(kind_of([&] { Diffeo::from_displacement(steep, GroupClass::A); }),
            ErrorKind::DerivativeTooSmall);
  auto step = FunctionSpec("logistic", {{"rate", 4.0}}).sample(g);
  EXPECT_EQ(kind_of([&] { Diffeo::from_displacement(step, GroupClass::A); }),
            ErrorKind::InvalidClass);
  EXPECT_EQ(Diffeo::from_displacement(step).group_class(), GroupClass::A1);
  EXPECT_EQ(classify(step + (-1.0) * FunctionSpec("logistic", {{"rate", 4.0}, {"center", 3.0}}).sample(g)),
            GroupClass::A);
  EXPECT_EQ(weakest(GroupClass::A, GroupClass::A2), GroupClass::A2);
  EXPECT_EQ(group_class_from_string("A1"), GroupClass::A1);
}

double inverse_defect(const Diffeo& phi) {
  Diffeo inv = invert(phi);
  return std::max({compose(phi, inv).f().sup_norm(), compose(inv, phi).f().sup_norm(),
                   sup_distance(invert(inv).f(), phi.f())});
}

TEST(Diffeo, ComposeWithInverse) {
  // tanh has a slowly settling tail: the window is widened, not the tolerance
  Grid w = Grid::line(4001, -20, 20);
  auto t = Diffeo::from_displacement(
      GridFunction::sample(w, [](double x) { return 0.5 * std::tanh(x); }, Decay::Bounded),
      GroupClass::A2);
  EXPECT_LT(inverse_defect(t), 1e-8);

  Grid g = Grid::default_line();
  DataGenerator gen(3);
  int used = 0;
  for (int i = 0; i < 40 && used < 10; ++i) {
    auto phi = Diffeo::from_displacement(gen.bump_field(g, 3, 1.0), GroupClass::A);
    if (phi.min_derivative() < 0.3) continue;
    ++used;
    EXPECT_LT(inverse_defect(phi), 1e-8);
  }
  EXPECT_EQ(used, 10);
}

// Steep maps near the slope floor need a finer grid; the defect converges at
// the interpolation order.
TEST(Diffeo, ComposeWithInverseSteep) {
  double coarse = 0.0, fine = 0.0;
  for (int n : {2001, 4001}) {
    Grid g = Grid::line(n, -10, 10);
    DataGenerator gen(3);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) worst = std::max(worst, inverse_defect(gen.bump_diffeo(g)));
    (n == 2001 ? coarse : fine) = worst;
  }
  EXPECT_LT(fine, 1e-8);
  EXPECT_GT(std::log2(coarse / fine), 5.0);
}

TEST(Diffeo, Associativity) {
  Grid g = Grid::default_line();
  DataGenerator gen(4);
  Diffeo a = gen.bump_diffeo(g), b = gen.bump_diffeo(g), c = gen.bump_diffeo(g);
  EXPECT_LT(sup_distance(compose(compose(a, b), c).f(), compose(a, compose(b, c)).f()), 1e-7);
}

TEST(Diffeo, ComposeFunction) {
  Grid g = Grid::default_line();
  auto shift = Diffeo::from_displacement(GridFunction::sample(
      g, [](double x) { return 0.5 * std::exp(-x * x); }, Decay::RapidlyDecreasing));
  auto F = FunctionSpec("gaussian").sample(g);
  auto Fphi = compose_function(F, shift);
  for (std::size_t i = 0; i < g.size(); i += 50) {
    double x = g.node(i);
    EXPECT_NEAR(Fphi[i], std::exp(-std::pow(x + 0.5 * std::exp(-x * x), 2)), 1e-9);
  }
}

TEST(Diffeo, Shifts) {
  Grid g = Grid::default_line();
  Diffeo s = shift_section(g, 0.3, -0.2);
  auto [l, r] = shifts(s);
  EXPECT_NEAR(l, 0.3, 1e-9);
  EXPECT_NEAR(r, -0.2, 1e-9);
  EXPECT_EQ(s.group_class(), GroupClass::A2);
  EXPECT_EQ(shifts(Diffeo::identity(g)), std::make_pair(0.0, 0.0));
  EXPECT_DOUBLE_EQ(smooth_step(0.5), 0.5);
  EXPECT_EQ(smooth_step(-1.0), 0.0);
  EXPECT_EQ(smooth_step(2.0), 1.0);
}

TEST(Diffeo, OutOfWindow) {
  Grid g = Grid::line(201, -2.0, 2.0);
  auto f = GridFunction::sample(g, [](double x) { return 0.2 * (1 + std::tanh(x)); }, Decay::Bounded);
  auto m = MonotoneMap(f, GroupClass::A1);
  EXPECT_EQ(kind_of([&] { compose_function(f, m); }), ErrorKind::RangeExceedsWindow);
}

TEST(Diffeo, Periodic) {
  Grid p = Grid::periodic(256);
  DataGenerator gen(5);
  Diffeo phi = gen.trig_diffeo(p);
  EXPECT_EQ(phi.group_class(), GroupClass::PeriodicLift);
  EXPECT_LT(compose(phi, invert(phi)).f().sup_norm(), 1e-8);
}

// Property: the interpolated displacement of a diffeo gives a monotone map
// between the nodes.
TEST(DiffeoProperty, MonotoneBetweenNodes) {
  Grid g = Grid::line(201, -10, 10);
  DataGenerator gen(6);
  for (int i = 0; i < 10; ++i) {
    Diffeo phi = gen.bump_diffeo(g, 0.05);
    double prev = -1e300;
    for (double x = -10; x <= 10; x += 0.0137) {
      double y = x + phi.displacement()(x);
      EXPECT_GE(y, prev - 1e-12);
      prev = y;
    }
  }
}

}  // namespace
}  // namespace hsgeo
