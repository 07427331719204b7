#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/generators.hpp"

namespace hsgeo {
namespace {

using std::numbers::pi;

GridFunction gaussian(const Grid& g) {
  return GridFunction::sample(g, [](double x) { return std::exp(-x * x); }, Decay::RapidlyDecreasing);
}

TEST(Grid, Construction) {
  Grid g = Grid::line(5, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.25);
  EXPECT_EQ(g.node(4), 1.0);
  Grid p = Grid::periodic(8);
  EXPECT_DOUBLE_EQ(p.spacing(), pi / 4);
  EXPECT_TRUE(p.is_periodic());
  EXPECT_THROW(Grid::line(1, 0.0, 1.0), Error);
  EXPECT_THROW(Grid::line(5, 1.0, 0.0), Error);
  EXPECT_EQ(Grid::default_line().size(), 2001u);
}

TEST(GridFunction, DecayRules) {
  Grid g = Grid::default_line();
  EXPECT_THROW(GridFunction(g, std::vector<double>(g.size()), Decay::Periodic), Error);
  EXPECT_THROW(GridFunction(Grid::periodic(8), std::vector<double>(8), Decay::Compact), Error);
  EXPECT_EQ(sum_decay(Decay::Compact, Decay::Bounded), Decay::Bounded);
  EXPECT_EQ(product_decay(Decay::Compact, Decay::Bounded), Decay::Compact);
  EXPECT_EQ(decay_from_string(to_string(Decay::IntegrableDerivatives)), Decay::IntegrableDerivatives);
  auto tail = GridFunction::constant(g, 1.0, Decay::RapidlyDecreasing);
  try {
    tail.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TailTooLarge);
  }
  EXPECT_THROW(gaussian(g) + gaussian(Grid::line(11, -1, 1)), Error);
}

TEST(Funcspace, GaussianIntegral) {
  EXPECT_NEAR(integrate(gaussian(Grid::default_line())), std::sqrt(pi), 1e-10);
  EXPECT_NEAR(integrate(gaussian(Grid::line(2000, -10, 10))), std::sqrt(pi), 1e-10);
  EXPECT_NEAR(integrate(gaussian(Grid::default_line()), Quadrature::Trapezoid), std::sqrt(pi), 1e-10);
}

TEST(Funcspace, DerivativeExactOnQuadratics) {
  Grid g = Grid::line(41, -2, 3);
  auto q = GridFunction::sample(g, [](double x) { return 3 * x * x - x + 2; }, Decay::Bounded);
  auto d = derivative(q);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(d[i], 6 * g.node(i) - 1, 1e-10);
  auto dd = second_derivative(q);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(dd[i], 6.0, 1e-8);
}

TEST(Funcspace, DerivativeOrder) {
  double prev = 0;
  for (int n : {64, 128}) {
    Grid p = Grid::periodic(n);
    auto s = GridFunction::sample(p, [](double x) { return std::sin(x); }, Decay::Periodic);
    auto c = GridFunction::sample(p, [](double x) { return std::cos(x); }, Decay::Periodic);
    double err = sup_distance(derivative(s), c);
    if (prev > 0) EXPECT_GT(std::log2(prev / err), 5.5);
    prev = err;
  }
  EXPECT_THROW(derivative(GridFunction::zero(Grid::line(2, 0, 1))), Error);
}

TEST(Funcspace, Antiderivative) {
  Grid g = Grid::default_line();
  auto F = antiderivative_from_minus_infinity(gaussian(g));
  EXPECT_EQ(F.decay(), Decay::Bounded);
  for (std::size_t i = 0; i < g.size(); i += 100) {
    EXPECT_NEAR(F[i], 0.5 * std::sqrt(pi) * (1 + std::erf(g.node(i))), 1e-12);
  }
  EXPECT_NEAR(limit_at_plus_infinity(F), std::sqrt(pi), 1e-10);
  EXPECT_EQ(limit_at_minus_infinity(F), 0.0);
  EXPECT_NEAR(sup_distance(derivative(F), gaussian(g)), 0.0, 1e-8);
  try {
    antiderivative_from_minus_infinity(GridFunction::constant(g, 1.0, Decay::Bounded));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotIntegrable);
  }
}

TEST(Funcspace, TailNotSettled) {
  Grid g = Grid::default_line();
  auto ramp = GridFunction::sample(g, [](double x) { return x; }, Decay::Bounded);
  try {
    limit_at_plus_infinity(ramp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TailNotSettled);
  }
  EXPECT_FALSE(tail_settled_left(ramp));
}

TEST(Funcspace, Periodic) {
  Grid p = Grid::periodic(256);
  auto c = GridFunction::sample(p, [](double x) { return std::cos(x) + 0.5; }, Decay::Periodic);
  EXPECT_NEAR(integrate(c), pi, 1e-12);
  auto F = periodic_antiderivative(c);
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(F[i], std::sin(p.node(i)), 1e-10);
}

TEST(Funcspace, Norms) {
  Grid g = Grid::default_line();
  EXPECT_NEAR(l2_norm(gaussian(g)), std::pow(pi / 2, 0.25), 1e-10);
  EXPECT_NEAR(inner(gaussian(g), gaussian(g)), std::sqrt(pi / 2), 1e-10);
}

TEST(Funcspace, FornbergWeights) {
  auto w = fornberg_weights(0.0, {-1.0, 0.0, 1.0}, 1);
  EXPECT_NEAR(w[0], -0.5, 1e-15);
  EXPECT_NEAR(w[1], 0.0, 1e-15);
  EXPECT_NEAR(w[2], 0.5, 1e-15);
}

// Property: integration is linear and the derivative of the
// antiderivative returns the integrand, for random compact data.
TEST(FuncspaceProperty, LinearityAndInverse) {
  Grid g = Grid::default_line();
  DataGenerator gen(11);
  for (int i = 0; i < 25; ++i) {
    auto f = gen.bump_field(g);
    auto h = gen.bump_field(g);
    double a = gen.uniform(-2, 2);
    EXPECT_NEAR(integrate(f * a + h), a * integrate(f) + integrate(h), 1e-12);
    EXPECT_LT(sup_distance(derivative(antiderivative_from_minus_infinity(f)), f), 1e-6);
  }
}

TEST(Families, ParseAndSample) {
  auto spec = FunctionSpec::parse("gaussian:amp=2,width=0.5");
  EXPECT_DOUBLE_EQ(spec(0.0), 2.0);
  EXPECT_DOUBLE_EQ(spec.param("center"), 0.0);
  EXPECT_EQ(FunctionSpec::parse(spec.str()).str(), spec.str());
  EXPECT_DOUBLE_EQ(FunctionSpec("bump")(0.3), bump_profile(0.3));
  EXPECT_EQ(FunctionSpec("bump")(1.0), 0.0);
  EXPECT_NEAR(FunctionSpec("logistic-neg")(0.0), -0.125, 1e-15);
  EXPECT_THROW(FunctionSpec::parse("nosuch"), Error);
  EXPECT_THROW(FunctionSpec::parse("gaussian:bogus=1"), Error);
  EXPECT_THROW(FunctionSpec::parse("gaussian:amp=x"), Error);
}

TEST(Tolerances, Parsing) {
  Tolerances t = parse_tolerances("tail=1e-9,root=1e-11");
  EXPECT_EQ(t.tail, 1e-9);
  EXPECT_EQ(t.root, 1e-11);
  EXPECT_EQ(t.zero, Tolerances{}.zero);
  EXPECT_EQ(parse_tolerances("1e-7").tail, 1e-7);
  EXPECT_THROW(parse_tolerances("nope=1"), Error);
}

}  // namespace
}  // namespace hsgeo
