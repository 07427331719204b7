#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hsgeo/connection.hpp"
#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/generators.hpp"
#include "hsgeo/hs_solve.hpp"

namespace hsgeo {
namespace {

using std::numbers::pi;

TEST(Connection, BracketConvention) {
  Grid g = Grid::default_line();
  auto X = FunctionSpec("gaussian").sample(g);
  auto Y = FunctionSpec("gaussian", {{"center", 1.0}}).sample(g);
  auto b = lie_bracket(X, Y);
  EXPECT_LT(sup_distance(b, derivative(X) * Y - X * derivative(Y)), 1e-12);
  EXPECT_LT(sup_distance(b, -lie_bracket(Y, X)), 1e-15);
  EXPECT_LT(sup_distance(ad(X, Y), b), 1e-15);
}

TEST(Connection, RhoSymmetricAndAdStar) {
  Grid g = Grid::default_line();
  DataGenerator gen(41);
  auto X = gen.bump_field(g), Y = gen.bump_field(g);
  EXPECT_LT(sup_distance(rho(X, Y), rho(Y, X)), 1e-12);
  EXPECT_LT(sup_distance(ad_star_symmetric(X), rho(X, X)), 1e-12);
  EXPECT_LT(sup_distance(geodesic_rhs(X), -rho(X, X)), 1e-15);
}

TEST(Connection, GaussianObstruction) {
  // Z(+inf) = -(1/2) int X'^2 = -(1/2) sqrt(pi/2) for X = exp(-x^2).
  Grid g = Grid::default_line();
  auto Z = ad_star_symmetric(FunctionSpec("gaussian").sample(g));
  EXPECT_NEAR(Z.back(), -0.5 * std::sqrt(pi / 2), 1e-10);
}

TEST(Connection, Identities) {
  Grid g = Grid::default_line();
  DataGenerator gen(42);
  for (int i = 0; i < 10; ++i) {
    auto X = gen.bump_field(g), Y = gen.bump_field(g), Z = gen.bump_field(g);
    EXPECT_LT(std::abs(cyclic_residual(X, Y, Z)), 1e-7);
    EXPECT_LT(std::abs(compatibility_residual(X, Y, Z)), 1e-7);
    double scale = hdot1_pairing(X, X) * hdot1_pairing(Y, Y);
    EXPECT_LT(std::abs(curvature_numerator(X, Y)), 1e-6 * scale);
  }
}

TEST(Connection, JacobiIdentity) {
  Grid g = Grid::default_line();
  DataGenerator gen(43);
  auto X = gen.bump_field(g), Y = gen.bump_field(g), Z = gen.bump_field(g);
  auto j = lie_bracket(X, lie_bracket(Y, Z)) + lie_bracket(Y, lie_bracket(Z, X)) +
           lie_bracket(Z, lie_bracket(X, Y));
  EXPECT_LT(j.sup_norm(), 1e-6);
}

TEST(Connection, MembershipDefect) {
  Grid g = Grid::default_line();
  DataGenerator gen(44);
  for (int i = 0; i < 10; ++i) {
    auto X = gen.bump_field(g);
    auto dX = derivative(X);
    double d = membership_defect(X);
    EXPECT_NEAR(d, 0.5 * integrate(dX * dX), 1e-7);
    EXPECT_GT(d, 0.0);
  }
  EXPECT_EQ(membership_defect(GridFunction::zero(g)), 0.0);
  EXPECT_THROW(check_field(FunctionSpec("logistic", {{"rate", 4.0}}).sample(g), true), Error);
  EXPECT_NO_THROW(check_field(FunctionSpec("logistic", {{"rate", 4.0}}).sample(g), false));
}

TEST(HunterSaxton, ZeroData) {
  Grid g = Grid::default_line();
  auto sol = hs_solve(GridFunction::zero(g));
  EXPECT_EQ(sol.t_blowup(), std::numeric_limits<double>::infinity());
  EXPECT_EQ(hs_velocity(sol, 3.0).sup_norm(), 0.0);
}

TEST(HunterSaxton, BlowupTime) {
  Grid g = Grid::default_line();
  auto u0 = FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g);
  auto sol = hs_solve(u0);
  auto du = derivative(u0);
  double m = *std::min_element(du.values().begin(), du.values().end());
  EXPECT_EQ(sol.t_blowup(), 2.0 / std::abs(m));
  // the grid sees only the nodal minimum of u0', off the true one by O(h^2)
  double exact = 2.0 / (std::sqrt(2.0) * 0.5 * std::exp(-0.5));
  EXPECT_NEAR(sol.t_blowup(), exact, 1e-3);
  auto fine = hs_solve(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(Grid::line(8001, -10, 10)));
  EXPECT_LT(std::abs(fine.t_blowup() - exact), std::abs(sol.t_blowup() - exact));
  try {
    hs_eval(sol, sol.t_blowup() + 0.1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PastBlowup);
  }
  EXPECT_TRUE(std::holds_alternative<MonotoneMap>(hs_flow(sol, sol.t_blowup() + 0.1)));
}

TEST(HunterSaxton, InitialValue) {
  Grid g = Grid::default_line();
  auto u0 = FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g);
  auto sol = hs_solve(u0);
  EXPECT_LT(sup_distance(hs_velocity(sol, 0.0), u0), 1e-14);
}

TEST(HunterSaxton, ResidualConverges) {
  auto spec = FunctionSpec("gaussian", {{"amp", 0.5}});
  double r1 = hs_residual(hs_solve(spec.sample(Grid::line(2001, -10, 10))), 1.0, 0.04);
  double r2 = hs_residual(hs_solve(spec.sample(Grid::line(4001, -10, 10))), 1.0, 0.02);
  EXPECT_GT(std::log2(r1 / r2), 1.8);
}

TEST(HunterSaxton, FlowRouteAgrees) {
  Grid g = Grid::default_line();
  auto sol = hs_solve(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g));
  EXPECT_LT(sup_distance(hs_velocity_from_flow(sol, 1.5, 1e-3), hs_velocity(sol, 1.5)), 1e-8);
}

// u_x steepens without bound as t -> T, so at fixed h the check covers the
// part of the validity interval the grid resolves.
TEST(HunterSaxton, EnergyConserved) {
  Grid g = Grid::line(4001, -10, 10);
  auto sol = hs_solve(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g));
  auto energy = [&](double t) {
    auto du = derivative(hs_velocity(sol, t));
    return integrate(du * du);
  };
  double e0 = energy(0.0);
  for (double t : {1.0, 2.0, 3.0}) EXPECT_NEAR(energy(t), e0, 1e-6 * e0);
}

TEST(HunterSaxton, NaiveFormAlsoVanishes) {
  Grid g = Grid::default_line();
  auto sol = hs_solve(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g));
  auto residual = [&](double dt) {
    return naive_variational_residual(hs_velocity(sol, 1 - dt), hs_velocity(sol, 1),
                                      hs_velocity(sol, 1 + dt), dt);
  };
  EXPECT_GT(std::log2(residual(0.02) / residual(0.01)), 0.9);
  EXPECT_LT(residual(0.005), 1e-3);
}

TEST(HunterSaxton, NaiveFormRejectsNonSolution) {
  auto travelling = [](double t) {
    return FunctionSpec("gaussian", {{"amp", 0.5}, {"center", 0.3 * t}}).sample(Grid::default_line());
  };
  for (double dt : {0.02, 0.01}) {
    double r = naive_variational_residual(travelling(1 - dt), travelling(1), travelling(1 + dt), dt);
    EXPECT_GT(r, 1e-2);
  }
}

// Property: data with u0' >= 0 never blows up forward; otherwise the time is
// 2/|min u0'|.
TEST(HunterSaxtonProperty, Dichotomy) {
  Grid g = Grid::default_line();
  DataGenerator gen(45);
  for (int i = 0; i < 10; ++i) {
    auto u0 = gen.bump_field(g);
    auto sol = hs_solve(u0);
    auto du = derivative(u0);
    double m = *std::min_element(du.values().begin(), du.values().end());
    EXPECT_EQ(sol.t_blowup(), 2.0 / -m);
    double M = *std::max_element(du.values().begin(), du.values().end());
    EXPECT_EQ(sol.t_blowup_backward(), -2.0 / M);
  }
  auto rising = hs_solve(FunctionSpec("logistic", {{"rate", 4.0}}).sample(g));
  EXPECT_GT(rising.t_blowup(), 100.0);
}

}  // namespace
}  // namespace hsgeo
