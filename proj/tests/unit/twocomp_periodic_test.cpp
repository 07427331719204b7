#include <algorithm>
#include <functional>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/generators.hpp"
#include "hsgeo/hs_solve.hpp"
#include "hsgeo/periodic_ch.hpp"
#include "hsgeo/twocomp.hpp"

namespace hsgeo {
namespace {

using std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

TEST(TwoComponent, RoundTrip) {
  Grid g = Grid::default_line();
  DataGenerator gen(51);
  for (int i = 0; i < 5; ++i) {
    TwoCompConfig c{gen.bump_diffeo(g), gen.bump_field(g, 2, 2.0)};
    auto back = r_inverse_2c(r_map_2c(c));
    EXPECT_LT(sup_distance(back.phi.f(), c.phi.f()), 1e-8);
    EXPECT_LT(sup_distance(back.alpha, c.alpha), 1e-12);
  }
}

TEST(TwoComponent, BranchCut) {
  Grid g = Grid::line(21, -1, 1);
  auto z = ComplexGridFunction::sample(
      g, [](double x) { return 2.0 * std::polar(1.0, x > 0 ? 2.0 : 0.0) - 2.0; }, Decay::Bounded);
  EXPECT_EQ(kind_of([&] { r_inverse_2c(z); }), ErrorKind::BranchCutAmbiguity);
}

TEST(TwoComponent, MetricIsPullback) {
  Grid g = Grid::default_line();
  DataGenerator gen(52);
  for (int i = 0; i < 5; ++i) {
    TwoCompConfig c{gen.bump_diffeo(g), gen.bump_field(g, 2, 2.0)};
    auto h = gen.bump_field(g), U = gen.bump_field(g), k = gen.bump_field(g), V = gen.bump_field(g);
    double m = twocomp_metric(c, h, U, k, V);
    EXPECT_NEAR(twocomp_pullback(c, h, U, k, V), m, 1e-6 * (1 + std::abs(m)));
  }
}

TEST(TwoComponent, TangentMatchesFiniteDifference) {
  Grid g = Grid::default_line();
  DataGenerator gen(53);
  TwoCompConfig c{gen.bump_diffeo(g), gen.bump_field(g, 2, 2.0)};
  auto h = gen.bump_field(g, 2, 0.3), U = gen.bump_field(g);
  const double e = 1e-5;
  TwoCompConfig p{Diffeo::from_displacement(c.phi.f() + h * e, GroupClass::A), c.alpha + U * e};
  TwoCompConfig m{Diffeo::from_displacement(c.phi.f() - h * e, GroupClass::A), c.alpha - U * e};
  auto fd = (r_map_2c(p) - r_map_2c(m)) * std::complex<double>(0.5 / e);
  EXPECT_LT(sup_distance(fd, tangent_r_2c(c, h, U)), 1e-6);
}

TEST(TwoComponent, ReducesToScalar) {
  Grid g = Grid::default_line();
  auto u0 = FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g);
  TwoCompSolution two(u0, GridFunction::zero(g));
  auto hs = hs_solve(u0);
  EXPECT_EQ(two.t_breakdown(), hs.t_blowup());
  EXPECT_LT(sup_distance(two.velocity(1.0).first, hs_velocity(hs, 1.0)), 1e-8);
  EXPECT_EQ(kind_of([&] { two.config(two.t_breakdown()); }), ErrorKind::Breakdown);
  EXPECT_EQ(kind_of([&] { two.config(-1.0); }), ErrorKind::InvalidArgument);
}

TEST(TwoComponent, PositiveDensityPreventsBreakdown) {
  Grid g = Grid::default_line();
  TwoCompSolution s(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g),
                    FunctionSpec("gaussian", {{"width", 2.0}}).sample(g));
  EXPECT_GT(s.t_breakdown(), 100.0);
}

TEST(TwoComponent, ResidualAndEnergy) {
  auto run = [](int n, double dt) {
    Grid g = Grid::line(n, -10, 10);
    TwoCompSolution s(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g),
                      FunctionSpec("gaussian", {{"amp", 0.3}, {"center", 0.5}}).sample(g));
    return twocomp_residual(s.velocity(1 - dt), s.velocity(1), s.velocity(1 + dt), dt);
  };
  auto [u1, r1] = run(2001, 0.04);
  auto [u2, r2] = run(4001, 0.02);
  EXPECT_GT(std::log2(u1 / u2), 1.8);
  EXPECT_GT(std::log2(r1 / r2), 1.8);

  Grid g = Grid::default_line();
  TwoCompSolution s(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g),
                    FunctionSpec("gaussian", {{"amp", 0.3}}).sample(g));
  auto energy = [&](double t) {
    auto [u, rho] = s.velocity(t);
    auto du = derivative(u);
    return integrate(du * du + rho * rho);
  };
  EXPECT_NEAR(energy(2.0), energy(0.0), 1e-6 * energy(0.0));
}

TEST(TwoComponent, MembershipDefect) {
  Grid g = Grid::default_line();
  auto X = FunctionSpec("gaussian").sample(g);
  auto a = FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g);
  auto dX = derivative(X);
  EXPECT_NEAR(twocomp_membership_defect(X, a), 0.5 * integrate(dX * dX + a * a), 1e-8);
}

TEST(PeriodicSphere, NormAndRoundTrip) {
  Grid p = Grid::periodic(512);
  EXPECT_NEAR(integrate(r_map_periodic(Diffeo::identity(p)).gamma()), 4 * pi, 1e-12);
  DataGenerator gen(61);
  for (int i = 0; i < 10; ++i) {
    Diffeo phi = periodic_diffeo(gen.trig_diffeo(p).f());
    auto s = r_map_periodic(phi);
    EXPECT_NEAR(integrate(s.gamma() * s.gamma()), kSphereNormSq, 1e-8);
    EXPECT_LT(sup_distance(r_inverse_periodic(s).f(), phi.f()), 1e-8);
  }
}

TEST(PeriodicSphere, QuotientInvariance) {
  Grid p = Grid::periodic(512);
  DataGenerator gen(62);
  Diffeo phi = gen.trig_diffeo(p);
  auto rotated = periodic_diffeo(phi.f() + 0.7, false);
  EXPECT_LT(sup_distance(r_map_periodic(rotated).gamma(), r_map_periodic(phi).gamma()), 1e-8);
  EXPECT_LT(sup_distance(periodic_diffeo(rotated.f()).f(), periodic_diffeo(phi.f()).f()), 1e-12);
}

TEST(PeriodicSphere, GreatCircle) {
  Grid p = Grid::periodic(512);
  DataGenerator gen(63);
  auto a = r_map_periodic(gen.trig_diffeo(p));
  auto b = r_map_periodic(gen.trig_diffeo(p));
  EXPECT_LT(sup_distance(sphere_geodesic(a, b, 0.0).gamma(), a.gamma()), 1e-10);
  EXPECT_LT(sup_distance(sphere_geodesic(a, b, 1.0).gamma(), b.gamma()), 1e-10);
  for (double t : {0.25, 0.5, 0.75}) {
    auto m = sphere_geodesic(a, b, t);
    EXPECT_NEAR(integrate(m.gamma() * m.gamma()), kSphereNormSq, 1e-8);
  }
  auto flip = SpherePoint::from_gamma(
      GridFunction::sample(p, [](double x) { return 2.0 + std::sin(x); }, Decay::Periodic) *
      std::sqrt(8 * pi / (8 * pi + pi)));
  auto two = SpherePoint::from_gamma(GridFunction::constant(p, 2.0, Decay::Periodic));
  EXPECT_NO_THROW(sphere_geodesic(two, flip, 0.5));
  EXPECT_EQ(kind_of([&] { sphere_geodesic(two, flip, 3.0); }), ErrorKind::PositivityLost);
  auto neg = GridFunction::constant(p, -2.0, Decay::Periodic);
  EXPECT_EQ(kind_of([&] { SpherePoint::from_gamma(neg); }), ErrorKind::PositivityLost);
}

TEST(PeriodicSphere, Isometry) {
  Grid p = Grid::periodic(1024);
  DataGenerator gen(64);
  for (int i = 0; i < 5; ++i) {
    Diffeo phi = gen.trig_diffeo(p);
    auto h = gen.trig_field(p), k = gen.trig_field(p);
    double e = periodic_hdot1(phi, h, k);
    EXPECT_NEAR(periodic_pullback(phi, h, k), e, 1e-6 * (1 + std::abs(e)));
  }
}

TEST(PeriodicHunterSaxton, Residual) {
  auto run = [](double dt) {
    Grid p = Grid::periodic(512);
    PeriodicHSSolution s(GridFunction::sample(p, [](double x) { return 0.5 * std::sin(x); }, Decay::Periodic));
    return periodic_hs_residual(s.velocity(1 - dt), s.velocity(1), s.velocity(1 + dt), dt);
  };
  EXPECT_GT(std::log2(run(0.04) / run(0.02)), 1.8);
  Grid p = Grid::periodic(512);
  auto u0 = GridFunction::sample(p, [](double x) { return 0.5 * std::sin(x); }, Decay::Periodic);
  PeriodicHSSolution s(u0);
  EXPECT_LT(sup_distance(s.velocity(0.0), u0), 1e-12);
  EXPECT_EQ(kind_of([&] { s.flow(s.t_positivity()); }), ErrorKind::PositivityLost);
  auto g = s.gamma(0.99 * s.t_positivity());
  EXPECT_GT(*std::min_element(g.values().begin(), g.values().end()), 0.0);
}

TEST(CamassaHolm, RMapAndConstraints) {
  Grid p = Grid::periodic(512);
  auto id = ch_r_map(Diffeo::identity(p));
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(id[i], std::complex<double>(2.0, 0.0));
  DataGenerator gen(65);
  for (int i = 0; i < 5; ++i) {
    auto z = ch_r_map(gen.trig_diffeo(p));
    EXPECT_NEAR(ch_f1_displayed(z), 6 * pi, 1e-8);
    EXPECT_NEAR(ch_f1(z), 0.0, 1e-8);
    EXPECT_LT(ch_f2(z).sup_norm(), 1e-6);
    EXPECT_LT(sup_distance(ch_f2_displayed(z), GridFunction::constant(p, -4.0, Decay::Periodic)), 1e-6);
    auto bent = z * to_complex(GridFunction::sample(
                        p, [](double x) { return 1.0 + 0.3 * std::cos(x); }, Decay::Periodic));
    EXPECT_GT(ch_f2(bent).sup_norm(), 0.1);
  }
}

TEST(CamassaHolm, Pullback) {
  Grid p = Grid::periodic(512);
  auto zero = GridFunction::zero(p);
  auto [l0, r0] = ch_pullback_check(Diffeo::identity(p), zero, zero);
  EXPECT_EQ(l0, 0.0);
  EXPECT_EQ(r0, 0.0);
  auto s = GridFunction::sample(p, [](double x) { return std::sin(x); }, Decay::Periodic);
  auto [l, r] = ch_pullback_check(Diffeo::identity(p), s, s);
  EXPECT_NEAR(l, 2 * pi, 1e-8);
  EXPECT_NEAR(r, 2 * pi, 1e-8);
  Grid q = Grid::periodic(1024);
  DataGenerator gen(66);
  for (int i = 0; i < 5; ++i) {
    auto [a, b] = ch_pullback_check(gen.trig_diffeo(q), gen.trig_field(q) + 0.5, gen.trig_field(q));
    EXPECT_NEAR(a, b, 1e-6);
  }
}

TEST(CamassaHolm, GeodesicResidual) {
  Grid p = Grid::periodic(128);
  auto zero = GridFunction::zero(p);
  EXPECT_EQ(ch_geodesic_residual(zero, zero, zero, 0.1), 0.0);
  auto c = GridFunction::constant(p, 1.5, Decay::Periodic);
  EXPECT_LT(ch_geodesic_residual(c, c, c, 0.1), 1e-12);
  // A wave translating at unit speed does not solve the equation.
  auto wave = [&](double t) {
    return GridFunction::sample(p, [t](double x) { return std::sin(x - t); }, Decay::Periodic);
  };
  EXPECT_GT(ch_geodesic_residual(wave(-0.01), wave(0.0), wave(0.01), 0.01), 0.1);
}

}  // namespace
}  // namespace hsgeo
