// Paths inside Diff_A approaching the length of the straight A1 line
// between two class-A maps: gamma_n = gamma + alpha_n(t) eps psi_n with
// psi_n a bump of width n parked beyond the support, and alpha_n chosen so
// that every gamma_n(t) lies in the image of Diff_A.
#include <cmath>
#include <cstdio>
#include <vector>

#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/rmap.hpp"

using namespace hsgeo;

namespace {

struct Result {
  double length;
  double max_defect;
};

Result perturbed_length(const GridFunction& g0, const GridFunction& g1, int n) {
  const Grid& grid = g0.grid();
  const double eps = 1.0 / n;
  auto k = g1 - g0;

  std::size_t last = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double m = std::max({std::abs(g0[i]), std::abs(g1[i]), std::abs(k[i])});
    if (m >= eps) last = i;
  }
  double xn = grid.node(last);

  // psi >= 0 with int psi = int psi^2 = 1.
  auto unit = FunctionSpec("bump").sample(Grid::line(4001, -1.0, 1.0));
  double b1 = integrate(unit), b2 = integrate(unit * unit);
  double amp = b1 / b2, width = b2 / (b1 * b1);
  auto psi = GridFunction::sample(
      grid,
      [&](double x) { return amp * bump_profile(eps * (x - xn - 1.0 / eps) / width); },
      Decay::Compact);
  auto bump = psi * eps;

  // F(g + alpha bump) = qa alpha^2 + qb alpha + F(g); take the root that
  // tends to -F/4.
  double qa = integrate(bump * bump), mass = integrate(bump);
  auto alpha = [&](double t) {
    auto g = g0 + k * t;
    double qb = 4.0 * mass + 2.0 * integrate(bump * g);
    double F = image_defect(g);
    return -2.0 * F / (qb + std::sqrt(qb * qb - 4.0 * qa * F));
  };

  const int steps = 40;
  const double dt = 1e-4;
  Result r{0.0, 0.0};
  for (int j = 0; j <= steps; ++j) {
    double t = static_cast<double>(j) / steps;
    double da = (alpha(t + dt) - alpha(t - dt)) / (2 * dt);
    auto v = k + bump * da;
    double w = (j == 0 || j == steps) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    r.length += w * l2_norm(v);
    r.max_defect = std::max(r.max_defect, std::abs(image_defect(g0 + k * t + bump * alpha(t))));
  }
  r.length /= 3.0 * steps;
  return r;
}

}  // namespace

int main() {
  Grid grid = Grid::line(12001, -10.0, 50.0);
  auto phi0 = Diffeo::from_displacement(
      FunctionSpec("bump", {{"amp", 0.8}, {"center", -1.0}}).sample(grid), GroupClass::A);
  auto phi1 = Diffeo::from_displacement(
      FunctionSpec("bump", {{"amp", -0.6}, {"center", 1.5}, {"width", 1.5}}).sample(grid),
      GroupClass::A);
  auto g0 = r_map(phi0).gamma();
  auto g1 = r_map(phi1).gamma();
  double L = l2_norm(g1 - g0);
  std::printf("straight line in A1: length %.10f\n", L);
  std::printf("%4s %16s %12s %12s\n", "n", "length", "excess", "max |F|");

  double prev = INFINITY;
  bool ok = true;
  for (int n : {1, 2, 4, 8, 16}) {
    Result r = perturbed_length(g0, g1, n);
    double excess = r.length - L;
    std::printf("%4d %16.10f %12.4e %12.4e\n", n, r.length, excess, r.max_defect);
    ok = ok && excess >= -1e-9 && excess < prev && r.max_defect < 1e-8;
    prev = excess;
  }
  std::printf("%s\n", ok ? "lengths decrease to the A1 distance" : "no monotone convergence");
  return ok ? 0 : 1;
}
