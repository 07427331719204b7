#include "hsgeo/geodesic.hpp"

#include <algorithm>
#include <cmath>

#include "hsgeo/funcspace.hpp"

namespace hsgeo {

double blowup_time(const GridFunction& gamma0, const GridFunction& k, TimeDirection direction) {
  double best = direction == TimeDirection::Forward ? kInfinity : -kInfinity;
  for (std::size_t i = 0; i < k.size(); ++i) {
    double ki = k[i];
    if (ki == 0.0) continue;
    double t = -(2.0 + gamma0[i]) / ki;
    if (direction == TimeDirection::Forward && ki < 0.0) best = std::min(best, t);
    if (direction == TimeDirection::Backward && ki > 0.0) best = std::max(best, t);
  }
  return best;
}

GeodesicPath::GeodesicPath(GridFunction gamma0, GridFunction k, PathOrigin origin)
    : gamma0_(std::move(gamma0)), k_(std::move(k)), origin_(origin) {
  require_same_grid(gamma0_.grid(), k_.grid(), "GeodesicPath");
  RPoint::from_gamma(gamma0_);
  t_forward_ = blowup_time(gamma0_, k_, TimeDirection::Forward);
  t_backward_ = blowup_time(gamma0_, k_, TimeDirection::Backward);
}

double GeodesicPath::t_exit() const noexcept { return std::min(t_forward_, -t_backward_); }

GridFunction GeodesicPath::gamma_at(double t) const { return gamma0_ + k_ * t; }

GeodesicPath geodesic_bvp(const Diffeo& phi0, const Diffeo& phi1, const Tolerances& tol) {
  auto g0 = r_map(phi0, tol).gamma();
  auto g1 = r_map(phi1, tol).gamma();
  return GeodesicPath(g0, g1 - g0, PathOrigin::Bvp);
}

GeodesicPath geodesic_ivp(const Diffeo& phi0, const GridFunction& h, const Tolerances& tol) {
  return GeodesicPath(r_map(phi0, tol).gamma(), tangent_r(phi0, h, tol), PathOrigin::Ivp);
}

GeodesicPath geodesic_from_identity(const GridFunction& k) {
  return GeodesicPath(GridFunction::zero(k.grid()), k, PathOrigin::Line);
}

GridFunction evaluate_displacement(const GeodesicPath& path, double t) {
  return r_inverse_displacement(path.gamma_at(t));
}

std::variant<Diffeo, MonotoneMap> evaluate(const GeodesicPath& path, double t,
                                           const Tolerances& tol) {
  GridFunction gam = path.gamma_at(t);
  GridFunction f = r_inverse_displacement(gam);
  GroupClass cls = std::abs(f.back()) < tol.tail ? GroupClass::A : GroupClass::A1;
  if (path.inside(t)) return unchecked_diffeo(std::move(f), r_inverse_slope(gam), cls);
  return MonotoneMap(std::move(f), r_inverse_slope(gam), cls);
}

double distance(const Diffeo& phi0, const Diffeo& phi1, const Tolerances& tol) {
  auto d = r_map(phi1, tol).gamma() - r_map(phi0, tol).gamma();
  return l2_norm(d);
}

double blowup_time(const GeodesicPath& path, TimeDirection direction) {
  return direction == TimeDirection::Forward ? path.t_exit_forward() : path.t_exit_backward();
}

std::vector<double> ShiftPolynomial::shift_roots() const {
  std::vector<double> r;
  if (c2 == 0.0) {
    if (c1 != 0.0) r.push_back(-c0 / c1);
    return r;
  }
  double disc = c1 * c1 - 4.0 * c2 * c0;
  if (disc < 0.0) return r;
  double sq = std::sqrt(disc);
  // numerically stable pair
  double q = -0.5 * (c1 + std::copysign(sq, c1));
  double a = q / c2;
  double b = q != 0.0 ? c0 / q : a;
  r = {std::min(a, b), std::max(a, b)};
  if (disc == 0.0) r.resize(1);
  return r;
}

std::vector<double> ShiftPolynomial::velocity_roots() const {
  if (c2 == 0.0) return {};
  return {-c1 / (2.0 * c2)};
}

ShiftPolynomial shift_polynomial(const GeodesicPath& path) {
  const auto& g0 = path.gamma0();
  const auto& k = path.k();
  ShiftPolynomial p;
  p.c0 = 0.25 * image_defect(g0);
  p.c1 = 0.5 * integrate((g0 + 2.0) * k);
  p.c2 = 0.25 * integrate(k * k);
  return p;
}

std::pair<double, double> shift_along_geodesic(const GeodesicPath& path, double t) {
  auto p = shift_polynomial(path);
  return {p.shift(t), p.u_at_infinity(t)};
}

}  // namespace hsgeo
