#include "hsgeo/hs_solve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsgeo/connection.hpp"
#include "hsgeo/funcspace.hpp"

namespace hsgeo {

HSSolution::HSSolution(GridFunction u0, const Tolerances& tol)
    : u0_(std::move(u0)),
      du0_(field_derivative(u0_)),
      energy_density_(antiderivative_from_minus_infinity(du0_ * du0_)),
      path_(geodesic_from_identity(du0_)),
      tol_(tol) {
  check_field(u0_, false, tol_);
}

GridFunction HSSolution::displacement(double t) const {
  return energy_density_ * (0.25 * t * t) + u0_ * t;
}

GridFunction HSSolution::displacement_rate(double t) const {
  return energy_density_ * (0.5 * t) + u0_;
}

HSSolution hs_solve(const GridFunction& u0, const Tolerances& tol) { return HSSolution(u0, tol); }

std::variant<Diffeo, MonotoneMap> hs_flow(const HSSolution& sol, double t) {
  GridFunction f = sol.displacement(t);
  GroupClass cls = std::abs(f.back()) < sol.tolerances().tail ? GroupClass::A : GroupClass::A1;
  auto slope = r_inverse_slope(sol.path().gamma_at(t));
  if (sol.path().inside(t)) return unchecked_diffeo(std::move(f), std::move(slope), cls);
  return MonotoneMap(std::move(f), std::move(slope), cls);
}

namespace {

Diffeo flow_before_blowup(const HSSolution& sol, double t) {
  if (!sol.path().inside(t)) {
    throw Error(ErrorKind::PastBlowup, "t = " + std::to_string(t) +
                                           " is outside the existence interval (blow-up at " +
                                           std::to_string(sol.t_blowup()) + ")");
  }
  return std::get<Diffeo>(hs_flow(sol, t));
}

GridFunction mid_derivative_in_time(const GridFunction& prev, const GridFunction& next,
                                    double dt) {
  return (next - prev) * (0.5 / dt);
}

}  // namespace

std::pair<GridFunction, Diffeo> hs_eval(const HSSolution& sol, double t) {
  Diffeo phi = flow_before_blowup(sol, t);
  auto u = compose_function(sol.displacement_rate(t), invert(phi, sol.tolerances()),
                            sol.tolerances());
  return {std::move(u), std::move(phi)};
}

GridFunction hs_velocity(const HSSolution& sol, double t) { return hs_eval(sol, t).first; }

GridFunction hs_velocity_from_flow(const HSSolution& sol, double t, double dt) {
  Diffeo phi = flow_before_blowup(sol, t);
  auto rate = mid_derivative_in_time(sol.displacement(t - dt), sol.displacement(t + dt), dt);
  return compose_function(rate, invert(phi, sol.tolerances()), sol.tolerances());
}

double hs_equation_residual(const GridFunction& prev, const GridFunction& mid,
                            const GridFunction& next, double dt) {
  auto ut = mid_derivative_in_time(prev, next, dt);
  auto ux = field_derivative(mid);
  auto r = ut + mid * ux - antiderivative_from_minus_infinity(ux * ux) * 0.5;
  return r.sup_norm();
}

double naive_variational_residual(const GridFunction& prev, const GridFunction& mid,
                                  const GridFunction& next, double dt) {
  auto ut = mid_derivative_in_time(prev, next, dt);
  auto ux = derivative(mid);
  auto uxx = derivative(ux);
  auto r = derivative(derivative(ut)) + derivative(derivative(mid * ux)) - ux * uxx;
  return r.sup_norm();
}

double hs_residual(const HSSolution& sol, double t, double dt) {
  return hs_equation_residual(hs_velocity(sol, t - dt), hs_velocity(sol, t),
                              hs_velocity(sol, t + dt), dt);
}

}  // namespace hsgeo
