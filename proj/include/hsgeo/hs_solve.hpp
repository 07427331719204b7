#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "hsgeo/diffeo.hpp"
#include "hsgeo/geodesic.hpp"

namespace hsgeo {

/// Analytic solution of u_t = -u u_x + (1/2) int_{-inf}^x u_x^2 with
/// u(0) = u0: phi(t) = R^{-1}(t u0') and
/// u(t) = [u0 + (t/2) int_{-inf}^. u0'^2] o phi(t)^{-1}.
class HSSolution {
 public:
  explicit HSSolution(GridFunction u0, const Tolerances& tol = {});

  const GridFunction& u0() const noexcept { return u0_; }
  const GridFunction& du0() const noexcept { return du0_; }
  const GeodesicPath& path() const noexcept { return path_; }
  const Grid& grid() const noexcept { return u0_.grid(); }
  /// 2/|min u0'| if min u0' < 0, else +inf.
  double t_blowup() const noexcept { return path_.t_exit_forward(); }
  /// Negative-time counterpart, -2/max u0' (or -inf).
  double t_blowup_backward() const noexcept { return path_.t_exit_backward(); }
  const Tolerances& tolerances() const noexcept { return tol_; }

  /// f(t) with phi(t) = Id + f(t), for any t.
  GridFunction displacement(double t) const;
  /// (d/dt) f(t) = u0 + (t/2) int_{-inf}^x u0'^2, i.e. u(t) o phi(t).
  GridFunction displacement_rate(double t) const;

 private:
  GridFunction u0_;
  GridFunction du0_;
  GridFunction energy_density_;  // int_{-inf}^x u0'^2
  GeodesicPath path_;
  Tolerances tol_;
};

HSSolution hs_solve(const GridFunction& u0, const Tolerances& tol = {});

/// phi(t): a Diffeo before blow-up, the monotone continuation after.
std::variant<Diffeo, MonotoneMap> hs_flow(const HSSolution& sol, double t);

/// u(t) by the explicit formula. Throws PastBlowup outside the existence
/// interval.
GridFunction hs_velocity(const HSSolution& sol, double t);

/// (u(t), phi(t)); throws PastBlowup past the blow-up time.
std::pair<GridFunction, Diffeo> hs_eval(const HSSolution& sol, double t);

/// u(t) = phi_t o phi^{-1} with phi_t by central differences of phi in t.
GridFunction hs_velocity_from_flow(const HSSolution& sol, double t, double dt);

/// Sup over nodes of |u_t + u u_x - (1/2) int_{-inf}^x u_x^2| at the middle
/// of three equally spaced samples (u_t by central differences).
double hs_equation_residual(const GridFunction& prev, const GridFunction& mid,
                            const GridFunction& next, double dt);

/// Sup of |u_txx + (u u_x)_xx - u_x u_xx| at the middle sample.
double naive_variational_residual(const GridFunction& prev, const GridFunction& mid,
                                  const GridFunction& next, double dt);

/// Convenience: the HS residual of the analytic solution at time t.
double hs_residual(const HSSolution& sol, double t, double dt);

}  // namespace hsgeo
