#pragma once

#include <numbers>
#include <utility>

#include "hsgeo/diffeo.hpp"
#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Element (phi, alpha) of Diff_A1 x| A: phi a diffeomorphism, alpha a
/// decaying real function.
struct TwoCompConfig {
  Diffeo phi;
  GridFunction alpha;
};

/// gamma = 2 sqrt(phi') exp(i alpha / 2) - 2.
ComplexGridFunction r_map_2c(const TwoCompConfig& state, const Tolerances& tol = {});

/// f' = |gamma + 2|^2/4 - 1 integrated from -inf; alpha = 2 arg(gamma + 2)
/// continued from 0 at the left end to the nearest branch node by node.
/// Throws ConstraintViolated if gamma hits -2 and BranchCutAmbiguity if the
/// argument moves by more than `max_arg_step` between adjacent nodes.
TwoCompConfig r_inverse_2c(const ComplexGridFunction& gamma, const Tolerances& tol = {},
                           double max_arg_step = std::numbers::pi / 2);

/// T R(h, U) = phi'^{-1/2} h' e^{i alpha/2} + i phi'^{1/2} e^{i alpha/2} U.
ComplexGridFunction tangent_r_2c(const TwoCompConfig& state, const GridFunction& h,
                                 const GridFunction& U);

/// int X1'X2' + a b with (X_i, a) = (h o phi^{-1}, U o phi^{-1}).
double twocomp_metric(const TwoCompConfig& state, const GridFunction& h, const GridFunction& U,
                      const GridFunction& k, const GridFunction& V, const Tolerances& tol = {});

/// Re int T R(h,U) conj(T R(k,V)).
double twocomp_pullback(const TwoCompConfig& state, const GridFunction& h, const GridFunction& U,
                        const GridFunction& k, const GridFunction& V);

/// Solution of the two-component system with data (u0, rho0) along the
/// line t (u0' + i rho0).
class TwoCompSolution {
 public:
  TwoCompSolution(GridFunction u0, GridFunction rho0, const Tolerances& tol = {});

  const GridFunction& u0() const noexcept { return u0_; }
  const GridFunction& rho0() const noexcept { return rho0_; }
  const Grid& grid() const noexcept { return u0_.grid(); }
  /// 2/|u0'| minimised over nodes with rho0 = 0 (to tol.zero) and u0' < 0;
  /// +inf if there are none.
  double t_breakdown() const noexcept { return t_break_; }
  /// gamma(t) = t (u0' + i rho0).
  ComplexGridFunction gamma(double t) const;

  /// (phi(t), alpha(t)). Throws Breakdown at or past t_breakdown.
  TwoCompConfig config(double t) const;
  /// (u(t), rho(t)) = (phi_t o phi^{-1}, alpha_t o phi^{-1}).
  std::pair<GridFunction, GridFunction> velocity(double t) const;

 private:
  void check_time(double t) const;
  GridFunction u0_;
  GridFunction rho0_;
  GridFunction du0_;
  GridFunction density_;  // int_{-inf}^x u0'^2 + rho0^2
  double t_break_;
  Tolerances tol_;
};

TwoCompSolution twocomp_solve(const GridFunction& u0, const GridFunction& rho0,
                              const Tolerances& tol = {});

/// Sup residuals of u_t + u u_x - (1/2) int (u_x^2 + rho^2) and
/// rho_t + (rho u)_x at the middle of three samples.
std::pair<double, double> twocomp_residual(const std::pair<GridFunction, GridFunction>& prev,
                                           const std::pair<GridFunction, GridFunction>& mid,
                                           const std::pair<GridFunction, GridFunction>& next,
                                           double dt);

/// Limit at +inf of the candidate geodesic right-hand side for (X, a):
/// (1/2) int X'^2 + a^2 for class A data.
double twocomp_membership_defect(const GridFunction& X, const GridFunction& a,
                                 const Tolerances& tol = {});

}  // namespace hsgeo
