#pragma once

#include <limits>
#include <numbers>
#include <utility>

#include "hsgeo/diffeo.hpp"
#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Radius squared of the sphere the periodic R-map lands on: 4 * 2 pi.
inline constexpr double kSphereNormSq = 8.0 * std::numbers::pi;

/// Lifted circle diffeomorphism x + f(x), f 2pi-periodic. With
/// `normalize`, f is shifted to zero mean (the representative of its coset
/// modulo rotations).
Diffeo periodic_diffeo(GridFunction f, bool normalize = true, const Tolerances& tol = {});

/// f - mean(f).
GridFunction zero_mean(const GridFunction& f);

/// Positive periodic function on the L2 sphere of radius sqrt(8 pi).
class SpherePoint {
 public:
  /// Throws PositivityLost if gamma <= 0 somewhere and ConstraintViolated
  /// if |int gamma^2 - 8 pi| exceeds `norm_tol`.
  static SpherePoint from_gamma(GridFunction gamma, double norm_tol = 1e-8);
  const GridFunction& gamma() const noexcept { return gamma_; }

 private:
  explicit SpherePoint(GridFunction g) : gamma_(std::move(g)) {}
  GridFunction gamma_;
};

/// gamma = 2 sqrt(phi').
SpherePoint r_map_periodic(const Diffeo& phi, const Tolerances& tol = {});

/// f' = gamma^2/4 - 1 integrated around the circle, zero-mean f.
Diffeo r_inverse_periodic(const SpherePoint& gamma);

/// (sin((1-t)th) g0 + sin(t th) g1) / sin th, cos th = <g0, g1>/(8 pi),
/// renormalised. Throws AntipodalPoints and PositivityLost.
SpherePoint sphere_geodesic(const SpherePoint& g0, const SpherePoint& g1, double t);

/// Great circle through gamma0 with initial velocity k (k orthogonal to
/// gamma0): cos(w t) gamma0 + sin(w t) k / w with w = |k| / sqrt(8 pi).
class PeriodicHSSolution {
 public:
  /// Starts at the identity with velocity u0, so gamma0 = 2 and k = u0'.
  explicit PeriodicHSSolution(GridFunction u0, const Tolerances& tol = {});

  const GridFunction& u0() const noexcept { return u0_; }
  double omega() const noexcept { return omega_; }
  /// First time the circle leaves gamma > 0: atan(2 w/|min k|)/w.
  double t_positivity() const noexcept { return t_pos_; }

  GridFunction gamma(double t) const;
  GridFunction gamma_rate(double t) const;
  /// phi(t) with zero-mean displacement; throws PositivityLost past
  /// t_positivity.
  Diffeo flow(double t) const;
  /// u(t) = phi_t o phi^{-1}.
  GridFunction velocity(double t) const;

 private:
  void check_time(double t) const;
  GridFunction u0_;
  GridFunction k_;
  double omega_;
  double t_pos_;
  Tolerances tol_;
};

/// Sup of |u_txx + 2 u_x u_xx + u u_xxx| at the middle of three samples.
double periodic_hs_residual(const GridFunction& prev, const GridFunction& mid,
                            const GridFunction& next, double dt);

/// Periodic tangent map h'/sqrt(phi') and the pullback int of products.
GridFunction tangent_r_periodic(const Diffeo& phi, const GridFunction& h);
double periodic_pullback(const Diffeo& phi, const GridFunction& h, const GridFunction& k);
/// int X1' X2' with X_i = h_i o phi^{-1} on the circle.
double periodic_hdot1(const Diffeo& phi, const GridFunction& h, const GridFunction& k,
                      const Tolerances& tol = {});

/// Camassa-Holm R-map 2 sqrt(phi') exp(i f / 2).
ComplexGridFunction ch_r_map(const Diffeo& phi, const Tolerances& tol = {});

/// phi'^{-1/2} h' e^{if/2} + i phi'^{1/2} e^{if/2} h.
ComplexGridFunction ch_tangent(const Diffeo& phi, const GridFunction& h);

/// int (|gamma|^2 - 1); equals 6 pi on R-map images.
double ch_f1_displayed(const ComplexGridFunction& gamma);
/// int (|gamma|^2 - 4); vanishes on R-map images.
double ch_f1(const ComplexGridFunction& gamma);
/// 8 arg(gamma)' - |gamma|^2; equals -4 on R-map images.
GridFunction ch_f2_displayed(const ComplexGridFunction& gamma);
/// 8 arg(gamma)' - |gamma|^2 + 4; vanishes on R-map images.
GridFunction ch_f2(const ComplexGridFunction& gamma);

/// (Re int T h conj(T k), int X Y + X' Y') with X = h o phi^{-1}.
std::pair<double, double> ch_pullback_check(const Diffeo& phi, const GridFunction& h,
                                            const GridFunction& k, const Tolerances& tol = {});

/// Sup of |u_t - u_xxt + 3 u u_x - 2 u_x u_xx - u u_xxx| at the middle sample.
double ch_geodesic_residual(const GridFunction& prev, const GridFunction& mid,
                            const GridFunction& next, double dt);

}  // namespace hsgeo
