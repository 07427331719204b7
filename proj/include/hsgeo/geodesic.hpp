#pragma once

#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include "hsgeo/diffeo.hpp"
#include "hsgeo/rmap.hpp"

namespace hsgeo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class PathOrigin { Bvp, Ivp, Line };
enum class TimeDirection { Forward, Backward };

/// Straight line t -> gamma0 + t k in R-map space.
class GeodesicPath {
 public:
  /// gamma0 must satisfy min > -2 (ConstraintViolated).
  GeodesicPath(GridFunction gamma0, GridFunction k, PathOrigin origin);

  const GridFunction& gamma0() const noexcept { return gamma0_; }
  const GridFunction& k() const noexcept { return k_; }
  PathOrigin origin() const noexcept { return origin_; }
  const Grid& grid() const noexcept { return gamma0_.grid(); }

  /// gamma0 + t k.
  GridFunction gamma_at(double t) const;
  /// First positive time the line reaches -2 (or +inf).
  double t_exit_forward() const noexcept { return t_forward_; }
  /// First negative time the line reaches -2 (or -inf).
  double t_exit_backward() const noexcept { return t_backward_; }
  /// Smallest |t| at which the line reaches -2 in either direction.
  double t_exit() const noexcept;
  /// Whether gamma_at(t) stays above -2.
  bool inside(double t) const noexcept { return t < t_forward_ && t > t_backward_; }

 private:
  GridFunction gamma0_;
  GridFunction k_;
  PathOrigin origin_;
  double t_forward_;
  double t_backward_;
};

/// Connecting geodesic: gamma0 = R(phi0), k = R(phi1) - R(phi0).
GeodesicPath geodesic_bvp(const Diffeo& phi0, const Diffeo& phi1, const Tolerances& tol = {});

/// Geodesic with initial velocity h = u0 o phi0: k = T_{phi0} R.h.
GeodesicPath geodesic_ivp(const Diffeo& phi0, const GridFunction& h, const Tolerances& tol = {});

/// Geodesic from Id with direction k in R-map space.
GeodesicPath geodesic_from_identity(const GridFunction& k);

/// R^{-1}(gamma0 + t k): a Diffeo inside the exit interval, the monotone
/// continuation outside.
std::variant<Diffeo, MonotoneMap> evaluate(const GeodesicPath& path, double t,
                                           const Tolerances& tol = {});

/// Displacement f(t) of R^{-1}(gamma0 + t k), valid for all t.
GridFunction evaluate_displacement(const GeodesicPath& path, double t);

/// ||R(phi1) - R(phi0)||_{L2} = 2 sqrt(int (sqrt(phi1') - sqrt(phi0'))^2).
double distance(const Diffeo& phi0, const Diffeo& phi1, const Tolerances& tol = {});

/// Signed time at which the line reaches -2: the smallest positive
/// (2 + gamma0)/(-k) over nodes with k < 0 when going forward, the largest
/// negative one over k > 0 backward. +inf / -inf if never.
double blowup_time(const GeodesicPath& path, TimeDirection direction = TimeDirection::Forward);
/// Same for a bare (gamma0, k) pair.
double blowup_time(const GridFunction& gamma0, const GridFunction& k, TimeDirection direction);

/// Shift(phi(t)) = c0 + c1 t + c2 t^2 and u(t, inf) = c1 + 2 c2 t.
struct ShiftPolynomial {
  double c0 = 0.0;  // Shift(phi0)
  double c1 = 0.0;  // u0(inf) = (1/2) int (gamma0 + 2) k
  double c2 = 0.0;  // (1/4) int k^2

  double shift(double t) const { return c0 + t * (c1 + t * c2); }
  double u_at_infinity(double t) const { return c1 + 2.0 * c2 * t; }
  /// Real roots of shift(t) = 0 (at most two, ascending).
  std::vector<double> shift_roots() const;
  /// Roots of u(t, inf) = 0 (at most one).
  std::vector<double> velocity_roots() const;
};

ShiftPolynomial shift_polynomial(const GeodesicPath& path);

/// (Shift(phi(t)), u(t, inf)) from the closed form.
std::pair<double, double> shift_along_geodesic(const GeodesicPath& path, double t);

}  // namespace hsgeo
