#pragma once

#include "hsgeo/diffeo.hpp"
#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Point of the R-map codomain: a decaying function with values > -2.
class RPoint {
 public:
  /// Throws ConstraintViolated if min gamma <= -2, InvalidArgument on a
  /// periodic grid.
  static RPoint from_gamma(GridFunction gamma);

  const GridFunction& gamma() const noexcept { return gamma_; }
  const Grid& grid() const noexcept { return gamma_.grid(); }
  double min_value() const noexcept { return min_; }

 private:
  RPoint(GridFunction gamma, double min) : gamma_(std::move(gamma)), min_(min) {}
  GridFunction gamma_;
  double min_;
};

/// gamma = 2 (sqrt(phi') - 1). Classes A and A1 only.
RPoint r_map(const Diffeo& phi, const Tolerances& tol = {});

/// x + (1/4) int_{-inf}^x (gamma^2 + 4 gamma); class A when the shift
/// vanishes to tail tolerance, A1 otherwise.
/// phi' = (1 + gamma/2)^2 of r_inverse(gamma), exact at the nodes.
GridFunction r_inverse_slope(const GridFunction& gamma);

Diffeo r_inverse(const RPoint& gamma, const Tolerances& tol = {});

/// The same formula for gamma >= -2 (no constraint check); the result is a
/// monotone map, a diffeomorphism while gamma > -2.
GridFunction r_inverse_displacement(const GridFunction& gamma);

/// T_phi R.h = sqrt(phi') (X' o phi) with X = h o phi^{-1}.
GridFunction tangent_r(const Diffeo& phi, const GridFunction& h, const Tolerances& tol = {});

/// int T_phi R.h * T_phi R.k.
double pullback_metric(const Diffeo& phi, const GridFunction& h, const GridFunction& k,
                       const Tolerances& tol = {});

/// int X1' X2' with X_i = h_i o phi^{-1}: the right-invariant metric
/// evaluated in Eulerian form.
double hdot1_metric(const Diffeo& phi, const GridFunction& h, const GridFunction& k,
                    const Tolerances& tol = {});

/// F(gamma) = int gamma (gamma + 4): zero iff r_inverse(gamma) has no shift.
double image_defect(const GridFunction& gamma);

}  // namespace hsgeo
