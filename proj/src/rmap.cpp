#include "hsgeo/rmap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsgeo/funcspace.hpp"

namespace hsgeo {

namespace {
Decay derivative_decay(Decay d) {
  return decays_at_infinity(d) ? d : Decay::IntegrableDerivatives;
}
}  // namespace

RPoint RPoint::from_gamma(GridFunction gamma) {
  if (gamma.grid().is_periodic()) {
    throw Error(ErrorKind::InvalidArgument, "R-map points live on line grids");
  }
  double m = *std::min_element(gamma.values().begin(), gamma.values().end());
  if (!(m > -2.0)) {
    throw Error(ErrorKind::ConstraintViolated,
                "gamma reaches " + std::to_string(m) + " <= -2");
  }
  return RPoint(std::move(gamma), m);
}

RPoint r_map(const Diffeo& phi, const Tolerances& tol) {
  if (phi.group_class() == GroupClass::A2 || phi.group_class() == GroupClass::PeriodicLift) {
    throw Error(ErrorKind::InvalidClass, "R-map is defined on classes A and A1");
  }
  if (phi.min_derivative() < tol.min_derivative) {
    throw Error(ErrorKind::DerivativeTooSmall,
                "min phi' = " + std::to_string(phi.min_derivative()));
  }
  auto gamma = phi.dphi().map([](double d) { return 2.0 * (std::sqrt(d) - 1.0); },
                              derivative_decay(phi.f().decay()));
  return RPoint::from_gamma(std::move(gamma));
}

GridFunction r_inverse_displacement(const GridFunction& gamma) {
  auto integrand = gamma.map([](double g) { return 0.25 * (g * g + 4.0 * g); },
                             derivative_decay(gamma.decay()));
  return antiderivative_from_minus_infinity(integrand);
}

GridFunction r_inverse_slope(const GridFunction& gamma) {
  return gamma.map([](double g) { return (1.0 + 0.5 * g) * (1.0 + 0.5 * g); }, Decay::Bounded);
}

Diffeo r_inverse(const RPoint& gamma, const Tolerances& tol) {
  GridFunction f = r_inverse_displacement(gamma.gamma());
  GroupClass cls = std::abs(f.back()) < tol.tail ? GroupClass::A : GroupClass::A1;
  return unchecked_diffeo(std::move(f), r_inverse_slope(gamma.gamma()), cls);
}

GridFunction tangent_r(const Diffeo& phi, const GridFunction& h, const Tolerances& tol) {
  require_same_grid(phi.grid(), h.grid(), "tangent_r");
  GridFunction X = compose_function(h, invert(phi, tol), tol);
  GridFunction dX = derivative(X).with_decay(derivative_decay(h.decay()));
  GridFunction dXphi = compose_function(dX, phi, tol);
  auto root = phi.dphi().map([](double d) { return std::sqrt(d); }, Decay::Bounded);
  return dXphi * root;
}

double pullback_metric(const Diffeo& phi, const GridFunction& h, const GridFunction& k,
                       const Tolerances& tol) {
  return integrate(tangent_r(phi, h, tol) * tangent_r(phi, k, tol));
}

double hdot1_metric(const Diffeo& phi, const GridFunction& h, const GridFunction& k,
                    const Tolerances& tol) {
  Diffeo inv = invert(phi, tol);
  auto X1 = derivative(compose_function(h, inv, tol));
  auto X2 = derivative(compose_function(k, inv, tol));
  return integrate(X1 * X2);
}

double image_defect(const GridFunction& gamma) {
  return integrate(gamma.map([](double g) { return g * (g + 4.0); }, gamma.decay()));
}

}  // namespace hsgeo
