#include "hsgeo/connection.hpp"

#include <cmath>
#include <string>

#include "hsgeo/funcspace.hpp"

namespace hsgeo {

GridFunction field_derivative(const GridFunction& X) {
  auto d = derivative(X);
  if (X.grid().is_periodic() || decays_at_infinity(X.decay())) return d;
  return d.with_decay(Decay::IntegrableDerivatives);
}

void check_field(const GridFunction& X, bool class_a, const Tolerances& tol) {
  if (X.grid().is_periodic()) throw Error(ErrorKind::InvalidClass, "fields live on line grids");
  if (std::abs(X.front()) >= tol.tail) {
    throw Error(ErrorKind::InvalidClass, "field does not vanish at -inf");
  }
  if (class_a && std::abs(X.back()) >= tol.tail) {
    throw Error(ErrorKind::InvalidClass, "class A field does not vanish at +inf");
  }
  if (!class_a && !tail_settled_right(X, tol)) {
    throw Error(ErrorKind::InvalidClass, "A1 field has no limit at +inf");
  }
}

GridFunction lie_bracket(const GridFunction& X, const GridFunction& Y) {
  return field_derivative(X) * Y - X * field_derivative(Y);
}

GridFunction ad(const GridFunction& X, const GridFunction& Y) { return lie_bracket(X, Y); }

GridFunction rho(const GridFunction& X, const GridFunction& Y) {
  auto cross = antiderivative_from_minus_infinity(field_derivative(X) * field_derivative(Y));
  return (derivative(X * Y) - cross) * 0.5;
}

GridFunction ad_star_symmetric(const GridFunction& X) { return rho(X, X); }

GridFunction geodesic_rhs(const GridFunction& X) { return -ad_star_symmetric(X); }

double hdot1_pairing(const GridFunction& U, const GridFunction& V) {
  return integrate(derivative(U) * derivative(V));
}

double curvature_numerator(const GridFunction& X, const GridFunction& Y) {
  auto rxx = rho(X, X);
  auto ryy = rho(Y, Y);
  auto rxy = rho(X, Y);
  auto b = lie_bracket(X, Y);
  auto bb = lie_bracket(X, b);
  return hdot1_pairing(rxx, ryy) - hdot1_pairing(rxy, rxy) + 0.75 * hdot1_pairing(b, b) -
         hdot1_pairing(rxy, b) + hdot1_pairing(Y, bb);
}

double cyclic_residual(const GridFunction& X, const GridFunction& Y, const GridFunction& Z) {
  return hdot1_pairing(rho(X, Y), Z) + hdot1_pairing(rho(Y, Z), X) + hdot1_pairing(rho(Z, X), Y);
}

double compatibility_residual(const GridFunction& X, const GridFunction& Y,
                              const GridFunction& Z) {
  return hdot1_pairing(rho(X, Y), Z) - 0.5 * hdot1_pairing(X, ad(Y, Z)) -
         0.5 * hdot1_pairing(Y, ad(X, Z));
}

double membership_defect(const GridFunction& X, const Tolerances& tol) {
  return limit_at_plus_infinity(geodesic_rhs(X), tol);
}

}  // namespace hsgeo
