#pragma once

#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Lie-algebra layer for the right-invariant homogeneous H^1 metric on
/// vector fields of the line. Vector fields are grid functions of class A
/// (vanishing at both ends) or A1 (vanishing at -inf, bounded at +inf).
///
/// Sign conventions: [X, Y] = X'Y - XY' and ad(X)Y = [X, Y]. With these,
/// ad(X)^* G(X) = G(Z) for Z = ad_star_symmetric(X) and the geodesic
/// equation reads u_t = -Z(u) = -u u_x + (1/2) int_{-inf}^x u_x^2.

/// Derivative of an A1 field; decays at both ends.
GridFunction field_derivative(const GridFunction& X);

/// Throws InvalidClass unless X has the tails of an A (vanish both ends) or
/// A1 (vanish at -inf, settled at +inf) field.
void check_field(const GridFunction& X, bool class_a, const Tolerances& tol = {});

GridFunction lie_bracket(const GridFunction& X, const GridFunction& Y);
GridFunction ad(const GridFunction& X, const GridFunction& Y);

/// Z = -(1/2) int_{-inf}^x X'^2 + (1/2)(X^2)'.
GridFunction ad_star_symmetric(const GridFunction& X);

/// Right-hand side -Z of the geodesic equation u_t = -Z(u).
GridFunction geodesic_rhs(const GridFunction& X);

/// rho(X)Y = (1/2)(-int_{-inf}^x X'Y' + (XY)'); symmetric in X, Y.
GridFunction rho(const GridFunction& X, const GridFunction& Y);

/// gamma(U, V) = int U'V'.
double hdot1_pairing(const GridFunction& U, const GridFunction& V);

/// gamma(rho_X X, rho_Y Y) - |rho_X Y|^2 + 3/4 |[X,Y]|^2 - gamma(rho_X Y, [X,Y])
///   + gamma(Y, [X,[X,Y]]).
double curvature_numerator(const GridFunction& X, const GridFunction& Y);

/// gamma(rho(X)Y, Z) + gamma(rho(Y)Z, X) + gamma(rho(Z)X, Y).
double cyclic_residual(const GridFunction& X, const GridFunction& Y, const GridFunction& Z);

/// gamma(rho(X)Y, Z) - (1/2)gamma(X, ad(Y)Z) - (1/2)gamma(Y, ad(X)Z).
double compatibility_residual(const GridFunction& X, const GridFunction& Y,
                              const GridFunction& Z);

/// Limit at +inf of the geodesic right-hand side: the obstruction to it
/// lying in class A. Equals (1/2) int X'^2 for class A fields.
double membership_defect(const GridFunction& X, const Tolerances& tol = {});

}  // namespace hsgeo
