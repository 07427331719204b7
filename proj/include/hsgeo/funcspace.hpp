#pragma once

#include <complex>
#include <vector>

#include "hsgeo/grid_function.hpp"

namespace hsgeo {

enum class Quadrature { Trapezoid, Simpson };

/// Integral over the grid window (full period on periodic grids, where both
/// rules reduce to the periodic trapezoid sum).
double integrate(const GridFunction& f, Quadrature rule = Quadrature::Simpson);
std::complex<double> integrate(const ComplexGridFunction& f,
                               Quadrature rule = Quadrature::Simpson);

/// L2 inner product and norm, Simpson.
double inner(const GridFunction& f, const GridFunction& g);
double l2_norm(const GridFunction& f);

/// Finite-difference derivative: 7-point stencils (sixth order), one-sided
/// at line ends, wrapped on periodic grids. Fewer than 7 nodes drops to the
/// widest stencil that fits. Throws GridTooSmall below 3 nodes.
GridFunction derivative(const GridFunction& f);
ComplexGridFunction derivative(const ComplexGridFunction& f);

/// Second derivative with the same stencil layout.
GridFunction second_derivative(const GridFunction& f);

/// x -> int_{-inf}^x f, the exterior of the window taken as zero. The
/// cumulative rule integrates the local quintic interpolant on each cell;
/// Trapezoid selects the plain cumulative trapezoid sum.
GridFunction antiderivative_from_minus_infinity(const GridFunction& f,
                                                Quadrature rule = Quadrature::Simpson);
ComplexGridFunction antiderivative_from_minus_infinity(const ComplexGridFunction& f,
                                                       Quadrature rule = Quadrature::Simpson);

/// Zero-mean antiderivative of f - mean(f) on a periodic grid.
GridFunction periodic_antiderivative(const GridFunction& f);

/// Value at the last (first) node, after checking the last (first) 1% of
/// nodes varies by less than tol.tail. Throws TailNotSettled otherwise.
double limit_at_plus_infinity(const GridFunction& f, const Tolerances& tol = {});
double limit_at_minus_infinity(const GridFunction& f, const Tolerances& tol = {});

/// Whether the tail on the given side is settled in the sense above.
bool tail_settled_right(const GridFunction& f, const Tolerances& tol = {});
bool tail_settled_left(const GridFunction& f, const Tolerances& tol = {});

/// Finite-difference weights for the m-th derivative at z from nodes x.
std::vector<double> fornberg_weights(double z, const std::vector<double>& x, int m);

}  // namespace hsgeo
