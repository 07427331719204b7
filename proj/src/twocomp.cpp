#include "hsgeo/twocomp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hsgeo/connection.hpp"
#include "hsgeo/funcspace.hpp"

namespace hsgeo {

using cplx = std::complex<double>;

ComplexGridFunction r_map_2c(const TwoCompConfig& s, const Tolerances& tol) {
  require_same_grid(s.phi.grid(), s.alpha.grid(), "r_map_2c");
  if (s.phi.min_derivative() < tol.min_derivative) {
    throw Error(ErrorKind::DerivativeTooSmall,
                "min phi' = " + std::to_string(s.phi.min_derivative()));
  }
  const std::size_t n = s.alpha.size();
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = 2.0 * std::sqrt(s.phi.dphi()[i]) * std::polar(1.0, 0.5 * s.alpha[i]) - 2.0;
  }
  return {s.alpha.grid(), std::move(v), Decay::IntegrableDerivatives};
}

TwoCompConfig r_inverse_2c(const ComplexGridFunction& gamma, const Tolerances& tol,
                           double max_arg_step) {
  const Grid& g = gamma.grid();
  if (g.is_periodic()) throw Error(ErrorKind::InvalidArgument, "two-component maps live on the line");
  const std::size_t n = gamma.size();
  std::vector<double> dens(n), alpha(n);
  double prev_arg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx w = gamma[i] + 2.0;
    if (std::abs(w) <= tol.zero) {
      throw Error(ErrorKind::ConstraintViolated, "gamma hits -2 at x = " + std::to_string(g.node(i)));
    }
    dens[i] = 0.25 * std::norm(w) - 1.0;
    double raw = std::arg(w);
    double a;
    if (i == 0) {
      a = raw;
    } else {
      double step = std::remainder(raw - prev_arg, 2.0 * std::numbers::pi);
      if (std::abs(step) > max_arg_step) {
        throw Error(ErrorKind::BranchCutAmbiguity,
                    "argument of gamma + 2 jumps by " + std::to_string(step) + " at x = " +
                        std::to_string(g.node(i)));
      }
      a = prev_arg + step;
    }
    prev_arg = a;
    alpha[i] = 2.0 * a;
  }
  GridFunction fprime(g, std::move(dens), Decay::IntegrableDerivatives);
  GridFunction f = antiderivative_from_minus_infinity(fprime);
  GroupClass cls = std::abs(f.back()) < tol.tail ? GroupClass::A : GroupClass::A1;
  return {unchecked_diffeo(std::move(f), fprime + 1.0, cls),
          GridFunction(g, std::move(alpha), Decay::IntegrableDerivatives)};
}

ComplexGridFunction tangent_r_2c(const TwoCompConfig& s, const GridFunction& h,
                                 const GridFunction& U) {
  auto dh = derivative(h);
  const std::size_t n = h.size();
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double d = s.phi.dphi()[i];
    cplx e = std::polar(1.0, 0.5 * s.alpha[i]);
    v[i] = dh[i] / std::sqrt(d) * e + cplx(0.0, 1.0) * std::sqrt(d) * e * U[i];
  }
  return {h.grid(), std::move(v), Decay::IntegrableDerivatives};
}

double twocomp_metric(const TwoCompConfig& s, const GridFunction& h, const GridFunction& U,
                      const GridFunction& k, const GridFunction& V, const Tolerances& tol) {
  Diffeo inv = invert(s.phi, tol);
  auto X1 = derivative(compose_function(h, inv, tol));
  auto X2 = derivative(compose_function(k, inv, tol));
  auto a = compose_function(U, inv, tol);
  auto b = compose_function(V, inv, tol);
  return integrate(X1 * X2 + a * b);
}

double twocomp_pullback(const TwoCompConfig& s, const GridFunction& h, const GridFunction& U,
                        const GridFunction& k, const GridFunction& V) {
  auto p = tangent_r_2c(s, h, U);
  auto q = tangent_r_2c(s, k, V);
  std::vector<double> re(p.size());
  for (std::size_t i = 0; i < re.size(); ++i) re[i] = (p[i] * std::conj(q[i])).real();
  return integrate(GridFunction(p.grid(), std::move(re), Decay::IntegrableDerivatives));
}

TwoCompSolution::TwoCompSolution(GridFunction u0, GridFunction rho0, const Tolerances& tol)
    : u0_(std::move(u0)),
      rho0_(std::move(rho0)),
      du0_(field_derivative(u0_)),
      density_(antiderivative_from_minus_infinity(du0_ * du0_ + rho0_ * rho0_)),
      t_break_(std::numeric_limits<double>::infinity()),
      tol_(tol) {
  require_same_grid(u0_.grid(), rho0_.grid(), "twocomp_solve");
  check_field(u0_, false, tol_);
  for (std::size_t i = 0; i < du0_.size(); ++i) {
    if (std::abs(rho0_[i]) <= tol_.zero && du0_[i] < 0.0) {
      t_break_ = std::min(t_break_, 2.0 / -du0_[i]);
    }
  }
}

ComplexGridFunction TwoCompSolution::gamma(double t) const {
  std::vector<cplx> v(u0_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = t * cplx(du0_[i], rho0_[i]);
  return {u0_.grid(), std::move(v), Decay::IntegrableDerivatives};
}

void TwoCompSolution::check_time(double t) const {
  if (t < 0.0) throw Error(ErrorKind::InvalidArgument, "two-component solutions run forward");
  if (t >= t_break_) {
    throw Error(ErrorKind::Breakdown,
                "solution breaks at t = " + std::to_string(t_break_) + " (requested " +
                    std::to_string(t) + ")");
  }
}

TwoCompConfig TwoCompSolution::config(double t) const {
  check_time(t);
  GridFunction f = density_ * (0.25 * t * t) + u0_ * t;
  std::vector<double> alpha(u0_.size()), slope(u0_.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    cplx w = 2.0 + t * cplx(du0_[i], rho0_[i]);
    alpha[i] = 2.0 * std::arg(w);
    slope[i] = 0.25 * std::norm(w);
  }
  GroupClass cls = std::abs(f.back()) < tol_.tail ? GroupClass::A : GroupClass::A1;
  return {unchecked_diffeo(std::move(f), GridFunction(u0_.grid(), std::move(slope), Decay::Bounded),
                           cls),
          GridFunction(u0_.grid(), std::move(alpha), Decay::IntegrableDerivatives)};
}

std::pair<GridFunction, GridFunction> TwoCompSolution::velocity(double t) const {
  TwoCompConfig c = config(t);
  Diffeo inv = invert(c.phi, tol_);
  GridFunction rate = density_ * (0.5 * t) + u0_;
  std::vector<double> at(u0_.size());
  for (std::size_t i = 0; i < at.size(); ++i) {
    cplx k(du0_[i], rho0_[i]);
    at[i] = 2.0 * (k / (2.0 + t * k)).imag();
  }
  GridFunction alpha_t(u0_.grid(), std::move(at), Decay::IntegrableDerivatives);
  return {compose_function(rate, inv, tol_), compose_function(alpha_t, inv, tol_)};
}

TwoCompSolution twocomp_solve(const GridFunction& u0, const GridFunction& rho0,
                              const Tolerances& tol) {
  return TwoCompSolution(u0, rho0, tol);
}

std::pair<double, double> twocomp_residual(const std::pair<GridFunction, GridFunction>& prev,
                                           const std::pair<GridFunction, GridFunction>& mid,
                                           const std::pair<GridFunction, GridFunction>& next,
                                           double dt) {
  const auto& [u, r] = mid;
  auto ut = (next.first - prev.first) * (0.5 / dt);
  auto rt = (next.second - prev.second) * (0.5 / dt);
  auto ux = field_derivative(u);
  auto ru = r * u;
  auto res_u = ut + u * ux - antiderivative_from_minus_infinity(ux * ux + r * r) * 0.5;
  auto res_r = rt + derivative(ru);
  return {res_u.sup_norm(), res_r.sup_norm()};
}

double twocomp_membership_defect(const GridFunction& X, const GridFunction& a,
                                 const Tolerances& tol) {
  auto dX = field_derivative(X);
  auto Z = (derivative(X * X) - antiderivative_from_minus_infinity(dX * dX + a * a)) * 0.5;
  return limit_at_plus_infinity(-Z, tol);
}

}  // namespace hsgeo
