#include "hsgeo/periodic_ch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsgeo/funcspace.hpp"

namespace hsgeo {

using cplx = std::complex<double>;

namespace {

void require_periodic(const Grid& g, const char* what) {
  if (!g.is_periodic()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs a periodic grid");
  }
}

void require_positive_derivative(const Diffeo& phi, const Tolerances& tol) {
  if (phi.min_derivative() < tol.min_derivative) {
    throw Error(ErrorKind::DerivativeTooSmall,
                "min phi' = " + std::to_string(phi.min_derivative()));
  }
}

}  // namespace

GridFunction zero_mean(const GridFunction& f) {
  double mean = integrate(f) / f.grid().length();
  return f + (-mean);
}

Diffeo periodic_diffeo(GridFunction f, bool normalize, const Tolerances& tol) {
  require_periodic(f.grid(), "periodic_diffeo");
  if (normalize) f = zero_mean(f);
  return Diffeo::from_displacement(std::move(f), GroupClass::PeriodicLift, tol);
}

SpherePoint SpherePoint::from_gamma(GridFunction gamma, double norm_tol) {
  require_periodic(gamma.grid(), "SpherePoint");
  double m = *std::min_element(gamma.values().begin(), gamma.values().end());
  if (!(m > 0.0)) throw Error(ErrorKind::PositivityLost, "gamma reaches " + std::to_string(m));
  double nsq = integrate(gamma * gamma);
  if (std::abs(nsq - kSphereNormSq) > norm_tol) {
    throw Error(ErrorKind::ConstraintViolated,
                "int gamma^2 = " + std::to_string(nsq) + " is off the sphere");
  }
  return SpherePoint(std::move(gamma));
}

SpherePoint r_map_periodic(const Diffeo& phi, const Tolerances& tol) {
  require_periodic(phi.grid(), "r_map_periodic");
  require_positive_derivative(phi, tol);
  return SpherePoint::from_gamma(
      phi.dphi().map([](double d) { return 2.0 * std::sqrt(d); }, Decay::Periodic), 1e-6);
}

Diffeo r_inverse_periodic(const SpherePoint& gamma) {
  auto fp = gamma.gamma().map([](double g) { return 0.25 * g * g - 1.0; }, Decay::Periodic);
  return unchecked_diffeo(periodic_antiderivative(fp), fp + 1.0, GroupClass::PeriodicLift);
}

SpherePoint sphere_geodesic(const SpherePoint& g0, const SpherePoint& g1, double t) {
  const auto& a = g0.gamma();
  const auto& b = g1.gamma();
  require_same_grid(a.grid(), b.grid(), "sphere_geodesic");
  double c = std::clamp(integrate(a * b) / kSphereNormSq, -1.0, 1.0);
  double th = std::acos(c);
  GridFunction out = a;
  if (th < 1e-12) {
    out = a * (1.0 - t) + b * t;
  } else {
    if (std::abs(std::sin(th)) < 1e-10) {
      throw Error(ErrorKind::AntipodalPoints, "great circle is not unique");
    }
    out = (a * std::sin((1.0 - t) * th) + b * std::sin(t * th)) * (1.0 / std::sin(th));
  }
  out = out * std::sqrt(kSphereNormSq / integrate(out * out));
  return SpherePoint::from_gamma(std::move(out), 1e-6);
}

PeriodicHSSolution::PeriodicHSSolution(GridFunction u0, const Tolerances& tol)
    : u0_(std::move(u0)), k_(derivative(u0_)), tol_(tol) {
  require_periodic(u0_.grid(), "PeriodicHSSolution");
  omega_ = std::sqrt(integrate(k_ * k_) / kSphereNormSq);
  double kmin = *std::min_element(k_.values().begin(), k_.values().end());
  if (omega_ == 0.0 || kmin >= 0.0) {
    t_pos_ = std::numeric_limits<double>::infinity();
  } else {
    t_pos_ = std::atan(2.0 * omega_ / -kmin) / omega_;
  }
}

GridFunction PeriodicHSSolution::gamma(double t) const {
  if (omega_ == 0.0) return GridFunction::constant(u0_.grid(), 2.0, Decay::Periodic);
  return k_ * (std::sin(omega_ * t) / omega_) + 2.0 * std::cos(omega_ * t);
}

GridFunction PeriodicHSSolution::gamma_rate(double t) const {
  if (omega_ == 0.0) return GridFunction::zero(u0_.grid());
  return k_ * std::cos(omega_ * t) + (-2.0 * omega_ * std::sin(omega_ * t));
}

void PeriodicHSSolution::check_time(double t) const {
  if (t >= t_pos_ || t <= -t_pos_) {
    throw Error(ErrorKind::PositivityLost,
                "great circle leaves gamma > 0 at t = " + std::to_string(t_pos_));
  }
}

Diffeo PeriodicHSSolution::flow(double t) const {
  check_time(t);
  auto fp = gamma(t).map([](double g) { return 0.25 * g * g - 1.0; }, Decay::Periodic);
  return unchecked_diffeo(periodic_antiderivative(fp), fp + 1.0, GroupClass::PeriodicLift);
}

GridFunction PeriodicHSSolution::velocity(double t) const {
  Diffeo phi = flow(t);
  auto rate = periodic_antiderivative(gamma(t) * gamma_rate(t) * 0.5);
  return compose_function(rate, invert(phi, tol_), tol_);
}

double periodic_hs_residual(const GridFunction& prev, const GridFunction& mid,
                            const GridFunction& next, double dt) {
  auto ut = (next - prev) * (0.5 / dt);
  auto ux = derivative(mid);
  auto uxx = derivative(ux);
  auto r = derivative(derivative(ut)) + ux * uxx * 2.0 + mid * derivative(uxx);
  return r.sup_norm();
}

GridFunction tangent_r_periodic(const Diffeo& phi, const GridFunction& h) {
  auto dh = derivative(h);
  std::vector<double> v(h.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = dh[i] / std::sqrt(phi.dphi()[i]);
  return {h.grid(), std::move(v), Decay::Periodic};
}

double periodic_pullback(const Diffeo& phi, const GridFunction& h, const GridFunction& k) {
  return integrate(tangent_r_periodic(phi, h) * tangent_r_periodic(phi, k));
}

double periodic_hdot1(const Diffeo& phi, const GridFunction& h, const GridFunction& k,
                      const Tolerances& tol) {
  Diffeo inv = invert(phi, tol);
  auto X = derivative(compose_function(h, inv, tol));
  auto Y = derivative(compose_function(k, inv, tol));
  return integrate(X * Y);
}

ComplexGridFunction ch_r_map(const Diffeo& phi, const Tolerances& tol) {
  require_periodic(phi.grid(), "ch_r_map");
  require_positive_derivative(phi, tol);
  std::vector<cplx> v(phi.grid().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = 2.0 * std::sqrt(phi.dphi()[i]) * std::polar(1.0, 0.5 * phi.f()[i]);
  }
  return {phi.grid(), std::move(v), Decay::Periodic};
}

ComplexGridFunction ch_tangent(const Diffeo& phi, const GridFunction& h) {
  auto dh = derivative(h);
  std::vector<cplx> v(h.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double d = phi.dphi()[i];
    cplx e = std::polar(1.0, 0.5 * phi.f()[i]);
    v[i] = dh[i] / std::sqrt(d) * e + cplx(0.0, 1.0) * std::sqrt(d) * e * h[i];
  }
  return {h.grid(), std::move(v), Decay::Periodic};
}

namespace {
GridFunction modulus_sq(const ComplexGridFunction& g) {
  return g.map([](cplx z) { return std::norm(z); }, g.decay());
}
}  // namespace

double ch_f1_displayed(const ComplexGridFunction& gamma) {
  return integrate(modulus_sq(gamma) + (-1.0));
}

double ch_f1(const ComplexGridFunction& gamma) { return integrate(modulus_sq(gamma) + (-4.0)); }

GridFunction ch_f2_displayed(const ComplexGridFunction& gamma) {
  auto dg = derivative(gamma);
  std::vector<double> v(gamma.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double m = std::norm(gamma[i]);
    double darg = (std::conj(gamma[i]) * dg[i]).imag() / m;
    v[i] = 8.0 * darg - m;
  }
  return {gamma.grid(), std::move(v), gamma.decay()};
}

GridFunction ch_f2(const ComplexGridFunction& gamma) { return ch_f2_displayed(gamma) + 4.0; }

std::pair<double, double> ch_pullback_check(const Diffeo& phi, const GridFunction& h,
                                            const GridFunction& k, const Tolerances& tol) {
  auto th = ch_tangent(phi, h);
  auto tk = ch_tangent(phi, k);
  std::vector<double> re(th.size());
  for (std::size_t i = 0; i < re.size(); ++i) re[i] = (th[i] * std::conj(tk[i])).real();
  double lhs = integrate(GridFunction(h.grid(), std::move(re), Decay::Periodic));
  Diffeo inv = invert(phi, tol);
  auto X = compose_function(h, inv, tol);
  auto Y = compose_function(k, inv, tol);
  double rhs = integrate(X * Y + derivative(X) * derivative(Y));
  return {lhs, rhs};
}

double ch_geodesic_residual(const GridFunction& prev, const GridFunction& mid,
                            const GridFunction& next, double dt) {
  auto ut = (next - prev) * (0.5 / dt);
  auto ux = derivative(mid);
  auto uxx = derivative(ux);
  auto r = ut - derivative(derivative(ut)) + mid * ux * 3.0 - ux * uxx * 2.0 -
           mid * derivative(uxx);
  return r.sup_norm();
}

}  // namespace hsgeo
