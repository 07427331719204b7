#include "hsgeo/diffeo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsgeo/funcspace.hpp"

namespace hsgeo {

std::string_view to_string(GroupClass c) {
  switch (c) {
    case GroupClass::A: return "A";
    case GroupClass::A1: return "A1";
    case GroupClass::A2: return "A2";
    case GroupClass::PeriodicLift: return "periodic";
  }
  return "A2";
}

GroupClass group_class_from_string(std::string_view name) {
  for (GroupClass c : {GroupClass::A, GroupClass::A1, GroupClass::A2, GroupClass::PeriodicLift}) {
    if (to_string(c) == name) return c;
  }
  throw Error(ErrorKind::ParseError, "unknown group class '" + std::string(name) + "'");
}

GroupClass weakest(GroupClass a, GroupClass b) {
  if (a == GroupClass::PeriodicLift || b == GroupClass::PeriodicLift) {
    if (a != b) throw Error(ErrorKind::InvalidClass, "cannot mix circle and line maps");
    return a;
  }
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

GroupClass classify(const GridFunction& f, const Tolerances& tol) {
  if (f.grid().is_periodic()) return GroupClass::PeriodicLift;
  bool left = std::abs(f.front()) < tol.tail;
  bool right = std::abs(f.back()) < tol.tail;
  if (left && right) return GroupClass::A;
  if (left) return GroupClass::A1;
  return GroupClass::A2;
}

namespace {

HermiteInterpolant monotone_displacement(const GridFunction& f, const GridFunction& dphi) {
  const Grid& g = f.grid();
  const std::size_t n = g.size();
  std::vector<double> y(n), m(n);
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = g.node(i) + f[i];
    m[i] = dphi[i];
  }
  // limiter on the phi data; cells touching a limited slope fall back to cubic
  auto changed = fritsch_carlson(g, y, m, g.is_periodic() ? Grid::kPeriod : 0.0);
  std::vector<char> cubic(n, 0);
  for (std::size_t i : changed) {
    cubic[i] = 1;
    cubic[(i + n - 1) % n] = 1;
  }
  std::vector<double> fv(f.values().begin(), f.values().end()), fm(n);
  for (std::size_t i = 0; i < n; ++i) fm[i] = m[i] - 1.0;
  auto c = second_derivative(f);
  return HermiteInterpolant(g, std::move(fv), std::move(fm),
                            std::vector<double>(c.values().begin(), c.values().end()),
                            std::move(cubic));
}

void check_class(const GridFunction& f, GroupClass cls, const Tolerances& tol) {
  bool periodic = f.grid().is_periodic();
  if ((cls == GroupClass::PeriodicLift) != periodic) {
    throw Error(ErrorKind::InvalidClass, "periodic lifts live exactly on periodic grids");
  }
  if (periodic) return;
  if ((cls == GroupClass::A || cls == GroupClass::A1) && std::abs(f.front()) >= tol.tail) {
    throw Error(ErrorKind::InvalidClass, "class " + std::string(to_string(cls)) +
                                             " requires f(-inf) = 0, got " +
                                             std::to_string(f.front()));
  }
  if (cls == GroupClass::A && std::abs(f.back()) >= tol.tail) {
    throw Error(ErrorKind::InvalidClass,
                "class A requires f(+inf) = 0, got " + std::to_string(f.back()));
  }
}

// f evaluated at y, with constant extension past a settled tail.
double eval_displacement(const MonotoneMap& phi, double y, const Tolerances& tol) {
  const Grid& g = phi.grid();
  if (!g.is_periodic()) {
    if (y > g.x_max()) {
      if (!tail_settled_right(phi.f(), tol)) {
        throw Error(ErrorKind::RangeExceedsWindow,
                    "point " + std::to_string(y) + " beyond window with unsettled right tail");
      }
      return phi.f().back();
    }
    if (y < g.x_min()) {
      if (!tail_settled_left(phi.f(), tol)) {
        throw Error(ErrorKind::RangeExceedsWindow,
                    "point " + std::to_string(y) + " beyond window with unsettled left tail");
      }
      return phi.f().front();
    }
  }
  return phi.displacement()(y);
}

}  // namespace

MonotoneMap::MonotoneMap(GridFunction f, GroupClass cls)
    : f_(std::move(f)),
      cls_(cls),
      dphi_(derivative(f_) + 1.0),
      min_dphi_(*std::min_element(dphi_.values().begin(), dphi_.values().end())),
      interp_(monotone_displacement(f_, dphi_)) {}

MonotoneMap::MonotoneMap(GridFunction f, GridFunction dphi, GroupClass cls)
    : f_(std::move(f)),
      cls_(cls),
      dphi_(std::move(dphi)),
      min_dphi_(*std::min_element(dphi_.values().begin(), dphi_.values().end())),
      interp_(monotone_displacement(f_, dphi_)) {
  require_same_grid(f_.grid(), dphi_.grid(), "MonotoneMap");
}

MonotoneMap MonotoneMap::from_displacement(GridFunction f, GroupClass cls,
                                           const Tolerances& tol) {
  check_class(f, cls, tol);
  MonotoneMap m(std::move(f), cls);
  if (m.min_derivative() < -tol.monotone_slack) {
    throw Error(ErrorKind::DerivativeTooSmall,
                "monotone map has phi' = " + std::to_string(m.min_derivative()) + " < 0");
  }
  return m;
}

GridFunction MonotoneMap::phi() const {
  const Grid& g = grid();
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.node(i) + f_[i];
  return {g, std::move(v), g.is_periodic() ? Decay::Periodic : Decay::Bounded};
}

Diffeo Diffeo::identity(const Grid& grid) {
  return Diffeo(MonotoneMap(GridFunction::zero(grid),
                            grid.is_periodic() ? GroupClass::PeriodicLift : GroupClass::A));
}

Diffeo Diffeo::from_displacement(GridFunction f, GroupClass cls, const Tolerances& tol) {
  check_class(f, cls, tol);
  MonotoneMap m(std::move(f), cls);
  if (m.min_derivative() < tol.min_derivative) {
    throw Error(ErrorKind::DerivativeTooSmall,
                "min phi' = " + std::to_string(m.min_derivative()) + " below " +
                    std::to_string(tol.min_derivative));
  }
  return Diffeo(std::move(m));
}

Diffeo Diffeo::from_displacement(GridFunction f, const Tolerances& tol) {
  GroupClass cls = classify(f, tol);
  return from_displacement(std::move(f), cls, tol);
}

Diffeo unchecked_diffeo(GridFunction f, GroupClass cls) {
  return Diffeo(MonotoneMap(std::move(f), cls));
}

Diffeo unchecked_diffeo(GridFunction f, GridFunction dphi, GroupClass cls) {
  return Diffeo(MonotoneMap(std::move(f), std::move(dphi), cls));
}

Diffeo compose(const Diffeo& phi, const Diffeo& psi, const Tolerances& tol) {
  require_same_grid(phi.grid(), psi.grid(), "compose");
  const Grid& g = phi.grid();
  const GridFunction& gpsi = psi.f();
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double y = g.node(i) + gpsi[i];
    out[i] = gpsi[i] + eval_displacement(phi, y, tol);
  }
  Decay d = sum_decay(phi.f().decay(), gpsi.decay());
  return Diffeo(MonotoneMap({g, std::move(out), d}, weakest(phi.group_class(), psi.group_class())));
}

Diffeo invert(const Diffeo& phi, const Tolerances& tol) {
  if (phi.min_derivative() < tol.min_derivative) {
    throw Error(ErrorKind::DerivativeTooSmall,
                "cannot invert: min phi' = " + std::to_string(phi.min_derivative()));
  }
  const Grid& g = phi.grid();
  const GridFunction& f = phi.f();
  auto [fmin_it, fmax_it] = std::minmax_element(f.values().begin(), f.values().end());
  const double fmin = *fmin_it, fmax = *fmax_it;
  const bool periodic = g.is_periodic();
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = g.node(i);
    // the monotone interpolant stays within one spacing of the nodal range
    double lo = x - fmax - g.spacing(), hi = x - fmin + g.spacing();
    auto residual = [&](double z) {
      if (periodic || (z >= g.x_min() && z <= g.x_max())) {
        auto [v, d] = phi.displacement().eval(z);
        return std::pair{z + v - x, 1.0 + d};
      }
      return std::pair{z + eval_displacement(phi, z, tol) - x, 1.0};
    };
    double z = std::clamp(x - f[i], lo, hi);
    for (int it = 0; it < 200; ++it) {
      auto [r, d] = residual(z);
      if (std::abs(r) <= tol.root * 1e-3 || hi - lo <= tol.root * 1e-3) break;
      if (r > 0.0) hi = std::min(hi, z);
      else lo = std::max(lo, z);
      double zn = d > 0.0 ? z - r / d : 0.5 * (lo + hi);
      if (!(zn > lo && zn < hi)) zn = 0.5 * (lo + hi);
      if (std::abs(zn - z) <= 1e-15 * (1.0 + std::abs(z))) {
        z = zn;
        break;
      }
      z = zn;
    }
    if (!periodic && (z > g.x_max() || z < g.x_min())) eval_displacement(phi, z, tol);
    out[i] = z - x;
  }
  return Diffeo(MonotoneMap({g, std::move(out), f.decay()}, phi.group_class()));
}

GridFunction compose_function(const GridFunction& F, const MonotoneMap& phi,
                              const Tolerances& tol) {
  require_same_grid(F.grid(), phi.grid(), "compose_function");
  const Grid& g = F.grid();
  HermiteInterpolant interp(F);
  bool right_ok = g.is_periodic() || tail_settled_right(F, tol);
  bool left_ok = g.is_periodic() || tail_settled_left(F, tol);
  std::vector<double> out(g.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double y = g.node(i) + phi.f()[i];
    if (!g.is_periodic()) {
      if (y > g.x_max() && !right_ok) {
        throw Error(ErrorKind::RangeExceedsWindow, "composition leaves the window on the right");
      }
      if (y < g.x_min() && !left_ok) {
        throw Error(ErrorKind::RangeExceedsWindow, "composition leaves the window on the left");
      }
    }
    out[i] = interp(y);
  }
  return {g, std::move(out), F.decay()};
}

std::pair<double, double> shifts(const MonotoneMap& phi, const Tolerances& tol) {
  if (phi.group_class() == GroupClass::PeriodicLift) {
    throw Error(ErrorKind::InvalidClass, "shifts are defined for line diffeomorphisms");
  }
  double l = limit_at_minus_infinity(phi.f(), tol);
  double r = limit_at_plus_infinity(phi.f(), tol);
  if (phi.group_class() == GroupClass::A) {
    if (std::abs(l) >= tol.tail || std::abs(r) >= tol.tail) {
      throw Error(ErrorKind::InvalidClass, "class A map with nonzero shift");
    }
    return {0.0, 0.0};
  }
  return {l, r};
}

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double a = std::exp(-1.0 / x);
  double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

namespace {

double flow(double x, double t, int steps, double (*field)(double)) {
  if (t == 0.0) return x;
  double dt = t / steps;
  for (int s = 0; s < steps; ++s) {
    double k1 = field(x);
    double k2 = field(x + 0.5 * dt * k1);
    double k3 = field(x + 0.5 * dt * k2);
    double k4 = field(x + dt * k3);
    x += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return x;
}

double field_left(double x) { return smooth_step(-x); }
double field_right(double x) { return smooth_step(x); }

}  // namespace

Diffeo shift_section(const Grid& grid, double a, double b, int steps) {
  if (grid.is_periodic()) throw Error(ErrorKind::InvalidArgument, "shift section needs a line grid");
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    double x = grid.node(i);
    double y = flow(flow(x, b, steps, field_right), a, steps, field_left);
    out[i] = y - x;
  }
  GridFunction f(grid, std::move(out), Decay::Bounded);
  GroupClass cls = a == 0.0 ? (b == 0.0 ? GroupClass::A : GroupClass::A1) : GroupClass::A2;
  return unchecked_diffeo(std::move(f), cls);
}

}  // namespace hsgeo
