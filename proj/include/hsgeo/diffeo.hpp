#pragma once

#include <string_view>
#include <utility>

#include "hsgeo/grid_function.hpp"
#include "hsgeo/interpolation.hpp"

namespace hsgeo {

/// Group a map phi = Id + f belongs to: A (f vanishes at both ends), A1
/// (vanishes at -inf, may shift +inf), A2 (shifts at both ends), or a lifted
/// circle diffeomorphism with 2*pi-periodic f.
enum class GroupClass { A, A1, A2, PeriodicLift };

std::string_view to_string(GroupClass c);
GroupClass group_class_from_string(std::string_view name);

/// Weakest common class: A.A = A, A.A1 = A1, anything with A2 is A2.
GroupClass weakest(GroupClass a, GroupClass b);

/// Smallest class consistent with the tails of f.
GroupClass classify(const GridFunction& f, const Tolerances& tol = {});

/// Non-decreasing map phi = Id + f with phi' >= 0 (up to monotone_slack).
/// Diffeo refines this to phi' >= min_derivative > 0.
class MonotoneMap {
 public:
  /// Validates phi' >= -monotone_slack and the class tails.
  static MonotoneMap from_displacement(GridFunction f, GroupClass cls,
                                       const Tolerances& tol = {});

  const Grid& grid() const noexcept { return f_.grid(); }
  const GridFunction& f() const noexcept { return f_; }
  GroupClass group_class() const noexcept { return cls_; }
  /// phi(x) = x + f(x) at the nodes.
  GridFunction phi() const;
  /// phi' = 1 + f' at the nodes.
  const GridFunction& dphi() const noexcept { return dphi_; }
  double min_derivative() const noexcept { return min_dphi_; }

  /// Interpolant of f whose Id-shifted version is monotone (Fritsch-Carlson
  /// on the phi data). Evaluate phi(y) as y + displacement()(y).
  const HermiteInterpolant& displacement() const noexcept { return interp_; }

 /// No validation; prefer from_displacement.
  MonotoneMap(GridFunction f, GroupClass cls);
  /// As above with phi' supplied instead of differentiated from f.
  MonotoneMap(GridFunction f, GridFunction dphi, GroupClass cls);

 private:
  GridFunction f_;
  GroupClass cls_;
  GridFunction dphi_;
  double min_dphi_;
  HermiteInterpolant interp_;
};

class Diffeo : public MonotoneMap {
 public:
  static Diffeo identity(const Grid& grid);
  /// Validates phi' >= tol.min_derivative (DerivativeTooSmall) and the class
  /// tails (InvalidClass).
  static Diffeo from_displacement(GridFunction f, GroupClass cls, const Tolerances& tol = {});
  /// As above with the class inferred from the tails.
  static Diffeo from_displacement(GridFunction f, const Tolerances& tol = {});

 private:
  explicit Diffeo(MonotoneMap m) : MonotoneMap(std::move(m)) {}
  friend Diffeo compose(const Diffeo&, const Diffeo&, const Tolerances&);
  friend Diffeo invert(const Diffeo&, const Tolerances&);
  friend Diffeo unchecked_diffeo(GridFunction, GroupClass);
  friend Diffeo unchecked_diffeo(GridFunction, GridFunction, GroupClass);
};

/// Builds a Diffeo without validation (internal fast path for results of
/// group operations whose validity follows from the inputs).
Diffeo unchecked_diffeo(GridFunction f, GroupClass cls);
/// Same with known phi' samples (e.g. from a closed form).
Diffeo unchecked_diffeo(GridFunction f, GridFunction dphi, GroupClass cls);

/// phi o psi. Throws RangeExceedsWindow if psi maps a node outside phi's
/// window and phi's displacement is not settled on that side.
Diffeo compose(const Diffeo& phi, const Diffeo& psi, const Tolerances& tol = {});

/// phi^{-1} resampled on the same grid (safeguarded Newton per node).
Diffeo invert(const Diffeo& phi, const Tolerances& tol = {});

/// F o phi for a general grid function F (plain cubic Hermite of F; outside
/// the window F must have a settled tail).
GridFunction compose_function(const GridFunction& F, const MonotoneMap& phi,
                              const Tolerances& tol = {});

/// (Shift_l, Shift_r) = limits of f at -inf and +inf.
std::pair<double, double> shifts(const MonotoneMap& phi, const Tolerances& tol = {});

/// Smooth step 0 on x <= 0, 1 on x >= 1.
double smooth_step(double x);

/// s(a, b) = Fl^{X_l}_a o Fl^{X_r}_b for X_l = smooth_step(-x) d/dx and
/// X_r = smooth_step(x) d/dx, flows integrated per node with RK4.
Diffeo shift_section(const Grid& grid, double a, double b, int steps = 400);

}  // namespace hsgeo
