#pragma once

#include <cstdint>
#include <vector>

#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Order-0 solitons: momentum sum_i a_i delta_{y_i} with y strictly
/// increasing and sum a_i = 0. The induced velocity is
/// u(x) = -sum_i a_i D(x - y_i) with D(x) = max(x, 0).
struct SolitonState {
  std::vector<double> y;
  std::vector<double> a;
  double time = 0.0;

  std::size_t size() const noexcept { return y.size(); }
  /// Throws InvalidArgument unless y is strictly increasing and sum a = 0.
  void validate(double sum_tol = 1e-12) const;
};

/// S_i = -sum_{j>i} a_j, i = 1..N (S_N = 0). Equal to sum_{j<=i} a_j on
/// the constraint surface; anchored at the right so that the gradient of
/// the energy is the velocity u(y_i) itself.
std::vector<double> partial_sums(const std::vector<double>& a);

/// E = (1/2) sum_{i<N} S_i^2 (y_{i+1} - y_i).
double soliton_energy(const SolitonState& s);

struct SolitonRhs {
  std::vector<double> dy;
  std::vector<double> da;
};

/// dy_k = dE/da_k = -sum_{i<k} S_i (y_{i+1} - y_i) = u(y_k),
/// da_k = -dE/dy_k = (S_k^2 - S_{k-1}^2)/2 with S_0 = 0.
SolitonRhs hamilton_rhs(const SolitonState& s);

/// First positive time at which some 1 - t S_i / 2 vanishes (2/max S_i),
/// +inf if all S_i <= 0.
double soliton_blowup_time(const SolitonState& s);

/// Closed-form flow: y_i(t) = y_i + sum_{j<i} (t^2 S_j^2/4 - t S_j) dy_j and
/// a_i(t) = S_i/(1 - t S_i/2) - S_{i-1}/(1 - t S_{i-1}/2).
/// Throws SolitonBlowup at or past the critical time.
SolitonState soliton_flow_closed_form(const SolitonState& s0, double t);

/// Fixed-step RK4 integration of hamilton_rhs from s0.time to t_end.
SolitonState soliton_rk4(const SolitonState& s0, double t_end, double dt);

/// u sampled on the grid. Throws WindowTooSmall unless all y lie inside.
GridFunction soliton_to_velocity(const SolitonState& s, const Grid& grid);

/// u(x) evaluated directly.
double soliton_velocity(const SolitonState& s, double x);

/// u'(x) with the midpoint convention H(0) = 1/2 at the positions, so
/// u'(y_i) = a_i/2 - S_i.
double soliton_slope(const SolitonState& s, double x);

/// phi(t, x) = x + (1/4) int_{-inf}^x (t^2 u0'^2 + 4 t u0') for the
/// piecewise-constant u0' of the state, integrated exactly.
double soliton_flow_map(const SolitonState& s0, double t, double x);

/// Random valid state with n solitons: sorted positions in [lo, hi] at
/// least `gap` apart, weights of magnitude <= scale summing to zero.
SolitonState random_soliton_state(std::uint64_t seed, std::size_t n, double lo = -2.0,
                                  double hi = 2.0, double scale = 1.0, double gap = 0.1);

}  // namespace hsgeo
