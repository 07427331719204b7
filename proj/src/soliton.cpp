#include "hsgeo/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "hsgeo/error.hpp"

namespace hsgeo {

void SolitonState::validate(double sum_tol) const {
  if (y.size() != a.size() || y.empty()) {
    throw Error(ErrorKind::InvalidArgument, "positions and weights must have equal, nonzero length");
  }
  for (std::size_t i = 1; i < y.size(); ++i) {
    if (!(y[i] > y[i - 1])) throw Error(ErrorKind::InvalidArgument, "positions must increase");
  }
  double sum = std::accumulate(a.begin(), a.end(), 0.0);
  if (std::abs(sum) > sum_tol) {
    throw Error(ErrorKind::InvalidArgument, "weights must sum to zero, got " + std::to_string(sum));
  }
}

std::vector<double> partial_sums(const std::vector<double>& a) {
  const std::size_t n = a.size();
  std::vector<double> S(n, 0.0);
  double acc = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    S[i] = -acc;
    acc += a[i];
  }
  return S;
}

double soliton_energy(const SolitonState& s) {
  auto S = partial_sums(s.a);
  double e = 0.0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) e += S[i] * S[i] * (s.y[i + 1] - s.y[i]);
  return 0.5 * e;
}

SolitonRhs hamilton_rhs(const SolitonState& s) {
  const std::size_t n = s.size();
  auto S = partial_sums(s.a);
  SolitonRhs r{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    r.dy[k] = -acc;
    if (k + 1 < n) acc += S[k] * (s.y[k + 1] - s.y[k]);
    double prev = k == 0 ? 0.0 : S[k - 1];
    r.da[k] = 0.5 * (S[k] * S[k] - prev * prev);
  }
  return r;
}

double soliton_blowup_time(const SolitonState& s) {
  auto S = partial_sums(s.a);
  double m = *std::max_element(S.begin(), S.end());
  return m > 0.0 ? 2.0 / m : std::numeric_limits<double>::infinity();
}

SolitonState soliton_flow_closed_form(const SolitonState& s0, double t) {
  const double tb = soliton_blowup_time(s0);
  if (t >= tb) {
    throw Error(ErrorKind::SolitonBlowup,
                "solitons collide at t = " + std::to_string(tb) + " (requested " +
                    std::to_string(t) + ")");
  }
  const std::size_t n = s0.size();
  auto S = partial_sums(s0.a);
  SolitonState out{std::vector<double>(n), std::vector<double>(n), s0.time + t};
  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    out.y[i] = s0.y[i] + shift;
    if (i + 1 < n) shift += (0.25 * t * t * S[i] * S[i] - t * S[i]) * (s0.y[i + 1] - s0.y[i]);
    double cur = S[i] / (1.0 - 0.5 * t * S[i]);
    double prev = i == 0 ? 0.0 : S[i - 1] / (1.0 - 0.5 * t * S[i - 1]);
    out.a[i] = cur - prev;
  }
  return out;
}

SolitonState soliton_rk4(const SolitonState& s0, double t_end, double dt) {
  if (!(dt > 0.0)) throw Error(ErrorKind::InvalidArgument, "dt must be positive");
  const std::size_t n = s0.size();
  SolitonState s = s0;
  double span = t_end - s0.time;
  long steps = std::max(1L, std::lround(std::abs(span) / dt));
  double h = span / static_cast<double>(steps);
  auto shifted = [&](const SolitonState& base, const SolitonRhs& k, double c) {
    SolitonState r = base;
    for (std::size_t i = 0; i < n; ++i) {
      r.y[i] += c * k.dy[i];
      r.a[i] += c * k.da[i];
    }
    return r;
  };
  for (long step = 0; step < steps; ++step) {
    auto k1 = hamilton_rhs(s);
    auto k2 = hamilton_rhs(shifted(s, k1, 0.5 * h));
    auto k3 = hamilton_rhs(shifted(s, k2, 0.5 * h));
    auto k4 = hamilton_rhs(shifted(s, k3, h));
    for (std::size_t i = 0; i < n; ++i) {
      s.y[i] += h / 6.0 * (k1.dy[i] + 2 * k2.dy[i] + 2 * k3.dy[i] + k4.dy[i]);
      s.a[i] += h / 6.0 * (k1.da[i] + 2 * k2.da[i] + 2 * k3.da[i] + k4.da[i]);
    }
  }
  s.time = t_end;
  return s;
}

double soliton_velocity(const SolitonState& s, double x) {
  double u = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (x > s.y[i]) u -= s.a[i] * (x - s.y[i]);
  }
  return u;
}

double soliton_slope(const SolitonState& s, double x) {
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (x > s.y[i]) d -= s.a[i];
    else if (x == s.y[i]) d -= 0.5 * s.a[i];
  }
  return d;
}

GridFunction soliton_to_velocity(const SolitonState& s, const Grid& grid) {
  if (grid.is_periodic()) throw Error(ErrorKind::InvalidArgument, "solitons live on the line");
  if (s.y.front() < grid.x_min() || s.y.back() > grid.x_max()) {
    throw Error(ErrorKind::WindowTooSmall, "soliton positions lie outside the grid window");
  }
  return GridFunction::sample(grid, [&](double x) { return soliton_velocity(s, x); },
                              Decay::Bounded);
}

double soliton_flow_map(const SolitonState& s0, double t, double x) {
  auto S = partial_sums(s0.a);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < s0.size(); ++i) {
    double lo = s0.y[i];
    double hi = std::min(x, s0.y[i + 1]);
    if (hi <= lo) break;
    // u0' = -S_i on (y_i, y_{i+1})
    acc += (0.25 * t * t * S[i] * S[i] - t * S[i]) * (hi - lo);
  }
  return x + acc;
}

SolitonState random_soliton_state(std::uint64_t seed, std::size_t n, double lo, double hi,
                                  double scale, double gap) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "need at least two solitons");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> pos(lo, hi), w(-scale, scale);
  SolitonState s;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    s.y.clear();
    for (std::size_t i = 0; i < n; ++i) s.y.push_back(pos(rng));
    std::sort(s.y.begin(), s.y.end());
    bool ok = true;
    for (std::size_t i = 1; i < n; ++i) ok = ok && s.y[i] - s.y[i - 1] >= gap;
    if (ok) break;
  }
  s.a.assign(n, 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s.a[i] = w(rng);
    sum += s.a[i];
  }
  s.a[n - 1] = -sum;
  s.validate(1e-12);
  return s;
}

}  // namespace hsgeo
