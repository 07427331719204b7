#include "hsgeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "hsgeo/connection.hpp"
#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/generators.hpp"
#include "hsgeo/rmap.hpp"
#include "hsgeo/serialize.hpp"

#ifndef HSGEO_FIG1_BASELINE
#define HSGEO_FIG1_BASELINE "tests/data/fig1.csv"
#endif

namespace hsgeo {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

CheckResult make(int id, std::string name, double value, double threshold, bool passed,
                 std::string detail) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.value = value;
  r.threshold = threshold;
  r.passed = passed && std::isfinite(value);
  r.detail = std::move(detail);
  return r;
}

double order(double coarse, double fine) { return std::log2(coarse / fine); }

CheckResult isometry(const VerifyOptions& opt) {
  auto start = Clock::now();
  Grid g = Grid::default_line();
  DataGenerator gen(opt.seed);
  double worst = 0.0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    Diffeo phi = gen.bump_diffeo(g);
    auto h = gen.bump_field(g);
    auto k = gen.bump_field(g);
    double p = pullback_metric(phi, h, k);
    double e = hdot1_metric(phi, h, k);
    worst = std::max(worst, std::abs(p - e) / (1.0 + std::abs(e)));
  }
  double secs = seconds_since(start);
  return make(1, "isometry", worst, 1e-6, worst < 1e-6 && secs < 10.0,
              fmt::format("{} triples, {:.2f} s (limit 10 s)", trials, secs));
}

CheckResult round_trip(const VerifyOptions& opt) {
  Grid g = Grid::default_line();
  Grid p = Grid::periodic(512);
  DataGenerator gen(opt.seed + 1);
  double scalar = 0.0, two = 0.0, periodic = 0.0;
  for (int i = 0; i < 20; ++i) {
    Diffeo phi = gen.bump_diffeo(g);
    auto gam = r_map(phi);
    scalar = std::max(scalar, sup_distance(r_inverse(gam).f(), phi.f()));
    auto g2 = gen.bump_field(g, 3, 0.6);
    auto back = r_map(r_inverse(RPoint::from_gamma(g2)));
    scalar = std::max(scalar, sup_distance(back.gamma(), g2));

    TwoCompConfig cfg{phi, gen.bump_field(g, 2, 2.0)};
    auto c = r_inverse_2c(r_map_2c(cfg));
    two = std::max({two, sup_distance(c.phi.f(), phi.f()), sup_distance(c.alpha, cfg.alpha)});
    auto z = r_map_2c(cfg);
    two = std::max(two, sup_distance(r_map_2c(r_inverse_2c(z)), z));

    Diffeo q = periodic_diffeo(gen.trig_diffeo(p).f());
    auto s = r_map_periodic(q);
    periodic = std::max(periodic, sup_distance(r_inverse_periodic(s).f(), q.f()));
    auto w = gen.trig_field(p, 0.4) + 2.0;
    auto sp = SpherePoint::from_gamma(w * std::sqrt(kSphereNormSq / integrate(w * w)));
    periodic = std::max(periodic,
                        sup_distance(r_map_periodic(r_inverse_periodic(sp)).gamma(), sp.gamma()));
  }
  double worst = std::max({scalar, two, periodic});
  return make(2, "round-trip", worst, 1e-8, worst < 1e-8,
              fmt::format("scalar {:.2e}, two-component {:.2e}, periodic {:.2e}", scalar, two,
                          periodic));
}

CheckResult figure1(const VerifyOptions& opt) {
  std::string path = opt.fig1_baseline.empty() ? default_fig1_baseline() : opt.fig1_baseline;
  std::ifstream in(path, std::ios::binary);
  if (!in) return make(3, "figure-1 regression", NAN, 0.0, false, "missing baseline " + path);
  std::stringstream stored;
  stored << in.rdbuf();
  std::string now = table_string(figure1_table());
  double diff = 0.0;
  std::string detail = "bit-exact";
  if (now != stored.str()) {
    std::istringstream a(now), b(stored.str());
    auto ta = read_table(a);
    auto tb = read_table(b);
    if (ta.rows.size() != tb.rows.size()) {
      return make(3, "figure-1 regression", NAN, 0.0, false, "row count differs");
    }
    for (std::size_t i = 0; i < ta.rows.size(); ++i) {
      for (std::size_t j = 0; j < ta.rows[i].size() && j < tb.rows[i].size(); ++j) {
        diff = std::max(diff, std::abs(ta.rows[i][j] - tb.rows[i][j]));
      }
    }
    detail = "output differs from " + path;
  }
  return make(3, "figure-1 regression", diff, 0.0, now == stored.str(), detail);
}

CheckResult blowup_example(const VerifyOptions&) {
  auto start = Clock::now();
  Grid g = Grid::default_line();
  auto k = FunctionSpec("logistic-neg").sample(g);
  double T = blowup_time(geodesic_from_identity(k), TimeDirection::Forward);
  double secs = seconds_since(start);
  double err = std::abs(T - 2.58);
  return make(4, "blow-up example", T, 2.58, err <= 0.01 && secs < 1.0,
              fmt::format("T = {:.6f}, expected 2.58 +- 0.01, {:.3f} s", T, secs));
}

CheckResult hs_pde(const VerifyOptions&) {
  auto spec = FunctionSpec("gaussian", {{"amp", 0.5}});
  double res[3];
  const int n[3] = {2001, 4001, 8001};
  const double dt[3] = {0.04, 0.02, 0.01};
  for (int l = 0; l < 3; ++l) {
    HSSolution sol(spec.sample(Grid::line(n[l], -10.0, 10.0)));
    res[l] = hs_residual(sol, 1.0, dt[l]);
  }
  double ord = std::min(order(res[0], res[1]), order(res[1], res[2]));

  Grid g = Grid::default_line();
  bool dichotomy = true;
  std::string why;
  HSSolution rising(FunctionSpec("logistic", {{"rate", 4.0}}).sample(g));
  if (rising.t_blowup() <= 100.0) {
    dichotomy = false;
    why = "blow-up predicted before t = 100 for u0' >= 0; ";
  }
  for (int j = 0; j <= 100; ++j) {
    auto gam = rising.path().gamma_at(static_cast<double>(j));
    if (*std::min_element(gam.values().begin(), gam.values().end()) <= -2.0) {
      dichotomy = false;
      why += "gamma reached -2 for u0' >= 0; ";
      break;
    }
  }
  HSSolution falling(spec.sample(g));
  double m = *std::min_element(falling.du0().values().begin(), falling.du0().values().end());
  if (!(falling.t_blowup() == 2.0 / std::abs(m))) {
    dichotomy = false;
    why += fmt::format("T = {} vs 2/|min u0'| = {}; ", falling.t_blowup(), 2.0 / std::abs(m));
  }
  return make(5, "HS residual order", ord, 1.8, ord >= 1.8 && dichotomy,
              fmt::format("residuals {:.2e} {:.2e} {:.2e}, T = {:.6f}; {}", res[0], res[1], res[2],
                          falling.t_blowup(), dichotomy ? "dichotomy ok" : why));
}

CheckResult distance_vs_length(const VerifyOptions& opt) {
  Grid g = Grid::default_line();
  DataGenerator gen(opt.seed + 5);
  double worst = 0.0;
  const double dt = 1e-2;
  for (int i = 0; i < 20; ++i) {
    Diffeo a = gen.bump_diffeo(g);
    Diffeo b = gen.bump_diffeo(g);
    double d = distance(a, b);
    auto path = geodesic_bvp(a, b);
    // Simpson in t of the Eulerian speed; phi_t is exact under central
    // differences because f is quadratic in t.
    const double ts[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
    const double wts[5] = {1, 4, 2, 4, 1};
    double len = 0.0;
    for (int j = 0; j < 5; ++j) {
      auto v = (evaluate_displacement(path, ts[j] + dt) - evaluate_displacement(path, ts[j] - dt)) *
               (0.5 / dt);
      auto phi = std::get<Diffeo>(evaluate(path, ts[j]));
      len += wts[j] * std::sqrt(std::max(0.0, hdot1_metric(phi, v, v)));
    }
    len *= 0.25 / 3.0;
    worst = std::max(worst, std::abs(len - d) / std::max(d, 1e-300));
  }
  return make(6, "distance vs path length", worst, 1e-5, worst < 1e-5, "20 random pairs");
}

CheckResult shift_dynamics(const VerifyOptions& opt) {
  Grid g = Grid::default_line();
  DataGenerator gen(opt.seed + 6);
  auto k = gen.bump_field(g, 3, 0.5);
  auto path = geodesic_from_identity(k);
  auto poly = shift_polynomial(path);
  double worst = 0.0;
  for (int j = 0; j <= 10; ++j) {
    double t = 0.1 * j;
    auto phi = evaluate(path, t);
    double s = std::visit([](const auto& m) { return shifts(m).second; }, phi);
    worst = std::max(worst, std::abs(s - poly.shift(t)));
  }
  Diffeo a = gen.bump_diffeo(g);
  Diffeo b = gen.bump_diffeo(g);
  auto bvp = geodesic_bvp(a, b);
  auto ab = shift_polynomial(bvp);
  for (int j = 0; j <= 10; ++j) {
    double t = 0.1 * j;
    double s = std::visit([](const auto& m) { return shifts(m).second; }, evaluate(bvp, t));
    worst = std::max(worst, std::abs(s - ab.shift(t)));
  }
  auto diff = r_map(b).gamma() - r_map(a).gamma();
  double coef = 0.25 * integrate(diff * diff);
  double cerr = std::abs(ab.c2 - coef);
  double ends = std::max(std::abs(ab.shift(0.0)), std::abs(ab.shift(1.0)));
  bool ok = worst < 1e-6 && cerr < 1e-7 && ends < 1e-7;
  return make(7, "shift dynamics", worst, 1e-6, ok,
              fmt::format("coefficient error {:.2e}, endpoint shifts {:.2e} (limit 1e-7)", cerr,
                          ends));
}

CheckResult flatness(const VerifyOptions& opt) {
  Grid g = Grid::default_line();
  DataGenerator gen(opt.seed + 7);
  double worst = 0.0, ident = 0.0;
  for (int i = 0; i < 50; ++i) {
    auto X = gen.bump_field(g);
    auto Y = gen.bump_field(g);
    double scale = hdot1_pairing(X, X) * hdot1_pairing(Y, Y);
    worst = std::max(worst, std::abs(curvature_numerator(X, Y)) / scale);
    if (i < 10) {
      auto Z = gen.bump_field(g);
      ident = std::max({ident, cyclic_residual(X, Y, Z), compatibility_residual(X, Y, Z)});
    }
  }
  return make(8, "flatness", worst, 1e-6, worst < 1e-6 && ident < 1e-7,
              fmt::format("50 pairs; connection identities {:.2e} (limit 1e-7)", ident));
}

CheckResult solitons(const VerifyOptions& opt) {
  double flow = 0.0, energy = 0.0, transport = 0.0, grad = 0.0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 2; ++rep) {
      auto s0 = random_soliton_state(opt.seed + 10 * n + rep, n);
      while (soliton_blowup_time(s0) <= 1.5) {
        for (double& a : s0.a) a *= 0.5;
      }
      double e0 = soliton_energy(s0);
      auto rk = s0;
      for (int j = 1; j <= 4; ++j) {
        double t = 0.25 * j;
        rk = soliton_rk4(rk, t, 1e-4);
        auto cf = soliton_flow_closed_form(s0, t);
        for (std::size_t i = 0; i < n; ++i) {
          flow = std::max({flow, std::abs(rk.y[i] - cf.y[i]), std::abs(rk.a[i] - cf.a[i])});
          transport = std::max(transport, std::abs(soliton_flow_map(s0, t, s0.y[i]) - cf.y[i]));
        }
        energy = std::max(energy, std::abs(soliton_energy(cf) - e0));
      }
      auto rhs = hamilton_rhs(s0);
      const double h = 1e-6;
      for (std::size_t i = 0; i < n; ++i) {
        auto p = s0, m = s0;
        p.a[i] += h;
        m.a[i] -= h;
        grad = std::max(grad, std::abs((soliton_energy(p) - soliton_energy(m)) / (2 * h) - rhs.dy[i]));
        p = s0;
        m = s0;
        p.y[i] += h;
        m.y[i] -= h;
        grad = std::max(grad, std::abs(-(soliton_energy(p) - soliton_energy(m)) / (2 * h) - rhs.da[i]));
      }
    }
  }
  bool ok = flow < 1e-6 && energy < 1e-9 && transport < 1e-6 && grad < 1e-7;
  return make(9, "soliton suite", flow, 1e-6, ok,
              fmt::format("energy {:.2e} (1e-9), transport {:.2e} (1e-6), gradient {:.2e} (1e-7)",
                          energy, transport, grad));
}

CheckResult two_component(const VerifyOptions&) {
  Grid g = Grid::default_line();
  auto u0 = FunctionSpec("gaussian", {{"amp", 0.5}}).sample(g);
  TwoCompSolution deg(u0, GridFunction::zero(g));
  HSSolution hs(u0);
  double degen = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    degen = std::max({degen, sup_distance(deg.velocity(t).first, hs_velocity(hs, t)),
                      sup_distance(deg.config(t).phi.f(), hs.displacement(t))});
  }

  auto bump = [&](double amp, double c, double w) {
    return FunctionSpec("bump", {{"amp", amp}, {"center", c}, {"width", w}}).sample(g);
  };
  auto zero = GridFunction::zero(g);
  struct Case {
    GridFunction u, rho;
    bool expected;
  };
  std::vector<Case> cases = {
      {bump(1, 0, 1), zero, true},
      {bump(1, 0, 1), bump(1, 0, 3), false},
      {bump(1, 0, 1), bump(1, -1, 1.5), true},
      {FunctionSpec("logistic", {{"rate", 4.0}}).sample(g), zero, false},
      {FunctionSpec("logistic", {{"amp", -1.0}, {"rate", 4.0}}).sample(g), zero, true},
      {FunctionSpec("logistic", {{"amp", -1.0}, {"rate", 4.0}}).sample(g),
       FunctionSpec("gaussian", {{"width", 2.0}}).sample(g), false},
      {zero, zero, false},
      {bump(1, 0, 1), bump(1, 0.6, 0.3), true},
  };
  const double horizon = 100.0;
  int mismatches = 0;
  for (const auto& c : cases) {
    TwoCompSolution sol(c.u, c.rho);
    bool predicted = sol.t_breakdown() <= horizon;
    // Independent scan: min over t in [0, horizon] of |1 + t k/2|^2 per node.
    auto du = derivative(c.u);
    bool observed = false;
    for (std::size_t i = 0; i < g.size() && !observed; ++i) {
      std::complex<double> k(du[i], c.rho[i]);
      double n2 = std::norm(k);
      if (n2 == 0.0) continue;
      double ts = std::clamp(-2.0 * k.real() / n2, 0.0, horizon);
      observed = std::norm(1.0 + 0.5 * ts * k) < 1e-12;
    }
    if (predicted != c.expected || observed != c.expected) ++mismatches;
  }

  auto rho0 = FunctionSpec("gaussian", {{"amp", 0.3}, {"center", 0.5}}).sample(g);
  double ru[3], rr[3];
  const int n[3] = {2001, 4001, 8001};
  const double dt[3] = {0.04, 0.02, 0.01};
  for (int l = 0; l < 3; ++l) {
    Grid gl = Grid::line(n[l], -10.0, 10.0);
    TwoCompSolution sol(FunctionSpec("gaussian", {{"amp", 0.5}}).sample(gl),
                        FunctionSpec("gaussian", {{"amp", 0.3}, {"center", 0.5}}).sample(gl));
    std::tie(ru[l], rr[l]) =
        twocomp_residual(sol.velocity(1.0 - dt[l]), sol.velocity(1.0), sol.velocity(1.0 + dt[l]), dt[l]);
  }
  double ord = std::min({order(ru[0], ru[1]), order(ru[1], ru[2]), order(rr[0], rr[1]),
                         order(rr[1], rr[2])});
  bool ok = degen < 1e-8 && mismatches == 0 && ord >= 1.8;
  return make(10, "two-component suite", ord, 1.8, ok,
              fmt::format("degenerate {:.2e} (1e-8), breakdown matrix {}/8, residual order {:.2f}",
                          degen, 8 - mismatches, ord));
}

CheckResult periodic_sphere(const VerifyOptions& opt) {
  Grid p = Grid::periodic(1024);
  DataGenerator gen(opt.seed + 11);
  double norm = 0.0, iso = 0.0, ch = 0.0, f2 = 0.0, off = 1e300;
  for (int i = 0; i < 20; ++i) {
    Diffeo phi = gen.trig_diffeo(p);
    auto s = r_map_periodic(phi);
    norm = std::max(norm, std::abs(integrate(s.gamma() * s.gamma()) - kSphereNormSq));
    auto h = gen.trig_field(p);
    auto k = gen.trig_field(p);
    double e = periodic_hdot1(phi, h, k);
    iso = std::max(iso, std::abs(periodic_pullback(phi, h, k) - e) / (1.0 + std::abs(e)));
    auto [l, r] = ch_pullback_check(phi, h + 0.3, k);
    ch = std::max(ch, std::abs(l - r));
    auto z = ch_r_map(phi);
    f2 = std::max(f2, ch_f2(z).sup_norm());
    auto bent = z * to_complex(GridFunction::sample(
                        p, [](double x) { return 1.0 + 0.3 * std::sin(2 * x); }, Decay::Periodic));
    off = std::min(off, ch_f2(bent).sup_norm());
  }
  bool ok = norm < 1e-8 && iso < 1e-6 && ch < 1e-6 && f2 < 1e-6 && off > 0.1;
  return make(11, "periodic sphere", norm, 1e-8, ok,
              fmt::format("isometry {:.2e}, CH pullback {:.2e}, F2 on image {:.2e}, off image {:.2f}",
                          iso, ch, f2, off));
}

CheckResult nonexistence(const VerifyOptions& opt) {
  Grid g = Grid::default_line();
  DataGenerator gen(opt.seed + 12);
  double worst = 0.0;
  bool positive = true;
  for (int i = 0; i < 20; ++i) {
    auto X = gen.bump_field(g);
    double d = membership_defect(X);
    auto dX = derivative(X);
    worst = std::max(worst, std::abs(d - 0.5 * integrate(dX * dX)));
    positive = positive && d > 0.0;
  }
  return make(12, "non-existence witness", worst, 1e-7, worst < 1e-7 && positive,
              positive ? "defect > 0 for all 20 fields" : "zero defect found");
}

}  // namespace

std::string default_fig1_baseline() {
  if (const char* env = std::getenv("HSGEO_FIG1_BASELINE")) return env;
  return HSGEO_FIG1_BASELINE;
}

Table figure1_table() {
  Grid g = Grid::default_line();
  auto target = Diffeo::from_displacement(FunctionSpec("bump").sample(g), GroupClass::A);
  return geodesic_table(geodesic_bvp(Diffeo::identity(g), target),
                        {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0});
}

CheckResult run_check(int id, const VerifyOptions& options) {
  using Fn = CheckResult (*)(const VerifyOptions&);
  static const Fn checks[kCheckCount] = {isometry,     round_trip,      figure1,
                                         blowup_example, hs_pde,        distance_vs_length,
                                         shift_dynamics, flatness,      solitons,
                                         two_component,  periodic_sphere, nonexistence};
  if (id < 1 || id > kCheckCount) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("no check {}", id));
  }
  auto start = Clock::now();
  CheckResult r;
  try {
    r = checks[id - 1](options);
  } catch (const Error& e) {
    r = make(id, "check " + std::to_string(id), NAN, 0.0, false,
             std::string(to_string(e.kind())) + ": " + e.what());
  }
  r.seconds = seconds_since(start);
  return r;
}

std::vector<CheckResult> run_all_checks(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kCheckCount; ++id) out.push_back(run_check(id, options));
  return out;
}

void print_check(std::ostream& out, const CheckResult& r) {
  out << fmt::format("{:2d} {} {:<24} value {:.6e} threshold {:.1e} ({:.2f} s) {}\n", r.id,
                     r.passed ? "PASS" : "FAIL", r.name, r.value, r.threshold, r.seconds, r.detail);
}

}  // namespace hsgeo
