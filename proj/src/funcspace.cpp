#include "hsgeo/funcspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace hsgeo {

std::vector<double> fornberg_weights(double z, const std::vector<double>& x, int m) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<double>> c(n, std::vector<double>(m + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    int mn = std::min(i, m);
    double c2 = 1.0;
    double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

namespace {

// Weights in units of 1/h for a stencil of `width` consecutive nodes,
// evaluated at offset `at` within the stencil.
std::vector<double> unit_stencil(int width, int at, int order) {
  std::vector<double> x(width);
  for (int j = 0; j < width; ++j) x[j] = j;
  return fornberg_weights(at, x, order);
}

template <class T>
std::vector<T> diff_values(const Grid& g, std::span<const T> v, int order = 1) {
  const std::size_t n = v.size();
  if (n < 3) throw Error(ErrorKind::GridTooSmall, "derivative needs at least 3 nodes");
  const double inv_h = std::pow(1.0 / g.spacing(), order);
  std::vector<T> out(n);
  if (g.is_periodic()) {
    int width = n >= 7 ? 7 : (n >= 5 ? 5 : 3);
    int half = width / 2;
    auto w = unit_stencil(width, half, order);
    for (std::size_t i = 0; i < n; ++i) {
      T acc{};
      for (int j = 0; j < width; ++j) {
        std::size_t idx = (i + n + static_cast<std::size_t>(j) - static_cast<std::size_t>(half)) % n;
        acc += w[j] * v[idx];
      }
      out[i] = acc * inv_h;
    }
    return out;
  }
  int width = static_cast<int>(std::min<std::size_t>(n, 7));
  int half = width / 2;
  std::vector<std::vector<double>> table(width);
  for (int a = 0; a < width; ++a) table[a] = unit_stencil(width, a, order);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start;
    if (i < static_cast<std::size_t>(half)) start = 0;
    else if (i + width - half > n) start = n - width;
    else start = i - half;
    const auto& w = table[i - start];
    T acc{};
    for (int j = 0; j < width; ++j) acc += w[j] * v[start + j];
    out[i] = acc * inv_h;
  }
  return out;
}

// Integral over [0, 1] of the Lagrange basis on nodes start, ..., start+5
// (offsets relative to the cell's left node), by 4-point Gauss-Legendre.
std::array<double, 6> cell_weights(int start) {
  static const double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                               0.8611363115940526};
  static const double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                               0.3478548451374538};
  std::array<double, 6> w{};
  for (int j = 0; j < 6; ++j) {
    double oj = start + j;
    double s = 0.0;
    for (int q = 0; q < 4; ++q) {
      double xi = 0.5 * (gx[q] + 1.0);
      double l = 1.0;
      for (int m = 0; m < 6; ++m) {
        if (m == j) continue;
        double om = start + m;
        l *= (xi - om) / (oj - om);
      }
      s += 0.5 * gw[q] * l;
    }
    w[j] = s;
  }
  return w;
}

template <class T>
std::vector<T> cumulative(const Grid& g, std::span<const T> v, Quadrature rule) {
  const std::size_t n = v.size();
  const double h = g.spacing();
  std::vector<T> out(n);
  out[0] = T{};
  if (rule == Quadrature::Trapezoid || n < 6) {
    for (std::size_t i = 1; i < n; ++i) out[i] = out[i - 1] + 0.5 * h * (v[i - 1] + v[i]);
    return out;
  }
  // start offset -2 in the interior, shifted near the ends
  static const std::array<std::array<double, 6>, 5> w = {
      cell_weights(0), cell_weights(-1), cell_weights(-2), cell_weights(-3), cell_weights(-4)};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    long s = static_cast<long>(i) - 2;
    s = std::clamp<long>(s, 0, static_cast<long>(n) - 6);
    int off = static_cast<int>(s - static_cast<long>(i));  // in [-4, 0]
    const auto& ww = w[static_cast<std::size_t>(-off)];
    T acc{};
    for (int j = 0; j < 6; ++j) acc += ww[j] * v[static_cast<std::size_t>(s + j)];
    out[i + 1] = out[i] + h * acc;
  }
  return out;
}

template <class T>
T integrate_values(const Grid& g, std::span<const T> v, Quadrature rule) {
  const std::size_t n = v.size();
  const double h = g.spacing();
  T sum{};
  if (g.is_periodic()) {
    for (const T& x : v) sum += x;
    return sum * h;
  }
  const std::size_t intervals = n - 1;
  if (rule == Quadrature::Trapezoid || intervals < 2) {
    for (std::size_t i = 0; i < n; ++i) sum += (i == 0 || i + 1 == n ? 0.5 : 1.0) * v[i];
    return sum * h;
  }
  std::size_t simpson_end = intervals;  // node index where the Simpson part ends
  if (intervals % 2 == 1) simpson_end = intervals - 3;
  if (simpson_end >= 2) {
    T s = v[0] + v[simpson_end];
    for (std::size_t i = 1; i < simpson_end; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * v[i];
    sum += s * (h / 3.0);
  }
  if (simpson_end != intervals) {
    std::size_t k = simpson_end;
    sum += (3.0 * h / 8.0) * (v[k] + 3.0 * v[k + 1] + 3.0 * v[k + 2] + v[k + 3]);
  }
  return sum;
}

void require_line_integrable(Decay d, const Grid& g, const char* what) {
  if (g.is_periodic()) {
    throw Error(ErrorKind::NotIntegrable, std::string(what) + " needs a line grid");
  }
  if (!decays_at_infinity(d)) {
    throw Error(ErrorKind::NotIntegrable,
                std::string(what) + ": integrand of class " + std::string(to_string(d)) +
                    " is not integrable at -infinity");
  }
}

std::size_t tail_count(std::size_t n) { return std::max<std::size_t>(2, n / 100); }

}  // namespace

double integrate(const GridFunction& f, Quadrature rule) {
  return integrate_values<double>(f.grid(), f.values(), rule);
}

std::complex<double> integrate(const ComplexGridFunction& f, Quadrature rule) {
  return integrate_values<std::complex<double>>(f.grid(), f.values(), rule);
}

double inner(const GridFunction& f, const GridFunction& g) { return integrate(f * g); }

double l2_norm(const GridFunction& f) { return std::sqrt(inner(f, f)); }

GridFunction derivative(const GridFunction& f) {
  return {f.grid(), diff_values<double>(f.grid(), f.values()), f.decay()};
}

ComplexGridFunction derivative(const ComplexGridFunction& f) {
  return {f.grid(), diff_values<std::complex<double>>(f.grid(), f.values()), f.decay()};
}

GridFunction second_derivative(const GridFunction& f) {
  return {f.grid(), diff_values<double>(f.grid(), f.values(), 2), f.decay()};
}

GridFunction antiderivative_from_minus_infinity(const GridFunction& f, Quadrature rule) {
  require_line_integrable(f.decay(), f.grid(), "antiderivative");
  return {f.grid(), cumulative<double>(f.grid(), f.values(), rule), Decay::Bounded};
}

ComplexGridFunction antiderivative_from_minus_infinity(const ComplexGridFunction& f,
                                                       Quadrature rule) {
  require_line_integrable(f.decay(), f.grid(), "antiderivative");
  return {f.grid(), cumulative<std::complex<double>>(f.grid(), f.values(), rule), Decay::Bounded};
}

GridFunction periodic_antiderivative(const GridFunction& f) {
  const Grid& g = f.grid();
  if (!g.is_periodic()) throw Error(ErrorKind::InvalidArgument, "periodic grid required");
  const std::size_t n = g.size();
  double mean = integrate(f) / Grid::kPeriod;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = f[i] - mean;
  std::vector<double> out(n, 0.0);
  if (n >= 6) {
    // centred quintic cell rule, wrapped
    static const std::array<double, 6> w = cell_weights(-2);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 6; ++j) acc += w[j] * v[(i + n + j - 2) % n];
      out[i + 1] = out[i] + g.spacing() * acc;
    }
  } else {
    for (std::size_t i = 1; i < n; ++i) out[i] = out[i - 1] + 0.5 * g.spacing() * (v[i - 1] + v[i]);
  }
  double m = 0.0;
  for (double x : out) m += x;
  m /= static_cast<double>(n);
  for (double& x : out) x -= m;
  return {g, std::move(out), Decay::Periodic};
}

bool tail_settled_right(const GridFunction& f, const Tolerances& tol) {
  const std::size_t n = f.size();
  const std::size_t k = std::min(n, tail_count(n));
  double lo = f[n - 1], hi = f[n - 1];
  for (std::size_t i = n - k; i < n; ++i) {
    lo = std::min(lo, f[i]);
    hi = std::max(hi, f[i]);
  }
  return hi - lo < tol.tail;
}

bool tail_settled_left(const GridFunction& f, const Tolerances& tol) {
  const std::size_t n = f.size();
  const std::size_t k = std::min(n, tail_count(n));
  double lo = f[0], hi = f[0];
  for (std::size_t i = 0; i < k; ++i) {
    lo = std::min(lo, f[i]);
    hi = std::max(hi, f[i]);
  }
  return hi - lo < tol.tail;
}

double limit_at_plus_infinity(const GridFunction& f, const Tolerances& tol) {
  if (f.grid().is_periodic()) throw Error(ErrorKind::InvalidArgument, "limit needs a line grid");
  if (!tail_settled_right(f, tol)) {
    throw Error(ErrorKind::TailNotSettled, "right tail still varies; widen the window");
  }
  return f.back();
}

double limit_at_minus_infinity(const GridFunction& f, const Tolerances& tol) {
  if (f.grid().is_periodic()) throw Error(ErrorKind::InvalidArgument, "limit needs a line grid");
  if (!tail_settled_left(f, tol)) {
    throw Error(ErrorKind::TailNotSettled, "left tail still varies; widen the window");
  }
  return f.front();
}

}  // namespace hsgeo
