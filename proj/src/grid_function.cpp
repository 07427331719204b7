#include "hsgeo/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hsgeo {

std::string_view to_string(Decay decay) {
  switch (decay) {
    case Decay::Compact: return "compact";
    case Decay::RapidlyDecreasing: return "rapidly-decreasing";
    case Decay::IntegrableDerivatives: return "integrable-derivatives";
    case Decay::Bounded: return "bounded";
    case Decay::Periodic: return "periodic";
  }
  return "bounded";
}

Decay decay_from_string(std::string_view name) {
  for (Decay d : {Decay::Compact, Decay::RapidlyDecreasing, Decay::IntegrableDerivatives,
                  Decay::Bounded, Decay::Periodic}) {
    if (to_string(d) == name) return d;
  }
  throw Error(ErrorKind::ParseError, "unknown decay class '" + std::string(name) + "'");
}

// Ordered from most to least restrictive on the line.
static int rank(Decay d) {
  switch (d) {
    case Decay::Compact: return 0;
    case Decay::RapidlyDecreasing: return 1;
    case Decay::IntegrableDerivatives: return 2;
    case Decay::Bounded: return 3;
    case Decay::Periodic: return 4;
  }
  return 3;
}

Decay sum_decay(Decay a, Decay b) {
  if (a == Decay::Periodic || b == Decay::Periodic) return Decay::Periodic;
  return rank(a) >= rank(b) ? a : b;
}

Decay product_decay(Decay a, Decay b) {
  if (a == Decay::Periodic || b == Decay::Periodic) return Decay::Periodic;
  return rank(a) <= rank(b) ? a : b;
}

void require_same_grid(const Grid& a, const Grid& b, std::string_view where) {
  if (!(a == b)) throw Error(ErrorKind::GridMismatch, std::string(where) + ": grids differ");
}

template <class T>
BasicGridFunction<T>::BasicGridFunction(Grid grid, std::vector<T> values, Decay decay)
    : grid_(grid), values_(std::move(values)), decay_(decay) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorKind::InvalidArgument, "value count does not match grid size");
  }
  if (grid_.is_periodic() != (decay_ == Decay::Periodic)) {
    throw Error(ErrorKind::InvalidClass, "periodic decay class iff periodic grid");
  }
}

template <class T>
BasicGridFunction<T> BasicGridFunction<T>::sample(const Grid& grid,
                                                  const std::function<T(double)>& fn,
                                                  Decay decay) {
  std::vector<T> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(grid.node(i));
  return {grid, std::move(v), decay};
}

template <class T>
BasicGridFunction<T> BasicGridFunction<T>::constant(const Grid& grid, T value, Decay decay) {
  return {grid, std::vector<T>(grid.size(), value), decay};
}

template <class T>
BasicGridFunction<T> BasicGridFunction<T>::zero(const Grid& grid) {
  return constant(grid, T{}, grid.is_periodic() ? Decay::Periodic : Decay::Compact);
}

template <class T>
std::pair<std::size_t, std::size_t> BasicGridFunction<T>::support_indices(
    const Tolerances& tol) const {
  std::size_t n = values_.size();
  std::size_t lo = n, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(values_[i]) > tol.zero) {
      if (lo == n) lo = i;
      hi = i;
    }
  }
  return {lo, hi};
}

template <class T>
void BasicGridFunction<T>::validate(const Tolerances& tol) const {
  if (grid_.is_periodic() || !decays_at_infinity(decay_)) return;
  double left = std::abs(values_.front());
  double right = std::abs(values_.back());
  if (left >= tol.tail || right >= tol.tail) {
    throw Error(ErrorKind::TailTooLarge,
                "values at the window ends exceed the tail tolerance (" + std::to_string(left) +
                    ", " + std::to_string(right) + "); widen the grid");
  }
  if (decay_ == Decay::Compact) {
    auto [lo, hi] = support_indices(tol);
    if (lo != values_.size() && (lo == 0 || hi + 1 == values_.size())) {
      throw Error(ErrorKind::TailTooLarge, "compact support touches the window boundary");
    }
  }
}

template <class T>
double BasicGridFunction<T>::sup_norm() const {
  double m = 0.0;
  for (const T& v : values_) m = std::max(m, static_cast<double>(std::abs(v)));
  return m;
}

template <class T>
BasicGridFunction<T> BasicGridFunction<T>::operator-() const {
  std::vector<T> v(values_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -values_[i];
  return {grid_, std::move(v), decay_};
}

template <class T>
BasicGridFunction<T>& BasicGridFunction<T>::operator+=(const BasicGridFunction& other) {
  require_same_grid(grid_, other.grid_, "operator+");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  decay_ = sum_decay(decay_, other.decay_);
  return *this;
}

template <class T>
BasicGridFunction<T>& BasicGridFunction<T>::operator-=(const BasicGridFunction& other) {
  require_same_grid(grid_, other.grid_, "operator-");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  decay_ = sum_decay(decay_, other.decay_);
  return *this;
}

template <class T>
BasicGridFunction<T>& BasicGridFunction<T>::operator*=(const BasicGridFunction& other) {
  require_same_grid(grid_, other.grid_, "operator*");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  decay_ = product_decay(decay_, other.decay_);
  return *this;
}

template <class T>
BasicGridFunction<T>& BasicGridFunction<T>::operator*=(T scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

GridFunction operator+(GridFunction f, double c) {
  if (c == 0.0) return f;
  std::vector<double> v(f.values().begin(), f.values().end());
  for (auto& x : v) x += c;
  Decay d = f.decay() == Decay::Periodic ? Decay::Periodic : Decay::Bounded;
  return {f.grid(), std::move(v), d};
}

template <class T>
double sup_distance(const BasicGridFunction<T>& a, const BasicGridFunction<T>& b) {
  require_same_grid(a.grid(), b.grid(), "sup_distance");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, static_cast<double>(std::abs(a[i] - b[i])));
  return m;
}

ComplexGridFunction to_complex(const GridFunction& f) {
  return f.map([](double v) { return std::complex<double>(v, 0.0); }, f.decay());
}
GridFunction real_part(const ComplexGridFunction& f) {
  return f.map([](std::complex<double> v) { return v.real(); }, f.decay());
}
GridFunction imag_part(const ComplexGridFunction& f) {
  return f.map([](std::complex<double> v) { return v.imag(); }, f.decay());
}

template class BasicGridFunction<double>;
template class BasicGridFunction<std::complex<double>>;
template double sup_distance(const GridFunction&, const GridFunction&);
template double sup_distance(const ComplexGridFunction&, const ComplexGridFunction&);

}  // namespace hsgeo
