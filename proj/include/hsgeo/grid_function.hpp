#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hsgeo/error.hpp"
#include "hsgeo/grid.hpp"
#include "hsgeo/tolerances.hpp"

namespace hsgeo {

/// Decay class of a sampled function. These model the function spaces
/// C_c^inf, S, W^{inf,1}, B and 2*pi-periodic functions; they are metadata
/// checked by assertions, the numbers are the same either way.
enum class Decay {
  Compact,
  RapidlyDecreasing,
  IntegrableDerivatives,
  Bounded,
  Periodic,
};

std::string_view to_string(Decay decay);
Decay decay_from_string(std::string_view name);

/// True for the classes that vanish at both ends of the real line.
constexpr bool decays_at_infinity(Decay d) {
  return d == Decay::Compact || d == Decay::RapidlyDecreasing || d == Decay::IntegrableDerivatives;
}

/// Class of f + g.
Decay sum_decay(Decay a, Decay b);
/// Class of f * g (a decaying factor times a bounded one still decays).
Decay product_decay(Decay a, Decay b);

/// Values of a real or complex function at the nodes of a Grid, plus its
/// decay class. Immutable once built; arithmetic returns new objects.
template <class T>
class BasicGridFunction {
 public:
  using value_type = T;

  BasicGridFunction(Grid grid, std::vector<T> values, Decay decay);

  /// Samples `fn` at every node.
  static BasicGridFunction sample(const Grid& grid, const std::function<T(double)>& fn,
                                  Decay decay);
  static BasicGridFunction constant(const Grid& grid, T value, Decay decay);
  static BasicGridFunction zero(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  Decay decay() const noexcept { return decay_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const T> values() const noexcept { return values_; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  T front() const { return values_.front(); }
  T back() const { return values_.back(); }

  BasicGridFunction with_decay(Decay decay) const { return {grid_, values_, decay}; }

  /// Checks the decay-class invariants (tail size, compact support strictly
  /// inside the window). Throws TailTooLarge on violation.
  void validate(const Tolerances& tol = {}) const;

  /// Support window [first, last] node index with |value| > tol.zero, or
  /// nullopt-equivalent {n, 0} when identically zero.
  std::pair<std::size_t, std::size_t> support_indices(const Tolerances& tol = {}) const;

  double sup_norm() const;

  template <class F>
  auto map(F&& fn, Decay decay) const {
    using R = decltype(fn(std::declval<T>()));
    std::vector<R> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = fn(values_[i]);
    return BasicGridFunction<R>(grid_, std::move(out), decay);
  }

  BasicGridFunction operator-() const;
  BasicGridFunction& operator+=(const BasicGridFunction& other);
  BasicGridFunction& operator-=(const BasicGridFunction& other);
  BasicGridFunction& operator*=(const BasicGridFunction& other);
  BasicGridFunction& operator*=(T scalar);

 private:
  Grid grid_;
  std::vector<T> values_;
  Decay decay_;
};

using GridFunction = BasicGridFunction<double>;
using ComplexGridFunction = BasicGridFunction<std::complex<double>>;

template <class T>
BasicGridFunction<T> operator+(BasicGridFunction<T> a, const BasicGridFunction<T>& b) {
  a += b;
  return a;
}
template <class T>
BasicGridFunction<T> operator-(BasicGridFunction<T> a, const BasicGridFunction<T>& b) {
  a -= b;
  return a;
}
template <class T>
BasicGridFunction<T> operator*(BasicGridFunction<T> a, const BasicGridFunction<T>& b) {
  a *= b;
  return a;
}
template <class T>
BasicGridFunction<T> operator*(BasicGridFunction<T> a, T s) {
  a *= s;
  return a;
}
template <class T>
BasicGridFunction<T> operator*(T s, BasicGridFunction<T> a) {
  a *= s;
  return a;
}

/// Adds a constant; the result is Bounded unless c == 0.
GridFunction operator+(GridFunction f, double c);

/// Throws GridMismatch unless both functions live on the same grid.
void require_same_grid(const Grid& a, const Grid& b, std::string_view where);

/// Sup-norm distance; grids must match.
template <class T>
double sup_distance(const BasicGridFunction<T>& a, const BasicGridFunction<T>& b);

ComplexGridFunction to_complex(const GridFunction& f);
GridFunction real_part(const ComplexGridFunction& f);
GridFunction imag_part(const ComplexGridFunction& f);

}  // namespace hsgeo
