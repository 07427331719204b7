#pragma once

#include <map>
#include <string>
#include <string_view>

#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// A named analytic function family with parameters, written
/// "name" or "name:key=value,key=value".
///
///   zero
///   gaussian      amp * exp(-((x-center)/width)^2)
///   bump          amp * exp(-1/(s+1)^2) exp(-1/(s-1)^2), s = (x-center)/width, |s| < 1
///   logistic      amp / (1 + exp(-rate (x-center)))
///   logistic-neg  logistic with amp = -1/4, rate = 10
///   sine          amp * sin(freq x + phase)
class FunctionSpec {
 public:
  static FunctionSpec parse(std::string_view text);
  FunctionSpec(std::string name, std::map<std::string, double> params = {});

  const std::string& name() const noexcept { return name_; }
  double param(const std::string& key) const;

  double operator()(double x) const;
  /// Decay class the family has on the given grid.
  Decay decay(const Grid& grid) const;
  GridFunction sample(const Grid& grid) const;

  std::string str() const;

 private:
  std::string name_;
  std::map<std::string, double> params_;
};

/// The bump profile exp(-1/(x+1)^2) exp(-1/(x-1)^2) on (-1, 1), 0 elsewhere.
double bump_profile(double x);

}  // namespace hsgeo
