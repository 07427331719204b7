#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsgeo/tables.hpp"

namespace hsgeo {

/// Outcome of one acceptance check. `value` is the measured quantity that
/// is compared against `threshold`.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Stored geodesic table for check 3.
  std::string fig1_baseline;
  std::uint64_t seed = 20240601;
};

/// Default location of the stored figure-1 table.
std::string default_fig1_baseline();

/// Geodesic from the identity to x + bump(x) on the default grid, sampled
/// at t = 0, 1/2, ..., 3.
Table figure1_table();

inline constexpr int kCheckCount = 12;

CheckResult run_check(int id, const VerifyOptions& options = {});
std::vector<CheckResult> run_all_checks(const VerifyOptions& options = {});

/// One line per check: id, PASS/FAIL, name, value vs threshold, detail.
void print_check(std::ostream& out, const CheckResult& r);

}  // namespace hsgeo
