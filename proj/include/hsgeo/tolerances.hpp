#pragma once

#include <string_view>

namespace hsgeo {

/// Numerical thresholds shared by the library. Every operation that
/// classifies data (tail settledness, near-breakdown, root finding) takes
/// one of these; the defaults are the documented ones.
struct Tolerances {
  /// |values| at line-grid ends for decaying classes, and the allowed
  /// variation over the last 1% of nodes when a limit is read off.
  double tail = 1e-10;
  /// Smallest admissible min(phi') for a diffeomorphism.
  double min_derivative = 1e-8;
  /// Slack on phi' >= 0 for monotone maps.
  double monotone_slack = 1e-12;
  /// Absolute tolerance of per-node root finding in inversion.
  double root = 1e-12;
  /// Values below this are treated as exactly zero (support windows).
  double zero = 1e-14;
};

/// Parses an override string of the form "tail=1e-9,min_derivative=1e-7".
/// A bare number sets `tail`. Unknown keys raise ParseError.
Tolerances parse_tolerances(std::string_view spec, Tolerances base = {});

/// Reads HSGEO_TOL from the environment; returns `base` if unset.
Tolerances tolerances_from_env(Tolerances base = {});

}  // namespace hsgeo
