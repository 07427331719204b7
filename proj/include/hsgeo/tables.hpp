#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hsgeo/geodesic.hpp"
#include "hsgeo/hs_solve.hpp"
#include "hsgeo/periodic_ch.hpp"
#include "hsgeo/soliton.hpp"
#include "hsgeo/twocomp.hpp"

namespace hsgeo {

/// Rows of numbers under named columns; what the CLI writes out.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

enum class TableFormat { Csv, Json };
TableFormat table_format_from_string(const std::string& name);

void write_table(std::ostream& out, const Table& table, TableFormat format = TableFormat::Csv);
std::string table_string(const Table& table, TableFormat format = TableFormat::Csv);

/// t, x, phi - x, gamma. Times past the exit are evaluated from the
/// formula all the same (the map is then no longer monotone).
Table geodesic_table(const GeodesicPath& path, const std::vector<double>& times);
/// t, x, u, phi - x. Throws PastBlowup.
Table hs_table(const HSSolution& sol, const std::vector<double>& times);
/// t, theta, u, phi - theta, gamma. Throws PositivityLost.
Table periodic_hs_table(const PeriodicHSSolution& sol, const std::vector<double>& times);
/// t, x, u, rho, re_gamma, im_gamma. Throws Breakdown.
Table twocomp_table(const TwoCompSolution& sol, const std::vector<double>& times);
/// t, i, y, a, energy. Throws SolitonBlowup.
Table soliton_table(const SolitonState& s0, const std::vector<double>& times);

}  // namespace hsgeo
