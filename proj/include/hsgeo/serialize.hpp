#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hsgeo/diffeo.hpp"
#include "hsgeo/grid_function.hpp"

namespace hsgeo {

/// Doubles formatted with 17 significant digits (round-trips exactly).
std::string format_double(double v);

/// Parsed numeric table; the header row (if any) is kept separately.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Comma- or whitespace-delimited numbers; a first row that does not parse
/// as numbers is taken as header. Throws ParseError.
CsvTable read_table(std::istream& in);

/// Grid implied by a column of node coordinates: periodic when it starts at
/// 0 and n*h = 2*pi, uniform line otherwise. Throws ParseError if the
/// spacing is not uniform.
Grid grid_from_nodes(const std::vector<double>& x);

void write_csv(std::ostream& out, const GridFunction& f, const std::string& value_name = "value");
void write_csv(std::ostream& out, const ComplexGridFunction& f);

/// Two-column (x, value) data. Without `decay`, periodic grids get
/// Periodic, line data vanishing at both ends IntegrableDerivatives, and
/// anything else Bounded.
GridFunction read_csv(std::istream& in, std::optional<Decay> decay = std::nullopt);
/// Three-column (x, re, im) data.
ComplexGridFunction read_csv_complex(std::istream& in, std::optional<Decay> decay = std::nullopt);

/// Diffeos as (x, phi(x) - x) CSV and {grid, f, class} JSON.
void write_csv(std::ostream& out, const MonotoneMap& phi);
Diffeo read_diffeo_csv(std::istream& in, std::optional<GroupClass> cls = std::nullopt);

std::string to_json(const GridFunction& f);
GridFunction grid_function_from_json(const std::string& text);
std::string to_json(const MonotoneMap& phi);
Diffeo diffeo_from_json(const std::string& text);

}  // namespace hsgeo
