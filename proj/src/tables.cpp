#include "hsgeo/tables.hpp"

#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hsgeo/serialize.hpp"

namespace hsgeo {

TableFormat table_format_from_string(const std::string& name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw Error(ErrorKind::ParseError, "unknown format '" + name + "' (csv|json)");
}

void write_table(std::ostream& out, const Table& table, TableFormat format) {
  if (format == TableFormat::Json) {
    nlohmann::json j;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    out << j.dump() << '\n';
    return;
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
    out << '\n';
  }
}

std::string table_string(const Table& table, TableFormat format) {
  std::ostringstream s;
  write_table(s, table, format);
  return s.str();
}

Table geodesic_table(const GeodesicPath& path, const std::vector<double>& times) {
  Table out{{"t", "x", "phi_minus_x", "gamma"}, {}};
  const Grid& g = path.grid();
  for (double t : times) {
    auto f = evaluate_displacement(path, t);
    auto gam = path.gamma_at(t);
    for (std::size_t i = 0; i < g.size(); ++i) out.rows.push_back({t, g.node(i), f[i], gam[i]});
  }
  return out;
}

Table hs_table(const HSSolution& sol, const std::vector<double>& times) {
  Table out{{"t", "x", "u", "phi_minus_x"}, {}};
  const Grid& g = sol.grid();
  for (double t : times) {
    auto [u, phi] = hs_eval(sol, t);
    for (std::size_t i = 0; i < g.size(); ++i) out.rows.push_back({t, g.node(i), u[i], phi.f()[i]});
  }
  return out;
}

Table periodic_hs_table(const PeriodicHSSolution& sol, const std::vector<double>& times) {
  Table out{{"t", "theta", "u", "phi_minus_theta", "gamma"}, {}};
  const Grid& g = sol.u0().grid();
  for (double t : times) {
    auto phi = sol.flow(t);
    auto u = sol.velocity(t);
    auto gam = sol.gamma(t);
    for (std::size_t i = 0; i < g.size(); ++i) {
      out.rows.push_back({t, g.node(i), u[i], phi.f()[i], gam[i]});
    }
  }
  return out;
}

Table twocomp_table(const TwoCompSolution& sol, const std::vector<double>& times) {
  Table out{{"t", "x", "u", "rho", "re_gamma", "im_gamma"}, {}};
  const Grid& g = sol.grid();
  for (double t : times) {
    auto [u, rho] = sol.velocity(t);
    auto gam = sol.gamma(t);
    for (std::size_t i = 0; i < g.size(); ++i) {
      out.rows.push_back({t, g.node(i), u[i], rho[i], gam[i].real(), gam[i].imag()});
    }
  }
  return out;
}

Table soliton_table(const SolitonState& s0, const std::vector<double>& times) {
  Table out{{"t", "i", "y", "a", "energy"}, {}};
  for (double t : times) {
    auto s = soliton_flow_closed_form(s0, t);
    double e = soliton_energy(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      out.rows.push_back({t, static_cast<double>(i), s.y[i], s.a[i], e});
    }
  }
  return out;
}

}  // namespace hsgeo
