#include "hsgeo/serialize.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace hsgeo {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, p);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == ';') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool parse_number(const std::string& s, double& v) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  return ec == std::errc{} && p == s.data() + s.size();
}

Decay default_decay(const Grid& g, double first, double last) {
  if (g.is_periodic()) return Decay::Periodic;
  if (std::abs(first) < 1e-10 && std::abs(last) < 1e-10) return Decay::IntegrableDerivatives;
  return Decay::Bounded;
}

json grid_json(const Grid& g) {
  return json{{"kind", g.is_periodic() ? "periodic" : "line"},
              {"n", g.size()},
              {"x_min", g.x_min()},
              {"x_max", g.x_max()}};
}

Grid grid_from_json(const json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  if (j.at("kind").get<std::string>() == "periodic") return Grid::periodic(n);
  return Grid::line(n, j.at("x_min").get<double>(), j.at("x_max").get<double>());
}

}  // namespace

CsvTable read_table(std::istream& in) {
  CsvTable t;
  std::string line;
  bool first = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size(); ++i) numeric = numeric && parse_number(fields[i], row[i]);
    if (!numeric) {
      if (first) {
        t.header = fields;
        first = false;
        continue;
      }
      throw Error(ErrorKind::ParseError, "non-numeric data on line " + std::to_string(lineno));
    }
    if (!t.rows.empty() && row.size() != t.rows.front().size()) {
      throw Error(ErrorKind::ParseError, "ragged row on line " + std::to_string(lineno));
    }
    first = false;
    t.rows.push_back(std::move(row));
  }
  return t;
}

Grid grid_from_nodes(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorKind::ParseError, "need at least two rows");
  double h = (x.back() - x.front()) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw Error(ErrorKind::ParseError, "nodes must be increasing");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((x[i] - x[i - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h))) {
      throw Error(ErrorKind::ParseError, "nodes are not uniformly spaced");
    }
  }
  if (x.front() == 0.0 && n >= 3) {
    Grid p = Grid::periodic(n);
    if (std::abs(p.x_max() - x.back()) < 1e-12) return p;
  }
  return Grid::line(n, x.front(), x.back());
}

void write_csv(std::ostream& out, const GridFunction& f, const std::string& value_name) {
  out << "x," << value_name << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << format_double(f.grid().node(i)) << ',' << format_double(f[i]) << '\n';
  }
}

void write_csv(std::ostream& out, const ComplexGridFunction& f) {
  out << "x,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << format_double(f.grid().node(i)) << ',' << format_double(f[i].real()) << ','
        << format_double(f[i].imag()) << '\n';
  }
}

GridFunction read_csv(std::istream& in, std::optional<Decay> decay) {
  auto t = read_table(in);
  if (t.rows.empty() || t.rows.front().size() != 2) {
    throw Error(ErrorKind::ParseError, "expected two columns (x, value)");
  }
  std::vector<double> x, v;
  for (auto& r : t.rows) {
    x.push_back(r[0]);
    v.push_back(r[1]);
  }
  Grid g = grid_from_nodes(x);
  Decay d = decay.value_or(default_decay(g, v.front(), v.back()));
  return {g, std::move(v), d};
}

ComplexGridFunction read_csv_complex(std::istream& in, std::optional<Decay> decay) {
  auto t = read_table(in);
  if (t.rows.empty() || t.rows.front().size() != 3) {
    throw Error(ErrorKind::ParseError, "expected three columns (x, re, im)");
  }
  std::vector<double> x;
  std::vector<std::complex<double>> v;
  for (auto& r : t.rows) {
    x.push_back(r[0]);
    v.emplace_back(r[1], r[2]);
  }
  Grid g = grid_from_nodes(x);
  Decay d = decay.value_or(default_decay(g, std::abs(v.front()), std::abs(v.back())));
  return {g, std::move(v), d};
}

void write_csv(std::ostream& out, const MonotoneMap& phi) { write_csv(out, phi.f(), "f"); }

Diffeo read_diffeo_csv(std::istream& in, std::optional<GroupClass> cls) {
  GridFunction f = read_csv(in, std::nullopt);
  if (!f.grid().is_periodic()) f = f.with_decay(Decay::Bounded);
  if (cls) return Diffeo::from_displacement(std::move(f), *cls);
  return Diffeo::from_displacement(std::move(f));
}

std::string to_json(const GridFunction& f) {
  json j{{"grid", grid_json(f.grid())},
         {"f", std::vector<double>(f.values().begin(), f.values().end())},
         {"decay", std::string(to_string(f.decay()))}};
  return j.dump();
}

GridFunction grid_function_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    return {grid_from_json(j.at("grid")), j.at("f").get<std::vector<double>>(),
            decay_from_string(j.at("decay").get<std::string>())};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string to_json(const MonotoneMap& phi) {
  json j{{"grid", grid_json(phi.grid())},
         {"f", std::vector<double>(phi.f().values().begin(), phi.f().values().end())},
         {"class", std::string(to_string(phi.group_class()))}};
  return j.dump();
}

Diffeo diffeo_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    Grid g = grid_from_json(j.at("grid"));
    GridFunction f(g, j.at("f").get<std::vector<double>>(),
                   g.is_periodic() ? Decay::Periodic : Decay::Bounded);
    return Diffeo::from_displacement(std::move(f),
                                     group_class_from_string(j.at("class").get<std::string>()));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace hsgeo
