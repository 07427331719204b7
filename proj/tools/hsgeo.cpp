#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsgeo/families.hpp"
#include "hsgeo/funcspace.hpp"
#include "hsgeo/serialize.hpp"
#include "hsgeo/tables.hpp"
#include "hsgeo/verify.hpp"

using namespace hsgeo;

namespace {

const std::vector<std::string> kCommands = {"geodesic", "distance",  "solve-hs", "solve-2hs",
                                            "solitons", "blowup",    "verify"};

// Problems with the request itself exit 1; numerical failures exit 2.
int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::GridTooSmall:
    case ErrorKind::GridMismatch:
    case ErrorKind::NotIntegrable:
    case ErrorKind::InvalidClass:
    case ErrorKind::TailTooLarge:
      return 1;
    default:
      return 2;
  }
}

double parse_number(const std::string& s) {
  std::string t = s;
  t.erase(std::remove_if(t.begin(), t.end(), ::isspace), t.end());
  auto slash = t.find('/');
  try {
    std::size_t used = 0;
    if (slash != std::string::npos) {
      double a = std::stod(t.substr(0, slash));
      double b = std::stod(t.substr(slash + 1), &used);
      if (used != t.size() - slash - 1 || b == 0.0) throw std::invalid_argument(t);
      return a / b;
    }
    double v = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "not a number: '" + s + "'");
  }
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(parse_number(item));
  }
  return out;
}

std::vector<double> parse_times(const std::string& s) {
  auto t = parse_list(s);
  if (t.empty()) throw Error(ErrorKind::ParseError, "no time samples");
  if (!std::is_sorted(t.begin(), t.end())) {
    throw Error(ErrorKind::InvalidArgument, "time samples must be sorted");
  }
  return t;
}

Grid parse_grid(const std::string& s, bool periodic) {
  if (s.empty()) return periodic ? Grid::default_periodic() : Grid::default_line();
  auto v = parse_list(s);
  if (periodic) {
    if (v.size() != 1) throw Error(ErrorKind::ParseError, "periodic --grid takes n only");
    return Grid::periodic(static_cast<std::size_t>(v[0]));
  }
  if (v.size() != 3) throw Error(ErrorKind::ParseError, "--grid expects n,xmin,xmax");
  return Grid::line(static_cast<std::size_t>(v[0]), v[1], v[2]);
}

bool is_file(const std::string& s) {
  return s.find(':') == std::string::npos && std::filesystem::is_regular_file(s);
}

// A named family sample or a CSV file.
GridFunction load_function(const std::string& s, const Grid& grid) {
  if (is_file(s)) {
    std::ifstream in(s);
    auto f = read_csv(in);
    if (!(f.grid() == grid)) {
      throw Error(ErrorKind::GridMismatch, s + " is not sampled on the requested grid");
    }
    return f;
  }
  return FunctionSpec::parse(s).sample(grid);
}

// "identity", a family (phi = x + f) or a CSV of (x, phi - x).
Diffeo load_diffeo(const std::string& s, const Grid& grid, const Tolerances& tol) {
  if (s == "identity" || s == "id") return Diffeo::identity(grid);
  if (is_file(s)) {
    std::ifstream in(s);
    Diffeo d = read_diffeo_csv(in);
    if (!(d.grid() == grid)) {
      throw Error(ErrorKind::GridMismatch, s + " is not sampled on the requested grid");
    }
    return d;
  }
  return Diffeo::from_displacement(FunctionSpec::parse(s).sample(grid), tol);
}

struct Output {
  std::string path;
  std::string format = "csv";

  void write(const Table& table) const {
    auto fmt = table_format_from_string(format);
    if (path.empty() || path == "-") {
      write_table(std::cout, table, fmt);
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    write_table(out, table, fmt);
  }
};

// Flat "key = value" file; each line becomes --key value. A `command` key
// selects the subcommand when none is given on the command line.
std::vector<std::string> read_config(const std::string& path, std::string& command) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read config " + path);
  std::vector<std::string> args;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "bad config line: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "command") {
      command = value;
      continue;
    }
    args.push_back("--" + key);
    if (value != "true") args.push_back(value);
  }
  return args;
}

// Splices config-file arguments in front of the explicit ones so that the
// command line wins.
std::vector<std::string> expand_args(int argc, char** argv) {
  std::vector<std::string> in(argv + 1, argv + argc), rest;
  std::string config;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == "--config" && i + 1 < in.size()) {
      config = in[++i];
    } else if (in[i].rfind("--config=", 0) == 0) {
      config = in[i].substr(9);
    } else {
      rest.push_back(in[i]);
    }
  }
  if (config.empty()) return rest;
  std::string command;
  auto file_args = read_config(config, command);
  auto it = std::find_if(rest.begin(), rest.end(), [](const std::string& a) {
    return std::find(kCommands.begin(), kCommands.end(), a) != kCommands.end();
  });
  std::vector<std::string> out;
  if (it != rest.end()) {
    out.assign(rest.begin(), it + 1);
    out.insert(out.end(), file_args.begin(), file_args.end());
    out.insert(out.end(), it + 1, rest.end());
  } else {
    if (command.empty()) throw Error(ErrorKind::ParseError, "config names no command");
    out.push_back(command);
    out.insert(out.end(), file_args.begin(), file_args.end());
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("-o,--output", out.path, "Output file (default stdout)");
  cmd->add_option("--format", out.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesics of the homogeneous H1 metric on diffeomorphism groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.add_option("--config", "Flat key = value file with option defaults");

  Output out;
  std::string grid_spec, times_spec;
  std::string from = "identity", to, direction, u0_spec, rho0_spec, y_spec, a_spec;
  std::string baseline;
  bool periodic = false, backward = false;
  int check = 0;
  std::vector<std::uint64_t> random_spec;

  auto* geo = app.add_subcommand("geodesic", "Geodesic between two maps or along a direction");
  geo->add_option("--from", from, "identity, family spec or CSV");
  auto* to_opt = geo->add_option("--to", to, "Endpoint: family spec (phi = x + f) or CSV");
  geo->add_option("--direction", direction, "Velocity in R-map space from --from")
      ->excludes(to_opt);
  geo->add_option("--times", times_spec, "Comma list of times, fractions allowed")
      ->default_val("0,0.25,0.5,0.75,1");
  geo->add_option("--grid", grid_spec, "n,xmin,xmax");
  add_output(geo, out);

  auto* dist = app.add_subcommand("distance", "Geodesic distance between two maps");
  dist->add_option("--from", from, "identity, family spec or CSV");
  dist->add_option("--to", to, "family spec or CSV")->required();
  dist->add_option("--grid", grid_spec, "n,xmin,xmax");
  add_output(dist, out);

  auto* hs = app.add_subcommand("solve-hs", "Hunter-Saxton solution from initial velocity");
  hs->add_option("--u0", u0_spec, "Initial velocity: family spec or CSV")->required();
  hs->add_option("--times", times_spec, "Comma list of times")->default_val("0,0.5,1");
  hs->add_flag("--periodic", periodic, "Solve on the circle");
  hs->add_option("--grid", grid_spec, "n,xmin,xmax (or n with --periodic)");
  add_output(hs, out);

  auto* two = app.add_subcommand("solve-2hs", "Two-component Hunter-Saxton solution");
  two->add_option("--u0", u0_spec, "Initial velocity")->required();
  two->add_option("--rho0", rho0_spec, "Initial density")->default_val("zero");
  two->add_option("--times", times_spec, "Comma list of times")->default_val("0,0.5,1");
  two->add_option("--grid", grid_spec, "n,xmin,xmax");
  add_output(two, out);

  auto* sol = app.add_subcommand("solitons", "N-soliton flow");
  auto* y_opt = sol->add_option("--y", y_spec, "Sorted positions");
  sol->add_option("--a", a_spec, "Weights summing to zero")->needs(y_opt);
  sol->add_option("--random", random_spec, "seed,n for a random state")
      ->delimiter(',')
      ->expected(2)
      ->excludes(y_opt);
  sol->add_option("--times", times_spec, "Comma list of times")->default_val("0,0.5,1");
  add_output(sol, out);

  auto* blow = app.add_subcommand("blowup", "Exit time of a geodesic from the identity");
  auto* dir_opt = blow->add_option("--direction", direction, "Velocity in R-map space");
  blow->add_option("--u0", u0_spec, "Hunter-Saxton initial velocity")->excludes(dir_opt);
  blow->add_flag("--backward", backward, "Report only the backward time");
  blow->add_option("--grid", grid_spec, "n,xmin,xmax");
  add_output(blow, out);

  auto* ver = app.add_subcommand("verify", "Run the acceptance checks");
  ver->add_option("--check", check, "Run a single check (1-12)")->check(CLI::Range(1, kCheckCount));
  ver->add_option("--baseline", baseline, "Stored figure-1 table");

  for (auto* cmd : app.get_subcommands({})) {
    for (auto* opt : cmd->get_options()) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  }
  for (auto* opt : sol->get_options()) {
    if (opt->get_name() == "--random") opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  }

  try {
    auto args = expand_args(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "hsgeo: " << e.what() << '\n';
    return 1;
  }

  try {
    Tolerances tol = tolerances_from_env();
    if (*geo) {
      Grid g = parse_grid(grid_spec, false);
      Diffeo phi0 = load_diffeo(from, g, tol);
      if (to.empty() == direction.empty()) {
        throw Error(ErrorKind::InvalidArgument, "geodesic needs exactly one of --to, --direction");
      }
      // --direction is a velocity in R-map space, not a tangent vector.
      auto path = to.empty() ? GeodesicPath(r_map(phi0, tol).gamma(), load_function(direction, g),
                                            PathOrigin::Line)
                             : geodesic_bvp(phi0, load_diffeo(to, g, tol), tol);
      out.write(geodesic_table(path, parse_times(times_spec)));
    } else if (*dist) {
      Grid g = parse_grid(grid_spec, false);
      double d = distance(load_diffeo(from, g, tol), load_diffeo(to, g, tol), tol);
      out.write(Table{{"distance"}, {{d}}});
    } else if (*hs) {
      Grid g = parse_grid(grid_spec, periodic);
      auto times = parse_times(times_spec);
      auto u0 = load_function(u0_spec, g);
      if (periodic) {
        out.write(periodic_hs_table(PeriodicHSSolution(u0, tol), times));
      } else {
        out.write(hs_table(HSSolution(u0, tol), times));
      }
    } else if (*two) {
      Grid g = parse_grid(grid_spec, false);
      TwoCompSolution s(load_function(u0_spec, g), load_function(rho0_spec, g), tol);
      out.write(twocomp_table(s, parse_times(times_spec)));
    } else if (*sol) {
      SolitonState s0;
      if (!random_spec.empty()) {
        s0 = random_soliton_state(random_spec[0], static_cast<std::size_t>(random_spec[1]));
      } else {
        if (y_spec.empty()) throw Error(ErrorKind::InvalidArgument, "solitons needs --y/--a or --random");
        s0.y = parse_list(y_spec);
        s0.a = parse_list(a_spec);
        s0.validate();
      }
      out.write(soliton_table(s0, parse_times(times_spec)));
    } else if (*blow) {
      Grid g = parse_grid(grid_spec, false);
      if (direction.empty() == u0_spec.empty()) {
        throw Error(ErrorKind::InvalidArgument, "blowup needs exactly one of --direction, --u0");
      }
      GeodesicPath path = direction.empty() ? HSSolution(load_function(u0_spec, g), tol).path()
                                            : geodesic_from_identity(load_function(direction, g));
      double tf = blowup_time(path, TimeDirection::Forward);
      double tb = blowup_time(path, TimeDirection::Backward);
      if (backward) {
        out.write(Table{{"t_backward"}, {{tb}}});
      } else {
        out.write(Table{{"t_forward", "t_backward"}, {{tf, tb}}});
      }
    } else if (*ver) {
      VerifyOptions opt;
      opt.fig1_baseline = baseline;
      std::vector<CheckResult> results;
      if (check) {
        results.push_back(run_check(check, opt));
        print_check(std::cout, results.back());
      } else {
        for (int id = 1; id <= kCheckCount; ++id) {
          results.push_back(run_check(id, opt));
          print_check(std::cout, results.back());
          std::cout.flush();
        }
      }
      int failed = static_cast<int>(
          std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
      std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
      return failed ? 2 : 0;
    }
  } catch (const Error& e) {
    std::cerr << "hsgeo: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
