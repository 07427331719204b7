#include "hsgeo/tolerances.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "hsgeo/error.hpp"

namespace hsgeo {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_positive(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !(value > 0.0)) {
    throw Error(ErrorKind::ParseError, "bad tolerance value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Tolerances parse_tolerances(std::string_view spec, Tolerances base) {
  spec = trim(spec);
  if (spec.empty()) return base;
  if (spec.find('=') == std::string_view::npos) {
    base.tail = parse_positive(spec);
    return base;
  }
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "expected key=value in '" + std::string(item) + "'");
    }
    auto key = trim(item.substr(0, eq));
    double v = parse_positive(item.substr(eq + 1));
    if (key == "tail") base.tail = v;
    else if (key == "min_derivative") base.min_derivative = v;
    else if (key == "monotone_slack") base.monotone_slack = v;
    else if (key == "root") base.root = v;
    else if (key == "zero") base.zero = v;
    else throw Error(ErrorKind::ParseError, "unknown tolerance '" + std::string(key) + "'");
  }
  return base;
}

Tolerances tolerances_from_env(Tolerances base) {
  const char* env = std::getenv("HSGEO_TOL");
  if (env == nullptr) return base;
  return parse_tolerances(env, base);
}

}  // namespace hsgeo
