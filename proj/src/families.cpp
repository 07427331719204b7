#include "hsgeo/families.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "hsgeo/error.hpp"

namespace hsgeo {
namespace {

const std::map<std::string, std::map<std::string, double>>& defaults() {
  static const std::map<std::string, std::map<std::string, double>> table = {
      {"zero", {}},
      {"gaussian", {{"amp", 1.0}, {"center", 0.0}, {"width", 1.0}}},
      {"bump", {{"amp", 1.0}, {"center", 0.0}, {"width", 1.0}}},
      {"logistic", {{"amp", 1.0}, {"center", 0.0}, {"rate", 1.0}}},
      {"logistic-neg", {{"amp", -0.25}, {"center", 0.0}, {"rate", 10.0}}},
      {"sine", {{"amp", 1.0}, {"freq", 1.0}, {"phase", 0.0}}},
  };
  return table;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

double bump_profile(double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  return std::exp(-1.0 / ((x + 1) * (x + 1))) * std::exp(-1.0 / ((x - 1) * (x - 1)));
}

FunctionSpec::FunctionSpec(std::string name, std::map<std::string, double> params)
    : name_(std::move(name)) {
  auto it = defaults().find(name_);
  if (it == defaults().end()) throw Error(ErrorKind::ParseError, "unknown family '" + name_ + "'");
  params_ = it->second;
  for (auto& [k, v] : params) {
    if (!params_.count(k)) {
      throw Error(ErrorKind::ParseError, "family '" + name_ + "' has no parameter '" + k + "'");
    }
    params_[k] = v;
  }
  if ((name_ == "gaussian" || name_ == "bump") && !(params_["width"] > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "width must be positive");
  }
}

FunctionSpec FunctionSpec::parse(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  std::string name(trim(text.substr(0, colon)));
  std::map<std::string, double> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto item = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorKind::ParseError, "expected key=value in '" + std::string(item) + "'");
      }
      auto vs = trim(item.substr(eq + 1));
      double v = 0.0;
      auto [p, ec] = std::from_chars(vs.data(), vs.data() + vs.size(), v);
      if (ec != std::errc{} || p != vs.data() + vs.size()) {
        throw Error(ErrorKind::ParseError, "bad number '" + std::string(vs) + "'");
      }
      params[std::string(trim(item.substr(0, eq)))] = v;
    }
  }
  return FunctionSpec(std::move(name), std::move(params));
}

double FunctionSpec::param(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) throw Error(ErrorKind::InvalidArgument, "no parameter '" + key + "'");
  return it->second;
}

double FunctionSpec::operator()(double x) const {
  if (name_ == "zero") return 0.0;
  if (name_ == "gaussian") {
    double s = (x - param("center")) / param("width");
    return param("amp") * std::exp(-s * s);
  }
  if (name_ == "bump") return param("amp") * bump_profile((x - param("center")) / param("width"));
  if (name_ == "logistic" || name_ == "logistic-neg") {
    return param("amp") / (1.0 + std::exp(-param("rate") * (x - param("center"))));
  }
  return param("amp") * std::sin(param("freq") * x + param("phase"));
}

Decay FunctionSpec::decay(const Grid& grid) const {
  if (grid.is_periodic()) return Decay::Periodic;
  if (name_ == "zero" || name_ == "bump") return Decay::Compact;
  if (name_ == "gaussian") return Decay::RapidlyDecreasing;
  return Decay::Bounded;
}

GridFunction FunctionSpec::sample(const Grid& grid) const {
  return GridFunction::sample(grid, [this](double x) { return (*this)(x); }, decay(grid));
}

std::string FunctionSpec::str() const {
  std::ostringstream os;
  os.precision(17);
  os << name_;
  char sep = ':';
  for (auto& [k, v] : params_) {
    os << sep << k << '=' << v;
    sep = ',';
  }
  return os.str();
}

}  // namespace hsgeo
