#include "radonfd/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "radonfd/errors.hpp"
#include "radonfd/format.hpp"
#include "radonfd/verify.hpp"

namespace radonfd {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(std::string_view s, std::string_view key) {
  s = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    throw DomainError("invalid number for " + std::string(key) + ": '" + std::string(s) + "'");
  }
  return v;
}

long long to_integer(std::string_view s, std::string_view key) {
  s = trim(s);
  long long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DomainError("invalid integer for " + std::string(key) + ": '" + std::string(s) + "'");
  }
  return v;
}

std::size_t to_count(std::string_view s, std::string_view key) {
  const auto v = to_integer(s, key);
  if (v < 0) throw DomainError(std::string(key) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

bool to_bool(std::string_view s, std::string_view key) {
  s = trim(s);
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw DomainError("invalid boolean for " + std::string(key) + ": '" + std::string(s) + "'");
}

template <class T, class F>
std::string join(const std::vector<T>& xs, char sep, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += fmt(xs[i]);
  }
  return out;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(to_double(part, "list"));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(static_cast<int>(to_integer(part, "list")));
  return out;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "command", "subcommand", "body", "n", "q", "density", "volume_one", "other_body",
      "other_density", "direction_grid", "section_grid", "section_tol", "radial_nodes", "volume_grid",
      "singular_tol", "bisection_tol", "refine_rounds", "use_analytic_oracles", "seed", "c", "C", "c_lp", "dovr",
      "hypothesis_directions", "fn", "T", "param", "t", "direction", "p", "check", "format", "output"};
  return keys;
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  auto& quad = config.quad;
  if (key == "command") {
    config.command = value;
  } else if (key == "subcommand") {
    config.subcommand = value;
  } else if (key == "body") {
    // Body specs contain ',' and ';', so lists of bodies use '|'.
    config.bodies.clear();
    if (!value.empty()) {
      for (auto part : split(value, '|')) config.bodies.emplace_back(part);
    }
  } else if (key == "n") {
    config.dims = parse_int_list(value);
  } else if (key == "q") {
    config.q = parse_double_list(value);
  } else if (key == "density") {
    config.density = value;
  } else if (key == "volume_one") {
    config.volume_one = to_bool(value, key);
  } else if (key == "other_body") {
    config.other_body = value;
  } else if (key == "other_density") {
    config.other_density = value;
  } else if (key == "direction_grid") {
    quad.direction_grid = to_count(value, key);
  } else if (key == "section_grid") {
    quad.section_grid = to_count(value, key);
  } else if (key == "section_tol") {
    quad.section_tol = to_double(value, key);
  } else if (key == "radial_nodes") {
    quad.radial_nodes = to_count(value, key);
  } else if (key == "volume_grid") {
    quad.volume_grid = to_count(value, key);
  } else if (key == "singular_tol") {
    quad.singular_tol = to_double(value, key);
  } else if (key == "bisection_tol") {
    quad.bisection_tol = to_double(value, key);
  } else if (key == "refine_rounds") {
    quad.refine_rounds = static_cast<int>(to_integer(value, key));
  } else if (key == "use_analytic_oracles") {
    quad.use_analytic_oracles = to_bool(value, key);
  } else if (key == "seed") {
    quad.seed = static_cast<std::uint64_t>(to_count(value, key));
  } else if (key == "c") {
    config.c = to_double(value, key);
  } else if (key == "C") {
    config.C_kpz = to_double(value, key);
  } else if (key == "c_lp") {
    config.c_lp = to_double(value, key);
  } else if (key == "dovr") {
    if (value.empty() || value == "auto") {
      config.dovr.reset();
    } else {
      config.dovr = DovrBound::user(to_double(value, key)).value;
    }
  } else if (key == "hypothesis_directions") {
    config.hypothesis_directions = to_count(value, key);
  } else if (key == "fn") {
    config.fn = value;
  } else if (key == "T") {
    config.T = to_double(value, key);
  } else if (key == "param") {
    config.param = to_double(value, key);
  } else if (key == "t") {
    config.t = parse_double_list(value);
  } else if (key == "direction") {
    config.direction = parse_double_list(value);
  } else if (key == "p") {
    config.p = parse_double_list(value);
  } else if (key == "check") {
    config.check = value;
  } else if (key == "format") {
    if (value == "json") {
      config.format = OutputFormat::Json;
    } else if (value == "csv") {
      config.format = OutputFormat::Csv;
    } else {
      throw DomainError("format must be json or csv");
    }
  } else if (key == "output") {
    config.output = value.empty() ? "-" : std::string(value);
  } else {
    throw DomainError("unknown config key '" + std::string(key) + "'");
  }
}

void apply_config_text(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = trim(line.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_text(config, ss.str());
}

std::vector<std::pair<std::string, std::string>> to_settings(const RunConfig& config) {
  const auto& quad = config.quad;
  const auto num = [](double v) { return format_shortest(v); };
  const auto integer = [](int v) { return std::to_string(v); };
  return {
      {"command", config.command},
      {"subcommand", config.subcommand},
      {"body", join(config.bodies, '|', [](const std::string& s) { return s; })},
      {"n", join(config.dims, ',', integer)},
      {"q", join(config.q, ',', num)},
      {"density", config.density},
      {"volume_one", fmt_bool(config.volume_one)},
      {"other_body", config.other_body},
      {"other_density", config.other_density},
      {"direction_grid", std::to_string(quad.direction_grid)},
      {"section_grid", std::to_string(quad.section_grid)},
      {"section_tol", num(quad.section_tol)},
      {"radial_nodes", std::to_string(quad.radial_nodes)},
      {"volume_grid", std::to_string(quad.volume_grid)},
      {"singular_tol", num(quad.singular_tol)},
      {"bisection_tol", num(quad.bisection_tol)},
      {"refine_rounds", std::to_string(quad.refine_rounds)},
      {"use_analytic_oracles", fmt_bool(quad.use_analytic_oracles)},
      {"seed", std::to_string(quad.seed)},
      {"c", num(config.c)},
      {"C", num(config.C_kpz)},
      {"c_lp", num(config.c_lp)},
      {"dovr", config.dovr ? num(*config.dovr) : "auto"},
      {"hypothesis_directions", std::to_string(config.hypothesis_directions)},
      {"fn", config.fn},
      {"T", num(config.T)},
      {"param", num(config.param)},
      {"t", join(config.t, ',', num)},
      {"direction", join(config.direction, ',', num)},
      {"p", join(config.p, ',', num)},
      {"check", config.check},
      {"format", config.format == OutputFormat::Json ? "json" : "csv"},
      {"output", config.output},
  };
}

}  // namespace radonfd
