#pragma once

// Run configuration shared by the command-line tool, the suites and the
// Python module. Every setting has a key; a flat key=value file and
// command-line flags both go through apply_setting().

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radonfd/radon.hpp"

namespace radonfd {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::string command;     // compute | verify | sweep
  std::string subcommand;  // compute target or check name

  // Empty lists mean "use the suite default".
  std::vector<std::string> bodies;
  std::vector<int> dims;
  std::vector<double> q;
  std::string density;  // empty: suite default
  /// Scale thm2 suite bodies to volume one (thm1 always does).
  bool volume_one = true;

  // Second body and density of the comparison theorem.
  std::string other_body;
  std::string other_density;

  QuadratureSpec quad;
  double c = 1.0;
  double C_kpz = 1.0;
  double c_lp = 1.0;
  std::optional<double> dovr;
  std::size_t hypothesis_directions = 200;

  // compute targets
  std::string fn = "exp-neg";
  double T = 40.0;
  double param = 1.0;
  std::vector<double> t{0.0};
  std::vector<double> direction;
  std::vector<double> p;  // Parseval exponents

  std::string check = "thm2";  // sweep target: thm1 | thm2

  OutputFormat format = OutputFormat::Json;
  std::string output = "-";
};

/// Every key accepted by apply_setting(), in serialization order.
const std::vector<std::string>& config_keys();

/// Sets one key; throws DomainError for unknown keys or malformed values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Flat key=value text; '#' starts a comment, blank lines are ignored.
void apply_config_text(RunConfig& config, std::string_view text);
void apply_config_file(RunConfig& config, const std::string& path);

/// All settings as (key, value) pairs; parsing them back reproduces the config.
std::vector<std::pair<std::string, std::string>> to_settings(const RunConfig& config);

std::vector<double> parse_double_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

}  // namespace radonfd
