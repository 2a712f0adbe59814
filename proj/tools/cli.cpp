#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "radonfd/config.hpp"
#include "radonfd/errors.hpp"
#include "radonfd/report.hpp"
#include "radonfd/suite.hpp"

namespace radonfd::cli {

namespace {

struct FlagSpec {
  std::string key;
  std::string help;
};

// Flag --foo-bar sets config key foo_bar. Repeated list flags accumulate.
const std::vector<FlagSpec>& flag_specs() {
  static const std::vector<FlagSpec> specs{
      {"body", "body spec, e.g. ball:r=1, ellipsoid:a=2,1,1, lp:p=1, cube (repeatable or '|'-separated)"},
      {"n", "dimension(s), comma-separated"},
      {"q", "order(s), comma-separated"},
      {"density", "uniform[:c=..], gaussian:sigma=..[,c=..], poly:a=..[,c=..]"},
      {"volume_one", "scale thm2 bodies to volume one (true|false)"},
      {"other_body", "second body (mp-lemma D, thm3 L)"},
      {"other_density", "second density (thm3 g)"},
      {"direction_grid", "directions on the sphere for maximization"},
      {"section_grid", "inner nodes per section, n >= 4"},
      {"section_tol", "relative tolerance of n = 3 section integrals"},
      {"radial_nodes", "Gauss-Jacobi nodes per ray"},
      {"volume_grid", "sphere nodes for volumes and moments"},
      {"singular_tol", "absolute tolerance of the fractional integrals"},
      {"bisection_tol", "relative tolerance of ray exits"},
      {"refine_rounds", "refinement rounds of the direction search"},
      {"use_analytic_oracles", "use closed-form section oracles when available (true|false)"},
      {"seed", "seed of every random grid"},
      {"c", "absolute constant of the thm1 lower bound"},
      {"C", "constant of the d_ovr bound in the thm1 route"},
      {"c_lp", "constant in c sqrt(p) for l_p balls, p > 2"},
      {"dovr", "d_ovr bound (number >= 1, or auto)"},
      {"hypothesis_directions", "directions for the thm3 hypothesis"},
      {"fn", "frac-deriv test function: exp-neg, one-minus-t2, power, ball-section, indicator"},
      {"T", "support of the frac-deriv test function"},
      {"param", "parameter of the frac-deriv test function"},
      {"t", "section offsets, comma-separated"},
      {"direction", "direction vector, comma-separated (normalized)"},
      {"p", "Parseval exponents, comma-separated"},
      {"check", "sweep target: thm1 or thm2"},
      {"format", "json or csv"},
      {"output", "output path, '-' for stdout"},
  };
  return specs;
}

std::string flag_name(const std::string& key) {
  std::string out = key;
  for (char& ch : out) {
    if (ch == '_') ch = '-';
  }
  return "--" + out;
}

struct Parsed {
  std::string config_path;
  std::string target;
  std::map<std::string, std::vector<std::string>> values;
};

void add_flags(CLI::App* app, Parsed& parsed) {
  app->add_option("--config", parsed.config_path, "key=value config file; flags override it");
  for (const auto& spec : flag_specs()) {
    app->add_option(flag_name(spec.key), parsed.values[spec.key], spec.help)
        ->expected(1)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->allow_extra_args(false);
  }
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

void write_output(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.output == "-") {
    out << text;
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + config.output + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional derivatives of Radon transforms and slicing inequalities"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);

  Parsed parsed;
  auto* compute = app.add_subcommand("compute", "evaluate one quantity");
  compute->add_option("target", parsed.target, "frac-deriv | radon | frac-radon | max")
      ->required()
      ->check(CLI::IsMember({"frac-deriv", "radon", "frac-radon", "max"}));
  add_flags(compute, parsed);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> checks = verify_check_names();
  checks.push_back("all");
  verify->add_option("name", parsed.target, "check name or all")->required()->check(CLI::IsMember(checks));
  add_flags(verify, parsed);

  auto* sweep = app.add_subcommand("sweep", "tabulate a theorem over bodies, dimensions and orders");
  add_flags(sweep, parsed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << library_version() << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    RunConfig config;
    const auto* active = app.get_subcommands().front();
    // Sweeps are tables: CSV unless JSON is asked for.
    if (active->get_name() == "sweep") config.format = OutputFormat::Csv;
    if (!parsed.config_path.empty()) apply_config_file(config, parsed.config_path);
    config.command = active->get_name();
    config.subcommand = parsed.target;
    for (const auto& [key, given] : parsed.values) {
      if (given.empty()) continue;
      apply_setting(config, key, join(given, key == "body" ? '|' : ','));
    }
    const bool csv = config.format == OutputFormat::Csv;

    if (config.command == "compute") {
      const auto result = run_compute(config);
      write_output(config,
                   csv ? records_document_csv(result.records, config, result.notes)
                       : records_document_json(result.records, config, result.notes),
                   out);
      return 0;
    }
    if (config.command == "verify") {
      const auto result = run_verify(config);
      write_output(config,
                   csv ? reports_document_csv(result.reports, config, result.notes)
                       : reports_document_json(result.reports, config, result.notes),
                   out);
      const auto counts = count_reports(result.reports);
      err << counts.pass << " pass, " << counts.fail << " fail, " << counts.inapplicable << " inapplicable\n";
      return verify_exit_code(result);
    }
    const auto result = run_sweep(config);
    for (const auto& note : result.notes) err << "note: " << note << '\n';
    write_output(config,
                 csv ? records_document_csv(result.records, config, result.notes)
                     : records_document_json(result.records, config, result.notes),
                 out);
    return 0;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (best estimate " << e.partial_estimate() << ")\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace radonfd::cli
