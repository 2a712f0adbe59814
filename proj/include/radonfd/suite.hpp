#pragma once

// Enumerates the cells of each verification suite, sweep and compute target
// from a RunConfig, in a fixed order.

#include <string>
#include <vector>

#include "radonfd/config.hpp"
#include "radonfd/report.hpp"
#include "radonfd/verify.hpp"

namespace radonfd {

/// Checks accepted by run_verify (besides "all", which runs them in this order).
const std::vector<std::string>& verify_check_names();

struct SuiteOutcome {
  std::vector<InequalityReport> reports;
  std::vector<Record> records;     // compute targets and sweeps
  std::vector<std::string> notes;  // skipped or filtered cells
};

/// Runs config.subcommand (a check name or "all").
SuiteOutcome run_verify(const RunConfig& config);

/// One row per (body, n, q) for config.check in {thm1, thm2}. q values within
/// the guard band of an odd integer, or outside the theorem's range, are
/// dropped and noted. Throws DomainError when nothing is left.
SuiteOutcome run_sweep(const RunConfig& config);

/// config.subcommand in {frac-deriv, radon, frac-radon, max}.
SuiteOutcome run_compute(const RunConfig& config);

/// 0 when every report passes (inapplicable reports are ignored), else 1.
int verify_exit_code(const SuiteOutcome& outcome);

}  // namespace radonfd
