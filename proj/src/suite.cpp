#include "radonfd/suite.hpp"

#include <cmath>
#include <functional>
#include <optional>

#include "radonfd/errors.hpp"
#include "radonfd/format.hpp"

namespace radonfd {

namespace {

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

bool near_odd_integer(double q) {
  const double k = std::round(q);
  return std::fmod(std::abs(k), 2.0) == 1.0 && std::abs(q - k) <= kDefaultGuardRadius;
}

/// Regular order, or the continuous limit at odd integers when allowed.
std::optional<FractionalOrder> order_for(double q, bool allow_limit, const std::string& check,
                                         std::vector<std::string>& notes) {
  if (!near_odd_integer(q)) return FractionalOrder(q);
  if (allow_limit) {
    if (q != std::round(q)) {
      notes.push_back(check + ": q=" + format_shortest(q) + " evaluated as the limit at " +
                      format_shortest(std::round(q)));
    }
    return FractionalOrder::continuous_limit(std::round(q));
  }
  notes.push_back(check + ": q=" + format_shortest(q) + " skipped (within the guard band of an odd integer)");
  return std::nullopt;
}

void note_range(std::vector<std::string>& notes, const std::string& check, int n, double q) {
  notes.push_back(check + ": q=" + format_shortest(q) + " skipped for n=" + std::to_string(n) + " (outside range)");
}

std::string density_default(const RunConfig& config) { return config.density.empty() ? "uniform" : config.density; }

std::vector<std::string> density_list(const RunConfig& config, std::vector<std::string> suite_default) {
  if (!config.density.empty()) return {config.density};
  if (!config.bodies.empty()) return {"uniform"};
  return suite_default;
}

SphereGrid volume_grid(int n, const QuadratureSpec& quad) { return SphereGrid::make(n, quad.volume_grid, quad.seed); }

DovrBound dovr_for(const RunConfig& config, const StarBody& K) {
  if (config.dovr) return DovrBound::user(*config.dovr);
  return default_dovr(K, {.c_lp = config.c_lp, .ellipsoid_samples = 2000, .seed = config.quad.seed});
}

StarBody prepared_body(const std::string& spec, int n, bool volume_one, const QuadratureSpec& quad) {
  const auto K = parse_body(spec, n);
  return volume_one ? scale_to_volume_one(K, volume_grid(n, quad)) : K;
}

void tag(InequalityReport& r, const std::string& body_spec) { r.input("suite_body", body_spec); }

// ---------------------------------------------------------------- suites

void suite_corollary1(const RunConfig& config, SuiteOutcome& out) {
  for (int n : or_default(config.dims, {3, 4, 5})) {
    for (double q : or_default(config.q, {0.0, 0.5, 1.5, 2.5})) {
      if (!(q > -1.0 && q < n - 1.0)) {
        note_range(out.notes, "corollary1", n, q);
        continue;
      }
      auto order = order_for(q, false, "corollary1", out.notes);
      if (!order) continue;
      out.reports.push_back(check_corollary1(n, *order, config.quad));
    }
  }
}

void suite_parseval(const RunConfig& config, SuiteOutcome& out) {
  for (const auto& spec : or_default(config.bodies, {"ball", "ellipsoid:a=2,1,1"})) {
    for (int n : or_default(config.dims, {3})) {
      const auto K = parse_body(spec, n);
      const auto grid = volume_grid(n, config.quad);
      // Constants cancel exactly for balls; ellipsoids carry the grid error.
      const double tol = K.is_ball() ? 1e-12 : 1e-3;
      for (double p : or_default(config.p, {1.0, 1.5})) {
        auto r = check_parseval(K, p, grid, tol);
        tag(r, spec);
        out.reports.push_back(std::move(r));
      }
    }
  }
}

void suite_mp_identity(const RunConfig& config, SuiteOutcome& out) {
  for (const auto& spec : or_default(config.bodies, {"ball", "lp:p=1", "ellipsoid:a=2,1,1", "cube"})) {
    for (int n : or_default(config.dims, {3})) {
      const auto D = parse_body(spec, n);
      for (double q : or_default(config.q, {0.5, 1.5})) {
        if (!(q > -1.0 && q < n - 1.0)) {
          note_range(out.notes, "mp-identity", n, q);
          continue;
        }
        auto r = check_mp_moment_identity(D, FractionalOrder::continuous_limit(q), config.quad);
        tag(r, spec);
        out.reports.push_back(std::move(r));
      }
    }
  }
}

struct LemmaCell {
  std::string L, g, D;
};

void suite_mp_lemma(const RunConfig& config, SuiteOutcome& out) {
  std::vector<LemmaCell> cells;
  if (config.bodies.empty()) {
    cells = {{"ball", "uniform", "ball"}, {"ball:r=0.5", "uniform", "ball"}, {"ball", "gaussian:sigma=1", "ball"}};
  } else {
    const std::string D = config.other_body.empty() ? "ball" : config.other_body;
    for (const auto& spec : config.bodies) cells.push_back({spec, density_default(config), D});
  }
  for (const auto& cell : cells) {
    for (int n : or_default(config.dims, {3})) {
      const auto L = parse_body(cell.L, n);
      const auto D = parse_body(cell.D, n);
      const auto g = parse_density(cell.g);
      for (double q : or_default(config.q, {0.5})) {
        if (!(q > -1.0 && q < n - 1.0)) {
          note_range(out.notes, "mp-lemma", n, q);
          continue;
        }
        auto r = check_mp_lemma(L, g, D, FractionalOrder::continuous_limit(q), config.quad);
        tag(r, cell.L);
        out.reports.push_back(std::move(r));
      }
    }
  }
}

void suite_holder(const RunConfig& config, SuiteOutcome& out) {
  for (const auto& spec : or_default(config.bodies, {"ball", "ellipsoid:a=2,1,1", "lp:p=1"})) {
    for (int n : or_default(config.dims, {3})) {
      const auto D = parse_body(spec, n);
      const auto grid = volume_grid(n, config.quad);
      for (double q : or_default(config.q, {0.5, 1.2})) {
        if (!(q > -1.0 && q < n - 1.0)) {
          note_range(out.notes, "holder", n, q);
          continue;
        }
        auto r = check_holder_step(D, FractionalOrder::continuous_limit(q), grid);
        tag(r, spec);
        out.reports.push_back(std::move(r));
      }
    }
  }
}

std::optional<InequalityReport> theorem2_cell(const RunConfig& config, const std::string& spec, int n,
                                              const std::string& density, double q,
                                              std::vector<std::string>& notes) {
  if (!(q > -1.0 && q < n - 1.0)) {
    note_range(notes, "thm2", n, q);
    return std::nullopt;
  }
  const auto K = prepared_body(spec, n, config.volume_one, config.quad);
  const auto f = normalized_on(parse_density(density), K, config.quad);
  if (!(f.is_uniform() && K.is_ellipsoidal()) && q >= 4.0) {
    notes.push_back("thm2: q=" + format_shortest(q) + " skipped for " + spec + " (numeric pipeline needs q < 4)");
    return std::nullopt;
  }
  auto order = order_for(q, true, "thm2", notes);
  auto r = check_theorem2(K, f, *order, dovr_for(config, K), config.quad);
  tag(r, spec);
  return r;
}

void suite_theorem2(const RunConfig& config, SuiteOutcome& out) {
  const auto bodies =
      or_default(config.bodies, {"ball", "ellipsoid:a=2,1,1", "ellipsoid:a=3,1,0.5", "lp:p=1", "cube"});
  for (const auto& spec : bodies) {
    for (int n : or_default(config.dims, {3})) {
      for (const auto& density : density_list(config, {"uniform", "gaussian:sigma=1"})) {
        for (double q : or_default(config.q, {0.0, 0.5, 1.5, 2.5})) {
          if (auto r = theorem2_cell(config, spec, n, density, q, out.notes)) out.reports.push_back(std::move(*r));
        }
      }
    }
  }
}

std::optional<InequalityReport> theorem1_cell(const RunConfig& config, const std::string& spec, int n,
                                              const std::string& density, double q,
                                              std::vector<std::string>& notes) {
  if (!(q >= 0.0 && q <= n - 2.0)) {
    note_range(notes, "thm1", n, q);
    return std::nullopt;
  }
  const auto K = prepared_body(spec, n, true, config.quad);
  const auto f = normalized_on(parse_density(density), K, config.quad);
  auto order = order_for(q, true, "thm1", notes);
  auto r = check_theorem1(K, f, *order, {.c = config.c, .C_kpz = config.C_kpz}, config.quad);
  tag(r, spec);
  return r;
}

void suite_theorem1(const RunConfig& config, SuiteOutcome& out) {
  for (const auto& spec : or_default(config.bodies, {"ball"})) {
    for (int n : or_default(config.dims, {3, 4})) {
      for (const auto& density : density_list(config, {"uniform"})) {
        for (double q : or_default(config.q, {0.0, 0.5, 1.0})) {
          if (auto r = theorem1_cell(config, spec, n, density, q, out.notes)) out.reports.push_back(std::move(*r));
        }
      }
    }
  }
}

struct ComparisonCell {
  std::string K, f, L, g;
  std::vector<double> q;
};

void suite_theorem3(const RunConfig& config, SuiteOutcome& out) {
  std::vector<ComparisonCell> cells;
  if (config.bodies.empty()) {
    cells = {{"ball", "uniform:c=0.5", "ball", "uniform", {0.5}},
             {"ball:r=0.8", "uniform", "ball", "uniform", {0.0, 0.5}}};
  } else {
    const std::string L = config.other_body.empty() ? "ball" : config.other_body;
    const std::string g = config.other_density.empty() ? "uniform" : config.other_density;
    for (const auto& spec : config.bodies) cells.push_back({spec, density_default(config), L, g, {0.0, 0.5}});
  }
  for (const auto& cell : cells) {
    for (int n : or_default(config.dims, {3})) {
      const auto K = parse_body(cell.K, n);
      const auto L = parse_body(cell.L, n);
      const auto f = parse_density(cell.f);
      const auto g = parse_density(cell.g);
      for (double q : or_default(config.q, cell.q)) {
        if (!(q > -1.0 && q < n - 1.0)) {
          note_range(out.notes, "thm3", n, q);
          continue;
        }
        auto order = order_for(q, true, "thm3", out.notes);
        auto r = check_theorem3(K, f, L, g, *order, dovr_for(config, K), config.quad, config.hypothesis_directions);
        tag(r, cell.K);
        out.reports.push_back(std::move(r));
      }
    }
  }
}

using SuiteFn = std::function<void(const RunConfig&, SuiteOutcome&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"corollary1", suite_corollary1}, {"parseval", suite_parseval}, {"mp-identity", suite_mp_identity},
      {"mp-lemma", suite_mp_lemma},     {"holder", suite_holder},     {"thm1", suite_theorem1},
      {"thm2", suite_theorem2},         {"thm3", suite_theorem3}};
  return table;
}

Direction direction_for(const RunConfig& config, int n) {
  if (config.direction.empty()) return Direction::axis(n, 0);
  if (static_cast<int>(config.direction.size()) != n) throw DomainError("direction has the wrong dimension");
  Point v(n);
  for (int i = 0; i < n; ++i) v[i] = config.direction[static_cast<std::size_t>(i)];
  return Direction::normalized(v);
}

void add_direction(Record& rec, const Point& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_shortest(v[i]);
  rec.add("direction", s);
}

}  // namespace

const std::vector<std::string>& verify_check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteOutcome run_verify(const RunConfig& config) {
  config.quad.validate();
  SuiteOutcome out;
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (config.subcommand == "all" || config.subcommand == name) {
      fn(config, out);
      found = true;
    }
  }
  if (!found) throw DomainError("unknown check '" + config.subcommand + "'");
  return out;
}

SuiteOutcome run_sweep(const RunConfig& config) {
  config.quad.validate();
  if (config.check != "thm1" && config.check != "thm2") throw DomainError("sweep supports thm1 and thm2");
  SuiteOutcome out;
  const auto qs = or_default(config.q, {0.0, 0.5, 1.0, 1.5, 2.0, 2.5});
  std::vector<double> kept;
  for (double q : qs) {
    if (near_odd_integer(q)) {
      out.notes.push_back("q=" + format_shortest(q) + " filtered (within the guard band of an odd integer)");
    } else {
      kept.push_back(q);
    }
  }
  if (kept.empty()) throw DomainError("sweep: empty q grid after filtering odd integers");

  for (const auto& spec : or_default(config.bodies, {"ball"})) {
    for (int n : or_default(config.dims, {3})) {
      for (double q : kept) {
        const std::string density = density_default(config);
        auto r = config.check == "thm1" ? theorem1_cell(config, spec, n, density, q, out.notes)
                                        : theorem2_cell(config, spec, n, density, q, out.notes);
        if (!r) continue;
        Record rec;
        rec.add("check", r->check)
            .add("n", static_cast<long long>(n))
            .add("q", q)
            .add("body", spec)
            .add("density", density)
            .add("lhs", r->lhs)
            .add("rhs", r->rhs)
            .add("margin", r->margin)
            .add("pass", r->pass)
            .add("dovr_source", r->dovr_source)
            .add("seed", static_cast<long long>(config.quad.seed))
            .add("implied_constant", r->diagnostic_value("implied_constant").value_or(std::nan("")))
            .add("status", std::string(to_string(r->status)));
        out.records.push_back(std::move(rec));
        out.reports.push_back(std::move(*r));
      }
    }
  }
  if (out.records.empty()) throw DomainError("sweep: no cell lies in the theorem's range");
  return out;
}

SuiteOutcome run_compute(const RunConfig& config) {
  config.quad.validate();
  SuiteOutcome out;
  const auto& target = config.subcommand;
  if (target == "frac-deriv") {
    const auto h = section::by_name(config.fn, config.T, config.param);
    if (config.q.empty()) throw DomainError("frac-deriv needs at least one q");
    for (double q : config.q) {
      Record rec;
      rec.add("fn", config.fn).add("T", config.T).add("param", config.param).add("q", q);
      if (near_odd_integer(q) && q == std::round(q)) {
        const int k = static_cast<int>(q);
        rec.add("value", classical_deriv_at_zero(h, k, config.quad.frac_options()))
            .add("route", std::string(to_string(FracRoute::Classical)))
            .add("m", static_cast<long long>(k))
            .add("estimated_error", 0.0);
      } else {
        const auto r = frac_deriv(h, FractionalOrder(q), config.quad.frac_options());
        if (!r.diagnostics.converged) {
          throw ConvergenceError("frac-deriv did not converge at q=" + format_shortest(q), r.value);
        }
        rec.add("value", r.value)
            .add("route", std::string(to_string(r.route)))
            .add("m", static_cast<long long>(r.m_used))
            .add("estimated_error", r.diagnostics.estimated_error);
      }
      out.records.push_back(std::move(rec));
    }
    return out;
  }

  const auto bodies = or_default(config.bodies, {"ball"});
  const auto dims = or_default(config.dims, {3});
  const auto density = parse_density(density_default(config));
  for (const auto& spec : bodies) {
    for (int n : dims) {
      const auto K = parse_body(spec, n);
      if (target == "radon") {
        const auto xi = direction_for(config, n);
        for (double t : config.t) {
          Record rec;
          rec.add("body", spec).add("n", static_cast<long long>(n)).add("density", density.spec());
          add_direction(rec, xi.vector());
          rec.add("t", t).add("value", section_integral(K, density, xi, t, config.quad));
          out.records.push_back(std::move(rec));
        }
      } else if (target == "frac-radon" || target == "max") {
        if (config.q.empty()) throw DomainError(target + " needs at least one q");
        for (double q : config.q) {
          auto order = order_for(q, true, target, out.notes);
          Record rec;
          rec.add("body", spec).add("n", static_cast<long long>(n)).add("density", density.spec()).add("q", q);
          if (target == "frac-radon") {
            const auto r = frac_radon_at_zero(K, density, direction_for(config, n), *order, config.quad);
            if (!r.detail.diagnostics.converged) {
              throw ConvergenceError("frac-radon did not converge at q=" + format_shortest(q), r.normalized);
            }
            add_direction(rec, r.direction);
            rec.add("normalized", r.normalized)
                .add("raw", r.raw)
                .add("estimated_error", r.estimated_error)
                .add("route", std::string(to_string(r.detail.route)));
          } else {
            const auto m = max_over_directions(K, density, *order, config.quad);
            add_direction(rec, m.direction);
            rec.add("value", m.value)
                .add("raw", m.raw)
                .add("grid_value", m.grid_value)
                .add("grid_mean", m.grid_mean)
                .add("grid_min", m.grid_min)
                .add("grid_size", static_cast<long long>(m.grid_size))
                .add("evaluations", static_cast<long long>(m.evaluations))
                .add("estimated_error", m.estimated_error);
          }
          out.records.push_back(std::move(rec));
        }
      } else {
        throw DomainError("unknown compute target '" + target + "'");
      }
    }
  }
  return out;
}

int verify_exit_code(const SuiteOutcome& outcome) { return count_reports(outcome.reports).fail == 0 ? 0 : 1; }

}  // namespace radonfd
