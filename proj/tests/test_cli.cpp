#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "radonfd/config.hpp"
#include "radonfd/errors.hpp"

using namespace radonfd;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(P_tmpdir) + "/radonfd_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("config text and settings round trip") {
  RunConfig config;
  apply_config_text(config, "# comment\nbody = ball|lp:p=1\nn = 3,4\nq=0.5\nseed=7\nformat=csv\n");
  CHECK(config.bodies == std::vector<std::string>{"ball", "lp:p=1"});
  CHECK(config.dims == std::vector<int>{3, 4});
  CHECK(config.q == std::vector<double>{0.5});
  CHECK(config.quad.seed == 7);
  CHECK(config.format == OutputFormat::Csv);

  RunConfig copy;
  for (const auto& [k, v] : to_settings(config)) apply_setting(copy, k, v);
  CHECK(to_settings(copy) == to_settings(config));

  CHECK_THROWS_AS(apply_setting(config, "no_such_key", "1"), DomainError);
  CHECK_THROWS(apply_setting(config, "q", "abc"));
  CHECK_THROWS(apply_setting(config, "dovr", "0.5"));
}

TEST_CASE("flags override the config file") {
  const auto path = temp_file("override.cfg", "fn=exp-neg\nq=0.5\nformat=csv\n");
  const auto from_file = run({"compute", "frac-deriv", "--config", path});
  REQUIRE(from_file.code == 0);
  CHECK(from_file.out.find("# q=0.5") != std::string::npos);

  const auto overridden = run({"compute", "frac-deriv", "--config", path, "--q", "1.2", "--format", "json"});
  REQUIRE(overridden.code == 0);
  const auto doc = nlohmann::json::parse(overridden.out);
  CHECK(doc["config"]["q"] == "1.2");
  CHECK(doc["results"][0]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-8));
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({"compute", "frac-deriv", "--q", "0.5"}).code == 0);
  CHECK(run({"compute", "frac-deriv", "--fn", "nope", "--q", "0.5"}).code == 2);
  CHECK(run({"compute", "unknown-target"}).code == 2);
  CHECK(run({"verify", "corollary1", "--q", "0.5", "--n", "3", "--radial-nodes", "0"}).code == 2);
  CHECK(run({"--version"}).code == 0);

  const auto ok = run({"verify", "corollary1", "--n", "4", "--q", "0.5"});
  CHECK(ok.code == 0);
  CHECK(ok.err.find("1 pass, 0 fail") != std::string::npos);

  // A caller-supplied constant far above the admissible range breaks the bound.
  const auto violated = run({"verify", "thm1", "--n", "3", "--q", "0", "--c", "100", "--direction-grid", "50"});
  CHECK(violated.code == 1);
}

TEST_CASE("CSV layout of verification reports") {
  const auto r = run({"verify", "parseval", "--body", "ball", "--p", "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# radonfd ", 0) == 0);
  while (std::getline(lines, line) && line.rfind("#", 0) == 0) {
  }
  CHECK(line == "check,n,q,body,density,lhs,rhs,margin,pass,dovr_source,seed,implied_constant,status,relative_gap,tolerance");
  std::getline(lines, line);
  CHECK(line.rfind("parseval,3,1,ball", 0) == 0);
}

TEST_CASE("sweep filters odd integer orders and writes a table") {
  const auto r = run({"sweep", "--check", "thm2", "--q", "0,1,1.5", "--direction-grid", "50"});
  REQUIRE(r.code == 0);
  CHECK(r.err.find("q=1 filtered") != std::string::npos);
  CHECK(r.out.find("\nthm2,3,0,") != std::string::npos);
  CHECK(r.out.find("\nthm2,3,1.5,") != std::string::npos);
  CHECK(run({"sweep", "--check", "thm2", "--q", "1"}).code == 2);
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::string> args{"verify", "thm2", "--body", "ellipsoid:a=2,1,1", "--q", "0.5",
                                      "--direction-grid", "60", "--seed", "3"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}
