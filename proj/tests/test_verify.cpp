#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "doctest.h"
#include "swapalg/errors.hpp"
#include "swapalg/verify.hpp"

using namespace swapalg;

namespace {

using Params = std::map<std::string, std::string>;

}  // namespace

TEST_CASE("suite names enumerate the ten batteries") {
  const auto& names = suite_names();
  CHECK(names.size() == 10);
  for (const auto& n : {"jacobi", "poisson_ideal", "delta_r_l", "domain", "cross_ratio",
                        "nesting", "theta_poisson", "flip_compat", "mutation_poisson",
                        "oracle_agreement"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(run_suite("no_such_suite", {}, 0), UnknownSuite);
}

TEST_CASE("reports are deterministic for a fixed seed and differ across seeds") {
  const Params p{{"mode", "random"}, {"points", "6"}, {"trials", "8"}};
  const SuiteReport a = run_suite("jacobi", p, 42);
  const SuiteReport b = run_suite("jacobi", p, 42);
  CHECK(a.same_outcome(b));
  CHECK(a.passed());
  CHECK(a.trials == 16);
  // the seed is recorded even though these all pass
  CHECK(a.seed == 42);
  const SuiteReport c = run_suite("jacobi", p, 43);
  CHECK(c.seed == 43);
}

TEST_CASE("reports round trip through their JSON form") {
  const SuiteReport a =
      run_suite("delta_r_l", {{"mode", "random"}, {"points", "6"}, {"trials", "4"}}, 7);
  const SuiteReport b = SuiteReport::from_json(a.to_json());
  CHECK(a.same_outcome(b));
  CHECK(a.suite == b.suite);
  CHECK(a.params == b.params);
  CHECK(a.seed == b.seed);
  CHECK(a.trials == b.trials);
  CHECK(a.failures == b.failures);
  CHECK(a.elapsed_ms == b.elapsed_ms);

  SuiteReport c;
  c.suite = "demo";
  c.params = {{"k", "5"}, {"mode", "fast"}};
  c.seed = 123456789012345ULL;
  c.trials = 3;
  c.failures.push_back({"input text", "0", "p(x,y)"});
  c.elapsed_ms = 99;
  const SuiteReport d = SuiteReport::from_json(c.to_json());
  CHECK(d.suite == c.suite);
  CHECK(d.params == c.params);
  CHECK(d.seed == c.seed);
  CHECK(d.failures == c.failures);
  CHECK(d.elapsed_ms == c.elapsed_ms);
}

TEST_CASE("parameters are validated and canonicalized with defaults") {
  CHECK_THROWS_AS(run_suite("jacobi", {{"bogus", "1"}}, 0), BadParams);
  CHECK_THROWS_AS(run_suite("domain", {{"n", "1"}}, 0), BadParams);
  CHECK_THROWS_AS(run_suite("poisson_ideal", {{"n", "9"}}, 0), BadParams);
  CHECK_THROWS_AS(run_suite("theta_poisson", {{"k", "3"}}, 0), BadParams);
  CHECK_THROWS_AS(run_suite("jacobi", {{"mode", "sideways"}}, 0), BadParams);
  CHECK_THROWS_AS(run_suite("cross_ratio", {{"points", "5"}}, 0), BadParams);

  const SuiteReport a = run_suite("nesting", {{"trials", "2"}}, 0);
  CHECK(a.params.at("trials") == "2");
  CHECK(a.params.count("n") == 1);
  CHECK(a.params.count("size") == 1);
  CHECK(a.passed());
}

TEST_CASE("each battery passes a small smoke run") {
  struct Row {
    const char* suite;
    Params params;
  };
  const Row rows[] = {
      {"jacobi", {{"mode", "random"}, {"points", "5"}, {"trials", "5"}}},
      {"poisson_ideal", {{"n", "2"}, {"points", "5"}, {"trials", "5"}}},
      {"delta_r_l", {{"mode", "random"}, {"points", "6"}, {"trials", "5"}}},
      {"domain", {{"trials", "5"}}},
      {"cross_ratio", {{"points", "6"}}},
      {"nesting", {{"trials", "3"}}},
      {"theta_poisson", {{"k", "5"}}},
      {"flip_compat", {{"k", "5"}}},
      {"mutation_poisson", {{"k", "5"}}},
      {"oracle_agreement", {{"trials", "20"}}},
  };
  for (const Row& row : rows) {
    const SuiteReport rep = run_suite(row.suite, row.params, 1);
    CHECK_MESSAGE(rep.passed(), rep.suite, ": ",
                  rep.failures.empty() ? "" : rep.failures.front().input);
    CHECK(rep.trials > 0);
    CHECK(rep.suite == row.suite);
  }
}

TEST_CASE("thread capping does not change the outcome") {
  const Params p{{"mode", "random"}, {"points", "6"}, {"trials", "12"}};
  const SuiteReport base = run_suite("jacobi", p, 9);
  setenv("SWAPALG_THREADS", "1", 1);
  const SuiteReport capped = run_suite("jacobi", p, 9);
  unsetenv("SWAPALG_THREADS");
  CHECK(base.same_outcome(capped));
}
