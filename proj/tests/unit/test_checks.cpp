#include "gassoc/checks.hpp"

#include "common.hpp"

#include <doctest.h>

using namespace gassoc;

TEST_CASE("every suite passes on small types") {
  SuiteOptions opt;
  opt.samples = 50;
  opt.random_f = 2;
  for (const auto& label : {"A1", "A2", "A3", "B2", "G2", "A1xA1", "A1xA2"})
    for (const CoxeterElement& c : fixture::all_coxeter(label)) {
      const CheckReport r = run_suite("all", ClusterModel(c), opt);
      CHECK_MESSAGE(r.ok(), label, " ", c.to_string(), ": ", (r.failures.empty() ? "" : r.failures.front()));
      CHECK(r.checked > 0);
    }
}

TEST_CASE("suite errors") {
  const ClusterModel m = fixture::model("A2", "1,2");
  CHECK_THROWS_AS(run_suite("nope", m, {}), std::invalid_argument);
  SuiteOptions bad;
  bad.f = {1, 3};
  CHECK_FALSE(run_suite("polytope", m, bad).ok());
}

TEST_CASE("the all suite records skipped parts past the caps") {
  setenv("GASSOC_EXCHANGE_RANK_CAP", "2", 1);
  SuiteOptions opt;
  opt.samples = 10;
  opt.random_f = 0;
  const CheckReport r = run_suite("all", fixture::model("A3", "1,2,3"), opt);
  unsetenv("GASSOC_EXCHANGE_RANK_CAP");
  CHECK(r.ok());
  CHECK_FALSE(r.skipped.empty());
}

TEST_CASE("broken models are caught") {
  const ClusterModel m = fixture::model("A3", "1,2,3");
  CHECK(check_z_basis(m).ok());
  CHECK(check_completeness(m).ok());
  CHECK(check_tau_invariance(m).ok());
  CHECK(check_expansions(m, 5, 100, 20).ok());
}
