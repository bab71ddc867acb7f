#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "antirotor/algebra/registry.hpp"
#include "antirotor/errors.hpp"
#include "antirotor/harness/acceptance.hpp"
#include "antirotor/harness/cli.hpp"
#include "antirotor/harness/trials.hpp"
#include "generators.hpp"

using namespace antirotor;
using namespace antirotor::harness;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(RandomInvertible, EntriesBoundedAndNonsingular) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto k = random_invertible(3, rng);
    EXPECT_NE(cas::det_exact(k), 0);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_LE(abs(k(i, j)), 3);
      }
    }
  }
}

TEST(Trials, ComplexFiftyPass) {
  auto t = random_isomorphism_trials(alg::registry("complex"), 50, 0x5eed);
  EXPECT_EQ(t.passed, 50u);
  EXPECT_TRUE(t.all_passed());
}

TEST(Trials, IdentityIsTrivial) {
  auto a = alg::registry("toeplitz:3");
  EXPECT_TRUE(isomorphism_trial(a, cas::identity_qmatrix(3), skewer::anti_rotor(a)));
}

TEST(Trials, WithInvariants) {
  TrialOptions opts;
  opts.invariants = true;
  auto t = random_isomorphism_trials(alg::registry("real-dual"), 10, 7, opts);
  EXPECT_TRUE(t.all_passed()) << (t.failures.empty() ? "" : t.failures.front());
}

TEST(Trials, DimensionCap) {
  EXPECT_THROW(random_isomorphism_trials(alg::registry("matrix:3"), 1, 1), UsageError);
}

TEST(Trials, SameSeedSameTally) {
  auto a = random_isomorphism_trials(alg::registry("dual"), 20, 99);
  auto b = random_isomorphism_trials(alg::registry("dual"), 20, 99);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.failures, b.failures);
}

TEST(Survey, ComplexTypesAgree) {
  auto s = antirotor_type_survey(alg::registry("complex"), {-1, 2, 3}, false);
  EXPECT_TRUE(s.all_equal());
}

TEST(Survey, NilpotentTypesDiffer) {
  auto s = antirotor_type_survey(alg::registry("nilpotent-3"), {2, 3, 4}, false);
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{3, 4, 6}));
  EXPECT_FALSE(s.all_equal());
}

TEST(Survey, SinglePowerTrivial) {
  auto s = antirotor_type_survey(alg::registry("dual"), {2}, false);
  EXPECT_EQ(s.dims.size(), 1u);
  EXPECT_TRUE(s.all_equal());
}

TEST(Survey, RejectsPowerOne) {
  EXPECT_THROW(antirotor_type_survey(alg::registry("dual"), {1}, false), UsageError);
}

TEST(Acceptance, NineNumberedCriteria) {
  std::set<int> seen;
  for (const auto& c : acceptance_cases()) seen.insert(c.criterion);
  EXPECT_EQ(seen, (std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(Acceptance, OnlyFilterSelectsTables) {
  auto results = run_cases(selftest_cases(), "tables");
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Cli, BareAlgebraPrintsAntiRotor) {
  auto r = cli({"registry:complex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("m = 2"), std::string::npos);
  EXPECT_NE(r.out.find("-α"), std::string::npos);
}

TEST(Cli, InvariantsJson) {
  auto r = cli({"invariants", "registry:toeplitz:3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verb"], "invariants");
  EXPECT_EQ(j["result"]["sextuple"], nlohmann::json({3, 3, 1, 1, 0, 1}));
  EXPECT_EQ(j["result"]["tau_reduced"], nlohmann::json({2, 0, 0}));
  EXPECT_EQ(j["input_digest"].get<std::string>().size(), 16u);
}

TEST(Cli, OutputIsDeterministic) {
  auto a = cli({"invariants", "registry:real-complex", "--json"});
  auto b = cli({"invariants", "registry:real-complex", "--json"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, CompareSplitComplexAndDual) {
  auto r = cli({"compare", "registry:split-complex", "registry:dual", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["result"]["not_isomorphic"].get<bool>());
}

TEST(Cli, NormEval) {
  auto r = cli({"norm-eval", "registry:complex", "--metric", "[[1,0],[0,-1]]", "--point", "3,4", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["result"]["value"].get<double>(), 5.0, 1e-9);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"registry", "no-such-algebra"}).code, 2);
  EXPECT_EQ(cli({"validate", "registry:complex", "--bogus"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"transform", "registry:complex", "--K", "[[1,1],[1,1]]"}).code, 1);
  EXPECT_EQ(cli({"compare", "registry:complex", "registry:cayley-dickson:3"}).code, 1);
  EXPECT_EQ(cli({"norm-eval", "registry:dual", "--metric", "[[1,0],[0,1]]", "--point", "1,0"}).code, 1);
  EXPECT_EQ(cli({"check", "registry:dual", "--metric", "[[1,0],[0,1]]", "--which", "path", "--point", "1.2,0.3"}).code,
            3);
  EXPECT_EQ(cli({"antirotor", "registry:complex", "--mode", "power", "--power", "1"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, CheckPassesOnNormalizedMetric) {
  auto r = cli({"check", "registry:complex", "--metric", "[[1,0],[0,-1]]"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, TransformRoundTrip) {
  auto r = cli({"transform", "registry:split-complex", "--K", "[[1,-1],[1,1]]", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["dim"], 2);
}
