#include "antirotor/harness/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "antirotor/algebra/io.hpp"
#include "antirotor/algebra/registry.hpp"
#include "antirotor/harness/cli.hpp"
#include "antirotor/harness/oracles.hpp"
#include "antirotor/harness/trials.hpp"
#include "antirotor/invariants/invariants.hpp"
#include "antirotor/norms/norms.hpp"
#include "antirotor/skewer/skewer.hpp"

namespace antirotor::harness {

namespace {

using cas::BigRational;
using cas::QVector;

constexpr double kNormTol = 1e-8;
constexpr double kDualityRelTol = 1e-5;
constexpr unsigned long long kSeed = 0x5eed;
constexpr std::size_t kTransformTrials = 50;
constexpr std::size_t kOraclePoints = 10;
constexpr std::size_t kSpecialNormPoints = 20;
constexpr double kPointRadius = 0.3;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << v;
  return out.str();
}

// Collects failures; `ok` stays true only if every expectation held.
struct Expect {
  bool ok = true;
  std::vector<std::string> failures;
  void operator()(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  bool finish(std::string& detail, const std::string& summary) {
    if (ok) {
      detail = summary;
    } else {
      detail.clear();
      for (std::size_t i = 0; i < failures.size() && i < 5; ++i) detail += (i ? "; " : "") + failures[i];
      if (failures.size() > 5) detail += "; (" + std::to_string(failures.size() - 5) + " more)";
    }
    return ok;
  }
};

Point unit_point(const alg::Algebra& a) {
  Point p;
  for (const auto& c : a.unit()) p.push_back(c.get_d());
  return p;
}

Point near_unit(const alg::Algebra& a, std::mt19937_64& rng, double radius = kPointRadius) {
  std::uniform_real_distribution<double> d(-radius, radius);
  Point p = unit_point(a);
  for (auto& v : p) v += d(rng);
  return p;
}

QMatrix diag(std::vector<long> d) {
  QMatrix m = cas::zero_qmatrix(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix minus(const QMatrix& a, const QMatrix& b) {
  QMatrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) -= b(i, j);
  }
  return m;
}

// The normalized affine subspace equals particular + span(hom).
bool affine_equal(const skewer::AffineSubspace& got, const QMatrix& particular, const std::vector<QMatrix>& hom) {
  if (!got.consistent) return false;
  skewer::ParamSymMatrix expected(particular.rows(), hom);
  if (!skewer::subspace_equal(got.homogeneous, expected)) return false;
  return skewer::membership_check(expected, minus(got.particular, particular)).has_value();
}

// Maximal relative error of l against exp(Phi / |1|^2) over random points
// and random integer coefficient vectors.
double oracle_error(const NormOracle& o, std::size_t points, std::mt19937_64& rng) {
  auto a = alg::registry(o.algebra);
  std::uniform_int_distribution<int> ci(-3, 3);
  Point one = unit_point(a);
  double norm_sq = a.unit_norm_sq().get_d();
  double worst = 0.0;
  for (std::size_t t = 0; t < points; ++t) {
    std::vector<BigRational> c;
    for (std::size_t q = 0; q < o.members.size(); ++q) c.push_back(ci(rng));
    norms::NormEvaluator ev(a, oracle_metric(o, c));
    Point s = near_unit(a, rng);
    double expected = std::exp((oracle_phi(o, c, s) - oracle_phi(o, c, one)) / norm_sq);
    double got = ev.evaluate(s).value;
    worst = std::max(worst, std::fabs(got - expected) / std::max(1.0, std::fabs(expected)));
  }
  return worst;
}

bool criterion_table_one(std::string& detail) {
  Expect expect;
  for (const auto& row : table_one_rows()) {
    auto u = skewer::anti_rotor(alg::registry(row.algebra));
    expect(skewer::subspace_equal(u, row.expected), row.algebra + ": anti-rotor differs from the table");
  }
  return expect.finish(detail, "4 anti-rotors equal the table");
}

bool criterion_table_two(std::string& detail) {
  Expect expect;
  for (const auto& row : table_two_rows()) {
    auto a = alg::registry(row.algebra);
    auto u = skewer::anti_rotor(a);
    expect(skewer::subspace_equal(u, row.expected), row.algebra + ": anti-rotor differs from the table");
    auto r = inv::compute_invariants(a);
    std::array<std::size_t, 6> got{r.m, r.max_rank.value, r.min_nonzero_rank.value, r.sensitive_param_count,
                                   r.variety.dim, r.variety.components};
    expect(r.variety.supported, row.algebra + ": variety unsupported");
    expect(got == *row.sextuple, row.algebra + ": sextuple " + inv::report_to_json(r)["sextuple"].dump());
    expect(r.tau && !r.tau->undecided, row.algebra + ": tau undecided");
    if (r.tau) {
      std::array<long, 3> red{r.tau->reduced_rat, r.tau->reduced_log, r.tau->reduced_arc};
      expect(red == *row.reduced_tau, row.algebra + ": reduced triple " + inv::report_to_json(r)["tau_reduced"].dump());
    }
  }
  return expect.finish(detail, "6 rows: subspaces, sextuples and reduced triples equal the table");
}

bool matrix_case(std::size_t n, Expect& expect, std::mt19937_64& rng) {
  auto a = alg::registry("matrix:" + std::to_string(n));
  auto u = skewer::anti_rotor(a);
  QMatrix t = alg::transpose_permutation(n);
  expect(u.param_count() == 1, "M_" + std::to_string(n) + ": m = " + std::to_string(u.param_count()));
  expect(skewer::subspace_equal(u, skewer::ParamSymMatrix(n * n, {t})),
         "M_" + std::to_string(n) + ": anti-rotor not spanned by the transpose permutation");
  norms::NormEvaluator ev(a, t);
  double worst = 0.0;
  for (std::size_t k = 0; k < kSpecialNormPoints; ++k) {
    Point s = near_unit(a, rng);
    cas::DMatrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = s[i * n + j];
    }
    double expected = std::pow(cas::det_double(m), 1.0 / static_cast<double>(n));
    worst = std::max(worst, std::fabs(ev.evaluate(s).value - expected) / std::fabs(expected));
  }
  expect(worst <= kNormTol, "M_" + std::to_string(n) + ": norm error " + fmt(worst));
  return expect.ok;
}

bool criterion_matrix(std::string& detail) {
  Expect expect;
  std::mt19937_64 rng(kSeed);
  matrix_case(2, expect, rng);
  auto start = std::chrono::steady_clock::now();
  matrix_case(3, expect, rng);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(secs < 300.0, "M_3 took " + fmt(secs) + " s");
  return expect.finish(detail, "M_2, M_3: one-dimensional, spanned by T, norm = det^(1/n); M_3 in " + fmt(secs) + " s");
}

bool criterion_matrix3_only(std::string& detail) {
  auto u = skewer::anti_rotor(alg::registry("matrix:3"));
  bool ok = u.param_count() == 1 && skewer::subspace_equal(u, skewer::ParamSymMatrix(9, {alg::transpose_permutation(3)}));
  detail = ok ? "M_3 anti-rotor is one-dimensional, spanned by T" : "M_3 anti-rotor has m = " + std::to_string(u.param_count());
  return ok;
}

bool criterion_toeplitz(std::string& detail) {
  Expect expect;
  std::mt19937_64 rng(kSeed);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::string name = "toeplitz:" + std::to_string(n);
    auto a = alg::registry(name);
    auto u = skewer::anti_rotor(a);
    auto h = hankel_family(n);
    expect(skewer::subspace_equal(u, h), name + ": anti-rotor is not the Hankel family");
    std::vector<QMatrix> rest(h.generators().begin() + 1, h.generators().end());
    expect(affine_equal(skewer::normalized_subspace(a, u), h.generators()[0], rest),
           name + ": normalized subspace is not {gamma_1 = 1}");
  }
  double worst = 0.0;
  for (std::size_t n : {3, 4}) worst = std::max(worst, oracle_error(toeplitz_oracle(n), kOraclePoints, rng));
  expect(worst <= kNormTol, "Toeplitz closed form error " + fmt(worst));
  return expect.finish(detail, "n = 2..5 Hankel, normalized {gamma_1 = 1}; closed form error " + fmt(worst));
}

bool criterion_table_three(std::string& detail) {
  Expect expect;
  std::mt19937_64 rng(kSeed);

  auto p4 = alg::registry("direct-product:4");
  auto u4 = skewer::anti_rotor(p4);
  std::vector<QMatrix> diag4;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<long> d(4, 0);
    d[i] = 1;
    diag4.push_back(diag(d));
  }
  expect(skewer::subspace_equal(u4, skewer::ParamSymMatrix(4, diag4)), "prod R^4: anti-rotor is not diagonal");
  expect(affine_equal(skewer::normalized_subspace(p4, u4), diag({1, 1, 1, 1}),
                      {diag({1, -1, 0, 0}), diag({0, 1, -1, 0}), diag({0, 0, 1, -1})}),
         "prod R^4: normalized subspace is not {sum sigma_i = 4}");

  auto h = skewer::anti_rotor(alg::registry("quaternion"));
  expect(skewer::subspace_equal(h, skewer::ParamSymMatrix(4, {diag({1, -1, -1, -1})})),
         "quaternions: anti-rotor is not diag(a, -a, -a, -a)");

  // Upper triangular 2x2 with independent diagonal: l_sigma = x^((1+s)/2) y^((1-s)/2).
  auto ut = alg::registry_entry("upper-triangular-2x2");
  auto ut_u = skewer::anti_rotor(ut.algebra);
  expect(affine_equal(skewer::normalized_subspace(ut.algebra, ut_u), diag({1, 1, 0}), {diag({1, -1, 0})}),
         "upper triangular: normalized family is not diag(1+s, 1-s, 0)");
  std::uniform_real_distribution<double> sig(-2.0, 2.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < kSpecialNormPoints; ++k) {
    BigRational sigma(static_cast<long>(std::round(sig(rng) * 8)), 8);
    QMatrix m = diag({1, 1, 0});
    m(0, 0) += sigma;
    m(1, 1) -= sigma;
    norms::NormEvaluator ev(ut.algebra, m);
    Point s = near_unit(ut.algebra, rng);
    double sd = sigma.get_d();
    double expected = std::pow(s[0], (1 + sd) / 2) * std::pow(s[1], (1 - sd) / 2);
    worst = std::max(worst, std::fabs(ev.evaluate(s).value - expected) / expected);
  }
  auto ut_det = norms::check_special_vs_det(ut, kNormTol, kSpecialNormPoints);
  expect(ut_det.passed, "upper triangular: l_0 vs quotient det^(1/2): " + ut_det.detail);

  // Five-dimensional triangular algebra: (xy)^(1/2) (x/y)^(s/2) e^((b/2) z/x).
  auto t5 = alg::registry_entry("triangular-5");
  auto t5_u = skewer::anti_rotor(t5.algebra);
  QMatrix b5 = cas::zero_qmatrix(5, 5);
  b5(0, 2) = b5(2, 0) = 1;
  expect(affine_equal(skewer::normalized_subspace(t5.algebra, t5_u), diag({1, 1, 0, 0, 0}),
                      {diag({1, -1, 0, 0, 0}), b5}),
         "five-dimensional: normalized family differs");
  for (std::size_t k = 0; k < kSpecialNormPoints; ++k) {
    BigRational sigma(static_cast<long>(std::round(sig(rng) * 8)), 8);
    BigRational beta(static_cast<long>(std::round(sig(rng) * 8)), 8);
    QMatrix m = diag({1, 1, 0, 0, 0});
    m(0, 0) += sigma;
    m(1, 1) -= sigma;
    m(0, 2) = m(2, 0) = beta;
    norms::NormEvaluator ev(t5.algebra, m);
    Point s = near_unit(t5.algebra, rng);
    double sd = sigma.get_d(), bd = beta.get_d();
    double expected = std::sqrt(s[0] * s[1]) * std::pow(s[0] / s[1], sd / 2) * std::exp(bd / 2 * s[2] / s[0]);
    worst = std::max(worst, std::fabs(ev.evaluate(s).value - expected) / expected);
  }
  auto t5_det = norms::check_special_vs_det(t5, kNormTol, kSpecialNormPoints);
  expect(t5_det.passed, "five-dimensional: l_0 vs quotient det^(1/2): " + t5_det.detail);
  expect(worst <= kNormTol, "triangular special norm families: error " + fmt(worst));

  for (std::string name : {"spin:2", "spin:3", "cayley-dickson:2", "cayley-dickson:3"}) {
    auto e = alg::registry_entry(name);
    auto r = norms::check_special_vs_det(e, kNormTol, kSpecialNormPoints);
    expect(r.passed, name + ": " + r.detail);
  }
  return expect.finish(detail, "prod R^4, H, triangular families and star algebras; family error " + fmt(worst));
}

bool criterion_transform(std::string& detail) {
  Expect expect;
  std::size_t total = 0;
  TrialOptions opts;
  opts.dim_cap = 3;
  opts.invariants = true;
  for (const auto& name : alg::low_dimensional_registry()) {
    auto tally = random_isomorphism_trials(alg::registry(name), kTransformTrials, kSeed, opts);
    total += tally.passed + tally.failed;
    for (const auto& f : tally.failures) expect(false, name + " " + f);
  }
  return expect.finish(detail, std::to_string(total) + " trials, all subspaces and certified invariants agree");
}

bool criterion_survey(std::string& detail) {
  Expect expect;
  for (const auto& name : alg::low_dimensional_registry()) {
    auto r = antirotor_type_survey(alg::registry(name), {-2, 2, 3}, true);
    expect(r.all_equal(), name + ": anti-rotor types differ");
  }
  auto nil = antirotor_type_survey(alg::registry("nilpotent-3"), {2, 3, 4}, false);
  expect(nil.dims == std::vector<std::size_t>{3, 4, 6},
         "nilpotent: dims " + std::to_string(nil.dims[0]) + ", " + std::to_string(nil.dims[1]) + ", " +
             std::to_string(nil.dims[2]));
  return expect.finish(detail, "types s^-1, s^-2, s^2, s^3 agree; nilpotent dims 3, 4, 6");
}

bool criterion_duality(std::string& detail) {
  Expect expect;
  std::mt19937_64 rng(kSeed);
  double worst = 0.0;
  std::size_t gens = 0;
  for (const auto& name : alg::low_dimensional_registry()) {
    auto a = alg::registry(name);
    auto u = skewer::anti_rotor(a);
    std::vector<norms::NormEvaluator> evs;
    for (const auto& g : u.generators()) evs.emplace_back(a, g);
    for (std::size_t q = 0; q < evs.size(); ++q) {
      auto r = norms::check_duality(evs[q], near_unit(a, rng), kDualityRelTol);
      worst = std::max(worst, r.error);
      expect(r.passed, name + " generator " + std::to_string(q + 1) + ": " + r.detail);
      ++gens;
      if (q + 1 < evs.size()) {
        auto gl = norms::check_group_law(evs[q], evs[q + 1], near_unit(a, rng), kNormTol);
        expect(gl.passed, name + ": " + gl.detail);
      }
    }
  }
  std::uniform_int_distribution<int> ci(-2, 2);
  for (std::string name : {"matrix:2", "toeplitz:3", "direct-product:3"}) {
    auto a = alg::registry(name);
    auto aff = skewer::normalized_subspace(a, skewer::anti_rotor(a));
    expect(aff.consistent, name + ": no normalized metric");
    // The particular metric and one random member of the normalized family.
    for (int pick = 0; pick < 2; ++pick) {
      QMatrix m = aff.particular;
      if (pick == 1 && aff.homogeneous.param_count() > 0) {
        QVector c(aff.homogeneous.param_count());
        for (auto& x : c) x = ci(rng);
        m = m + aff.homogeneous.realize(c);
      }
      norms::NormEvaluator ev(a, m);
      auto r = norms::check_reciprocity(ev, near_unit(a, rng, 0.2), kNormTol);
      expect(r.passed, name + ": " + r.detail);
    }
  }
  return expect.finish(detail, std::to_string(gens) + " generators, worst gradient mismatch " + fmt(worst) +
                                   "; reciprocity and unit direction on M_2, T_3, prod R^3");
}

bool criterion_negative(std::string& detail) {
  Expect expect;
  auto dual = alg::registry("dual");
  norms::NormEvaluator euclid(dual, cas::identity_qmatrix(2), false);
  auto r = norms::check_path_independence(euclid, {1.2, 0.3}, 1e-10);
  expect(!r.passed, "Euclidean metric on the dual numbers passed path independence");
  std::ostringstream sink;
  int code = run_cli({"check", "registry:dual", "--metric", "[[1,0],[0,1]]", "--which", "path", "--point", "1.2,0.3"},
                     sink, sink);
  expect(code == 3, "check verb returned exit code " + std::to_string(code) + " instead of 3");

  auto c = inv::compute_invariants(alg::registry("complex"));
  auto d = inv::compute_invariants(dual);
  auto sc = inv::compute_invariants(alg::registry("split-complex"));
  auto rr = inv::compute_invariants(alg::registry("direct-product:2"));
  expect(inv::compare(c, d).not_isomorphic, "C vs D not separated");
  expect(inv::compare(c, sc).not_isomorphic, "C vs split-C not separated");
  expect(!inv::compare(sc, rr).not_isomorphic, "split-C vs RxR separated");
  return expect.finish(detail, "Euclidean metric on D detected (exit 3); C/D, C/split-C separated; split-C ~ RxR");
}

bool case_closed_forms(std::string& detail) {
  Expect expect;
  std::mt19937_64 rng(kSeed);
  double worst = 0.0;
  auto oracles = table_norm_oracles();
  oracles.push_back(triangular4_oracle());
  oracles.push_back(triangular5_oracle());
  for (const auto& o : oracles) {
    double e = oracle_error(o, kOraclePoints, rng);
    worst = std::max(worst, e);
    expect(e <= kNormTol, o.algebra + ": closed form error " + fmt(e));
  }
  return expect.finish(detail, std::to_string(oracles.size()) + " closed forms, worst error " + fmt(worst));
}

bool case_table_one_tau(std::string& detail) {
  Expect expect;
  for (const auto& row : table_one_rows()) {
    auto r = inv::compute_invariants(alg::registry(row.algebra));
    expect(r.tau && r.tau->raw.rat == (*row.raw_tau)[0] && r.tau->raw.log == (*row.raw_tau)[1] &&
               r.tau->raw.arc == (*row.raw_tau)[2],
           row.algebra + ": raw tau " + inv::report_to_json(r)["tau_raw"].dump());
  }
  auto p3 = inv::compute_invariants(alg::registry("direct-product:3"));
  expect(p3.tau && p3.tau->raw == inv::TauTriple{0, 3, 0}, "prod R^3: raw tau is not (0, 3, 0)");
  auto c = inv::compute_invariants(alg::registry("complex"));
  expect(c.min_nonzero_rank.value == 2 && c.min_nonzero_rank.tag == "certified", "C: minimal rank is not 2");
  return expect.finish(detail, "raw tau of C, split-C, RxR, D and prod R^3; C minimal rank 2");
}

bool case_epimorphism(std::string& detail) {
  Expect expect;
  auto m2 = inv::compute_invariants(alg::registry("matrix:2"));
  auto t3 = inv::compute_invariants(alg::registry("toeplitz:3"));
  auto r5 = inv::compute_invariants(alg::registry("trivial-extension:3"));
  expect(inv::epimorphism_dim_check(m2, m2).a_simple, "M_2 not reported simple");
  expect(!inv::epimorphism_dim_check(t3, r5).excluded, "T_3 onto trivial extension excluded");
  auto c = inv::compute_invariants(alg::registry("complex"));
  expect(inv::epimorphism_dim_check(m2, c).excluded, "M_2 onto C not excluded by dimension");
  return expect.finish(detail, "M_2 simple; dimension bound applied");
}

bool case_cli_examples(std::string& detail) {
  Expect expect;
  std::ostringstream out, err;
  expect(run_cli({"antirotor", "registry:complex"}, out, err) == 0, "antirotor verb failed");
  expect(out.str().find("m = 2") != std::string::npos, "antirotor output lacks m = 2");
  std::ostringstream js;
  expect(run_cli({"invariants", "registry:toeplitz:3", "--json"}, js, err) == 0, "invariants verb failed");
  auto j = nlohmann::json::parse(js.str());
  expect(j["result"]["sextuple"] == nlohmann::json::array({3, 3, 1, 1, 0, 1}), "toeplitz sextuple in CLI output");
  expect(j["result"]["tau_reduced"] == nlohmann::json::array({2, 0, 0}), "toeplitz reduced triple in CLI output");
  std::ostringstream cmp;
  expect(run_cli({"compare", "registry:split-complex", "registry:dual", "--json"}, cmp, err) == 0, "compare failed");
  auto cj = nlohmann::json::parse(cmp.str());
  expect(cj["result"]["not_isomorphic"] == true, "split-C vs D not separated in CLI output");
  return expect.finish(detail, "antirotor, invariants and compare verbs reproduce the documented examples");
}

bool case_json_roundtrip(std::string& detail) {
  Expect expect;
  for (const auto& name : alg::registry_catalog()) {
    auto a = alg::registry(name);
    auto back = alg::algebra_from_json(alg::algebra_to_json(a));
    expect(back.same_structure(a) && back.name() == a.name(), name + ": JSON round trip changed the algebra");
  }
  return expect.finish(detail, "every registry algebra round-trips through JSON");
}

}  // namespace

std::vector<SelftestCase> acceptance_cases() {
  return {
      {"table-one", {"tables", "1"}, 1, 1.0, criterion_table_one},
      {"table-two", {"tables", "2"}, 2, 5.0, criterion_table_two},
      {"matrix-algebras", {"matrix", "3"}, 3, 300.0, criterion_matrix},
      {"toeplitz", {"toeplitz", "4"}, 4, 0.0, criterion_toeplitz},
      {"table-three", {"table3", "5"}, 5, 0.0, criterion_table_three},
      {"isomorphism-transform", {"transform", "6"}, 6, 0.0, criterion_transform},
      {"type-survey", {"survey", "7"}, 7, 0.0, criterion_survey},
      {"duality-group", {"duality", "8"}, 8, 0.0, criterion_duality},
      {"negative-controls", {"negative", "9"}, 9, 0.0, criterion_negative},
  };
}

std::vector<SelftestCase> selftest_cases() {
  auto cases = acceptance_cases();
  cases.push_back({"matrix3", {"matrix3"}, 0, 300.0, criterion_matrix3_only});
  cases.push_back({"closed-forms", {"tables", "norms"}, 0, 0.0, case_closed_forms});
  cases.push_back({"table-one-tau", {"tables"}, 0, 0.0, case_table_one_tau});
  cases.push_back({"epimorphism", {"invariants"}, 0, 0.0, case_epimorphism});
  cases.push_back({"cli-examples", {"cli"}, 0, 0.0, case_cli_examples});
  cases.push_back({"json-roundtrip", {"io"}, 0, 0.0, case_json_roundtrip});
  return cases;
}

std::vector<CaseResult> run_cases(const std::vector<SelftestCase>& cases, const std::string& only,
                                  std::ostream* progress) {
  std::vector<CaseResult> out;
  for (const auto& c : cases) {
    bool selected = only.empty() || c.name == only;
    for (const auto& t : c.tags) selected = selected || t == only;
    if (!selected) continue;
    CaseResult r;
    r.name = c.name;
    r.limit_seconds = c.limit_seconds;
    auto start = std::chrono::steady_clock::now();
    try {
      r.passed = c.run(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += " (over the " + fmt(r.limit_seconds) + " s budget)";
    }
    if (progress) *progress << scoreboard_line(r) << "\n" << std::flush;
    out.push_back(std::move(r));
  }
  return out;
}

std::string scoreboard_line(const CaseResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << fmt(r.seconds) << " s";
  if (r.limit_seconds > 0) out << " / " << fmt(r.limit_seconds) << " s";
  out << "] " << r.detail;
  return out.str();
}

}  // namespace antirotor::harness
