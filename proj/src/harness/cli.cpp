#include "antirotor/harness/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "antirotor/algebra/io.hpp"
#include "antirotor/algebra/registry.hpp"
#include "antirotor/errors.hpp"
#include "antirotor/harness/acceptance.hpp"
#include "antirotor/invariants/invariants.hpp"
#include "antirotor/norms/norms.hpp"
#include "antirotor/skewer/skewer.hpp"

namespace antirotor::harness {

namespace {

using nlohmann::json;
using cas::QMatrix;

struct Outcome {
  json result;
  std::string text;
  std::vector<std::string> warnings;
  int code = 0;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest(const alg::Algebra& a) {
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << fnv1a(alg::algebra_to_json(a).dump());
  return out.str();
}

double default_tolerance() {
  if (const char* env = std::getenv(kToleranceEnv)) {
    try {
      std::size_t used = 0;
      double v = std::stod(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kToleranceEnv) + " must be a positive number");
  }
  return 1e-10;
}

norms::Point parse_point(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    auto j = json::parse(s);
    norms::Point p;
    for (const auto& v : j) p.push_back(v.get<double>());
    return p;
  }
  norms::Point p;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (used != item.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("cannot parse point coordinate '" + item + "'");
    }
  }
  return p;
}

norms::Point default_point(const alg::Algebra& a) {
  norms::Point p;
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) p.push_back(a.unit()[i].get_d() + 0.1 * static_cast<double>(i + 1) / n);
  return p;
}

std::string matrix_text(const QMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i][j] = cas::to_string(m(i, j));
      width = std::max(width, cells[i][j].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    out << "[";
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "  " : " ") << std::setw(width) << row[j];
    out << " ]\n";
  }
  return out.str();
}

json generators_json(const skewer::ParamSymMatrix& u) {
  json g = json::array();
  for (const auto& m : u.generators()) g.push_back(alg::qmatrix_to_json(m));
  return g;
}

skewer::Mode mode_from(const std::string& mode, int power) {
  if (mode == "inverse") {
    if (power != 0) throw UsageError("--power needs --mode power");
    return skewer::Mode::inverse();
  }
  if (mode == "power") {
    if (power == 0 || power == 1) throw UsageError("--mode power needs --power j with j not 0 or 1");
    return skewer::Mode::power(power);
  }
  throw UsageError("unknown mode '" + mode + "' (expected inverse or power)");
}

Outcome verb_validate(const alg::Algebra& a) {
  auto v = alg::validate(a);
  Outcome o;
  o.result = {{"n", a.dim()}, {"associative", v.associative}, {"commutative", v.commutative}, {"unital", v.unital}};
  std::ostringstream t;
  t << "algebra: " << a.name() << " (n = " << a.dim() << ")\n";
  t << "associative: " << (v.associative ? "yes" : "no") << "\n";
  t << "commutative: " << (v.commutative ? "yes" : "no") << "\n";
  t << "unital: " << (v.unital ? "yes" : "no") << "\n";
  if (v.unit) {
    json unit = json::array();
    t << "unit: (";
    for (std::size_t i = 0; i < v.unit->size(); ++i) {
      unit.push_back(alg::rational_to_json((*v.unit)[i]));
      t << (i ? ", " : "") << cas::to_string((*v.unit)[i]);
    }
    t << ")\n|1|^2 = " << cas::to_string(*v.unit_norm_sq) << "\n";
    o.result["unit"] = unit;
    o.result["unit_norm_sq"] = alg::rational_to_json(*v.unit_norm_sq);
  }
  o.warnings = v.warnings;
  o.text = t.str();
  return o;
}

Outcome verb_antirotor(const alg::Algebra& a, const skewer::Mode& mode) {
  auto field = skewer::field_for_mode(a, mode);
  auto u = skewer::solve_curl_system(skewer::assemble_curl_system(a, field), field);
  Outcome o;
  o.result = {{"n", a.dim()},           {"m", u.param_count()},      {"mode", mode.label()},
              {"method", field.method}, {"left_solve", field.left_solve}, {"generators", generators_json(u)},
              {"display", u.to_string()}};
  std::ostringstream t;
  t << "algebra: " << a.name() << " (n = " << a.dim() << ")\n";
  t << "mode: " << mode.label() << "\n";
  t << "m = " << u.param_count() << "\n";
  t << "M_u =\n" << u.to_string();
  o.text = t.str();
  return o;
}

Outcome verb_normalized(const alg::Algebra& a) {
  auto u = skewer::anti_rotor(a);
  auto aff = skewer::normalized_subspace(a, u);
  Outcome o;
  o.result = {{"consistent", aff.consistent}};
  std::ostringstream t;
  t << "algebra: " << a.name() << " (n = " << a.dim() << ")\n";
  if (!aff.consistent) {
    t << "no normalized metric exists\n";
  } else {
    o.result["particular"] = alg::qmatrix_to_json(aff.particular);
    o.result["homogeneous"] = generators_json(aff.homogeneous);
    o.result["free_parameters"] = aff.homogeneous.param_count();
    t << "particular =\n" << matrix_text(aff.particular);
    t << "free parameters: " << aff.homogeneous.param_count() << "\n";
    if (aff.homogeneous.param_count() > 0) t << "homogeneous part =\n" << aff.homogeneous.to_string();
  }
  o.text = t.str();
  return o;
}

std::string report_text(const inv::InvariantReport& r) {
  auto j = inv::report_to_json(r);
  std::ostringstream t;
  t << "algebra: " << r.algebra << " (n = " << r.n << ")\n";
  t << "m = " << r.m << "\n";
  t << "max rank: " << r.max_rank.value << " (" << r.max_rank.tag << ")\n";
  t << "min nonzero rank: " << r.min_nonzero_rank.value << " (" << r.min_nonzero_rank.tag << ")\n";
  t << "det(M_u) = " << j["det_poly"].get<std::string>() << "\n";
  t << "sensitive parameters: " << r.sensitive_param_count << "\n";
  t << "variety: " << j["variety"]["dim"].dump() << "-dimensional, " << j["variety"]["component_count"].dump()
    << " components (" << r.variety.shape << ", " << r.variety.convention << ")\n";
  t << "sextuple: " << j["sextuple"].dump() << "\n";
  if (r.tau) {
    t << "tau raw: " << j["tau_raw"].dump() << ", reduced: " << j["tau_reduced"].dump() << " (" << r.tau->method
      << ")\n";
  }
  return t.str();
}

Outcome verb_invariants(const alg::Algebra& a, const skewer::Mode& mode, long grid_bound) {
  inv::SextupleOptions opts;
  opts.grid_bound = grid_bound;
  auto r = inv::compute_invariants(a, mode, opts);
  Outcome o;
  o.result = inv::report_to_json(r);
  o.result["certified"] = inv::certified_fields(r);
  if (r.tau) o.warnings = r.tau->warnings;
  o.text = report_text(r);
  return o;
}

json evaluation_json(const norms::NormEvaluation& e) {
  json path = json::array();
  for (const auto& p : e.path) path.push_back(p);
  json coords = json::array();
  for (const auto& c : e.metric_coordinates) coords.push_back(alg::rational_to_json(c));
  return {{"value", e.value},
          {"log_value", e.log_value},
          {"path", path},
          {"quadrature_error_estimate", e.quadrature_error_estimate},
          {"converged", e.converged},
          {"metric_coordinates", coords}};
}

Outcome verb_norm_eval(const alg::Algebra& a, const QMatrix& metric, const norms::Point& s, double tol,
                       bool reversed) {
  norms::NormEvaluator ev(a, metric);
  norms::NormOptions opts;
  opts.tol = tol;
  auto e = ev.evaluate(s, opts, reversed ? norms::PathOrder::reversed : norms::PathOrder::forward);
  Outcome o;
  o.result = evaluation_json(e);
  if (!e.converged) o.warnings.push_back("quadrature error estimate exceeds the requested tolerance");
  std::ostringstream t;
  t << std::setprecision(15);
  t << "l(s) = " << e.value << "\n";
  t << "log l(s) = " << e.log_value << "\n";
  t << "quadrature error estimate: " << e.quadrature_error_estimate << "\n";
  o.text = t.str();
  return o;
}

bool is_normalized(const alg::Algebra& a, const QMatrix& metric) {
  auto aff = skewer::normalized_subspace(a, skewer::anti_rotor(a));
  if (!aff.consistent) return false;
  QMatrix d = metric;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(i, j) -= aff.particular(i, j);
  }
  return skewer::membership_check(aff.homogeneous, d).has_value();
}

Outcome verb_check(const alg::Algebra& a, const std::string& source, const QMatrix& metric, const norms::Point& s,
                   double tol, const std::string& which) {
  static const std::vector<std::string> kinds{"all", "membership", "path", "homogeneity", "reciprocity",
                                              "duality", "special"};
  if (std::find(kinds.begin(), kinds.end(), which) == kinds.end()) {
    throw UsageError("unknown check '" + which + "'");
  }
  auto want = [&](const std::string& k) { return which == "all" || which == k; };
  std::vector<norms::CheckReport> reports;
  bool member = skewer::membership_check(skewer::anti_rotor(a), metric).has_value();
  if (want("membership")) {
    norms::CheckReport r;
    r.name = "membership";
    r.passed = member;
    r.detail = member ? "metric lies in the anti-rotor" : "metric is not an uncurling metric";
    reports.push_back(r);
  }
  norms::NormEvaluator ev(a, metric, false);
  if (want("path")) reports.push_back(norms::check_path_independence(ev, s, tol));
  if (want("homogeneity")) {
    for (double f : {0.9, 1.1}) reports.push_back(norms::check_homogeneity(ev, s, f, tol));
  }
  if (want("reciprocity")) {
    if (which == "reciprocity" || is_normalized(a, metric)) {
      reports.push_back(norms::check_reciprocity(ev, s, tol));
    }
  }
  if (want("duality")) reports.push_back(norms::check_duality(ev, s, 1e-5));
  if (which == "special") {
    if (source.rfind("registry:", 0) != 0) throw UsageError("the special check needs a registry algebra");
    reports.push_back(norms::check_special_vs_det(alg::registry_entry(source.substr(9)), std::max(tol, 1e-8)));
  }
  Outcome o;
  json arr = json::array();
  std::ostringstream t;
  bool all = true;
  for (const auto& r : reports) {
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"error", r.error}, {"tolerance", r.tolerance},
                   {"detail", r.detail}});
    t << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  o.result = {{"checks", arr}, {"passed", all}};
  o.text = t.str();
  o.code = all ? 0 : 3;
  return o;
}

Outcome verb_compare(const alg::Algebra& a, const alg::Algebra& b) {
  for (const auto* x : {&a, &b}) {
    if (!alg::validate(*x).associative) {
      throw DomainError("compare needs associative algebras; '" + x->name() + "' is not associative");
    }
  }
  auto ra = inv::compute_invariants(a);
  auto rb = inv::compute_invariants(b);
  auto v = inv::compare(ra, rb);
  auto e = inv::epimorphism_dim_check(ra, rb);
  Outcome o;
  o.result = {{"not_isomorphic", v.not_isomorphic},
              {"witnesses", v.witnesses},
              {"epimorphism_excluded", e.excluded},
              {"notes", e.notes},
              {"a", inv::report_to_json(ra)},
              {"b", inv::report_to_json(rb)}};
  std::ostringstream t;
  t << a.name() << " vs " << b.name() << ": " << (v.not_isomorphic ? "not isomorphic" : "indistinguishable") << "\n";
  for (const auto& w : v.witnesses) t << "  witness: " << w << "\n";
  for (const auto& n : e.notes) t << "  note: " << n << "\n";
  o.text = t.str();
  return o;
}

Outcome verb_transform(const alg::Algebra& a, const QMatrix& k, const std::string& output) {
  auto b = alg::transform(a, k);
  Outcome o;
  o.result = alg::algebra_to_json(b);
  if (!output.empty()) alg::save_algebra(b, output);
  o.text = o.result.dump(2) + "\n";
  return o;
}

Outcome verb_registry(const std::string& name) {
  Outcome o;
  std::ostringstream t;
  if (name.empty()) {
    json list = json::array();
    for (const auto& n : alg::registry_catalog()) {
      auto e = alg::registry_entry(n);
      list.push_back({{"name", n}, {"dim", e.algebra.dim()}, {"description", e.description}});
      t << std::left << std::setw(24) << n << " n = " << std::setw(3) << e.algebra.dim() << e.description << "\n";
    }
    o.result = list;
  } else {
    auto e = alg::registry_entry(name);
    o.result = {{"algebra", alg::algebra_to_json(e.algebra)},
                {"description", e.description},
                {"special_norm_witness", e.witness ? json(e.witness->quotient) : json(nullptr)},
                {"star_metric", e.star_metric ? alg::qmatrix_to_json(*e.star_metric) : json(nullptr)}};
    t << name << ": " << e.description << " (n = " << e.algebra.dim() << ")\n";
    if (e.witness) t << "special norm witness: epimorphism onto " << e.witness->quotient << "\n";
    if (e.star_metric) t << "star metric:\n" << matrix_text(*e.star_metric);
  }
  o.text = t.str();
  return o;
}

Outcome verb_selftest(const std::string& only, std::ostream* progress) {
  auto results = run_cases(selftest_cases(), only, progress);
  if (results.empty()) throw UsageError("no self-test case matches '" + only + "'");
  Outcome o;
  json arr = json::array();
  std::ostringstream t;
  std::size_t passed = 0;
  for (const auto& r : results) {
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    if (!progress) t << scoreboard_line(r) << "\n";
    passed += r.passed;
  }
  t << passed << "/" << results.size() << " cases passed\n";
  o.result = {{"cases", arr}, {"passed", passed}, {"total", results.size()}};
  o.text = t.str();
  o.code = passed == results.size() ? 0 : 3;
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Anti-rotors, unital norms and isomorphism invariants of finite-dimensional real algebras",
               "antirotor"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  bool as_json = false;
  std::string source, source_b, metric_text, point_text, k_text, output, which = "all", only, mode = "inverse",
                                                                            registry_name;
  int power = 0;
  long grid_bound = 2;
  double tol = 0.0;
  bool reversed = false;

  auto algebra_arg = [&](CLI::App* sub, std::string& target, const std::string& name) {
    sub->add_option(name, target, "algebra JSON file or registry:<name>[:<n>]")->required();
  };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "machine-readable output"); };
  auto mode_opts = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "inverse (default) or power");
    sub->add_option("--power", power, "exponent j for --mode power");
  };
  auto tol_opt = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, std::string("numeric tolerance (default 1e-10, or $") + kToleranceEnv + ")");
  };

  auto* validate = app.add_subcommand("validate", "check structure constants, associativity and unit");
  algebra_arg(validate, source, "algebra");
  json_flag(validate);
  auto* antirotor = app.add_subcommand("antirotor", "solve for the anti-rotor M_u");
  algebra_arg(antirotor, source, "algebra");
  mode_opts(antirotor);
  json_flag(antirotor);
  auto* normalized = app.add_subcommand("normalized", "affine subspace of normalized uncurling metrics");
  algebra_arg(normalized, source, "algebra");
  json_flag(normalized);
  auto* invariants = app.add_subcommand("invariants", "sextuple, det(M_u), variety and tau triple");
  algebra_arg(invariants, source, "algebra");
  mode_opts(invariants);
  invariants->add_option("--grid-bound", grid_bound, "integer grid bound for the minimal rank search");
  json_flag(invariants);
  auto* norm_eval = app.add_subcommand("norm-eval", "evaluate the unital norm of a metric at a point");
  algebra_arg(norm_eval, source, "algebra");
  norm_eval->add_option("--metric", metric_text, "symmetric matrix: JSON text or file")->required();
  norm_eval->add_option("--point", point_text, "comma-separated coordinates")->required();
  norm_eval->add_flag("--reversed", reversed, "integrate along the reversed staircase");
  tol_opt(norm_eval);
  json_flag(norm_eval);
  auto* check = app.add_subcommand("check", "numeric verification battery for a metric");
  algebra_arg(check, source, "algebra");
  check->add_option("--metric", metric_text, "symmetric matrix: JSON text or file")->required();
  check->add_option("--point", point_text, "comma-separated coordinates (default near the unit)");
  check->add_option("--which", which, "all, membership, path, homogeneity, reciprocity, duality or special");
  tol_opt(check);
  json_flag(check);
  auto* compare = app.add_subcommand("compare", "compare invariants of two algebras");
  algebra_arg(compare, source, "first");
  algebra_arg(compare, source_b, "second");
  json_flag(compare);
  auto* transform = app.add_subcommand("transform", "change basis by an invertible matrix K");
  algebra_arg(transform, source, "algebra");
  transform->add_option("--K", k_text, "invertible matrix: JSON text or file")->required();
  transform->add_option("--output", output, "write the transformed algebra to this file");
  json_flag(transform);
  auto* registry = app.add_subcommand("registry", "list built-in algebras or show one");
  registry->add_option("name", registry_name, "registry name");
  json_flag(registry);
  auto* selftest = app.add_subcommand("selftest", "replay the reference tables and acceptance criteria");
  selftest->add_option("--only", only, "run only cases with this name, group or criterion number");
  json_flag(selftest);

  std::string verb;
  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    // A bare algebra argument is shorthand for the antirotor verb.
    if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
        app.get_subcommand_no_throw(args.front()) == nullptr) {
      reversed_args.push_back("antirotor");
    }
    app.parse(reversed_args);
    verb = app.get_subcommands().front()->get_name();
    if (tol == 0.0) tol = default_tolerance();
    if (!(tol > 0)) throw UsageError("--tol must be positive");

    Outcome o;
    std::optional<alg::Algebra> a;
    auto load = [](const std::string& s) { return alg::load_algebra(s); };
    if (verb == "validate") {
      a = load(source);
      o = verb_validate(*a);
    } else if (verb == "antirotor") {
      a = load(source);
      o = verb_antirotor(*a, mode_from(mode, power));
    } else if (verb == "normalized") {
      a = load(source);
      o = verb_normalized(*a);
    } else if (verb == "invariants") {
      a = load(source);
      o = verb_invariants(*a, mode_from(mode, power), grid_bound);
    } else if (verb == "norm-eval") {
      a = load(source);
      o = verb_norm_eval(*a, alg::load_qmatrix(metric_text), parse_point(point_text), tol, reversed);
    } else if (verb == "check") {
      a = load(source);
      auto s = point_text.empty() ? default_point(*a) : parse_point(point_text);
      o = verb_check(*a, source, alg::load_qmatrix(metric_text), s, tol, which);
    } else if (verb == "compare") {
      a = load(source);
      o = verb_compare(*a, load(source_b));
    } else if (verb == "transform") {
      a = load(source);
      o = verb_transform(*a, alg::load_qmatrix(k_text), output);
    } else if (verb == "registry") {
      o = verb_registry(registry_name);
    } else if (verb == "selftest") {
      o = verb_selftest(only, as_json ? nullptr : &out);
    }

    if (as_json) {
      json envelope = {{"tool", kToolVersion}, {"verb", verb}, {"result", o.result}, {"warnings", o.warnings}};
      if (a) {
        envelope["algebra"] = a->name();
        envelope["input_digest"] = digest(*a);
      }
      out << envelope.dump(2) << "\n";
    } else {
      out << o.text;
      for (const auto& w : o.warnings) err << "warning: " << w << "\n";
    }
    return o.code;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: malformed JSON input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace antirotor::harness
