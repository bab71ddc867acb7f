#include "antirotor/invariants/invariants.hpp"

#include <cmath>
#include <random>

#include "antirotor/algebra/io.hpp"
#include "antirotor/cas/linalg.hpp"
#include "antirotor/errors.hpp"
#include "antirotor/skewer/skewer.hpp"

namespace antirotor::inv {

using cas::BigRational;
using cas::QVector;

namespace {

constexpr std::size_t kSymbolicMinorLimit = 6;
constexpr int kRandomEvaluations = 5;
constexpr long kRandomRange = 1000000;
constexpr std::size_t kGridLimit = 200000;

// All k-subsets of {0..n-1}, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool some_minor_nonzero(const cas::PMatrix& m, std::size_t k) {
  std::size_t n = m.rows();
  auto sets = subsets(n, k);
  for (const auto& rows : sets) {
    for (const auto& cols : sets) {
      cas::PMatrix sub = cas::zero_pmatrix(k, k, m(0, 0).num_vars());
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      }
      if (!cas::det_poly(sub).is_zero()) return true;
    }
  }
  return false;
}

RankValue maximal_rank(const ParamSymMatrix& u) {
  std::size_t n = u.n();
  std::size_t m = u.param_count();
  if (m == 0) return {0, "exact"};
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> dist(-kRandomRange, kRandomRange);
  std::size_t r = 0;
  for (int e = 0; e < kRandomEvaluations; ++e) {
    QVector alpha(m);
    for (auto& a : alpha) a = dist(rng);
    r = std::max(r, cas::rank_exact(u.realize(alpha)));
  }
  // A rank seen at a point is a certified lower bound; full rank is exact.
  if (r == n) return {r, "exact"};
  if (n > kSymbolicMinorLimit) return {r, "probabilistic"};
  auto pm = u.as_poly_matrix();
  while (r < n && some_minor_nonzero(pm, r + 1)) ++r;
  return {r, "exact"};
}

bool definite_quadratic(const MultiPoly& det) {
  if (det.is_zero() || det.total_degree() != 2) return false;
  std::size_t m = det.num_vars();
  QMatrix a = cas::zero_qmatrix(m, m);
  for (const auto& [mono, c] : det.terms()) {
    if (mono.degree() != 2) return false;
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::uint32_t e = 0; e < mono[i]; ++e) vars.push_back(i);
    }
    if (vars[0] == vars[1]) {
      a(vars[0], vars[0]) += c;
    } else {
      a(vars[0], vars[1]) += c / 2;
      a(vars[1], vars[0]) += c / 2;
    }
  }
  Signature s = signature(a);
  return s.zero == 0 && (s.positive == 0 || s.negative == 0);
}

RankValue minimal_nonzero_rank(const ParamSymMatrix& u, const MultiPoly& det, long bound) {
  std::size_t n = u.n();
  std::size_t m = u.param_count();
  if (m == 0) return {0, "certified"};
  if (bound < 1) throw UsageError("grid bound must be at least 1");
  std::size_t best = n;
  auto visit = [&](const QVector& alpha) {
    bool zero = true;
    for (const auto& a : alpha) zero = zero && a == 0;
    if (!zero) best = std::min(best, cas::rank_exact(u.realize(alpha)));
  };
  double points = std::pow(static_cast<double>(2 * bound + 1), static_cast<double>(m));
  if (points <= static_cast<double>(kGridLimit)) {
    std::vector<long> idx(m, -bound);
    while (true) {
      QVector alpha(m);
      for (std::size_t q = 0; q < m; ++q) alpha[q] = idx[q];
      visit(alpha);
      std::size_t q = 0;
      while (q < m && ++idx[q] > bound) idx[q++] = -bound;
      if (q == m) break;
    }
  } else {
    std::mt19937_64 rng(0x9a1d);
    std::uniform_int_distribution<long> dist(-bound, bound);
    for (std::size_t s = 0; s < kGridLimit; ++s) {
      QVector alpha(m);
      for (auto& a : alpha) a = dist(rng);
      visit(alpha);
    }
    // Coordinate directions are cheap and often reach the minimum.
    for (std::size_t q = 0; q < m; ++q) {
      QVector alpha(m);
      alpha[q] = 1;
      visit(alpha);
    }
  }
  // Scaling does not change rank, so a one-parameter family has one nonzero rank.
  if (best == 1 || m == 1) return {best, "certified"};
  if (definite_quadratic(det) || definite_quadratic(-det)) return {n, "certified"};
  return {best, "upper-bound"};
}

std::string triple_string(const TauTriple& t) {
  return "(" + std::to_string(t.rat) + ", " + std::to_string(t.log) + ", " + std::to_string(t.arc) + ")";
}

nlohmann::json rank_json(const RankValue& r) { return {{"value", r.value}, {"tag", r.tag}}; }

nlohmann::json variety_json(const VarietySummary& v) {
  nlohmann::json j;
  j["convention"] = v.convention;
  j["shape"] = v.shape;
  if (v.supported) {
    j["dim"] = v.dim;
    j["component_count"] = v.components;
  } else {
    j["dim"] = "n/a";
    j["component_count"] = "unsupported";
  }
  auto names = cas::greek_parameter_names(v.linear_factors.empty() ? 0 : v.linear_factors[0].num_vars());
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : v.linear_factors) factors.push_back(f.to_string(names));
  j["linear_factors"] = factors;
  return j;
}

}  // namespace

InvariantReport sextuple(const ParamSymMatrix& u, const SextupleOptions& options) {
  InvariantReport r;
  r.n = u.n();
  r.m = u.param_count();
  r.det_poly = r.m == 0 ? MultiPoly(0) : cas::det_poly(u.as_poly_matrix());
  r.max_rank = maximal_rank(u);
  r.min_nonzero_rank = minimal_nonzero_rank(u, r.det_poly, options.grid_bound);
  r.sensitive_param_count = sensitive_reduction(r.det_poly).dim;
  r.variety = variety_summary(r.det_poly);
  if (r.m > 0 && r.det_poly.is_zero() != (r.max_rank.value < r.n) && r.max_rank.tag == "exact") {
    throw VerificationError("determinant and maximal rank disagree");
  }
  return r;
}

InvariantReport compute_invariants(const Algebra& alg, const SextupleOptions& options) {
  return compute_invariants(alg, skewer::Mode::inverse(), options);
}

InvariantReport compute_invariants(const Algebra& alg, const skewer::Mode& mode, const SextupleOptions& options) {
  auto u = skewer::anti_rotor(alg, mode);
  InvariantReport r = sextuple(u, options);
  r.algebra = alg.name();
  if (mode.kind == skewer::Mode::Kind::inverse && alg.unital()) r.tau = tau_triple(alg, u);
  return r;
}

Verdict compare(const InvariantReport& a, const InvariantReport& b) {
  Verdict v;
  auto differ = [&](bool cond, std::string what) {
    if (cond) v.witnesses.push_back(std::move(what));
  };
  if (a.n != b.n) {
    v.witnesses.push_back("algebra dimensions differ: " + std::to_string(a.n) + " vs " + std::to_string(b.n));
    v.not_isomorphic = true;
    return v;
  }
  differ(a.m != b.m, "anti-rotor dimensions differ: " + std::to_string(a.m) + " vs " + std::to_string(b.m));
  if (a.max_rank.tag == "exact" && b.max_rank.tag == "exact") {
    differ(a.max_rank.value != b.max_rank.value, "maximal ranks differ: " + std::to_string(a.max_rank.value) +
                                                     " vs " + std::to_string(b.max_rank.value));
  }
  if (a.min_nonzero_rank.tag == "certified" && b.min_nonzero_rank.tag == "certified") {
    differ(a.min_nonzero_rank.value != b.min_nonzero_rank.value,
           "minimal nonzero ranks differ: " + std::to_string(a.min_nonzero_rank.value) + " vs " +
               std::to_string(b.min_nonzero_rank.value));
  }
  differ(a.sensitive_param_count != b.sensitive_param_count,
         "sensitive parameter counts differ: " + std::to_string(a.sensitive_param_count) + " vs " +
             std::to_string(b.sensitive_param_count));
  if (a.variety.supported && b.variety.supported) {
    differ(a.variety.dim != b.variety.dim,
           "variety dimensions differ: " + std::to_string(a.variety.dim) + " vs " + std::to_string(b.variety.dim));
    differ(a.variety.components != b.variety.components,
           "variety component counts differ: " + std::to_string(a.variety.components) + " vs " +
               std::to_string(b.variety.components));
  }
  if (a.tau && b.tau && !a.tau->undecided && !b.tau->undecided) {
    differ(!(a.tau->raw == b.tau->raw),
           "tau triples differ: " + triple_string(a.tau->raw) + " vs " + triple_string(b.tau->raw));
  }
  v.not_isomorphic = !v.witnesses.empty();
  return v;
}

EpimorphismVerdict epimorphism_dim_check(const InvariantReport& a, const InvariantReport& b) {
  EpimorphismVerdict v;
  v.excluded = b.m > a.m;
  if (v.excluded) {
    v.notes.push_back("no epimorphism possible: anti-rotor dimension " + std::to_string(b.m) + " of the target exceeds " +
                      std::to_string(a.m) + " of the source");
  }
  v.a_simple = a.m == 1 && !a.det_poly.is_zero();
  v.b_simple = b.m == 1 && !b.det_poly.is_zero();
  if (v.a_simple) v.notes.push_back("source algebra is simple: one-dimensional anti-rotor with a nonsingular member");
  if (v.b_simple) v.notes.push_back("target algebra is simple: one-dimensional anti-rotor with a nonsingular member");
  return v;
}

nlohmann::json certified_fields(const InvariantReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  if (r.max_rank.tag == "exact") j["max_rank"] = r.max_rank.value;
  if (r.min_nonzero_rank.tag == "certified") j["min_nonzero_rank"] = r.min_nonzero_rank.value;
  j["sensitive_param_count"] = r.sensitive_param_count;
  j["det_identically_zero"] = r.det_poly.is_zero();
  j["det_degree"] = r.det_poly.is_zero() ? -1 : r.det_poly.total_degree();
  if (r.variety.supported) {
    j["variety_dim"] = r.variety.dim;
    j["variety_components"] = r.variety.components;
  }
  if (r.tau && !r.tau->undecided) {
    j["tau_raw"] = {r.tau->raw.rat, r.tau->raw.log, r.tau->raw.arc};
  }
  return j;
}

bool certified_agree(const nlohmann::json& a, const nlohmann::json& b) {
  for (const auto& [key, value] : a.items()) {
    if (b.contains(key) && b.at(key) != value) return false;
  }
  return true;
}

nlohmann::json report_to_json(const InvariantReport& r) {
  nlohmann::json j;
  j["algebra"] = r.algebra;
  j["n"] = r.n;
  j["m"] = r.m;
  j["max_rank"] = rank_json(r.max_rank);
  j["min_nonzero_rank"] = rank_json(r.min_nonzero_rank);
  j["det_poly"] = r.det_poly.to_string(cas::greek_parameter_names(r.m));
  j["sensitive_param_count"] = r.sensitive_param_count;
  j["variety"] = variety_json(r.variety);
  j["sextuple"] = {r.m,
                   r.max_rank.value,
                   r.min_nonzero_rank.value,
                   r.sensitive_param_count,
                   r.variety.supported ? nlohmann::json(r.variety.dim) : nlohmann::json("n/a"),
                   r.variety.supported ? nlohmann::json(r.variety.components) : nlohmann::json("unsupported")};
  if (r.tau) {
    const auto& t = *r.tau;
    j["tau_raw"] = {t.raw.rat, t.raw.log, t.raw.arc};
    j["tau_reduced"] = {t.reduced_rat, t.reduced_log, t.reduced_arc};
    j["tau_presence"] = {t.presence.rat, t.presence.log, t.presence.arc};
    j["tau_method"] = t.method;
    j["tau_undecided"] = t.undecided;
    j["tau_warnings"] = t.warnings;
  } else {
    j["tau_raw"] = nullptr;
    j["tau_reduced"] = nullptr;
  }
  return j;
}

}  // namespace antirotor::inv
