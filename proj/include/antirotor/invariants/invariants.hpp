#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "antirotor/algebra/algebra.hpp"
#include "antirotor/skewer/param_sym_matrix.hpp"
#include "antirotor/skewer/skewer.hpp"

namespace antirotor::inv {

using alg::Algebra;
using cas::MultiPoly;
using cas::QMatrix;
using skewer::ParamSymMatrix;

struct RankValue {
  std::size_t value = 0;
  std::string tag;  // "exact" / "probabilistic", or "certified" / "upper-bound"
};

// Real zero set of det(M_u) inside the sensitive parameter subspace.
struct VarietySummary {
  bool supported = false;
  std::size_t dim = 0;
  std::size_t components = 0;
  std::string convention = "sensitive-subspace";
  std::string shape;  // "zero", "linear-forms", "linear-forms-times-quadratic" or "unsupported"
  std::vector<MultiPoly> linear_factors;  // in the original parameters
};

struct TauTriple {
  std::size_t rat = 0;
  std::size_t log = 0;
  std::size_t arc = 0;
  bool operator==(const TauTriple&) const = default;
};

struct TauReport {
  TauTriple raw;
  // (rat, log - 1, arc); log is at least one for unital associative input.
  long reduced_rat = 0;
  long reduced_log = 0;
  long reduced_arc = 0;
  // Parameters (in the generator basis) that touch each class.
  TauTriple presence;
  std::string method;  // "exact" or "numeric"
  bool undecided = false;
  std::vector<std::string> warnings;
};

struct InvariantReport {
  std::string algebra;
  std::size_t n = 0;
  std::size_t m = 0;
  RankValue max_rank;
  RankValue min_nonzero_rank;
  MultiPoly det_poly;
  std::size_t sensitive_param_count = 0;
  VarietySummary variety;
  std::optional<TauReport> tau;
};

struct SextupleOptions {
  long grid_bound = 2;
};

// Symmetric elimination by congruence: counts of positive, negative and zero
// diagonal entries.
struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Signature signature(QMatrix a);

// det_poly rewritten on the quotient of parameter space by the directions
// along which it is constant.  dim is basis independent; reduced has exactly
// dim variables and coordinates (rows 0..dim-1) maps parameters to them.
struct SensitiveReduction {
  std::size_t dim = 0;
  MultiPoly reduced;
  QMatrix coordinates;
};
SensitiveReduction sensitive_reduction(const MultiPoly& det_poly);

VarietySummary variety_summary(const MultiPoly& det_poly);

InvariantReport sextuple(const ParamSymMatrix& u, const SextupleOptions& options = {});
TauReport tau_triple(const Algebra& alg, const ParamSymMatrix& u);
// Sextuple plus the tau triple (inverse mode, unital input only).
InvariantReport compute_invariants(const Algebra& alg, const SextupleOptions& options = {});
// Sextuple of the anti-rotor of another type; tau only for the inverse type.
InvariantReport compute_invariants(const Algebra& alg, const skewer::Mode& mode, const SextupleOptions& options = {});

struct Verdict {
  bool not_isomorphic = false;
  std::vector<std::string> witnesses;
};
Verdict compare(const InvariantReport& a, const InvariantReport& b);

struct EpimorphismVerdict {
  bool excluded = false;  // no epimorphism from A onto B
  bool a_simple = false;
  bool b_simple = false;
  std::vector<std::string> notes;
};
EpimorphismVerdict epimorphism_dim_check(const InvariantReport& a, const InvariantReport& b);

// Fields that are certified (exact tags, supported variety, decided tau).
// Two reports of isomorphic algebras agree on these.
nlohmann::json certified_fields(const InvariantReport& r);
// Equal on every key certified in both; a key certified on one side only is
// skipped.
bool certified_agree(const nlohmann::json& a, const nlohmann::json& b);
nlohmann::json report_to_json(const InvariantReport& r);

}  // namespace antirotor::inv
