#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "antirotor/algebra/algebra.hpp"
#include "antirotor/skewer/skewer.hpp"

namespace antirotor::harness {

using alg::Algebra;
using cas::QMatrix;

// Invertible n x n matrix with entries in {-3..3}, redrawn until the exact
// determinant is nonzero.
QMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

struct TrialTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // one line per failing trial
  bool all_passed() const { return failed == 0; }
};

struct TrialOptions {
  std::size_t dim_cap = 4;
  // Also compare certified invariant fields (slower: determinants, ranks, tau).
  bool invariants = false;
};

// For each K: the algebra transformed by K must have anti-rotor u' with
// K^T u' K = u, as subspaces.
TrialTally random_isomorphism_trials(const Algebra& alg, std::size_t count, unsigned long long seed,
                                     const TrialOptions& options = {});
// The same property for one given K.
bool isomorphism_trial(const Algebra& alg, const QMatrix& k, const skewer::ParamSymMatrix& u,
                       std::string* failure = nullptr);

struct SurveyResult {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<std::vector<bool>> equal;  // pairwise subspace equality
  bool all_equal() const;
};

// Anti-rotors of the listed power types (and the inverse type when
// include_inverse), compared pairwise.
SurveyResult antirotor_type_survey(const Algebra& alg, const std::vector<int>& powers, bool include_inverse);

}  // namespace antirotor::harness
