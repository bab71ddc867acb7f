#include "antirotor/harness/trials.hpp"

#include "antirotor/errors.hpp"
#include "antirotor/invariants/invariants.hpp"

namespace antirotor::harness {

QMatrix random_invertible(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  QMatrix k = cas::zero_qmatrix(n, n);
  do {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) k(i, j) = dist(rng);
    }
  } while (cas::det_exact(k) == 0);
  return k;
}

bool isomorphism_trial(const Algebra& alg, const QMatrix& k, const skewer::ParamSymMatrix& u, std::string* failure) {
  Algebra b = alg::transform(alg, k);
  auto ub = skewer::anti_rotor(b);
  if (!skewer::subspace_equal(ub.congruence(k), u)) {
    if (failure) *failure = "K^T u' K differs from u for '" + alg.name() + "'";
    return false;
  }
  return true;
}

TrialTally random_isomorphism_trials(const Algebra& alg, std::size_t count, unsigned long long seed,
                                     const TrialOptions& options) {
  if (alg.dim() > options.dim_cap) {
    throw UsageError("algebra dimension " + std::to_string(alg.dim()) + " exceeds the trial cap " +
                     std::to_string(options.dim_cap));
  }
  std::mt19937_64 rng(seed);
  auto u = skewer::anti_rotor(alg);
  nlohmann::json base;
  if (options.invariants) base = inv::certified_fields(inv::compute_invariants(alg));
  TrialTally tally;
  for (std::size_t t = 0; t < count; ++t) {
    QMatrix k = random_invertible(alg.dim(), rng);
    std::string why;
    bool ok = isomorphism_trial(alg, k, u, &why);
    if (ok && options.invariants) {
      auto other = inv::certified_fields(inv::compute_invariants(alg::transform(alg, k)));
      if (!inv::certified_agree(base, other)) {
        ok = false;
        why = "certified invariants changed: " + base.dump() + " vs " + other.dump();
      }
    }
    if (ok) {
      ++tally.passed;
    } else {
      ++tally.failed;
      tally.failures.push_back("trial " + std::to_string(t) + ": " + why);
    }
  }
  return tally;
}

bool SurveyResult::all_equal() const {
  for (const auto& row : equal) {
    for (bool b : row) {
      if (!b) return false;
    }
  }
  return true;
}

SurveyResult antirotor_type_survey(const Algebra& alg, const std::vector<int>& powers, bool include_inverse) {
  std::vector<skewer::Mode> modes;
  if (include_inverse) modes.push_back(skewer::Mode::inverse());
  for (int j : powers) {
    if (j == 0 || j == 1) throw UsageError("power types exclude 0 and 1");
    modes.push_back(skewer::Mode::power(j));
  }
  SurveyResult r;
  std::vector<skewer::ParamSymMatrix> us;
  for (const auto& m : modes) {
    us.push_back(skewer::anti_rotor(alg, m));
    r.labels.push_back(m.label());
    r.dims.push_back(us.back().param_count());
  }
  r.equal.assign(us.size(), std::vector<bool>(us.size(), true));
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      r.equal[i][j] = r.equal[j][i] = skewer::subspace_equal(us[i], us[j]);
    }
  }
  return r;
}

}  // namespace antirotor::harness
