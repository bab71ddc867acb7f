#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "antirotor/invariants/invariants.hpp"
#include "antirotor/norms/norms.hpp"
#include "antirotor/skewer/param_sym_matrix.hpp"

namespace antirotor::harness {

using cas::QMatrix;
using norms::Point;
using skewer::ParamSymMatrix;

// Hand-written reference data for the registry algebras with published
// closed forms.  None of it is derived from the solver.

// One basis metric and Phi with grad Phi = L s^-1, so l = exp(Phi / |1|^2).
struct OracleMember {
  QMatrix metric;
  std::function<double(const Point&)> phi;
};

struct NormOracle {
  std::string algebra;  // registry spec
  std::vector<OracleMember> members;
};

struct TableRow {
  std::string algebra;  // registry spec
  ParamSymMatrix expected;
  // (dim u, max rank, min nonzero rank, sensitive, variety dim, components)
  std::optional<std::array<std::size_t, 6>> sextuple;
  std::optional<std::array<long, 3>> reduced_tau;
  std::optional<std::array<std::size_t, 3>> raw_tau;
};

std::vector<TableRow> table_one_rows();
std::vector<TableRow> table_two_rows();

// H_n: generator j has ones on the antidiagonal i + k = j.
ParamSymMatrix hankel_family(std::size_t n);

std::vector<NormOracle> table_norm_oracles();
// l for the upper triangular Toeplitz algebra: generator j contributes the
// z^j coefficient of log(1 + sum_k (x_{k+1} / x_1) z^k), generator 0 log x_1.
NormOracle toeplitz_oracle(std::size_t n);
NormOracle triangular4_oracle();
NormOracle triangular5_oracle();

// Combined metric and Phi for coefficients c over the members.
QMatrix oracle_metric(const NormOracle& o, const std::vector<cas::BigRational>& c);
double oracle_phi(const NormOracle& o, const std::vector<cas::BigRational>& c, const Point& s);

}  // namespace antirotor::harness
