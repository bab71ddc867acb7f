#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "antirotor/cas/linalg.hpp"
#include "antirotor/cas/poly.hpp"

namespace antirotor::testing {

// Seeded generators for property tests.  Every test constructs its own Gen
// with a fixed seed so failures replay exactly.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  cas::BigRational rational(long bound = 5, long max_den = 4) {
    return cas::make_rational(integer(-bound, bound), integer(1, max_den));
  }

  cas::MultiPoly poly(std::size_t nvars, int max_terms, int max_deg) {
    std::vector<cas::MultiPoly::Term> terms;
    int count = static_cast<int>(integer(0, max_terms));
    for (int t = 0; t < count; ++t) {
      std::vector<std::uint32_t> e(nvars);
      for (auto& x : e) x = static_cast<std::uint32_t>(integer(0, max_deg));
      terms.emplace_back(cas::Monomial(e), rational());
    }
    return cas::MultiPoly::from_terms(nvars, std::move(terms));
  }

  cas::QMatrix qmatrix(std::size_t rows, std::size_t cols, long bound = 3) {
    cas::QMatrix m = cas::zero_qmatrix(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = integer(-bound, bound);
    }
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline cas::MultiPoly parse_poly_terms(std::size_t nvars,
                                       std::initializer_list<std::pair<std::vector<std::uint32_t>, long>> terms) {
  std::vector<cas::MultiPoly::Term> out;
  for (const auto& [e, c] : terms) out.emplace_back(cas::Monomial(e), cas::BigRational(c));
  return cas::MultiPoly::from_terms(nvars, std::move(out));
}

}  // namespace antirotor::testing
