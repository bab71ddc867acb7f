#include "antirotor/harness/oracles.hpp"

#include <cmath>

namespace antirotor::harness {

namespace {

struct Entry {
  std::size_t i, j;
  cas::BigRational c;
};

QMatrix sym(std::size_t n, std::vector<Entry> entries) {
  QMatrix m = cas::zero_qmatrix(n, n);
  for (const auto& e : entries) {
    m(e.i, e.j) = e.c;
    m(e.j, e.i) = e.c;
  }
  return m;
}

ParamSymMatrix family(std::size_t n, std::vector<std::vector<Entry>> generators) {
  std::vector<QMatrix> g;
  for (auto& entries : generators) g.push_back(sym(n, std::move(entries)));
  return ParamSymMatrix(n, std::move(g));
}

using Phi = std::function<double(const Point&)>;

}  // namespace

std::vector<TableRow> table_one_rows() {
  return {
      {"complex", family(2, {{{0, 0, 1}, {1, 1, -1}}, {{0, 1, 1}}}), std::nullopt, std::array<long, 3>{0, 0, 1},
       std::array<std::size_t, 3>{0, 1, 1}},
      {"split-complex", family(2, {{{0, 0, 1}, {1, 1, 1}}, {{0, 1, 1}}}), std::nullopt,
       std::array<long, 3>{0, 1, 0}, std::array<std::size_t, 3>{0, 2, 0}},
      {"direct-product:2", family(2, {{{0, 0, 1}}, {{1, 1, 1}}}), std::nullopt, std::array<long, 3>{0, 1, 0},
       std::array<std::size_t, 3>{0, 2, 0}},
      {"dual", family(2, {{{0, 0, 1}}, {{0, 1, 1}}}), std::nullopt, std::array<long, 3>{1, 0, 0},
       std::array<std::size_t, 3>{1, 1, 0}},
  };
}

std::vector<TableRow> table_two_rows() {
  using S = std::array<std::size_t, 6>;
  using R = std::array<long, 3>;
  return {
      {"direct-product:3", family(3, {{{0, 0, 1}}, {{1, 1, 1}}, {{2, 2, 1}}}), S{3, 3, 1, 3, 2, 3}, R{0, 2, 0},
       std::nullopt},
      {"real-complex", family(3, {{{0, 0, 1}}, {{1, 1, 1}, {2, 2, -1}}, {{1, 2, 1}}}), S{3, 3, 1, 3, 2, 2},
       R{0, 1, 1}, std::nullopt},
      {"real-dual", family(3, {{{0, 0, 1}}, {{1, 1, 1}}, {{1, 2, 1}}}), S{3, 3, 1, 2, 1, 2}, R{1, 1, 0},
       std::nullopt},
      {"toeplitz:3", hankel_family(3), S{3, 3, 1, 1, 0, 1}, R{2, 0, 0}, std::nullopt},
      {"trivial-extension:3", family(3, {{{0, 0, 1}}, {{0, 1, 1}}, {{0, 2, 1}}}), S{3, 2, 1, 0, 3, 0}, R{2, 0, 0},
       std::nullopt},
      {"twisted-split-complex", family(3, {{{0, 0, 1}, {1, 1, 1}}, {{0, 1, 1}}}), S{2, 2, 1, 0, 2, 0}, R{0, 1, 0},
       std::nullopt},
  };
}

ParamSymMatrix hankel_family(std::size_t n) {
  std::vector<std::vector<Entry>> gens(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (i <= j - i) gens[j].push_back({i, j - i, 1});
    }
  }
  return family(n, std::move(gens));
}

std::vector<NormOracle> table_norm_oracles() {
  std::vector<NormOracle> out;
  out.push_back({"complex",
                 {{sym(2, {{0, 0, 1}, {1, 1, -1}}), [](const Point& s) { return 0.5 * std::log(s[0] * s[0] + s[1] * s[1]); }},
                  {sym(2, {{0, 1, 1}}), [](const Point& s) { return std::atan2(s[1], s[0]); }}}});
  out.push_back({"split-complex",
                 {{sym(2, {{0, 0, 1}, {1, 1, 1}}), [](const Point& s) { return 0.5 * std::log(s[0] * s[0] - s[1] * s[1]); }},
                  {sym(2, {{0, 1, 1}}),
                   [](const Point& s) { return 0.5 * std::log((s[0] + s[1]) / (s[0] - s[1])); }}}});
  out.push_back({"direct-product:2",
                 {{sym(2, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
                  {sym(2, {{1, 1, 1}}), [](const Point& s) { return std::log(s[1]); }}}});
  out.push_back({"dual",
                 {{sym(2, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
                  {sym(2, {{0, 1, 1}}), [](const Point& s) { return s[1] / s[0]; }}}});
  out.push_back({"direct-product:3",
                 {{sym(3, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
                  {sym(3, {{1, 1, 1}}), [](const Point& s) { return std::log(s[1]); }},
                  {sym(3, {{2, 2, 1}}), [](const Point& s) { return std::log(s[2]); }}}});
  out.push_back({"real-complex",
                 {{sym(3, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
                  {sym(3, {{1, 1, 1}, {2, 2, -1}}),
                   [](const Point& s) { return 0.5 * std::log(s[1] * s[1] + s[2] * s[2]); }},
                  {sym(3, {{1, 2, 1}}), [](const Point& s) { return std::atan2(s[2], s[1]); }}}});
  out.push_back({"real-dual",
                 {{sym(3, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
                  {sym(3, {{1, 1, 1}}), [](const Point& s) { return std::log(s[1]); }},
                  {sym(3, {{1, 2, 1}}), [](const Point& s) { return s[2] / s[1]; }}}});
  out.push_back(toeplitz_oracle(3));
  out.push_back({"trivial-extension:3",
                 {{sym(3, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
                  {sym(3, {{0, 1, 1}}), [](const Point& s) { return s[1] / s[0]; }},
                  {sym(3, {{0, 2, 1}}), [](const Point& s) { return s[2] / s[0]; }}}});
  out.push_back({"twisted-split-complex",
                 {{sym(3, {{0, 0, 1}, {1, 1, 1}}), [](const Point& s) { return 0.5 * std::log(s[0] * s[0] - s[1] * s[1]); }},
                  {sym(3, {{0, 1, 1}}),
                   [](const Point& s) { return 0.5 * std::log((s[0] + s[1]) / (s[0] - s[1])); }}}});
  out.push_back({"upper-triangular-2x2",
                 {{sym(3, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
                  {sym(3, {{1, 1, 1}}), [](const Point& s) { return std::log(s[1]); }}}});
  return out;
}

NormOracle toeplitz_oracle(std::size_t n) {
  NormOracle o{"toeplitz:" + std::to_string(n), {}};
  auto h = hankel_family(n);
  for (std::size_t j = 0; j < n; ++j) {
    Phi phi = [n, j](const Point& s) {
      if (j == 0) return std::log(s[0]);
      // Power series of log(1 + W(z)), W = sum_{k>=1} w_k z^k, by
      // L' = W' / (1 + W):  k L_k = k w_k - sum_{i=1}^{k-1} i L_i w_{k-i}.
      std::vector<double> w(n, 0.0), l(n, 0.0);
      for (std::size_t k = 1; k < n; ++k) w[k] = s[k] / s[0];
      for (std::size_t k = 1; k <= j; ++k) {
        double acc = static_cast<double>(k) * w[k];
        for (std::size_t i = 1; i < k; ++i) acc -= static_cast<double>(i) * l[i] * w[k - i];
        l[k] = acc / static_cast<double>(k);
      }
      return l[j];
    };
    o.members.push_back({h.generators()[j], phi});
  }
  return o;
}

NormOracle triangular4_oracle() {
  return {"triangular-4",
          {{sym(4, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
           {sym(4, {{0, 1, 1}}), [](const Point& s) { return s[1] / s[0]; }},
           {sym(4, {{0, 2, 1}}), [](const Point& s) { return s[2] / s[0]; }},
           {sym(4, {{0, 3, 1}, {1, 2, cas::BigRational(1, 2)}}),
            [](const Point& s) { return s[3] / s[0] - 0.5 * s[1] * s[2] / (s[0] * s[0]); }}}};
}

NormOracle triangular5_oracle() {
  return {"triangular-5",
          {{sym(5, {{0, 0, 1}}), [](const Point& s) { return std::log(s[0]); }},
           {sym(5, {{1, 1, 1}}), [](const Point& s) { return std::log(s[1]); }},
           {sym(5, {{0, 2, 1}}), [](const Point& s) { return s[2] / s[0]; }}}};
}

QMatrix oracle_metric(const NormOracle& o, const std::vector<cas::BigRational>& c) {
  std::size_t n = o.members.at(0).metric.rows();
  QMatrix m = cas::zero_qmatrix(n, n);
  for (std::size_t q = 0; q < o.members.size(); ++q) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) += c.at(q) * o.members[q].metric(i, j);
    }
  }
  return m;
}

double oracle_phi(const NormOracle& o, const std::vector<cas::BigRational>& c, const Point& s) {
  double acc = 0.0;
  for (std::size_t q = 0; q < o.members.size(); ++q) acc += c.at(q).get_d() * o.members[q].phi(s);
  return acc;
}

}  // namespace antirotor::harness
