#include "antirotor/algebra/registry.hpp"

#include <charconv>
#include <functional>

#include "antirotor/errors.hpp"

namespace antirotor::alg {

namespace {

// Coordinate `coord` contributes `coeff` at position (row, col) of the
// matrix representing an element.
struct PatternEntry {
  std::size_t coord;
  std::size_t row;
  std::size_t col;
  long coeff = 1;
};

// Algebra of matrices sum_i x_i E_i, with products expressed back in the
// E basis by an exact solve.  Fails if the pattern is not closed.
Algebra from_matrix_pattern(const std::string& name, std::size_t n, std::size_t size,
                            const std::vector<PatternEntry>& entries) {
  std::vector<QMatrix> basis(n, cas::zero_qmatrix(size, size));
  for (const auto& e : entries) basis[e.coord](e.row, e.col) += e.coeff;
  QMatrix flat = cas::zero_qmatrix(size * size, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) flat(r * size + c, i) = basis[i](r, c);
    }
  }
  std::vector<BigRational> structure(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix prod = basis[i] * basis[j];
      QVector target(size * size);
      for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) target[r * size + c] = prod(r, c);
      }
      auto coords = cas::solve_exact(flat, target);
      if (!coords) throw VerificationError("matrix pattern for '" + name + "' is not closed under products");
      for (std::size_t k = 0; k < n; ++k) structure[(i * n + j) * n + k] = (*coords)[k];
    }
  }
  return Algebra::create(name, n, std::move(structure));
}

Algebra from_products(const std::string& name, std::size_t n,
                      const std::function<QVector(std::size_t, std::size_t)>& product) {
  std::vector<BigRational> structure(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      QVector p = product(i, j);
      for (std::size_t k = 0; k < n; ++k) structure[(i * n + j) * n + k] = p[k];
    }
  }
  return Algebra::create(name, n, std::move(structure));
}

QVector basis_vector(std::size_t n, std::size_t i) {
  QVector v(n);
  v[i] = 1;
  return v;
}

QVector cd_conjugate(const QVector& a) {
  QVector out = a;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

// (p, q)(r, s) = (p r - s* q, s p + q r*) on halves of the coordinate vector.
QVector cd_multiply(const QVector& a, const QVector& b) {
  std::size_t n = a.size();
  if (n == 1) return {a[0] * b[0]};
  std::size_t h = n / 2;
  QVector p(a.begin(), a.begin() + h), q(a.begin() + h, a.end());
  QVector r(b.begin(), b.begin() + h), s(b.begin() + h, b.end());
  QVector first = cd_multiply(p, r);
  QVector sq = cd_multiply(cd_conjugate(s), q);
  QVector second = cd_multiply(s, p);
  QVector qr = cd_multiply(q, cd_conjugate(r));
  QVector out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = first[i] - sq[i];
    out[h + i] = second[i] + qr[i];
  }
  return out;
}

QMatrix diagonal(const std::vector<long>& d) {
  QMatrix m = cas::zero_qmatrix(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix coordinate_projection(std::size_t n, const std::vector<std::size_t>& coords) {
  QMatrix m = cas::zero_qmatrix(coords.size(), n);
  for (std::size_t r = 0; r < coords.size(); ++r) m(r, coords[r]) = 1;
  return m;
}

SpecialNormWitness self_witness(const std::string& spec, std::size_t n) {
  return {spec, cas::identity_qmatrix(n)};
}

std::size_t parse_size(const std::string& spec, const std::string& text, std::size_t lo, std::size_t hi) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < lo || value > hi) {
    throw UsageError("registry parameter for '" + spec + "' must be an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return value;
}

RegistryEntry direct_product(std::size_t n, const std::string& name) {
  std::vector<PatternEntry> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back({i, i, i});
  RegistryEntry e{from_matrix_pattern(name, n, n, p), "direct product of " + std::to_string(n) + " copies of R",
                  std::nullopt, std::nullopt};
  e.witness = self_witness("direct-product:" + std::to_string(n), n);
  return e;
}

RegistryEntry toeplitz(std::size_t n, const std::string& name) {
  std::vector<PatternEntry> p;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r + k < n; ++r) p.push_back({k, r, r + k});
  }
  RegistryEntry e{from_matrix_pattern(name, n, n, p), "upper triangular Toeplitz matrices", std::nullopt,
                  std::nullopt};
  e.witness = SpecialNormWitness{"direct-product:1", coordinate_projection(n, {0})};
  return e;
}

RegistryEntry trivial_extension(std::size_t n, const std::string& name) {
  std::vector<PatternEntry> p;
  for (std::size_t r = 0; r < n; ++r) p.push_back({0, r, r});
  for (std::size_t i = 1; i < n; ++i) p.push_back({i, i, 0});
  RegistryEntry e{from_matrix_pattern(name, n, n, p), "R extended by a square-zero ideal", std::nullopt,
                  std::nullopt};
  e.witness = SpecialNormWitness{"direct-product:1", coordinate_projection(n, {0})};
  return e;
}

RegistryEntry matrix_algebra(std::size_t n, const std::string& name) {
  std::vector<PatternEntry> p;
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t r = 0; r < n; ++r) p.push_back({q * n + r, r, q});
  }
  RegistryEntry e{from_matrix_pattern(name, n * n, n, p), "n x n real matrices, columns stacked", std::nullopt,
                  std::nullopt};
  e.witness = self_witness("matrix:" + std::to_string(n), n * n);
  return e;
}

RegistryEntry cayley_dickson(std::size_t k, const std::string& name) {
  std::size_t n = std::size_t{1} << k;
  Algebra a = from_products(name, n, [n](std::size_t i, std::size_t j) {
    return cd_multiply(basis_vector(n, i), basis_vector(n, j));
  });
  RegistryEntry e{a, "Cayley-Dickson algebra of dimension " + std::to_string(n), std::nullopt, std::nullopt};
  std::vector<long> d(n, -1);
  d[0] = 1;
  e.star_metric = diagonal(d);
  return e;
}

RegistryEntry spin_factor(std::size_t m, const std::string& name) {
  std::size_t n = m + 1;
  Algebra a = from_products(name, n, [n](std::size_t i, std::size_t j) {
    QVector out(n);
    if (i == 0) {
      out[j] = 1;
    } else if (j == 0) {
      out[i] = 1;
    } else if (i == j) {
      out[0] = 1;
    }
    return out;
  });
  RegistryEntry e{a, "spin factor Jordan algebra R + R^" + std::to_string(m), std::nullopt, std::nullopt};
  e.star_metric = cas::identity_qmatrix(n);
  return e;
}

RegistryEntry make_entry(const std::string& spec) {
  std::string base = spec;
  std::string param;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    base = spec.substr(0, colon);
    param = spec.substr(colon + 1);
  }
  auto no_param = [&] {
    if (!param.empty()) throw UsageError("registry algebra '" + base + "' takes no parameter");
  };
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (param.empty()) throw UsageError("registry algebra '" + base + "' needs a parameter, e.g. " + base + ":3");
    return parse_size(spec, param, lo, hi);
  };

  if (base == "complex") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 0, 1, -1}}),
                    "complex numbers", std::nullopt, std::nullopt};
    e.witness = self_witness("complex", 2);
    return e;
  }
  if (base == "split-complex") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 0, 1}}),
                    "split-complex numbers", std::nullopt, std::nullopt};
    e.witness = self_witness("split-complex", 2);
    return e;
  }
  if (base == "dual") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 2, 2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}}), "dual numbers",
                    std::nullopt, std::nullopt};
    e.witness = SpecialNormWitness{"direct-product:1", coordinate_projection(2, {0})};
    return e;
  }
  if (base == "rxr") {
    no_param();
    return direct_product(2, spec);
  }
  if (base == "rxrxr") {
    no_param();
    return direct_product(3, spec);
  }
  if (base == "direct-product") return direct_product(need(1, 16), spec);
  if (base == "real-complex") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 3, 3, {{0, 0, 0}, {1, 1, 1}, {1, 2, 2}, {2, 2, 1}, {2, 1, 2, -1}}),
                    "R x C", std::nullopt, std::nullopt};
    e.witness = self_witness("real-complex", 3);
    return e;
  }
  if (base == "real-dual") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 3, 3, {{0, 0, 0}, {1, 1, 1}, {1, 2, 2}, {2, 2, 1}}), "R x D",
                    std::nullopt, std::nullopt};
    e.witness = SpecialNormWitness{"direct-product:2", coordinate_projection(3, {0, 1})};
    return e;
  }
  if (base == "toeplitz") return toeplitz(need(1, 12), spec);
  if (base == "trivial-extension") return trivial_extension(need(2, 12), spec);
  if (base == "twisted-split-complex") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 3, 3,
                                        {{0, 0, 0},
                                         {0, 1, 1},
                                         {0, 2, 2},
                                         {1, 0, 2},
                                         {1, 1, 1},
                                         {1, 2, 0},
                                         {2, 0, 1},
                                         {2, 2, 1, -1}}),
                    "split-complex numbers extended by a one-dimensional ideal", std::nullopt, std::nullopt};
    e.witness = SpecialNormWitness{"split-complex", coordinate_projection(3, {0, 1})};
    return e;
  }
  if (base == "matrix") return matrix_algebra(need(1, 4), spec);
  if (base == "quaternion") {
    no_param();
    RegistryEntry e = cayley_dickson(2, spec);
    e.description = "quaternions";
    e.witness = self_witness("quaternion", 4);
    return e;
  }
  if (base == "cayley-dickson") return cayley_dickson(need(0, 4), spec);
  if (base == "spin") return spin_factor(need(1, 10), spec);
  if (base == "upper-triangular-2x2") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 3, 2, {{0, 0, 0}, {1, 1, 1}, {2, 0, 1}}),
                    "2 x 2 upper triangular matrices [[x, z], [0, y]]", std::nullopt, std::nullopt};
    e.witness = SpecialNormWitness{"direct-product:2", coordinate_projection(3, {0, 1})};
    return e;
  }
  if (base == "triangular-4") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 4, 3, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {2, 1, 2}, {3, 0, 2}}),
                    "3 x 3 matrices [[x, y, w], [0, x, z], [0, 0, x]]", std::nullopt, std::nullopt};
    e.witness = SpecialNormWitness{"direct-product:1", coordinate_projection(4, {0})};
    return e;
  }
  if (base == "triangular-5") {
    no_param();
    RegistryEntry e{from_matrix_pattern(spec, 5, 3, {{0, 0, 0}, {0, 1, 1}, {1, 2, 2}, {2, 0, 1}, {3, 1, 2}, {4, 0, 2}}),
                    "3 x 3 matrices [[x, z, w], [0, x, v], [0, 0, y]]", std::nullopt, std::nullopt};
    e.witness = SpecialNormWitness{"direct-product:2", coordinate_projection(5, {0, 1})};
    return e;
  }
  if (base == "nilpotent-3") {
    no_param();
    std::vector<PatternEntry> p;
    for (std::size_t k = 0; k < 3; ++k) {
      for (std::size_t r = 0; r + k + 1 < 4; ++r) p.push_back({k, r, r + k + 1});
    }
    return RegistryEntry{from_matrix_pattern(spec, 3, 4, p), "x N + y N^2 + z N^3 with N the 4 x 4 shift",
                         std::nullopt, std::nullopt};
  }
  throw UsageError("unknown registry algebra '" + spec + "'");
}

}  // namespace

RegistryEntry registry_entry(const std::string& spec) { return make_entry(spec); }

Algebra registry(const std::string& spec) { return make_entry(spec).algebra; }

std::vector<std::string> registry_catalog() {
  return {"complex",           "split-complex",      "dual",
          "direct-product:2",  "direct-product:3",   "real-complex",
          "real-dual",         "toeplitz:3",         "trivial-extension:3",
          "twisted-split-complex", "matrix:2",       "matrix:3",
          "quaternion",        "cayley-dickson:3",   "spin:2",
          "spin:3",            "upper-triangular-2x2", "triangular-4",
          "triangular-5",      "nilpotent-3"};
}

std::vector<std::string> low_dimensional_registry() {
  return {"complex",          "split-complex", "dual",       "direct-product:1",    "direct-product:2",
          "direct-product:3", "real-complex",  "real-dual",  "toeplitz:3",          "trivial-extension:3",
          "twisted-split-complex", "upper-triangular-2x2"};
}

bool verify_witness(const Algebra& alg, const SpecialNormWitness& w) {
  Algebra q = registry(w.quotient);
  std::size_t n = alg.dim();
  std::size_t m = q.dim();
  if (w.omega.rows() != m || w.omega.cols() != n) return false;
  if (cas::rank_exact(w.omega) != m) return false;
  if (!alg.unital() || !q.unital()) return false;
  if (cas::mat_vec(w.omega, alg.unit()) != q.unit()) return false;
  std::vector<QVector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(cas::mat_vec(w.omega, basis_vector(n, i)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      QVector lhs = cas::mat_vec(w.omega, alg.multiply(basis_vector(n, i), basis_vector(n, j)));
      if (lhs != q.multiply(images[i], images[j])) return false;
    }
  }
  QMatrix rep = vec_left_rep(q);
  QMatrix t_rep = transpose_permutation(m) * rep;
  QMatrix both = cas::zero_qmatrix(m * m, 2 * m);
  for (std::size_t r = 0; r < m * m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      both(r, c) = rep(r, c);
      both(r, m + c) = t_rep(r, c);
    }
  }
  return cas::rank_exact(both) == cas::rank_exact(rep);
}

QMatrix witness_metric(const Algebra& alg, const SpecialNormWitness& w) {
  Algebra q = registry(w.quotient);
  std::size_t m = q.dim();
  QMatrix rep = vec_left_rep(q);
  QMatrix gram = rep.transpose() * transpose_permutation(m) * rep;
  BigRational scale_q = q.unit_norm_sq() / BigRational(static_cast<long>(m));
  BigRational scale = alg.unit_norm_sq() / q.unit_norm_sq();
  QMatrix out = w.omega.transpose() * gram * w.omega;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= scale * scale_q;
  }
  return out;
}

QMatrix exchange_matrix(std::size_t n) {
  QMatrix m = cas::zero_qmatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

}  // namespace antirotor::alg
