#include "antirotor/skewer/param_sym_matrix.hpp"

#include <sstream>

#include "antirotor/errors.hpp"

namespace antirotor::skewer {

std::size_t upper_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}

QMatrix symmetric_from_upper(std::size_t n, const QVector& upper) {
  QMatrix m = cas::zero_qmatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = upper[upper_index(n, i, j)];
      m(j, i) = m(i, j);
    }
  }
  return m;
}

namespace {

QVector upper_of(const QMatrix& m) {
  std::size_t n = m.rows();
  QVector v(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) v[upper_index(n, i, j)] = m(i, j);
  }
  return v;
}

}  // namespace

ParamSymMatrix::ParamSymMatrix(std::size_t n, std::vector<QMatrix> generators)
    : n_(n), generators_(std::move(generators)) {
  cas::EchelonBasis basis(n * (n + 1) / 2);
  for (const auto& g : generators_) {
    if (g.rows() != n || g.cols() != n) throw UsageError("generator has wrong shape");
    if (!g.is_symmetric()) throw UsageError("generator is not symmetric");
    if (!basis.add_row(upper_of(g))) throw UsageError("generators are linearly dependent");
  }
}

LinForm ParamSymMatrix::entry(std::size_t i, std::size_t j) const {
  LinForm f(generators_.size());
  for (std::size_t q = 0; q < generators_.size(); ++q) f.coeffs[q] = generators_[q](i, j);
  return f;
}

QMatrix ParamSymMatrix::realize(const QVector& alpha) const {
  if (alpha.size() != generators_.size()) throw UsageError("parameter vector has wrong length");
  QMatrix m = cas::zero_qmatrix(n_, n_);
  for (std::size_t q = 0; q < generators_.size(); ++q) {
    if (alpha[q] == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) m(i, j) += alpha[q] * generators_[q](i, j);
    }
  }
  return m;
}

PMatrix ParamSymMatrix::as_poly_matrix() const {
  PMatrix m = cas::zero_pmatrix(n_, n_, generators_.size());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = entry(i, j).to_poly();
  }
  return m;
}

ParamSymMatrix ParamSymMatrix::congruence(const QMatrix& k) const {
  std::vector<QMatrix> out;
  QMatrix kt = k.transpose();
  for (const auto& g : generators_) out.push_back(kt * g * k);
  return ParamSymMatrix(k.cols(), std::move(out));
}

std::string ParamSymMatrix::to_string() const {
  auto names = cas::greek_parameter_names(generators_.size());
  std::vector<std::vector<std::string>> cells(n_, std::vector<std::string>(n_));
  std::size_t width = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      cells[i][j] = entry(i, j).to_string(names);
      // Greek letters are two bytes in UTF-8; pad by display width.
      std::size_t display = 0;
      for (unsigned char ch : cells[i][j]) display += (ch & 0xC0) != 0x80;
      width = std::max(width, display);
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    out << "[";
    for (std::size_t j = 0; j < n_; ++j) {
      std::size_t display = 0;
      for (unsigned char ch : cells[i][j]) display += (ch & 0xC0) != 0x80;
      out << (j ? "  " : " ") << std::string(width - display, ' ') << cells[i][j];
    }
    out << " ]\n";
  }
  return out.str();
}

}  // namespace antirotor::skewer
