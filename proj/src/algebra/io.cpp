#include "antirotor/algebra/io.hpp"

#include <fstream>
#include <sstream>

#include "antirotor/algebra/registry.hpp"
#include "antirotor/errors.hpp"

namespace antirotor::alg {

using nlohmann::json;

json rational_to_json(const BigRational& q) { return cas::to_string(q); }

BigRational rational_from_json(const json& j) {
  if (j.is_string()) return cas::parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(j.get<long>());
  if (j.is_number()) {
    // Floats go through their shortest decimal text so 0.1 means 1/10.
    return cas::parse_rational(j.dump());
  }
  throw UsageError("expected a rational number, got " + j.dump());
}

json algebra_to_json(const Algebra& alg) {
  std::size_t n = alg.dim();
  json structure = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json cell = json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(rational_to_json(alg.c(i, j, k)));
      row.push_back(std::move(cell));
    }
    structure.push_back(std::move(row));
  }
  json out = {{"name", alg.name()}, {"dim", n}, {"structure", std::move(structure)}};
  if (alg.unital()) {
    json unit = json::array();
    for (const auto& x : alg.unit()) unit.push_back(rational_to_json(x));
    out["unit"] = std::move(unit);
  }
  return out;
}

Algebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw UsageError("algebra file must hold a JSON object");
  for (const char* key : {"dim", "structure"}) {
    if (!j.contains(key)) throw UsageError(std::string("algebra file lacks \"") + key + "\"");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1) throw UsageError("\"dim\" must be a positive integer");
  std::size_t n = j["dim"].get<std::size_t>();
  const json& s = j["structure"];
  std::vector<BigRational> structure;
  structure.reserve(n * n * n);
  if (!s.is_array() || s.size() != n) throw UsageError("\"structure\" must be an n x n x n array");
  for (const auto& row : s) {
    if (!row.is_array() || row.size() != n) throw UsageError("\"structure\" must be an n x n x n array");
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != n) throw UsageError("\"structure\" must be an n x n x n array");
      for (const auto& x : cell) structure.push_back(rational_from_json(x));
    }
  }
  std::optional<QVector> unit;
  if (j.contains("unit") && !j["unit"].is_null()) {
    QVector u;
    for (const auto& x : j["unit"]) u.push_back(rational_from_json(x));
    unit = std::move(u);
  }
  std::string name = j.value("name", std::string("unnamed"));
  return Algebra::create(name, n, std::move(structure), std::move(unit));
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

Algebra load_algebra(const std::string& source) {
  const std::string prefix = "registry:";
  if (source.rfind(prefix, 0) == 0) return registry(source.substr(prefix.size()));
  return algebra_from_json(read_json_file(source));
}

void save_algebra(const Algebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << algebra_to_json(alg).dump(2) << '\n';
}

json qmatrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

QMatrix qmatrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw UsageError("matrix must be a nonempty array of rows");
  std::size_t rows = j.size();
  std::size_t cols = j[0].size();
  QMatrix m = cas::zero_qmatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw UsageError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

QMatrix load_qmatrix(const std::string& source) {
  if (!source.empty() && source.front() == '[') {
    try {
      return qmatrix_from_json(json::parse(source));
    } catch (const json::parse_error& e) {
      throw UsageError("matrix text is not valid JSON: " + std::string(e.what()));
    }
  }
  return qmatrix_from_json(read_json_file(source));
}

}  // namespace antirotor::alg
