#pragma once

#include <string>

#include <json.hpp>

#include "antirotor/algebra/algebra.hpp"

namespace antirotor::alg {

// {"name": ..., "dim": n, "structure": n x n x n array, "unit": [...]}.
// Rationals are written as strings; numbers and "p/q" strings are accepted.
nlohmann::json algebra_to_json(const Algebra& alg);
Algebra algebra_from_json(const nlohmann::json& j);

// "registry:<name>[:<n>]" or a path to a JSON algebra file.
Algebra load_algebra(const std::string& source);
void save_algebra(const Algebra& alg, const std::string& path);

nlohmann::json rational_to_json(const BigRational& q);
BigRational rational_from_json(const nlohmann::json& j);
nlohmann::json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const nlohmann::json& j);
// Reads a matrix from inline JSON text such as "[[1,2],[3,4]]" or from a JSON file.
QMatrix load_qmatrix(const std::string& source);

}  // namespace antirotor::alg
