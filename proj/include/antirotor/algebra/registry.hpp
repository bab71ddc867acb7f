#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antirotor/algebra/algebra.hpp"

namespace antirotor::alg {

// Epimorphism Omega from an algebra onto a quotient whose left regular
// representation is closed under transposition.  The special unital norm of
// the algebra is then det(L_{Omega s})^{1/m} with m the quotient dimension.
struct SpecialNormWitness {
  std::string quotient;  // registry name of the quotient algebra
  QMatrix omega;         // m x n
};

struct RegistryEntry {
  Algebra algebra;
  std::string description;
  std::optional<SpecialNormWitness> witness;
  // Normalized metric for involutive algebras handled through the
  // left-solve inverse (spin factors and Cayley-Dickson algebras).
  std::optional<QMatrix> star_metric;
};

// Accepts "name" or "name:<n>" for the parametrized families.  Unknown names
// and out-of-range parameters raise UsageError.
RegistryEntry registry_entry(const std::string& spec);
Algebra registry(const std::string& spec);

// Every built-in name with a representative parameter, in catalog order.
std::vector<std::string> registry_catalog();
// Unital registry algebras of dimension at most three.
std::vector<std::string> low_dimensional_registry();

// Checks that Omega is a surjective homomorphism onto the quotient, maps the
// unit to the unit and that the quotient's representation is transpose-closed.
bool verify_witness(const Algebra& alg, const SpecialNormWitness& w);

// The normalized metric induced by a witness:
//   (|1_A|^2 / |1_Q|^2) Omega^T L_Q Omega,  L_Q = (|1_Q|^2 / m) I^T T I,
// where I is the vectorized left regular representation of the quotient and
// T the transpose permutation.
QMatrix witness_metric(const Algebra& alg, const SpecialNormWitness& w);

// Exchange matrix (ones on the antidiagonal).
QMatrix exchange_matrix(std::size_t n);

}  // namespace antirotor::alg
