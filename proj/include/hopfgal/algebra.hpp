#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/linalg.hpp"

namespace hopfgal {

// Sparse structure-constant entry (i, j, k, c): meaning depends on the tensor,
// e.g. e_i · e_j = Σ c e_k for a multiplication.
struct Triple {
  std::size_t i, j, k;
  Scalar c;
};

// One pass/fail line of a verification report. On failure `witness` holds
// basis indices locating a violated instance.
struct AxiomCheck {
  AxiomCheck() = default;
  explicit AxiomCheck(std::string n) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
};

struct VerificationReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* first_failure() const;
  const AxiomCheck& check(const std::string& name) const;
};

// Finite-dimensional unital algebra by structure constants. The product is
// the linear map mult: A ⊗ A -> A, column i*dim + j holding e_i e_j.
struct AlgebraData {
  Domain domain = Domain::rationals();
  std::size_t dim = 0;
  std::vector<std::string> labels;
  LinearMap mult{Domain::rationals(), 0, 0};
  Vector unit;

  // Throws FormatError naming the first out-of-range triple.
  static AlgebraData from_triples(Domain d, std::size_t dim, std::vector<std::string> labels,
                                  const std::vector<Triple>& mult, Vector unit);

  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vector basis_product(std::size_t i, std::size_t j) const { return mult.column(i * dim + j); }
  // x ↦ a x and x ↦ x a
  LinearMap left_mult(std::span<const Scalar> a) const;
  LinearMap right_mult(std::span<const Scalar> a) const;
  LinearMap unit_map() const;  // K -> A
  Vector basis(std::size_t i) const { return unit_vector(domain, dim, i); }
  bool is_commutative() const;
};

VerificationReport verify_algebra(const AlgebraData& a);

// A ⊗ B with componentwise product, basis (a, b) at index a*dim(B) + b.
AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);

Vector tensor(std::span<const Scalar> a, std::span<const Scalar> b);

// (f ⊗ g) v for v in dom(f) ⊗ dom(g), without forming the Kronecker product.
Vector apply_tensor(const LinearMap& f, const LinearMap& g, std::span<const Scalar> v);

// Product of u, v in A ⊗ B, without forming the structure constants of A ⊗ B.
Vector tensor_multiply(const AlgebraData& a, const AlgebraData& b, std::span<const Scalar> u,
                       std::span<const Scalar> v);

// First column where two equally shaped maps differ, if any.
std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b);

// Mixed-radix decode of a flattened tensor index, left factor slowest.
std::vector<std::size_t> decode_index(std::size_t idx, const std::vector<std::size_t>& dims);

std::string format_vector(std::span<const Scalar> v, const std::vector<std::string>& labels);

}  // namespace hopfgal
