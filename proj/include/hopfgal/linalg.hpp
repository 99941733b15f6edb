#pragma once

#include <optional>
#include <vector>

#include "hopfgal/kernels.hpp"
#include "hopfgal/linear_map.hpp"

namespace hopfgal {

struct Echelon {
  LinearMap reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Canonical pivoting: first nonzero column, topmost candidate row, pivot
// scaled to 1. Field domains only (UnsupportedDomain for ℤ).
Echelon rref(const LinearMap& m);

std::size_t rank(const LinearMap& m);

// Basis of {v : m v = 0}, returned in reduced row echelon form so the result
// depends only on the subspace.
std::vector<Vector> kernel_basis(const LinearMap& m);

// Reduced echelon basis of the column space.
std::vector<Vector> image_basis(const LinearMap& m);

// Reduced echelon basis of span(vectors); `dim` is the ambient dimension.
std::vector<Vector> span_basis(Domain d, std::size_t dim, const std::vector<Vector>& vectors);

// Throws SingularMatrix (carrying the rank) if m is not invertible.
LinearMap invert(const LinearMap& m);

// Some x with m x = b, free variables set to 0; nullopt if inconsistent.
std::optional<Vector> solve(const LinearMap& m, std::span<const Scalar> b);

bool in_span(Domain d, std::size_t dim, const std::vector<Vector>& basis,
             std::span<const Scalar> v);
bool is_subspace(Domain d, std::size_t dim, const std::vector<Vector>& sub,
                 const std::vector<Vector>& super);
std::size_t intersection_dim(Domain d, std::size_t dim, const std::vector<Vector>& a,
                             const std::vector<Vector>& b);

// Matrix of a ⊗ b with lexicographic flattening (left factor slowest).
LinearMap kronecker(const LinearMap& a, const LinearMap& b);
LinearMap kronecker(std::initializer_list<LinearMap> factors);

LinearMap hstack(const std::vector<LinearMap>& blocks);
LinearMap vstack(const std::vector<LinearMap>& blocks);
LinearMap direct_sum(const LinearMap& a, const LinearMap& b);

// Matrix of the swap V_a ⊗ V_b -> V_b ⊗ V_a.
LinearMap swap_map(Domain d, std::size_t a, std::size_t b);

// Fraction-free (Bareiss) determinant; exact over ℤ and over fields.
Scalar determinant(const LinearMap& m);

bool is_bijective(const LinearMap& m);

namespace detail {
// Elimination over 𝔽p on uint32 rows through the kernel variant for `isa`.
Echelon rref_prime_field(const LinearMap& m, kernels::Isa isa);
Echelon rref_generic(const LinearMap& m);
}  // namespace detail

}  // namespace hopfgal
