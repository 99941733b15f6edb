#pragma once

#include <gmpxx.h>

#include <vector>

#include "hopfgal/linear_map.hpp"

// Integer normal forms. All inputs are LinearMaps over ℤ.
namespace hopfgal {

struct HermiteForm {
  LinearMap h;  // upper echelon, positive pivots, entries above a pivot in [0, pivot)
  LinearMap u;  // unimodular, h = u * m
};

// Row-style HNF: the row lattice of m is preserved; zero rows sink to the
// bottom.
HermiteForm hermite_normal_form(const LinearMap& m);

// Invariant factors d_1 | d_2 | ... of m, min(rows, cols) entries with zeros
// trailing; coker m ≅ ⊕ ℤ/d_i ⊕ ℤ^(rows - #nonzero).
std::vector<mpz_class> smith_normal_form(const LinearMap& m);

// Invariant factors different from 1 (zeros kept: each is a free ℤ summand).
std::vector<mpz_class> nontrivial_factors(const std::vector<mpz_class>& factors);

// ℤ-basis (as rows, in HNF) of {x ∈ ℤ^cols : m x = 0}.
LinearMap integer_kernel(const LinearMap& m);

// Nonzero rows of the HNF of m, i.e. the canonical basis of its row lattice.
LinearMap row_lattice_basis(const LinearMap& m);

// Pivot column index of every nonzero row of an echelon matrix.
std::vector<std::size_t> echelon_pivots(const LinearMap& h);

}  // namespace hopfgal
