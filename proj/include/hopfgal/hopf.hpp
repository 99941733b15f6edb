#pragma once

#include <string>
#include <vector>

#include "hopfgal/algebra.hpp"

namespace hopfgal {

// Hopf algebra by structure constants on a fixed basis. All tensor
// flattenings are lexicographic with the left factor slowest.
//
// The antipode is stored, not derived; verify_hopf confirms it. It is named
// `antipode` throughout to keep it apart from module algebras.
struct HopfAlgebraData {
  AlgebraData algebra;
  LinearMap comult{Domain::rationals(), 0, 0};   // H -> H ⊗ H
  LinearMap counit{Domain::rationals(), 0, 0};   // H -> K (1 × dim)
  LinearMap antipode{Domain::rationals(), 0, 0}; // H -> H

  // Triples: comult (i, j, k, c) meaning Δ(e_i) ∋ c e_j ⊗ e_k; antipode
  // (i, j, -, c) meaning α(e_i) ∋ c e_j. Shapes are checked here, axioms by
  // verify_hopf.
  static HopfAlgebraData from_triples(AlgebraData algebra, const std::vector<Triple>& comult,
                                      Vector counit, const std::vector<Triple>& antipode);

  std::size_t dim() const { return algebra.dim; }
  const Domain& domain() const { return algebra.domain; }
  const std::vector<std::string>& labels() const { return algebra.labels; }
  Scalar counit_of(std::span<const Scalar> h) const;
  Vector coproduct(std::span<const Scalar> h) const { return comult.apply(h); }
  // (Δ ⊗ id)Δ as a map H -> H⊗H⊗H
  LinearMap double_comult() const;
  bool is_cocommutative() const;
  bool structure_equal(const HopfAlgebraData& o) const;
};

// Axioms in order: associativity, unit, coassociativity, counit, bialgebra,
// antipode; each with a witnessing basis index tuple on failure.
VerificationReport verify_hopf(const HopfAlgebraData& h);

// Throws PreconditionError naming the first failed axiom.
void require_hopf(const HopfAlgebraData& h);

// Group algebra K[G] from a multiplication table of element indices with the
// identity at index 0. Throws FormatError with a witness when not a group.
HopfAlgebraData group_algebra(const std::vector<std::vector<std::size_t>>& table, Domain d,
                              std::vector<std::string> labels = {});

// Sweedler's 4-dimensional algebra on {1, g, x, gx}; char ≠ 2.
HopfAlgebraData sweedler(Domain d);

// Taft algebra of dimension n², basis g^i x^j at index j*n + i; q must be a
// primitive n-th root of unity.
HopfAlgebraData taft(std::size_t n, const Scalar& q);

// Linear dual: product = Δᵀ, coproduct = μᵀ, unit = ε, counit = eval at 1,
// antipode = αᵀ.
HopfAlgebraData dual(const HopfAlgebraData& h);

// H^cop: coproduct flipped, antipode inverted (requires bijective antipode).
HopfAlgebraData co_opposite(const HopfAlgebraData& h);

enum class Side { Left, Right };

struct IntegralSpace {
  Side side = Side::Left;
  std::vector<Vector> basis;
};

// Kernel of λ ↦ (hλ - ε(h)λ)_h. Over a field the space is a line; anything
// else throws InconsistencyError.
IntegralSpace left_integrals(const HopfAlgebraData& h);
IntegralSpace right_integrals(const HopfAlgebraData& h);
Vector left_integral(const HopfAlgebraData& h);

// ε(Λ) ≠ 0 for a left integral Λ.
bool is_semisimple(const HopfAlgebraData& h);
bool antipode_bijective(const HopfAlgebraData& h);
// ker ε is a nilpotent ideal.
bool is_local(const HopfAlgebraData& h);

}  // namespace hopfgal
