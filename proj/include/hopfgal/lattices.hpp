#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/actions.hpp"

// ℤ-lattices in ℚ-vector spaces, associated orders and tameness over ℤ.
namespace hopfgal {

enum class LatticeKind { Order, ModuleLattice };

// Full ℤ-span of rational vectors in a canonical basis: with D a common
// denominator, the rows of D·B are put in lower Hermite form (each row ends in
// a positive pivot, pivots move right, entries under a pivot are reduced
// modulo it), then divided by D.
class Lattice {
 public:
  Lattice() = default;
  // Throws FormatError when the rows are ℚ-linearly dependent or not over ℚ.
  static Lattice from_basis(const std::vector<Vector>& rows, std::size_t ambient,
                            LatticeKind kind = LatticeKind::ModuleLattice);
  // ℤ-span of arbitrary generators.
  static Lattice span(const std::vector<Vector>& generators, std::size_t ambient,
                      LatticeKind kind = LatticeKind::ModuleLattice);
  static Lattice standard(std::size_t ambient, LatticeKind kind = LatticeKind::ModuleLattice);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  LatticeKind kind() const { return kind_; }
  const std::vector<Vector>& basis() const { return basis_; }
  LinearMap basis_matrix() const;  // rank × ambient, over ℚ

  // Coordinates of v in the basis when v lies in the ℚ-span.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Lattice& o) const;
  bool full_rank() const { return rank() == ambient_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  LatticeKind kind_ = LatticeKind::ModuleLattice;
};

// L ⊗ L' inside the tensor of the ambient spaces.
Lattice tensor(const Lattice& a, const Lattice& b);

// A number-ring analogue: a ℚ-form (H acting on the algebra S_ℚ) with a full
// rank ℤ-lattice in S_ℚ.
struct LatticeModule {
  ModuleAlgebraData extension;  // over ℚ
  Lattice lattice;

  // Throws FormatError unless the lattice is full rank in S_ℚ, and
  // UnsupportedDomain unless the extension is over ℚ.
  static LatticeModule make(ModuleAlgebraData d, Lattice l);
  std::size_t rank() const { return lattice.rank(); }
};

struct OrderData {
  HopfAlgebraData hopf;
  Lattice lattice;
  bool contains_one = false;
  bool multiplicatively_closed = false;
  bool comult_stable = false;   // Δ(𝒜) ⊆ 𝒜 ⊗ 𝒜
  bool counit_integral = false;  // ε(𝒜) ⊆ ℤ
  bool antipode_stable = false;

  // Fills the flags from membership tests.
  static OrderData make(HopfAlgebraData h, Lattice l);
  bool is_hopf_order() const {
    return contains_one && multiplicatively_closed && comult_stable && counit_integral && antipode_stable;
  }
};

// Checks "contains 1", "multiplicatively closed" (witness (i, j)),
// "comultiplication" (i), "counit" (i), "antipode" (i) on the canonical basis.
VerificationReport is_hopf_order(const OrderData& o);

// {h ∈ H : h·S ⊆ S}. Throws PreconditionError when H does not act
// faithfully (the set is then not a lattice).
OrderData associated_order(const LatticeModule& s);

// Integer matrix of h acting on S in lattice coordinates, or empty when h
// does not preserve S.
std::optional<LinearMap> lattice_action(const LatticeModule& s, std::span<const Scalar> h);

// J = (ℚ-integral line) ∩ 𝒜 as a canonical rank-one lattice. Throws
// PreconditionError for a non-Hopf order.
Lattice lattice_integrals(const OrderData& o);

struct IntegralTameReport {
  std::vector<Vector> fixed;          // ℤ-basis of S^𝒜 in ambient coordinates
  std::vector<Vector> integral_image;  // ℤ-basis of J·S
  Vector integral;                     // generator of J
  std::vector<mpz_class> factors;      // invariant factors ≠ 1 of S^𝒜 / J·S (0 = free summand)
  std::vector<mpz_class> obstructed_primes;  // primes dividing a factor; empty list with a 0 factor means all
  bool free_obstruction = false;       // some factor is 0
  bool fixed_is_base = false;          // S^𝒜 = ℤ·1
  bool faithful = false;
  bool rank_equal = false;
  bool hypotheses = false;
  bool homology_zero = false;
  bool tame = false;
  bool field_tame = false;             // classify_extension over ℚ
};

// Throws PreconditionError unless o is a Hopf order acting integrally on S.
IntegralTameReport tame_check_integral(const OrderData& o, const LatticeModule& s);

struct FreeGenerator {
  Vector generator;
  LinearMap coordinates{Domain::integers(), 0, 0};  // rows: b_k·z in the S basis
  LinearMap hnf{Domain::integers(), 0, 0};          // the identity when certified
};

// First candidate z with 𝒜·z = S. Throws PreconditionError unless tame.
std::optional<FreeGenerator> free_rank_one_generator(const OrderData& o, const LatticeModule& s,
                                                     const std::vector<Vector>& candidates);

// Number-ring instances with H = ℚC2 acting by conjugation.
LatticeModule gaussian_integers();    // ℤ[i] on {1, i}
LatticeModule eisenstein_integers();  // ℤ[ζ3] on {1, ζ3}
// ℤC2 inside ℚC2.
OrderData integral_group_ring(const HopfAlgebraData& h);

}  // namespace hopfgal
