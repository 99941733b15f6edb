#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/hopf.hpp"

namespace hopfgal {

// Left action of H on a finite-dimensional space: action[h] is the matrix of
// e_h acting, for each basis element of H.
using Action = std::vector<LinearMap>;

// Matrix of Σ c_h e_h acting.
LinearMap act_by(const HopfAlgebraData& h, const Action& action, std::span<const Scalar> elt);

// H -> End(V) with End(V) flattened row-major (E_ab at a*dim + b).
LinearMap action_map(const HopfAlgebraData& h, const Action& action);

// Module law (hk)·v = h·(k·v) with witness (h, k, v), and 1·v = v.
VerificationReport verify_module(const HopfAlgebraData& h, const Action& action);

// Kernel of the stacked (A_h - ε(h) id).
std::vector<Vector> module_invariants(const HopfAlgebraData& h, const Action& action);

// I·V for I the left integrals of H.
std::vector<Vector> integral_image(const HopfAlgebraData& h, const Action& action);

struct HomologyReport {
  std::size_t dim_invariants = 0;   // V^H
  std::size_t dim_integral_image = 0;  // I·V
  std::size_t dim = 0;              // V^H / I·V
};

// Hopfological homology V^H / I·V. Throws InconsistencyError if I·V ⊄ V^H.
HomologyReport hopfological_homology_module(const HopfAlgebraData& h, const Action& action);

// An algebra S with a left H-action, action triples (h, s, t, c) meaning
// e_h·e_s ∋ c e_t.
struct ModuleAlgebraData {
  HopfAlgebraData hopf;
  AlgebraData algebra;
  Action action;

  static ModuleAlgebraData from_triples(HopfAlgebraData hopf, AlgebraData algebra,
                                        const std::vector<Triple>& action);
  static ModuleAlgebraData from_matrices(HopfAlgebraData hopf, AlgebraData algebra, Action action);

  const Domain& domain() const { return algebra.domain; }
  std::size_t dim_s() const { return algebra.dim; }
  std::size_t dim_h() const { return hopf.dim(); }
  Vector act(std::span<const Scalar> h, std::span<const Scalar> s) const;
};

// Checks "module", "module unit", "module-algebra" (witness (h, s, t)) and
// "module-algebra unit" (witness h).
VerificationReport verify_module_algebra(const ModuleAlgebraData& d);

std::vector<Vector> invariants(const ModuleAlgebraData& d);

// S#H on basis s_i # h_j at index i*dim(H) + j. Throws InconsistencyError if
// the result is not associative.
AlgebraData smash(const ModuleAlgebraData& d);

// j: S#H -> End(S), j(s#h)(t) = s(h·t).
LinearMap galois_map_j(const ModuleAlgebraData& d);

// σ: S -> S⊗H*, σ(t) = Σ_i (e_i·t) ⊗ e^i.
LinearMap induced_coaction(const ModuleAlgebraData& d);

// γ: S⊗S -> S⊗H*, s⊗t ↦ (s⊗1)σ(t).
LinearMap galois_map_gamma(const ModuleAlgebraData& d);

// γ(xx'⊗yy') = γ(x⊗y)γ(x'⊗y') on all basis quadruples; codomain S⊗H* with
// componentwise product. Throws PreconditionError unless γ is bijective.
bool gamma_is_algebra_map(const ModuleAlgebraData& d);

bool is_faithful(const HopfAlgebraData& h, const Action& action);
inline bool is_faithful(const ModuleAlgebraData& d) { return is_faithful(d.hopf, d.action); }

enum class Classification { NotAnExtension, HExtension, Tame, HopfGalois, TameHopfGalois };

std::string to_string(Classification c);

struct ExtensionReport {
  std::vector<Vector> invariants;
  bool invariants_trivial = false;   // S^H = K·1
  bool faithful = false;
  bool rank_equal = false;
  std::vector<Vector> integral_image;
  bool integral_surjective = false;  // I·S = K·1
  bool j_bijective = false;
  bool gamma_bijective = false;
  std::size_t homology_dim = 0;
  bool commutative = false;          // S commutative
  bool cocommutative = false;        // H cocommutative
  bool local = false;
  bool semisimple = false;
  // H local cocommutative with equal ranks: tame ⇔ Hopf-Galois is a theorem.
  bool equivalence_applies = false;
  // "original" (j) for commutative S and cocommutative H, else
  // "principal homogeneous space" (γ).
  std::string hopf_galois_form;
  bool tame = false;
  bool hopf_galois = false;
  Classification classification = Classification::NotAnExtension;
};

ExtensionReport classify_extension(const ModuleAlgebraData& d);

struct TotalIntegral {
  bool present = false;
  std::optional<LinearMap> g;   // H* -> S, dim S × dim H
  Vector z;                     // Λ·z = 1
  std::string obstruction;
  bool unital = false;          // g(1_{H*}) = 1_S
  bool h_linear = false;
};

// Needs S^H = K·1 (PreconditionError otherwise).
TotalIntegral total_integral_map(const ModuleAlgebraData& d);

}  // namespace hopfgal
