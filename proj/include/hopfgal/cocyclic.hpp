#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfgal/actions.hpp"

namespace hopfgal {

// Bounds on constructed spaces. The dimension bound can be overridden with
// the HOPFGAL_MAX_DIM environment variable.
struct Limits {
  std::size_t max_level = 4;
  std::size_t max_dim = 5000;

  static Limits from_env();
  // Throws ResourceError naming `what` when dim > max_dim.
  void check_dim(std::size_t dim, const std::string& what) const;
  void check_level(std::size_t n) const;
};

// Right comodule ρ: M -> M ⊗ C, row m*dim(C) + c.
struct ComoduleData {
  HopfAlgebraData hopf;
  std::size_t dim = 0;
  LinearMap coaction{Domain::rationals(), 0, 0};

  // Triples (m, m', h, c) meaning ρ(e_m) ∋ c e_{m'} ⊗ e_h. Both constructors
  // reject data failing coassociativity or counit with a FormatError.
  static ComoduleData from_triples(HopfAlgebraData c, std::size_t dim, const std::vector<Triple>& rho);
  static ComoduleData from_map(HopfAlgebraData c, LinearMap rho);
  static ComoduleData trivial(HopfAlgebraData c, std::size_t dim);  // m ↦ m ⊗ 1
  static ComoduleData regular(HopfAlgebraData c);                   // Δ

  const Domain& domain() const { return hopf.domain(); }
};

VerificationReport verify_comodule(const HopfAlgebraData& c, const LinearMap& rho);

// ρ(m) = Σ_i (e_i·m) ⊗ e^i over H*.
ComoduleData module_to_comodule(const HopfAlgebraData& h, const Action& action);
// Inverse dictionary: e^j ∈ C* acts by m ↦ (id ⊗ e^j)ρ(m).
Action comodule_to_module(const ComoduleData& c);

// Kernel of ρ - (id ⊗ 1).
std::vector<Vector> coinvariants(const ComoduleData& c);

// M^{coC} / I·M with I the integrals of C* acting through comodule_to_module.
HomologyReport hopfological_homology_comodule(const ComoduleData& c);

// S with a right H-coaction that is an algebra map.
struct ComoduleAlgebraData {
  AlgebraData algebra;
  ComoduleData coaction;
  // True when the coaction came from a module algebra through the dictionary.
  bool converted = false;

  const HopfAlgebraData& hopf() const { return coaction.hopf; }
};

// S over H* from a module algebra over H.
ComoduleAlgebraData comodule_algebra(const ModuleAlgebraData& d);

// Checks "comodule", "multiplicative" (witness (s, t)) and "unital".
VerificationReport verify_comodule_algebra(const ComoduleAlgebraData& s);

// A left H-module with a left H-coaction m ↦ m₋₁ ⊗ m₀. The coaction is
// stored as a right comodule over H^cop, m ↦ m₀ ⊗ m₋₁.
struct AydModuleData {
  HopfAlgebraData hopf;
  Action action;
  ComoduleData coaction;

  // `left` is M -> H ⊗ M. Needs a bijective antipode.
  static AydModuleData from_left_coaction(HopfAlgebraData h, Action action, const LinearMap& left);

  std::size_t dim() const { return coaction.dim; }
  const Domain& domain() const { return hopf.domain(); }
  LinearMap left_coaction() const;  // M -> H ⊗ M
};

// ρ(h·m) = h₁ m₋₁ α(h₃) ⊗ h₂·m₀ on basis pairs; witness (h, m).
AxiomCheck ayd_check(const AydModuleData& m);
// m₋₁·m₀ = m on basis elements; witness m.
AxiomCheck stability_check(const AydModuleData& m);

// Diagonal coaction of S^{⊗slots}: [a] ↦ [a⁰] ⊗ a_0¹⋯a_{k-1}¹.
LinearMap tensor_power_coaction(const ComoduleAlgebraData& s, std::size_t slots);

// S^{⊗slots} □_H M = Ker(ρ ⊗ id_M - id ⊗ ρ_M) inside S^{⊗slots} ⊗ M.
std::vector<Vector> cotensor(const ComoduleAlgebraData& s, std::size_t slots, const AydModuleData& m);

// Level n is S^{⊗(n+1)} ⊗ M, basis [a_0|…|a_n]m flattened left to right.
class CyclicModule {
 public:
  CyclicModule(ComoduleAlgebraData s, AydModuleData m, Limits limits = Limits::from_env());

  std::size_t dim(std::size_t n) const;
  // d_i: level n -> n-1 (n ≥ 1, i ≤ n)
  LinearMap face(std::size_t n, std::size_t i) const;
  // s_i: level n -> n+1 (i ≤ n)
  LinearMap degeneracy(std::size_t n, std::size_t i) const;
  // t_n: level n -> n
  LinearMap cyclic(std::size_t n) const;
  std::vector<Vector> cotensor_basis(std::size_t n) const;

  const ComoduleAlgebraData& algebra() const { return s_; }
  const AydModuleData& module() const { return m_; }
  const Limits& limits() const { return limits_; }

 private:
  ComoduleAlgebraData s_;
  AydModuleData m_;
  Limits limits_;
};

struct CyclicLevelData {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<LinearMap> faces;
  std::vector<LinearMap> degeneracies;
  LinearMap cyclic{Domain::rationals(), 0, 0};
};

CyclicLevelData cyclic_level(const CyclicModule& t, std::size_t n);

struct CyclicCheck {
  std::size_t level = 0;
  std::size_t dim = 0;
  std::size_t cotensor_dim = 0;
  AxiomCheck simplicial{"simplicial identities"};   // (a) full space
  AxiomCheck face_cyclic{"d_n t_n = t_{n-1} d_{n-1}"};  // (b) full space
  AxiomCheck cyclicity{"t_n^{n+1} = id on cotensor"};    // (c)
};

CyclicCheck check_cyclic_identities(const CyclicModule& t, std::size_t n);

struct ChainComplexData {
  std::vector<std::size_t> dims;         // degrees 0..N
  std::vector<LinearMap> differentials;  // differentials[n-1] = b_n, n = 1..N

  std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
};

// Throws InconsistencyError unless b_n b_{n+1} = 0 throughout.
void check_complex(const ChainComplexData& c);
// Homology dimensions in degrees 0..N-1.
std::vector<std::size_t> homology(const ChainComplexData& c);

// b = Σ_{i=0}^{n} (-1)^i d_i on levels 0..top.
ChainComplexData cyclic_complex(const CyclicModule& t, std::size_t top);

// B_n = S^{⊗n} ⊗ M for a left S-module M (s_action[i] is e_i acting), with
// b_n = Σ_{i=1}^{n} (-1)^i d_i; d_i multiplies slots i, i+1 and d_n acts on M.
ChainComplexData bar_complex(const AlgebraData& s, const std::vector<LinearMap>& s_action, std::size_t top,
                             const Limits& limits = Limits::from_env());

// Left S#H-module.
struct SmashModule {
  std::size_t dim = 0;
  std::vector<LinearMap> s_action;
  Action h_action;
};

SmashModule canonical_smash_module(const ModuleAlgebraData& d);  // S itself
SmashModule regular_smash_module(const ModuleAlgebraData& d);    // S#H
SmashModule direct_sum(const SmashModule& a, const SmashModule& b);

// "S-module", "H-module", "compatibility" h(s·m) = Σ (h₁·s)(h₂·m), witness (h, s).
VerificationReport verify_smash_module(const ModuleAlgebraData& d, const SmashModule& m);

std::vector<Vector> fixed_points_smash(const ModuleAlgebraData& d, const SmashModule& m);

struct MoritaReport {
  std::vector<Vector> fixed_points;  // M^H
  LinearMap evaluation{Domain::rationals(), 0, 0};  // S ⊗ M^H -> M
  bool bijective = false;
};

// Throws PreconditionError naming the Morita hypothesis unless j is bijective.
MoritaReport morita_decomposition(const ModuleAlgebraData& d, const SmashModule& m);

struct ShiftLevel {
  std::size_t n = 0;
  std::size_t dim_left = 0;   // B_n(S, M) or T_n(S, M)
  std::size_t dim_right = 0;  // B_{n+1}(S, M^H) or T_{n+1}(S, M^co)
  bool iso_bijective = false;
  // Informational: whether the degreewise map commutes with the
  // differentials; empty when not evaluated.
  std::optional<bool> commutes;
};

struct BarShiftReport {
  MoritaReport morita;
  std::vector<ShiftLevel> levels;
  bool passed = false;
};

BarShiftReport bar_shift_check(const ModuleAlgebraData& d, const SmashModule& m, std::size_t top,
                               const Limits& limits = Limits::from_env());

// Relative Hopf module in M_S^H: left S-module, right H-comodule,
// ρ(s·m) = s⁰m⁰ ⊗ s¹m¹.
struct RelativeHopfModule {
  std::size_t dim = 0;
  std::vector<LinearMap> s_action;
  ComoduleData coaction;
};

RelativeHopfModule relative_hopf_module_regular(const ComoduleAlgebraData& s);
// S ⊗ V with V of dimension k carrying the trivial coaction.
RelativeHopfModule relative_hopf_module_free(const ComoduleAlgebraData& s, std::size_t k);
VerificationReport verify_relative_hopf_module(const ComoduleAlgebraData& s, const RelativeHopfModule& m);

// S ⊗ S -> S ⊗ H, s ⊗ t ↦ s t⁰ ⊗ t¹.
LinearMap comodule_galois_map(const ComoduleAlgebraData& s);

struct TShiftReport {
  std::vector<Vector> base;          // R = S^{coH}
  std::size_t gamma_rank = 0;
  std::size_t dim_tensor_over_base = 0;  // dim S ⊗_R S
  bool gamma_bijective = false;
  std::vector<Vector> coinvariants;  // M^{coH}
  LinearMap evaluation{Domain::rationals(), 0, 0};  // S ⊗ M^co -> M
  bool evaluation_bijective = false;
  bool levels_checked = false;       // only when R = K
  std::vector<ShiftLevel> levels;
  bool passed = false;
};

// Throws PreconditionError when γ over R is not bijective (singular Galois
// matrix) or M is not a relative Hopf module.
TShiftReport t_shift_check(const ComoduleAlgebraData& s, const RelativeHopfModule& m, std::size_t top,
                           const Limits& limits = Limits::from_env());

}  // namespace hopfgal
