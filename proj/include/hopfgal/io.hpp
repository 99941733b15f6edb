#pragma once

#include <json.hpp>

#include <string>

#include "hopfgal/cocyclic.hpp"
#include "hopfgal/lattices.hpp"

// JSON input files. Scalars are strings such as "3" or "-1/2" (plain JSON
// integers are accepted too, floats never). Tensors are sparse lists:
//   mult       [i, j, k, c]   e_i e_j ∋ c e_k
//   comult     [i, j, k, c]   Δ(e_i) ∋ c e_j ⊗ e_k
//   antipode   [i, j, c]      α(e_i) ∋ c e_j
//   action     [h, s, t, c]   e_h · e_s ∋ c e_t
//   coaction   [m, n, h, c]   ρ(e_m) ∋ c e_n ⊗ e_h
//   left_coaction [m, h, n, c]  e_m ↦ c e_h ⊗ e_n
namespace hopfgal::io {

using Json = nlohmann::json;

enum class InputKind { Hopf, Extension, ComoduleExtension, Module, Comodule, AydModule, SmashModule, Lattice };

std::string to_string(InputKind k);

// Reads and parses a file; FormatError on I/O or syntax errors.
Json load_file(const std::string& path);
InputKind classify(const Json& doc);

Domain parse_domain(const Json& field);
Scalar parse_scalar(Domain d, const Json& x);
Vector parse_vector(Domain d, const Json& xs, std::size_t n);

// A Hopf entry is {"builtin": {...}} or explicit {"dim", "basis", "mult",
// "unit", "comult", "counit", "antipode"}. Builtins: group_algebra (table,
// optional labels), sweedler, taft (n, q), dual (of: another entry). With
// `verify` the result must pass verify_hopf; a failure is a FormatError
// naming the axiom and witness.
HopfAlgebraData parse_hopf(const Json& entry, Domain d, bool verify = true);
AlgebraData parse_algebra(const Json& entry, Domain d);
Action parse_action(const Json& triples, const HopfAlgebraData& h, std::size_t dim);

// Top-level documents carry "field".
HopfAlgebraData load_hopf(const Json& doc, bool verify = true);
ModuleAlgebraData load_extension(const Json& doc);
ComoduleAlgebraData load_comodule_extension(const Json& doc);
// Module algebras are turned into comodule algebras over the dual.
ComoduleAlgebraData load_any_comodule_algebra(const Json& doc);
std::pair<HopfAlgebraData, Action> load_module(const Json& doc);
ComoduleData load_comodule(const Json& doc);
AydModuleData load_ayd_module(const Json& doc);
// {"smash_module": "S" | "S#H" | "S+S#H"} or explicit dim/s_action/h_action.
SmashModule load_smash_module(const Json& doc, const ModuleAlgebraData& d);
// Extension over ℚ plus "lattice": rows of a ℤ-basis of S.
LatticeModule load_lattice(const Json& doc);

// Runs every verifier that applies to the document without rejecting it:
// the Hopf axioms, then (prefixed by the part they concern) the algebra,
// module, comodule, module-algebra or AYD checks. Shape errors still throw.
VerificationReport verify_document(const Json& doc);

// Candidate list "1,0;0,1;1,1".
std::vector<Vector> parse_candidates(const std::string& text, std::size_t dim);

}  // namespace hopfgal::io
