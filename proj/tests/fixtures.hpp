#pragma once

// Shared example instances for the test binaries.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfgal/actions.hpp"
#include "hopfgal/cocyclic.hpp"
#include "hopfgal/hopf.hpp"
#include "hopfgal/lattices.hpp"

namespace fixtures {

using Table = std::vector<std::vector<std::size_t>>;
using Perm = std::vector<std::size_t>;

inline Table cyclic(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// G × H with (g, h) at index g*|H| + h.
inline Table product(const Table& g, const Table& h) {
  const std::size_t m = h.size(), n = g.size() * m;
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = g[a / m][b / m] * m + h[a % m][b % m];
  return t;
}

// Closure of permutation generators; identity first, product (pq)(x) = p(q(x)).
inline Table permutation_group(const std::vector<Perm>& gens) {
  const std::size_t k = gens.front().size();
  Perm id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = i;
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  auto compose = [k](const Perm& p, const Perm& q) {
    Perm r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = p[q[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm r = compose(g, elems[i]);
      if (!index.count(r)) {
        index[r] = elems.size();
        elems.push_back(r);
      }
    }
  Table t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return t;
}

inline Table s3() { return permutation_group({{1, 0, 2}, {1, 2, 0}}); }
inline Table d4() { return permutation_group({{1, 2, 3, 0}, {2, 1, 0, 3}}); }

// Quaternion units ±1, ±i, ±j, ±k; element s*4 + u with s the sign bit.
inline Table q8() {
  // unit products u*v = sign * w, units 0..3 = 1, i, j, k
  const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const std::size_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Table t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      std::size_t s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
      t[a][b] = s * 4 + unit[a % 4][b % 4];
    }
  return t;
}

// Every group of order at most 8, up to isomorphism.
inline std::vector<std::pair<std::string, Table>> small_groups() {
  std::vector<std::pair<std::string, Table>> out;
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"C" + std::to_string(n), cyclic(n)});
  out.push_back({"C2xC2", product(cyclic(2), cyclic(2))});
  out.push_back({"C2xC4", product(cyclic(2), cyclic(4))});
  out.push_back({"C2^3", product(cyclic(2), product(cyclic(2), cyclic(2)))});
  out.push_back({"S3", s3()});
  out.push_back({"D4", d4()});
  out.push_back({"Q8", q8()});
  return out;
}

inline hopfgal::HopfAlgebraData c2(hopfgal::Domain d) { return hopfgal::group_algebra(cyclic(2), d, {"1", "σ"}); }

using hopfgal::AlgebraData;
using hopfgal::Domain;
using hopfgal::HopfAlgebraData;
using hopfgal::LinearMap;
using hopfgal::ModuleAlgebraData;
using hopfgal::Scalar;
using hopfgal::Vector;

struct IntTriple {
  std::size_t i, j, k;
  long c;
};

inline Vector vec(Domain d, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(d, x);
  return v;
}

inline std::vector<hopfgal::Triple> triples(Domain d, const std::vector<IntTriple>& ts) {
  std::vector<hopfgal::Triple> out;
  for (const auto& t : ts) out.push_back({t.i, t.j, t.k, Scalar(d, t.c)});
  return out;
}

inline AlgebraData algebra(Domain d, std::vector<std::string> labels, const std::vector<IntTriple>& mult) {
  const std::size_t n = labels.size();
  return AlgebraData::from_triples(d, n, std::move(labels), triples(d, mult), hopfgal::unit_vector(d, n, 0));
}

// K[x]/(x² - c) on {1, x}
inline AlgebraData quadratic(Domain d, long c, const std::string& x = "x") {
  return algebra(d, {"1", x}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, c}});
}

// ℚ[x]/(x² + 1)
inline AlgebraData gaussian(Domain d) { return quadratic(d, -1); }

// 𝔽4 = 𝔽2[y]/(y² + y + 1) on {1, y}
inline AlgebraData f4() {
  const Domain d = Domain::prime(2);
  return algebra(d, {"1", "y"}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}});
}

// K × K on the idempotents {e1, e2}; unit e1 + e2
inline AlgebraData split(Domain d) {
  auto a = algebra(d, {"e1", "e2"}, {{0, 0, 0, 1}, {1, 1, 1, 1}});
  a.unit = vec(d, {1, 1});
  return a;
}

inline AlgebraData field(Domain d) { return algebra(d, {"1"}, {{0, 0, 0, 1}}); }

// K[δ]/(δ²) with δ primitive
inline HopfAlgebraData primitive(Domain d) {
  auto a = algebra(d, {"1", "δ"}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  return HopfAlgebraData::from_triples(a, triples(d, {{0, 0, 0, 1}, {1, 1, 0, 1}, {1, 0, 1, 1}}), vec(d, {1, 0}),
                                       triples(d, {{0, 0, 0, 1}, {1, 1, 0, -1}}));
}

inline LinearMap mat(Domain d, std::initializer_list<std::initializer_list<long>> rows) {
  return LinearMap::from_ints(d, rows);
}

inline hopfgal::Action trivial_action(const HopfAlgebraData& h, std::size_t dim) {
  hopfgal::Action a;
  for (std::size_t k = 0; k < h.dim(); ++k) a.push_back(LinearMap::identity(h.domain(), dim).scaled(h.counit(0, k)));
  return a;
}

// C2 acting on ℚ[x]/(x²+1) by x ↦ -x
inline ModuleAlgebraData gaussian_conjugation(Domain d = Domain::rationals()) {
  return ModuleAlgebraData::from_matrices(c2(d), gaussian(d),
                                          {LinearMap::identity(d, 2), mat(d, {{1, 0}, {0, -1}})});
}

inline ModuleAlgebraData gaussian_trivial(Domain d = Domain::rationals()) {
  auto h = c2(d);
  auto a = trivial_action(h, 2);
  return ModuleAlgebraData::from_matrices(std::move(h), gaussian(d), std::move(a));
}

// Frobenius y ↦ y² = y + 1 on 𝔽4
inline ModuleAlgebraData f4_frobenius() {
  const Domain d = Domain::prime(2);
  return ModuleAlgebraData::from_matrices(c2(d), f4(), {LinearMap::identity(d, 2), mat(d, {{1, 1}, {0, 1}})});
}

// δ = d/dt on 𝔽2[t]/(t²)
inline ModuleAlgebraData dual_numbers_derivation() {
  const Domain d = Domain::prime(2);
  return ModuleAlgebraData::from_matrices(primitive(d), algebra(d, {"1", "t"}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}),
                                          {LinearMap::identity(d, 2), mat(d, {{0, 1}, {0, 0}})});
}

inline ModuleAlgebraData split_swap(Domain d) {
  return ModuleAlgebraData::from_matrices(c2(d), split(d), {LinearMap::identity(d, 2), mat(d, {{0, 1}, {1, 0}})});
}

inline ModuleAlgebraData split_trivial(Domain d) {
  auto h = c2(d);
  auto a = trivial_action(h, 2);
  return ModuleAlgebraData::from_matrices(std::move(h), split(d), std::move(a));
}

inline ModuleAlgebraData field_trivial(Domain d) {
  auto h = c2(d);
  auto a = trivial_action(h, 1);
  return ModuleAlgebraData::from_matrices(std::move(h), field(d), std::move(a));
}

// S = K ⊕ Kx, x² = square, C2-graded: (KC2)* acts by the degree projections.
inline ModuleAlgebraData graded(Domain d, long square) {
  return ModuleAlgebraData::from_matrices(hopfgal::dual(c2(d)), quadratic(d, square),
                                          {mat(d, {{1, 0}, {0, 0}}), mat(d, {{0, 0}, {0, 1}})});
}

// K^G (functions, pointwise product) with (g·f)(x) = f(g⁻¹x).
inline ModuleAlgebraData translation(const Table& table, Domain d) {
  const std::size_t n = table.size();
  auto h = hopfgal::group_algebra(table, d);
  std::vector<IntTriple> mult;
  for (std::size_t a = 0; a < n; ++a) mult.push_back({a, a, a, 1});
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back("p" + std::to_string(a));
  auto s = algebra(d, labels, mult);
  s.unit = Vector(n, Scalar(d, 1));
  // g·p_x = p_{gx}
  hopfgal::Action act;
  for (std::size_t g = 0; g < n; ++g) {
    LinearMap m(d, n, n);
    for (std::size_t x = 0; x < n; ++x) m(table[g][x], x) = Scalar(d, 1);
    act.push_back(m);
  }
  return ModuleAlgebraData::from_matrices(std::move(h), std::move(s), std::move(act));
}

// H acting on itself by left multiplication (a module, not a module algebra).
inline hopfgal::Action regular_action(const HopfAlgebraData& h) {
  hopfgal::Action a;
  for (std::size_t k = 0; k < h.dim(); ++k) a.push_back(h.algebra.left_mult(h.algebra.basis(k)));
  return a;
}

// H1 ⊗ H2 as a Hopf algebra.
inline HopfAlgebraData tensor_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  using namespace hopfgal;
  const Domain d = a.domain();
  HopfAlgebraData h;
  h.algebra = tensor_algebra(a.algebra, b.algebra);
  auto mid = kronecker({LinearMap::identity(d, a.dim()), swap_map(d, a.dim(), b.dim()), LinearMap::identity(d, b.dim())});
  h.comult = mid * kronecker(a.comult, b.comult);
  h.counit = kronecker(a.counit, b.counit);
  h.antipode = kronecker(a.antipode, b.antipode);
  return h;
}

// (H1 ⊗ H2) acting on S1 ⊗ S2 factorwise.
inline ModuleAlgebraData tensor_extension(const ModuleAlgebraData& x, const ModuleAlgebraData& y) {
  hopfgal::Action act;
  for (const auto& p : x.action)
    for (const auto& q : y.action) act.push_back(hopfgal::kronecker(p, q));
  return ModuleAlgebraData::from_matrices(tensor_hopf(x.hopf, y.hopf),
                                          hopfgal::tensor_algebra(x.algebra, y.algebra), std::move(act));
}

// Every module algebra instance used by the property tests.
inline std::vector<std::pair<std::string, ModuleAlgebraData>> field_extensions() {
  const Domain q = Domain::rationals(), f2 = Domain::prime(2), f3 = Domain::prime(3);
  std::vector<std::pair<std::string, ModuleAlgebraData>> out;
  out.push_back({"gaussian conjugation", gaussian_conjugation()});
  out.push_back({"gaussian trivial", gaussian_trivial()});
  out.push_back({"F4 Frobenius", f4_frobenius()});
  out.push_back({"dual numbers d/dt", dual_numbers_derivation()});
  out.push_back({"QxQ swap", split_swap(q)});
  out.push_back({"F2xF2 swap", split_swap(f2)});
  out.push_back({"F2xF2 trivial", split_trivial(f2)});
  out.push_back({"Q trivial", field_trivial(q)});
  out.push_back({"F2 trivial", field_trivial(f2)});
  out.push_back({"graded F3", graded(f3, 1)});
  out.push_back({"graded F2", graded(f2, 1)});
  out.push_back({"graded x^2=0 F3", graded(f3, 0)});
  out.push_back({"F2^C4 translation", translation(cyclic(4), f2)});
  out.push_back({"F3^C3 translation", translation(cyclic(3), f3)});
  out.push_back({"F2^(C2xC2) translation", translation(product(cyclic(2), cyclic(2)), f2)});
  out.push_back({"Q^S3 translation", translation(s3(), q)});
  out.push_back({"dual numbers squared", tensor_extension(dual_numbers_derivation(), dual_numbers_derivation())});
  out.push_back({"F4 x dual numbers", tensor_extension(f4_frobenius(), dual_numbers_derivation())});
  return out;
}

// S = K ⊕ Kx, x² = square, graded by C2 through ρ(x) = x ⊗ σ.
inline hopfgal::ComoduleAlgebraData graded_comodule(Domain d, long square) {
  auto rho = hopfgal::ComoduleData::from_triples(c2(d), 2, triples(d, {{0, 0, 0, 1}, {1, 1, 1, 1}}));
  return {quadratic(d, square), std::move(rho), false};
}

// M = KC2 with the left group-like coaction g ↦ g ⊗ g. The action is
// trivial, or the swap σ·g = σg when `swap` is set.
inline hopfgal::AydModuleData group_like_module(Domain d, bool swap = false) {
  auto h = c2(d);
  hopfgal::Action act = swap ? regular_action(h) : trivial_action(h, 2);
  LinearMap left(d, 4, 2);
  for (std::size_t k = 0; k < 2; ++k) left(k * 2 + k, k) = Scalar(d, 1);
  return hopfgal::AydModuleData::from_left_coaction(std::move(h), std::move(act), left);
}

// 1-dim M with trivial action and coaction m ↦ 1 ⊗ m.
inline hopfgal::AydModuleData trivial_ayd(const HopfAlgebraData& h) {
  LinearMap left(h.domain(), h.dim(), 1);
  for (std::size_t k = 0; k < h.dim(); ++k) left(k, 0) = h.algebra.unit[k];
  return hopfgal::AydModuleData::from_left_coaction(h, trivial_action(h, 1), left);
}

// ℤ[√c] style rings {1, y}, y² = a + b y, σ given on the basis, with the
// standard lattice unless rows are given.
inline hopfgal::LatticeModule ring(long a, long b, std::initializer_list<std::initializer_list<long>> sigma,
                                   std::vector<Vector> lattice = {}) {
  const Domain q = Domain::rationals();
  auto s = algebra(q, {"1", "y"}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, a}, {1, 1, 1, b}});
  auto d = ModuleAlgebraData::from_matrices(c2(q), std::move(s), {LinearMap::identity(q, 2), mat(q, sigma)});
  auto l = lattice.empty() ? hopfgal::Lattice::standard(2) : hopfgal::Lattice::from_basis(lattice, 2);
  return hopfgal::LatticeModule::make(std::move(d), std::move(l));
}

inline std::vector<std::pair<std::string, hopfgal::LatticeModule>> lattice_instances() {
  using hopfgal::Lattice;
  using hopfgal::LatticeModule;
  const Domain q = Domain::rationals();
  const Scalar half(q, mpq_class(1, 2));
  std::vector<std::pair<std::string, LatticeModule>> out;
  out.push_back({"Z[i]", hopfgal::gaussian_integers()});
  out.push_back({"Z[zeta3]", hopfgal::eisenstein_integers()});
  out.push_back({"Z[sqrt2]", ring(2, 0, {{1, 0}, {0, -1}})});
  out.push_back({"Z[sqrt-3]", ring(-3, 0, {{1, 0}, {0, -1}})});
  out.push_back({"Z[golden]", ring(1, 1, {{1, 1}, {0, -1}})});
  out.push_back({"Z<1,2i>", ring(-1, 0, {{1, 0}, {0, -1}}, {vec(q, {1, 0}), vec(q, {0, 2})})});
  out.push_back({"Z<1,(1+i)/2>", ring(-1, 0, {{1, 0}, {0, -1}}, {vec(q, {1, 0}), Vector{half, half}})});
  out.push_back({"ZxZ swap", LatticeModule::make(split_swap(q), Lattice::standard(2))});
  out.push_back({"Z^C3", LatticeModule::make(translation(cyclic(3), q), Lattice::standard(3))});
  out.push_back({"Z^(C2xC2)", LatticeModule::make(translation(product(cyclic(2), cyclic(2)), q), Lattice::standard(4))});
  return out;
}

}  // namespace fixtures
