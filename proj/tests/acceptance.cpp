// Acceptance run: one PASS/FAIL line per criterion. Arguments: the hopfgal
// executable and the fixture directory (used by the determinism check).

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hopfgal/errors.hpp"
#include "hopfgal/lattices.hpp"

using namespace hopfgal;

namespace {

const Domain Q = Domain::rationals();
const Domain F2 = Domain::prime(2);
const Domain F3 = Domain::prime(3);

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

bool spans_line(const std::vector<Vector>& basis, const Vector& v) {
  return basis.size() == 1 && in_span(v[0].domain(), v.size(), basis, v) && !is_zero(v);
}

// hλ = ε(h)λ for every basis element h.
bool is_left_integral(const HopfAlgebraData& h, const Vector& l) {
  for (std::size_t i = 0; i < h.dim(); ++i) {
    auto lhs = h.algebra.multiply(h.algebra.basis(i), l);
    Vector rhs;
    for (const auto& x : l) rhs.push_back(h.counit(0, i) * x);
    if (lhs != rhs) return false;
  }
  return true;
}

Outcome integrals_one_dimensional() {
  Outcome o;
  std::vector<std::pair<std::string, HopfAlgebraData>> hs = {
      {"QC2", fixtures::c2(Q)},
      {"F2C2", fixtures::c2(F2)},
      {"(QC2)*", dual(fixtures::c2(Q))},
      {"sweedler(Q)", sweedler(Q)},
      {"sweedler(F5)", sweedler(Domain::prime(5))},
      {"taft(3, 2, F7)", taft(3, Scalar(Domain::prime(7), 2))},
  };
  for (const auto& [name, h] : hs) {
    o.require(left_integrals(h).basis.size() == 1, name + ": left integrals not a line");
    o.require(right_integrals(h).basis.size() == 1, name + ": right integrals not a line");
  }
  auto sw = sweedler(Q);
  Vector x_gx = fixtures::vec(Q, {0, 0, 1, 1});  // x + gx on {1, g, x, gx}
  o.require(is_left_integral(sw, x_gx), "x + gx fails hλ = ε(h)λ");
  o.require(spans_line(left_integrals(sw).basis, x_gx), "sweedler integral is not span{x + gx}");
  o.detail = o.pass ? "6 Hopf algebras, sweedler integral span{x + gx}" : o.detail;
  return o;
}

Outcome field_case() {
  Outcome o;
  for (const auto& [name, d] : {std::pair{"F4/F2 Frobenius", fixtures::f4_frobenius()},
                                {"F2[t]/(t^2) with d/dt", fixtures::dual_numbers_derivation()}}) {
    auto r = classify_extension(d);
    o.require(r.tame, std::string(name) + ": not tame");
    o.require(r.homology_dim == 0, std::string(name) + ": homology not zero");
    o.require(r.j_bijective && r.gamma_bijective, std::string(name) + ": j or γ not bijective");
  }
  std::size_t compared = 0;
  for (const auto& [name, d] : fixtures::field_extensions()) {
    auto r = classify_extension(d);
    if (!(r.equivalence_applies && r.faithful && r.invariants_trivial)) continue;
    ++compared;
    o.require(r.tame == (r.homology_dim == 0) && r.tame == r.hopf_galois, name + ": verdicts disagree");
  }
  o.require(compared >= 4, "too few instances satisfy the hypotheses");
  if (o.pass) o.detail = "tame, H_0 = 0, j and γ bijective; verdicts agree on " + std::to_string(compared) + " instances";
  return o;
}

Outcome integral_tameness() {
  Outcome o;
  auto zi = tame_check_integral(integral_group_ring(fixtures::c2(Q)), gaussian_integers());
  o.require(!zi.tame && zi.factors == std::vector<mpz_class>{2}, "ZC2 on Z[i]: expected not tame with factors [2]");
  auto ze = tame_check_integral(integral_group_ring(fixtures::c2(Q)), eisenstein_integers());
  o.require(ze.tame && ze.factors.empty(), "ZC2 on Z[zeta3]: expected tame with no factors");
  std::size_t checked = 0;
  for (const auto& [name, s] : fixtures::lattice_instances()) {
    std::vector<OrderData> orders;
    if (is_faithful(s.extension)) orders.push_back(associated_order(s));
    if (lattice_action(s, s.extension.hopf.algebra.basis(1))) orders.push_back(integral_group_ring(s.extension.hopf));
    for (const auto& ord : orders) {
      if (!ord.is_hopf_order()) continue;
      try {
        auto t = tame_check_integral(ord, s);
        o.require(t.tame == t.factors.empty(), name + ": tame differs from factors-empty");
        ++checked;
      } catch (const PreconditionError&) {
      }
    }
  }
  o.require(checked >= 10, "too few lattice instances");
  if (o.pass) o.detail = "Z[i] factors [2], Z[zeta3] tame; checked " + std::to_string(checked) + " lattice instances";
  return o;
}

Outcome associated_order_pipeline() {
  Outcome o;
  auto s = gaussian_integers();
  auto a = associated_order(s);
  const Scalar half(Q, mpq_class(1, 2));
  // hand HNF: {1, (1+σ)/2}
  o.require(a.lattice.basis() == std::vector<Vector>{fixtures::vec(Q, {1, 0}), Vector{half, half}},
            "associated order is not Z<1, (1+σ)/2>");
  o.require(is_hopf_order(a).all_passed(), "not a Hopf order");
  o.require(lattice_integrals(a).basis() == std::vector<Vector>{Vector{half, half}}, "integral generator is not (1+σ)/2");
  auto t = tame_check_integral(a, s);
  o.require(t.tame, "not tame");
  auto g = free_rank_one_generator(a, s, {fixtures::vec(Q, {1, 0}), fixtures::vec(Q, {1, 1})});
  o.require(g.has_value() && g->generator == fixtures::vec(Q, {1, 1}), "1 + i not found");
  if (g) {
    // 1·(1+i) = 1 + i, (1+σ)/2·(1+i) = 1
    o.require(g->coordinates == LinearMap::from_ints(Domain::integers(), {{1, 1}, {1, 0}}), "coordinates differ from hand oracle");
    o.require(g->hnf == LinearMap::identity(Domain::integers(), 2), "HNF is not unimodular identity");
  }
  if (o.pass) o.detail = "{1, (1+σ)/2}, Hopf order, integral (1+σ)/2, tame, generator 1 + i";
  return o;
}

Outcome total_integral() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [name, d] : fixtures::field_extensions()) {
    auto r = classify_extension(d);
    if (!(r.invariants_trivial && r.faithful && r.rank_equal)) continue;
    auto t = total_integral_map(d);
    ++checked;
    o.require(t.present == r.tame, name + ": presence differs from tameness");
    if (!t.present) continue;
    // g(ε) = 1_S, ε being the unit of H*
    Vector eps(d.hopf.counit.row(0).begin(), d.hopf.counit.row(0).end());
    o.require(t.g->apply(eps) == d.algebra.unit, name + ": g(1) ≠ 1");
    o.require(t.unital && t.h_linear, name + ": g not unital or not H-linear");
  }
  o.require(checked >= 8, "too few instances");
  if (o.pass) o.detail = "present iff tame on " + std::to_string(checked) + " instances, g(1) = 1, H-linear";
  return o;
}

Outcome cyclic_identities() {
  Outcome o;
  for (Domain d : {Q, F3}) {
    auto m = fixtures::group_like_module(d);
    o.require(ayd_check(m).passed && stability_check(m).passed, d.name() + ": KC2 not stable AYD");
    CyclicModule t(fixtures::graded_comodule(d, 1), m);
    for (std::size_t n = 0; n <= 3; ++n) {
      auto c = check_cyclic_identities(t, n);
      std::string at = d.name() + " level " + std::to_string(n) + ": ";
      o.require(c.simplicial.passed, at + "simplicial identities");
      o.require(c.face_cyclic.passed, at + "d_n t_n = t_{n-1} d_{n-1}");
      o.require(c.cyclicity.passed, at + "t_n^{n+1} = id on cotensor");
    }
  }
  if (o.pass) o.detail = "Q and F3, levels 0..3, (pass, pass, pass)";
  return o;
}

Outcome bar_shift() {
  Outcome o;
  auto d = fixtures::gaussian_conjugation();
  std::vector<std::pair<std::string, SmashModule>> ms = {
      {"S", canonical_smash_module(d)},
      {"S#H", regular_smash_module(d)},
      {"S+S#H", direct_sum(canonical_smash_module(d), regular_smash_module(d))}};
  for (const auto& [name, m] : ms) {
    auto r = bar_shift_check(d, m, 4);
    o.require(r.passed, name + ": check failed");
    o.require(m.dim == d.dim_s() * r.morita.fixed_points.size(), name + ": dim M ≠ dim S · dim M^H");
    o.require(r.levels.size() == 5, name + ": missing levels");
    for (const auto& l : r.levels)
      o.require(l.dim_left == l.dim_right && l.iso_bijective, name + ": level " + std::to_string(l.n));
  }
  if (o.pass) o.detail = "M = S, S#H, S+S#H; n = 0..4 degreewise bijective";
  return o;
}

Outcome fundamental_theorem() {
  Outcome o;
  for (Domain d : {F3, F2}) {
    auto s = fixtures::graded_comodule(d, 1);
    for (auto m : {relative_hopf_module_regular(s), relative_hopf_module_free(s, 2)}) {
      auto r = t_shift_check(s, m, 2);
      o.require(r.gamma_bijective, d.name() + ": γ not bijective");
      o.require(r.evaluation_bijective, d.name() + ": evaluation not bijective");
      o.require(r.passed, d.name() + ": check failed");
    }
    bool rejected = false;
    try {
      auto n = fixtures::graded_comodule(d, 0);
      t_shift_check(n, relative_hopf_module_regular(n), 2);
    } catch (const PreconditionError& e) {
      rejected = std::string(e.what()).find("singular Galois matrix") != std::string::npos;
    }
    o.require(rejected, d.name() + ": x^2 = 0 variant not rejected");
  }
  if (o.pass) o.detail = "F3 and F2: γ and evaluation bijective; x^2 = 0 rejected";
  return o;
}

Outcome structural() {
  Outcome o;
  std::size_t complexes = 0;
  for (Domain d : {Q, F3}) {
    CyclicModule t(fixtures::graded_comodule(d, 1), fixtures::group_like_module(d));
    check_complex(cyclic_complex(t, 3));
    ++complexes;
  }
  auto g = fixtures::gaussian_conjugation();
  for (const auto& m : {canonical_smash_module(g), regular_smash_module(g)}) {
    check_complex(bar_complex(g.algebra, m.s_action, 4));
    ++complexes;
  }
  std::vector<HopfAlgebraData> builtins = {fixtures::c2(Q), fixtures::c2(F2), group_algebra(fixtures::s3(), Q),
                                           group_algebra(fixtures::q8(), F3), sweedler(Q), sweedler(Domain::prime(5)),
                                           taft(3, Scalar(Domain::prime(7), 2))};
  for (const auto& h : builtins) {
    o.require(dual(dual(h)).structure_equal(h), "dual(dual(h)) ≠ h");
    Action reg = fixtures::regular_action(h);
    o.require(comodule_to_module(module_to_comodule(h, reg)) == reg, "module-comodule roundtrip");
    hopfological_homology_module(h, reg);                       // asserts I·V ⊆ V^H
    hopfological_homology_module(h, fixtures::trivial_action(h, 1));
  }
  for (const auto& [name, d] : fixtures::field_extensions()) hopfological_homology_module(d.hopf, d.action);
  std::size_t lattices = 0;
  for (const auto& [name, s] : fixtures::lattice_instances()) {
    if (!is_faithful(s.extension)) continue;
    auto a = associated_order(s);
    if (!a.is_hopf_order()) continue;
    try {
      auto t = tame_check_integral(a, s);  // asserts J·S ⊆ S^𝒜
      auto fixed = Lattice::from_basis(t.fixed, s.extension.dim_s());
      for (const auto& v : t.integral_image) o.require(fixed.contains(v), name + ": J·S ⊄ S^𝒜");
      ++lattices;
    } catch (const PreconditionError&) {
    }
  }
  if (o.pass)
    o.detail = std::to_string(complexes) + " complexes with b∘b = 0, " + std::to_string(builtins.size()) +
               " builtins, " + std::to_string(lattices) + " lattices, no containment violations";
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Outcome determinism(const std::string& exe, const std::string& dir) {
  Outcome o;
  const std::vector<std::string> cmds = {
      "verify " + dir + "/sweedler.json",
      "verify " + dir + "/corrupted_antipode.json",
      "verify " + dir + "/malformed.json",
      "verify " + dir + "/kc2_ayd_q.json",
      "integrals " + dir + "/qc2.json",
      "integrals " + dir + "/sweedler.json",
      "integrals " + dir + "/f2c2.json",
      "integrals " + dir + "/taft3_f7.json",
      "galois " + dir + "/gaussian.json --expect hopf-galois",
      "galois " + dir + "/dual_numbers.json",
      "tame " + dir + "/f4_frobenius.json --expect tame",
      "tame " + dir + "/f4_trivial.json --expect tame",
      "homology " + dir + "/f2c2_trivial_module.json",
      "homology " + dir + "/f2c2_regular_module.json",
      "homology " + dir + "/qc2_regular_comodule.json",
      "homology " + dir + "/zi_lattice.json",
      "cyclic " + dir + "/graded_c2_q.json --module " + dir + "/kc2_ayd_q.json --levels 3",
      "cyclic " + dir + "/graded_c2_f3.json --module " + dir + "/kc2_ayd_f3.json --levels 3",
      "cyclic " + dir + "/graded_c2_q.json --module " + dir + "/kc2_ayd_swap_q.json --levels 2",
      "cyclic " + dir + "/graded_c2xc2_q.json --module " + dir + "/kc2_ayd_q.json --levels 9",
      "bar-shift " + dir + "/gaussian.json --module " + dir + "/smash_SH.json --levels 4",
      "bar-shift " + dir + "/gaussian_trivial.json",
      "assoc-order " + dir + "/zi_lattice.json --candidates '1,0;0,1;1,1'",
      "assoc-order " + dir + "/zi_lattice.json --order group-ring",
      "assoc-order " + dir + "/zzeta3_lattice.json --order group-ring",
  };
  for (const auto& c : cmds) {
    std::string full = exe + " --json " + c + " 2>/dev/null";
    auto a = capture(full), b = capture(full);
    o.require(!a.empty() && a.find("\"version\": \"1\"") != std::string::npos, "no JSON report from: " + c);
    o.require(a == b, "reports differ on rerun: " + c);
  }
  if (o.pass) o.detail = std::to_string(cmds.size()) + " commands rerun byte-identically";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <hopfgal executable> <fixture dir>\n";
    return 2;
  }
  const std::string exe = argv[1], dir = argv[2];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"integrals are one-dimensional", integrals_one_dimensional},
      {"field case: tame, H_0 = 0, Hopf-Galois", field_case},
      {"tameness over Z", integral_tameness},
      {"associated order pipeline", associated_order_pipeline},
      {"total integral present iff tame", total_integral},
      {"cyclic identities", cyclic_identities},
      {"bar complex shift", bar_shift},
      {"fundamental theorem for graded S", fundamental_theorem},
      {"structural soundness", structural},
      {"determinism", [&] { return determinism(exe, dir); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (!r.pass) ++failures;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << r.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
