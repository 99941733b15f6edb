#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "hopfgal/cli.hpp"
#include "hopfgal/errors.hpp"
#include "hopfgal/io.hpp"

using namespace hopfgal;
using hopfgal::cli::CommandOptions;
using hopfgal::cli::Report;
using hopfgal::cli::run_command;

namespace {

std::string data(const std::string& name) { return std::string(HOPFGAL_TEST_DATA) + "/" + name; }

CommandOptions opts(const std::string& command, const std::string& file) {
  CommandOptions o;
  o.command = command;
  o.path = data(file);
  return o;
}

cli::CommandResult run(const std::string& command, const std::string& file) { return run_command(opts(command, file)); }

std::string write_temp(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("hopfgal_cli_" + name);
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST_CASE("verify: exit codes and witnesses") {
  for (auto f : {"sweedler.json", "sweedler_f5.json", "qc2.json", "f2c2.json", "qc2_dual.json", "taft3_f7.json",
                 "qc2_explicit.json"}) {
    CAPTURE(f);
    CHECK(run("verify", f).exit_code == 0);
  }
  auto bad = run("verify", "corrupted_antipode.json");
  CHECK(bad.exit_code == 1);
  const auto& last = bad.report["checks"].back();
  CHECK(last["name"] == "antipode");
  CHECK(last["passed"] == false);
  CHECK(last["witness"] == Report::array({1}));
  CHECK(cli::render_text(bad.report).find("antipode: FAIL at (1)") != std::string::npos);

  auto mal = run("verify", "malformed.json");
  CHECK(mal.exit_code == 2);
  CHECK(mal.report["error"]["kind"] == "format");
  CHECK(run("verify", "float_scalar.json").exit_code == 2);
  CHECK(run("verify", "does_not_exist.json").exit_code == 2);
}

TEST_CASE("verify: non-Hopf files run their own checks") {
  CHECK(run("verify", "gaussian.json").exit_code == 0);
  CHECK(run("verify", "graded_c2_q.json").exit_code == 0);
  CHECK(run("verify", "kc2_ayd_q.json").exit_code == 0);
  CHECK(run("verify", "f2c2_regular_module.json").exit_code == 0);
  auto swap = run("verify", "kc2_ayd_swap_q.json");
  CHECK(swap.exit_code == 1);
  CHECK(swap.report["verdict"] == "axiom failure");
}

TEST_CASE("loading a broken Hopf algebra for a computation is an input error") {
  auto r = run("integrals", "corrupted_antipode.json");
  CHECK(r.exit_code == 2);
  std::string msg = r.report["error"]["message"];
  CHECK(msg.find("antipode") != std::string::npos);
  CHECK(msg.find("(1)") != std::string::npos);

  auto unknown = write_temp("unknown.json", R"({"field": {"kind": "Q"}, "builtin": {"name": "klein"}})");
  CommandOptions o;
  o.command = "verify";
  o.path = unknown;
  CHECK(run_command(o).exit_code == 2);

  auto f2sweedler = write_temp("f2sweedler.json", R"({"field": {"kind": "Fp", "p": 2}, "builtin": {"name": "sweedler"}})");
  o.path = f2sweedler;
  auto r2 = run_command(o);
  CHECK(r2.exit_code == 2);
  CHECK(r2.report["error"]["kind"] == "unsupported-domain");

  auto notprime = write_temp("p4.json", R"({"field": {"kind": "Fp", "p": 4}, "builtin": {"name": "sweedler"}})");
  o.path = notprime;
  CHECK(run_command(o).exit_code == 2);
}

TEST_CASE("integrals") {
  // ℚC2: σ(a + bσ) = b + aσ equals ε(σ)(a + bσ) iff a = b.
  auto q = run("integrals", "qc2.json");
  CHECK(q.exit_code == 0);
  CHECK(q.report["left_integral"] == "1 + σ");
  CHECK(q.report["semisimple"] == true);
  // Sweedler: g·(x + gx) = gx + x and x·(x + gx) = 0 = ε(x)(x + gx).
  auto s = run("integrals", "sweedler.json");
  CHECK(s.report["left_integral"] == "x + gx");
  CHECK(s.report["semisimple"] == false);
  CHECK(s.report["unimodular"] == false);
  auto f = run("integrals", "f2c2.json");
  CHECK(f.report["left_integral"] == "1 + σ");
  CHECK(f.report["semisimple"] == false);
  for (auto file : {"qc2_dual.json", "sweedler_f5.json", "taft3_f7.json"}) {
    auto r = run("integrals", file);
    CHECK(r.report["dim_left_integrals"] == 1);
    CHECK(r.report["dim_right_integrals"] == 1);
  }
  std::string text = cli::render_text(q.report);
  CHECK(text.find("left integral: 1 + σ\n") != std::string::npos);
  CHECK(text.find("semisimple: true\n") != std::string::npos);
}

TEST_CASE("galois and tame with --expect") {
  auto o = opts("tame", "f4_frobenius.json");
  o.expect = "tame";
  auto f4 = run_command(o);
  CHECK(f4.exit_code == 0);
  CHECK(f4.report["total_integral"]["present"] == true);
  CHECK(f4.report["total_integral"]["unital"] == true);
  CHECK(f4.report["total_integral"]["h_linear"] == true);

  o = opts("tame", "f4_trivial.json");
  o.expect = "tame";
  auto triv = run_command(o);
  CHECK(triv.exit_code == 1);
  CHECK(triv.report["expect_met"] == false);

  o = opts("galois", "gaussian.json");
  o.expect = "hopf-galois";
  auto g = run_command(o);
  CHECK(g.exit_code == 0);
  CHECK(g.report["gamma_algebra_map"] == true);
  CHECK(g.report["classification"] == "tame Hopf-Galois");

  o.expect = "neither";
  CHECK(run_command(o).exit_code == 1);
  o = opts("galois", "gaussian_trivial.json");
  o.expect = "neither";
  CHECK(run_command(o).exit_code == 0);
  o.expect = "maybe";
  CHECK(run_command(o).exit_code == 2);

  auto dn = run("galois", "dual_numbers.json");
  CHECK(dn.report["tame"] == true);
  CHECK(dn.report["hopf_galois"] == true);
  CHECK(dn.report["homology_dim"] == 0);
  CHECK(dn.report["equivalence_applies"] == true);
}

TEST_CASE("homology") {
  auto t = run("homology", "f2c2_trivial_module.json");
  CHECK(t.exit_code == 0);
  CHECK(t.report["h0_dim"] == 1);
  CHECK(cli::render_text(t.report).find("H_0 dimension: 1\n") != std::string::npos);
  CHECK(run("homology", "f2c2_regular_module.json").report["h0_dim"] == 0);
  CHECK(run("homology", "qc2_regular_comodule.json").report["h0_dim"] == 0);
  CHECK(run("homology", "gaussian.json").report["h0_dim"] == 0);
  CHECK(run("homology", "graded_c2_q.json").report["h0_dim"] == 0);

  auto zi = run("homology", "zi_lattice.json");
  CHECK(zi.report["invariant_factors"] == Report::array({2}));
  CHECK(cli::render_text(zi.report).find("invariant factors: [2]\n") != std::string::npos);
  CHECK(run("homology", "zzeta3_lattice.json").report["invariant_factors"] == Report::array());
  auto o = opts("homology", "zi_lattice.json");
  o.order = "associated";
  CHECK(run_command(o).report["invariant_factors"] == Report::array());
  CHECK(run("homology", "qc2.json").exit_code == 2);
}

TEST_CASE("cyclic") {
  for (auto [ext, mod] : {std::pair{"graded_c2_q.json", "kc2_ayd_q.json"}, {"graded_c2_f3.json", "kc2_ayd_f3.json"}}) {
    auto o = opts("cyclic", ext);
    o.module = data(mod);
    o.levels = 3;
    auto r = run_command(o);
    REQUIRE(r.exit_code == 0);
    const auto& table = r.report["table"];
    REQUIRE(table.size() == 4);
    std::size_t expect = 2;
    for (const auto& row : table) {
      CHECK(row["simplicial"] == "pass");
      CHECK(row["face_cyclic"] == "pass");
      CHECK(row["cyclicity"] == "pass");
      CHECK(row["cotensor_dim"] == expect);
      expect *= 2;
    }
    CHECK(r.report["warnings"].empty());
    CHECK(r.report["b_squared_zero"] == true);
  }

  auto o = opts("cyclic", "graded_c2_q.json");
  o.module = data("kc2_ayd_swap_q.json");
  o.levels = 2;
  auto swap = run_command(o);
  CHECK(swap.exit_code == 0);
  CHECK_FALSE(swap.report["warnings"].empty());
  CHECK(swap.report["table"][0]["cyclicity"] == "FAIL at (1)");
  CHECK(cli::render_text(swap.report).find("warning: ") != std::string::npos);

  o = opts("cyclic", "graded_c2xc2_q.json");
  o.module = data("kc2_ayd_q.json");
  o.levels = 9;
  auto big = run_command(o);
  CHECK(big.exit_code == 3);
  CHECK(big.report["error"]["kind"] == "resource");

  o.levels = 2;
  CHECK(run_command(o).exit_code == 0);

  o = opts("cyclic", "graded_c2_q.json");
  CHECK(run_command(o).exit_code == 2);  // no --module
  o.module = data("kc2_ayd_f3.json");
  CHECK(run_command(o).exit_code == 2);  // different fields
}

TEST_CASE("HOPFGAL_MAX_DIM") {
  auto o = opts("cyclic", "graded_c2_q.json");
  o.module = data("kc2_ayd_q.json");
  o.levels = 3;
  setenv("HOPFGAL_MAX_DIM", "16", 1);
  CHECK(run_command(o).exit_code == 3);
  setenv("HOPFGAL_MAX_DIM", "many", 1);
  CHECK(run_command(o).exit_code == 2);
  unsetenv("HOPFGAL_MAX_DIM");
  CHECK(run_command(o).exit_code == 0);
}

TEST_CASE("bar-shift") {
  auto o = opts("bar-shift", "gaussian.json");
  o.module = data("smash_SH.json");
  o.levels = 4;
  auto sh = run_command(o);
  REQUIRE(sh.exit_code == 0);
  std::size_t d = 4;
  for (const auto& row : sh.report["table"]) {
    CHECK(row["dim"] == d);
    CHECK(row["shifted_dim"] == d);
    CHECK(row["iso_bijective"] == true);
    d *= 2;
  }
  CHECK(sh.report["verdict"] == "pass");

  o.module = data("smash_S.json");
  auto s = run_command(o);
  CHECK(s.exit_code == 0);
  CHECK(s.report["dim_fixed"] == 1);

  o.module = data("smash_S_plus_SH.json");
  auto sum = run_command(o);
  CHECK(sum.exit_code == 0);
  CHECK(sum.report["morita_dims"] == true);

  o = opts("bar-shift", "gaussian_trivial.json");
  auto bad = run_command(o);
  CHECK(bad.exit_code == 1);
  CHECK(std::string(bad.report["error"]["message"]).find("Morita hypothesis") != std::string::npos);

  auto f3 = write_temp("smash_f3.json", R"({"field": {"kind": "Fp", "p": 3}, "smash_module": "S"})");
  o = opts("bar-shift", "gaussian.json");
  o.module = f3;
  CHECK(run_command(o).report["error"]["kind"] == "domain-mismatch");
}

TEST_CASE("assoc-order") {
  auto o = opts("assoc-order", "zi_lattice.json");
  o.candidates = "1,0;0,1;1,1";
  auto r = run_command(o);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["order_basis"] == Report::array({"1", "(1 + σ)/2"}));
  CHECK(r.report["hopf_order"] == true);
  CHECK(r.report["integral_generator"] == "(1 + σ)/2");
  CHECK(r.report["tame"] == true);
  CHECK(r.report["free_generator"] == "1 + i");
  CHECK(r.report["generator_hnf"] == Report::array({Report::array({1, 0}), Report::array({0, 1})}));
  std::string text = cli::render_text(r.report);
  CHECK(text.find("𝒜: {1, (1 + σ)/2}\n") != std::string::npos);
  CHECK(text.find("Hopf order: yes\n") != std::string::npos);
  CHECK(text.find("tame: yes\n") != std::string::npos);
  CHECK(text.find("generator: 1 + i\n") != std::string::npos);

  o.order = "group-ring";
  auto g = run_command(o);
  CHECK(g.report["tame"] == false);
  CHECK(g.report["invariant_factors"] == Report::array({2}));
  CHECK(g.report["free_generator"] == "not searched (not tame)");

  o = opts("assoc-order", "zzeta3_lattice.json");
  o.order = "group-ring";
  CHECK(run_command(o).report["tame"] == true);

  o = opts("assoc-order", "zi_lattice.json");
  o.candidates = "1,0";
  CHECK(run_command(o).report["free_generator"] == "inconclusive");
  o.candidates = "1,0,0";
  CHECK(run_command(o).exit_code == 2);
  o.candidates.reset();
  o.order = "maximal";
  CHECK(run_command(o).exit_code == 2);
  CHECK(run("assoc-order", "gaussian.json").exit_code == 2);
}

namespace {

std::vector<CommandOptions> every_command() {
  std::vector<CommandOptions> out;
  for (auto f : {"sweedler.json", "corrupted_antipode.json", "malformed.json", "kc2_ayd_swap_q.json"})
    out.push_back(opts("verify", f));
  for (auto f : {"qc2.json", "sweedler.json", "f2c2.json", "taft3_f7.json"}) out.push_back(opts("integrals", f));
  for (auto f : {"f4_frobenius.json", "dual_numbers.json", "gaussian.json", "f4_trivial.json"}) {
    out.push_back(opts("galois", f));
    out.push_back(opts("tame", f));
  }
  for (auto f : {"f2c2_trivial_module.json", "qc2_regular_comodule.json", "zi_lattice.json"})
    out.push_back(opts("homology", f));
  auto c = opts("cyclic", "graded_c2_q.json");
  c.module = data("kc2_ayd_swap_q.json");
  c.levels = 2;
  out.push_back(c);
  auto b = opts("bar-shift", "gaussian.json");
  b.module = data("smash_S_plus_SH.json");
  b.levels = 2;
  out.push_back(b);
  auto a = opts("assoc-order", "zi_lattice.json");
  a.candidates = "1,0;1,1";
  out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("JSON round trip re-renders identical text") {
  for (const auto& o : every_command()) {
    CAPTURE(o.command);
    CAPTURE(o.path);
    auto r = run_command(o);
    auto back = Report::parse(r.report.dump(2));
    CHECK(back == r.report);
    CHECK(cli::render_text(back) == cli::render_text(r.report));
    CHECK(r.report["version"] == "1");
    CHECK(r.report["exit_code"] == r.exit_code);
  }
}

TEST_CASE("reruns are byte-identical") {
  for (const auto& o : every_command()) {
    CAPTURE(o.path);
    CHECK(run_command(o).report.dump(2) == run_command(o).report.dump(2));
  }
}

TEST_CASE("candidate parsing") {
  auto c = io::parse_candidates("1,0; 0,1 ;1/2,-3", 2);
  REQUIRE(c.size() == 3);
  CHECK(c[2][0] == Scalar::parse(Domain::rationals(), "1/2"));
  CHECK(c[2][1] == Scalar(Domain::rationals(), -3));
  CHECK_THROWS_AS(io::parse_candidates("", 2), FormatError);
  CHECK_THROWS_AS(io::parse_candidates("1,x", 2), FormatError);
}

TEST_CASE("input kinds are detected from keys") {
  using io::InputKind;
  CHECK(io::classify(io::load_file(data("qc2.json"))) == InputKind::Hopf);
  CHECK(io::classify(io::load_file(data("gaussian.json"))) == InputKind::Extension);
  CHECK(io::classify(io::load_file(data("graded_c2_q.json"))) == InputKind::ComoduleExtension);
  CHECK(io::classify(io::load_file(data("f2c2_trivial_module.json"))) == InputKind::Module);
  CHECK(io::classify(io::load_file(data("qc2_regular_comodule.json"))) == InputKind::Comodule);
  CHECK(io::classify(io::load_file(data("kc2_ayd_q.json"))) == InputKind::AydModule);
  CHECK(io::classify(io::load_file(data("smash_SH.json"))) == InputKind::SmashModule);
  CHECK(io::classify(io::load_file(data("zi_lattice.json"))) == InputKind::Lattice);
  CHECK_THROWS_AS(io::classify(io::Json::array()), FormatError);
}

TEST_CASE("explicit and builtin group algebras agree") {
  auto a = io::load_hopf(io::load_file(data("qc2.json")));
  auto b = io::load_hopf(io::load_file(data("qc2_explicit.json")));
  CHECK(a.structure_equal(b));
  CHECK(dual(dual(a)).structure_equal(a));
}
