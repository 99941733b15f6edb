#include <CLI11.hpp>

#include <iostream>

#include "hopfgal/cli.hpp"

int main(int argc, char** argv) {
  using namespace hopfgal::cli;
  CLI::App app{"hopfgal: exact checks for finite-dimensional Hopf algebras and their actions"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "print the JSON report instead of text");

  CommandOptions opts;
  std::size_t levels = 0;
  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("path", opts.path, "input file")->required();
    sub->add_flag("--json", json, "print the JSON report instead of text");
    return sub;
  };
  add("verify", "check the axioms of a Hopf algebra, module or extension file");
  add("integrals", "left and right integrals and semisimplicity");
  for (const char* name : {"galois", "tame"}) {
    auto* sub = add(name, name[0] == 'g' ? "Hopf-Galois report of an extension" : "tameness report with the total integral");
    sub->add_option("--expect", opts.expect, "tame, hopf-galois or neither")
        ->check(CLI::IsMember({"tame", "hopf-galois", "neither"}));
  }
  add("homology", "Hopfological homology of a module, comodule, extension or lattice")
      ->add_option("--order", opts.order, "associated or group-ring (lattices)")
      ->check(CLI::IsMember({"associated", "group-ring"}));
  for (const char* name : {"cyclic", "bar-shift"}) {
    auto* sub = add(name, name[0] == 'c' ? "cyclic operators on T_n(S, M)" : "degreewise bar complex shift");
    sub->add_option("--module", opts.module, "module file");
    sub->add_option("--levels", levels, "top level N (default 4)");
  }
  auto* ao = add("assoc-order", "associated order, integrals and tameness over Z");
  ao->add_option("--order", opts.order, "associated or group-ring")->check(CLI::IsMember({"associated", "group-ring"}));
  ao->add_option("--candidates", opts.candidates, "candidate generators, e.g. \"1,0;0,1;1,1\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }
  auto* sub = app.get_subcommands().front();
  opts.command = sub->get_name();
  if (sub->get_option_no_throw("--levels") && sub->count("--levels")) opts.levels = levels;

  auto res = run_command(opts);
  if (json) {
    std::cout << res.report.dump(2) << "\n";
  } else if (res.report.contains("error")) {
    std::cerr << render_text(res.report);
  } else {
    std::cout << render_text(res.report);
  }
  return res.exit_code;
}
