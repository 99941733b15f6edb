#include "hopfgal/cli.hpp"

#include <algorithm>
#include <map>
#include <new>
#include <set>
#include <sstream>

#include "hopfgal/errors.hpp"
#include "hopfgal/io.hpp"

namespace hopfgal::cli {

namespace {

using io::Json;

// Rational vectors with a common denominator D > 1 print as (…)/D.
std::string format_element(std::span<const Scalar> v, const std::vector<std::string>& labels) {
  if (v.empty() || v[0].domain().kind() == DomainKind::Prime) return format_vector(v, labels);
  mpz_class den = 1;
  std::size_t terms = 0;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    ++terms;
    mpz_class dx = x.to_rational().get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), dx.get_mpz_t());
  }
  if (den == 1 || terms < 2) return format_vector(v, labels);
  Vector scaled;
  Scalar d(v[0].domain(), mpq_class(den));
  for (const auto& x : v) scaled.push_back(x * d);
  return "(" + format_vector(scaled, labels) + ")/" + den.get_str();
}

Report elements(const std::vector<Vector>& vs, const std::vector<std::string>& labels) {
  Report out = Report::array();
  for (const auto& v : vs) out.push_back(format_element(v, labels));
  return out;
}

Report witness(const std::vector<std::size_t>& w) {
  Report out = Report::array();
  for (auto i : w) out.push_back(i);
  return out;
}

Report check_json(const AxiomCheck& c) {
  Report j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  if (!c.passed) j["witness"] = witness(c.witness);
  return j;
}

Report checks_json(const VerificationReport& r) {
  Report out = Report::array();
  for (const auto& c : r.checks) out.push_back(check_json(c));
  return out;
}

Report integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Report(z.get_si());
  return Report(z.get_str());
}

Report integers_json(const std::vector<mpz_class>& zs) {
  Report out = Report::array();
  for (const auto& z : zs) out.push_back(integer_json(z));
  return out;
}

Report matrix_json(const LinearMap& m) {
  Report out = Report::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Report row = Report::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class q = m(r, c).to_rational();
      row.push_back(q.get_den() == 1 ? integer_json(q.get_num()) : Report(q.get_str()));
    }
    out.push_back(row);
  }
  return out;
}

std::string verdict_word(const AxiomCheck& c) {
  if (c.passed) return "pass";
  std::string w = "FAIL at (";
  for (std::size_t i = 0; i < c.witness.size(); ++i) w += (i ? ", " : "") + std::to_string(c.witness[i]);
  return w + ")";
}

Limits limits_for(std::size_t levels) {
  Limits l = Limits::from_env();
  l.max_level = levels;
  return l;
}

// --------------------------------------------------------------- commands

int cmd_verify(const Json& doc, Report& r) {
  r["input_kind"] = io::to_string(io::classify(doc));
  auto rep = io::verify_document(doc);
  r["checks"] = checks_json(rep);
  bool ok = rep.all_passed();
  r["verdict"] = ok ? "all axioms hold" : "axiom failure";
  return ok ? kOk : kMismatch;
}

int cmd_integrals(const Json& doc, Report& r) {
  auto h = io::load_hopf(doc);
  auto left = left_integrals(h);
  auto right = right_integrals(h);
  r["field"] = h.domain().name();
  r["hopf_dim"] = h.dim();
  r["dim_left_integrals"] = left.basis.size();
  r["dim_right_integrals"] = right.basis.size();
  r["left_integral"] = format_element(left.basis.at(0), h.labels());
  r["right_integral"] = format_element(right.basis.at(0), h.labels());
  r["semisimple"] = is_semisimple(h);
  r["unimodular"] = left.basis.size() == 1 && right.basis.size() == 1 &&
                    rank(LinearMap::from_rows(h.domain(), {left.basis[0], right.basis[0]}, h.dim())) == 1;
  r["verdict"] = left.basis.size() == 1 && right.basis.size() == 1 ? "one-dimensional integrals" : "unexpected";
  return kOk;
}

bool expectation_met(const std::string& e, const ExtensionReport& x) {
  if (e == "tame") return x.tame;
  if (e == "hopf-galois") return x.hopf_galois;
  return !x.tame && !x.hopf_galois;
}

int cmd_extension(const Json& doc, Report& r, const CommandOptions& o, bool tame) {
  if (o.expect && *o.expect != "tame" && *o.expect != "hopf-galois" && *o.expect != "neither")
    throw FormatError("--expect must be tame, hopf-galois or neither");
  auto d = io::load_extension(doc);
  auto x = classify_extension(d);
  const auto& sl = d.algebra.labels;
  r["field"] = d.domain().name();
  r["hopf_dim"] = d.dim_h();
  r["algebra_dim"] = d.dim_s();
  r["invariants"] = elements(x.invariants, sl);
  r["invariants_trivial"] = x.invariants_trivial;
  r["faithful"] = x.faithful;
  r["rank_equal"] = x.rank_equal;
  r["integral_image"] = elements(x.integral_image, sl);
  r["integral_surjective"] = x.integral_surjective;
  r["j_bijective"] = x.j_bijective;
  r["gamma_bijective"] = x.gamma_bijective;
  r["homology_dim"] = x.homology_dim;
  r["commutative"] = x.commutative;
  r["cocommutative"] = x.cocommutative;
  r["local"] = x.local;
  r["semisimple"] = x.semisimple;
  r["equivalence_applies"] = x.equivalence_applies;
  r["hopf_galois_form"] = x.hopf_galois_form;
  r["tame"] = x.tame;
  r["hopf_galois"] = x.hopf_galois;
  if (!tame && x.gamma_bijective) r["gamma_algebra_map"] = gamma_is_algebra_map(d);
  if (tame) {
    Report t;
    if (!x.invariants_trivial) {
      t["present"] = false;
      t["obstruction"] = "S^H is not the base field";
    } else {
      auto ti = total_integral_map(d);
      t["present"] = ti.present;
      if (ti.present) {
        std::vector<Vector> images;
        for (std::size_t i = 0; i < ti.g->cols(); ++i) images.push_back(ti.g->column(i));
        t["images"] = elements(images, sl);
        t["z"] = format_element(ti.z, sl);
        t["unital"] = ti.unital;
        t["h_linear"] = ti.h_linear;
      } else {
        t["obstruction"] = ti.obstruction;
      }
    }
    r["total_integral"] = t;
  }
  r["classification"] = to_string(x.classification);
  r["verdict"] = to_string(x.classification);
  if (!o.expect) return kOk;
  bool met = expectation_met(*o.expect, x);
  r["expect"] = *o.expect;
  r["expect_met"] = met;
  return met ? kOk : kMismatch;
}

OrderData choose_order(const LatticeModule& s, const std::string& order) {
  if (order == "associated") return associated_order(s);
  if (order == "group-ring") return integral_group_ring(s.extension.hopf);
  throw FormatError("--order must be associated or group-ring");
}

void lattice_tame_fields(const IntegralTameReport& t, const LatticeModule& s, Report& r) {
  const auto& sl = s.extension.algebra.labels;
  r["fixed"] = elements(t.fixed, sl);
  r["integral_image"] = elements(t.integral_image, sl);
  r["invariant_factors"] = integers_json(t.factors);
  r["obstructed_primes"] = t.free_obstruction ? Report("all") : integers_json(t.obstructed_primes);
  r["fixed_is_base"] = t.fixed_is_base;
  r["faithful"] = t.faithful;
  r["rank_equal"] = t.rank_equal;
  r["homology_zero"] = t.homology_zero;
  r["tame"] = t.tame;
  r["field_tame"] = t.field_tame;
}

int cmd_homology(const Json& doc, Report& r, const CommandOptions& o) {
  auto kind = io::classify(doc);
  r["input_kind"] = io::to_string(kind);
  HomologyReport h;
  switch (kind) {
    case io::InputKind::Lattice: {
      auto s = io::load_lattice(doc);
      std::string order = o.order.value_or("group-ring");
      auto ord = choose_order(s, order);
      auto t = tame_check_integral(ord, s);
      r["order"] = order;
      r["rank"] = s.rank();
      lattice_tame_fields(t, s, r);
      r["verdict"] = t.homology_zero ? "H_0 = 0" : "H_0 ≠ 0";
      return kOk;
    }
    case io::InputKind::Module: {
      auto [hopf, act] = io::load_module(doc);
      h = hopfological_homology_module(hopf, act);
      break;
    }
    case io::InputKind::Extension: {
      auto d = io::load_extension(doc);
      h = hopfological_homology_module(d.hopf, d.action);
      break;
    }
    case io::InputKind::Comodule:
      h = hopfological_homology_comodule(io::load_comodule(doc));
      break;
    case io::InputKind::ComoduleExtension:
      h = hopfological_homology_comodule(io::load_comodule_extension(doc).coaction);
      break;
    default:
      throw FormatError("homology needs a module, comodule, extension or lattice file");
  }
  r["dim_invariants"] = h.dim_invariants;
  r["dim_integral_image"] = h.dim_integral_image;
  r["h0_dim"] = h.dim;
  r["verdict"] = h.dim == 0 ? "H_0 = 0" : "H_0 ≠ 0";
  return kOk;
}

int cmd_cyclic(const Json& doc, Report& r, const CommandOptions& o) {
  if (!o.module) throw FormatError("cyclic needs --module with an AYD module file");
  auto s = io::load_any_comodule_algebra(doc);
  auto m = io::load_ayd_module(io::load_file(*o.module));
  std::size_t top = o.levels.value_or(4);
  CyclicModule t(std::move(s), std::move(m), limits_for(top));
  for (std::size_t n = 0; n <= top; ++n) t.limits().check_dim(t.dim(n), "level " + std::to_string(n));
  r["module"] = *o.module;
  r["levels"] = top;
  auto ayd = ayd_check(t.module());
  auto stable = stability_check(t.module());
  r["module_checks"] = Report::array({check_json(ayd), check_json(stable)});
  Report table = Report::array();
  bool structural = true, cyclic = true;
  Report warnings = Report::array();
  for (std::size_t n = 0; n <= top; ++n) {
    auto c = check_cyclic_identities(t, n);
    Report row;
    row["n"] = n;
    row["dim"] = c.dim;
    row["cotensor_dim"] = c.cotensor_dim;
    row["simplicial"] = verdict_word(c.simplicial);
    row["face_cyclic"] = verdict_word(c.face_cyclic);
    row["cyclicity"] = verdict_word(c.cyclicity);
    table.push_back(row);
    structural = structural && c.simplicial.passed && c.face_cyclic.passed;
    if (!c.cyclicity.passed) {
      cyclic = false;
      warnings.push_back("level " + std::to_string(n) + ": t_n^{n+1} is not the identity on the cotensor subspace");
    }
  }
  r["table"] = table;
  if (structural) {
    auto cx = cyclic_complex(t, top);
    check_complex(cx);
    r["b_squared_zero"] = true;
    Report hs = Report::array();
    for (auto x : homology(cx)) hs.push_back(x);
    r["homology_dims"] = hs;
  }
  if (!ayd.passed || !stable.passed)
    warnings.push_back("coefficients are not a stable anti-Yetter-Drinfeld module");
  r["verdict"] = !structural ? "simplicial structure fails" : cyclic ? "cyclic on the cotensor subspace" : "not cyclic";
  r["warnings"] = warnings;
  return structural ? kOk : kMismatch;
}

int cmd_bar_shift(const Json& doc, Report& r, const CommandOptions& o) {
  auto d = io::load_extension(doc);
  Json mdoc = o.module ? io::load_file(*o.module) : Json{{"smash_module", "S"}};
  auto m = io::load_smash_module(mdoc, d);
  std::size_t top = o.levels.value_or(4);
  auto rep = bar_shift_check(d, m, top, limits_for(top));
  r["module"] = o.module.value_or("S");
  r["levels"] = top;
  r["dim_M"] = m.dim;
  r["dim_S"] = d.dim_s();
  r["dim_fixed"] = rep.morita.fixed_points.size();
  r["morita_dims"] = m.dim == d.dim_s() * rep.morita.fixed_points.size();
  r["evaluation_bijective"] = rep.morita.bijective;
  Report table = Report::array();
  for (const auto& l : rep.levels) {
    Report row;
    row["n"] = l.n;
    row["dim"] = l.dim_left;
    row["shifted_dim"] = l.dim_right;
    row["iso_bijective"] = l.iso_bijective;
    if (l.commutes) row["commutes"] = *l.commutes;
    table.push_back(row);
  }
  r["table"] = table;
  r["verdict"] = rep.passed ? "pass" : "fail";
  return rep.passed ? kOk : kMismatch;
}

int cmd_assoc_order(const Json& doc, Report& r, const CommandOptions& o) {
  auto s = io::load_lattice(doc);
  std::string order = o.order.value_or("associated");
  auto ord = choose_order(s, order);
  const auto& hl = ord.hopf.labels();
  const auto& sl = s.extension.algebra.labels;
  auto hopf_checks = is_hopf_order(ord);
  r["order"] = order;
  r["order_basis"] = elements(ord.lattice.basis(), hl);
  r["hopf_order"] = hopf_checks.all_passed();
  r["checks"] = checks_json(hopf_checks);
  if (!hopf_checks.all_passed()) {
    r["verdict"] = "not a Hopf order";
    return kOk;
  }
  r["integral_generator"] = format_element(lattice_integrals(ord).basis().at(0), hl);
  auto t = tame_check_integral(ord, s);
  lattice_tame_fields(t, s, r);
  if (o.candidates) {
    auto cands = io::parse_candidates(*o.candidates, s.extension.dim_s());
    if (!t.tame) {
      r["free_generator"] = "not searched (not tame)";
    } else if (auto g = free_rank_one_generator(ord, s, cands)) {
      r["free_generator"] = format_element(g->generator, sl);
      r["generator_coordinates"] = matrix_json(g->coordinates);
      r["generator_hnf"] = matrix_json(g->hnf);
    } else {
      r["free_generator"] = "inconclusive";
    }
  }
  r["verdict"] = t.tame ? "tame" : "not tame";
  return kOk;
}

std::pair<std::string, int> error_kind(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const FormatError&) {
    return {"format", kInputError};
  } catch (const UnsupportedDomain&) {
    return {"unsupported-domain", kInputError};
  } catch (const DomainMismatch&) {
    return {"domain-mismatch", kInputError};
  } catch (const nlohmann::json::exception&) {
    return {"format", kInputError};
  } catch (const ResourceError&) {
    return {"resource", kResource};
  } catch (const std::bad_alloc&) {
    return {"resource", kResource};
  } catch (const PreconditionError&) {
    return {"precondition", kMismatch};
  } catch (const InconsistencyError&) {
    return {"inconsistency", kMismatch};
  } catch (const SingularMatrix&) {
    return {"singular-matrix", kMismatch};
  } catch (...) {
    return {"internal", kMismatch};
  }
}

// --------------------------------------------------------------- text

const std::map<std::string, std::string>& labels() {
  static const std::map<std::string, std::string> m = {
      {"dim_invariants", "dim V^H"},
      {"dim_integral_image", "dim I·V"},
      {"h0_dim", "H_0 dimension"},
      {"j_bijective", "j bijective"},
      {"gamma_bijective", "γ bijective"},
      {"gamma_algebra_map", "γ algebra map"},
      {"hopf_galois", "Hopf-Galois"},
      {"hopf_galois_form", "Hopf-Galois form"},
      {"hopf_order", "Hopf order"},
      {"order_basis", "𝒜"},
      {"field_tame", "tame over Q"},
      {"free_generator", "generator"},
      {"dim_M", "dim M"},
      {"dim_S", "dim S"},
      {"dim_fixed", "dim M^H"},
      {"morita_dims", "dim M = dim S · dim M^H"},
      {"b_squared_zero", "b∘b = 0"},
  };
  return m;
}

const std::set<std::string>& yes_no_keys() {
  static const std::set<std::string> s = {"hopf_order", "tame", "hopf_galois", "field_tame"};
  return s;
}

std::string label_of(const std::string& key) {
  auto it = labels().find(key);
  if (it != labels().end()) return it->second;
  std::string out = key;
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::string inline_value(const std::string& key, const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) {
    bool b = v.get<bool>();
    return yes_no_keys().count(key) ? (b ? "yes" : "no") : (b ? "true" : "false");
  }
  if (v.is_array()) {
    bool numeric = std::all_of(v.begin(), v.end(), [](const Report& x) { return x.is_number(); });
    std::string out = numeric ? "[" : "{";
    bool first = true;
    for (const auto& x : v) {
      out += (first ? "" : ", ") + inline_value(key, x);
      first = false;
    }
    return out + (numeric ? "]" : "}");
  }
  if (v.is_object()) {
    std::string out;
    for (auto it = v.begin(); it != v.end(); ++it)
      out += (out.empty() ? "" : ", ") + label_of(it.key()) + "=" + inline_value(it.key(), it.value());
    return out;
  }
  return v.dump();
}

bool is_check(const Report& v) { return v.is_object() && v.contains("name") && v.contains("passed"); }

void render_object(const Report& obj, const std::string& indent, std::ostringstream& out) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto& key = it.key();
    const auto& v = it.value();
    if (indent.empty() && (key == "version" || key == "exit_code")) continue;
    if (key == "warnings") {
      for (const auto& w : v) out << indent << "warning: " << inline_value(key, w) << "\n";
      continue;
    }
    if (v.is_object()) {
      out << indent << label_of(key) << ":\n";
      render_object(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      out << indent << label_of(key) << ":\n";
      for (const auto& x : v) {
        if (is_check(x)) {
          std::string line = x["passed"].get<bool>() ? "pass" : "FAIL";
          if (x.contains("witness")) {
            std::string w;
            for (const auto& i : x["witness"]) w += (w.empty() ? "" : ", ") + i.dump();
            line += " at (" + w + ")";
          }
          out << indent << "  " << x["name"].get<std::string>() << ": " << line << "\n";
        } else {
          out << indent << "  - " << inline_value(key, x) << "\n";
        }
      }
    } else if (v.is_array() && !v.empty() && v[0].is_array()) {
      out << indent << label_of(key) << ":\n";
      for (const auto& x : v) out << indent << "  " << inline_value(key, x) << "\n";
    } else {
      out << indent << label_of(key) << ": " << inline_value(key, v) << "\n";
    }
  }
}

}  // namespace

CommandResult run_command(const CommandOptions& opts) {
  CommandResult res;
  Report& r = res.report;
  r["version"] = kSchemaVersion;
  r["command"] = opts.command;
  r["input"] = opts.path;
  Report body;
  body["version"] = kSchemaVersion;
  body["command"] = opts.command;
  body["input"] = opts.path;
  try {
    Json doc = io::load_file(opts.path);
    int code;
    if (opts.command == "verify") code = cmd_verify(doc, body);
    else if (opts.command == "integrals") code = cmd_integrals(doc, body);
    else if (opts.command == "galois") code = cmd_extension(doc, body, opts, false);
    else if (opts.command == "tame") code = cmd_extension(doc, body, opts, true);
    else if (opts.command == "homology") code = cmd_homology(doc, body, opts);
    else if (opts.command == "cyclic") code = cmd_cyclic(doc, body, opts);
    else if (opts.command == "bar-shift") code = cmd_bar_shift(doc, body, opts);
    else if (opts.command == "assoc-order") code = cmd_assoc_order(doc, body, opts);
    else throw FormatError("unknown command \"" + opts.command + "\"");
    if (!body.contains("warnings")) body["warnings"] = Report::array();
    body["exit_code"] = code;
    res.report = std::move(body);
    res.exit_code = code;
  } catch (const std::exception& e) {
    auto [kind, code] = error_kind(std::current_exception());
    r["error"] = {{"kind", kind}, {"message", e.what()}};
    r["exit_code"] = code;
    res.exit_code = code;
  }
  return res;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  render_object(report, "", out);
  return out.str();
}

}  // namespace hopfgal::cli
