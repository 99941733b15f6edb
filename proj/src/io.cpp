#include "hopfgal/io.hpp"

#include <fstream>
#include <sstream>

#include "hopfgal/errors.hpp"

namespace hopfgal::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw FormatError(msg); }

const Json& field_of(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t parse_index(const Json& x, const std::string& where) {
  if (!x.is_number_integer() || (x.is_number_integer() && !x.is_number_unsigned() && x.get<long long>() < 0))
    fail(where + ": expected a non-negative integer");
  return x.get<std::size_t>();
}

std::vector<std::string> parse_labels(const Json& obj, const char* key, std::size_t dim) {
  std::vector<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  if (!it->is_array()) fail(std::string("\"") + key + "\" must be an array of strings");
  for (const auto& x : *it) {
    if (!x.is_string()) fail(std::string("\"") + key + "\" must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  if (out.size() != dim) fail(std::string("\"") + key + "\" has " + std::to_string(out.size()) + " entries, expected " +
                              std::to_string(dim));
  return out;
}

// Sparse tensor entries [i, j, k, c] (arity 4) or [i, j, c] (arity 3).
std::vector<Triple> parse_triples(Domain d, const Json& xs, std::size_t arity, const std::string& where) {
  if (!xs.is_array()) fail(where + ": expected an array of entries");
  std::vector<Triple> out;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const auto& e = xs[n];
    std::string at = where + " entry " + std::to_string(n);
    if (!e.is_array() || e.size() != arity) fail(at + ": expected " + std::to_string(arity) + " components");
    Triple t{parse_index(e[0], at), parse_index(e[1], at), arity == 4 ? parse_index(e[2], at) : 0,
             parse_scalar(d, e[arity - 1])};
    out.push_back(std::move(t));
  }
  return out;
}

void check_bounds(const std::vector<Triple>& ts, std::size_t a, std::size_t b, std::size_t c, const std::string& where) {
  for (std::size_t n = 0; n < ts.size(); ++n)
    if (ts[n].i >= a || ts[n].j >= b || ts[n].k >= c) fail(where + " entry " + std::to_string(n) + ": index out of range");
}

std::string witness_text(const AxiomCheck& c) {
  std::string w = "(";
  for (std::size_t i = 0; i < c.witness.size(); ++i) w += (i ? ", " : "") + std::to_string(c.witness[i]);
  return w + ")";
}

void require_report(const VerificationReport& r, const std::string& what) {
  if (const auto* f = r.first_failure())
    fail(what + " fails '" + f->name + "' at basis witness " + witness_text(*f));
}

std::size_t parse_dim(const Json& obj, const std::string& where) {
  std::size_t n = parse_index(field_of(obj, "dim", where), where + " dim");
  if (n == 0) fail(where + ": dim must be positive");
  return n;
}

// (a, s, t, c): the a-th matrix sends e_s to c e_t.
std::vector<LinearMap> matrices_from_triples(Domain d, const std::vector<Triple>& ts, std::size_t count,
                                             std::size_t dim) {
  std::vector<LinearMap> out(count, LinearMap(d, dim, dim));
  for (const auto& t : ts) out[t.i](t.k, t.j) += t.c;
  return out;
}

const Json& hopf_entry_of(const Json& doc) { return doc.contains("hopf") ? doc["hopf"] : doc; }

void check_field_matches(const Json& doc, Domain d) {
  if (doc.contains("field") && parse_domain(doc["field"]) != d)
    throw DomainMismatch("module file is over " + parse_domain(doc["field"]).name() + ", extension over " + d.name());
}

}  // namespace

std::string to_string(InputKind k) {
  switch (k) {
    case InputKind::Hopf: return "hopf";
    case InputKind::Extension: return "extension";
    case InputKind::ComoduleExtension: return "comodule-extension";
    case InputKind::Module: return "module";
    case InputKind::Comodule: return "comodule";
    case InputKind::AydModule: return "ayd-module";
    case InputKind::SmashModule: return "smash-module";
    case InputKind::Lattice: return "lattice";
  }
  return "?";
}

Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail(path + ": malformed JSON (" + std::string(e.what()) + ")");
  }
}

InputKind classify(const Json& doc) {
  if (!doc.is_object()) fail("top level must be an object");
  if (doc.contains("lattice")) return InputKind::Lattice;
  if (doc.contains("smash_module") || doc.contains("s_action")) return InputKind::SmashModule;
  if (doc.contains("left_coaction")) return InputKind::AydModule;
  if (doc.contains("coaction")) return doc.contains("algebra") ? InputKind::ComoduleExtension : InputKind::Comodule;
  if (doc.contains("action")) return doc.contains("algebra") ? InputKind::Extension : InputKind::Module;
  if (doc.contains("hopf") || doc.contains("builtin") || doc.contains("mult")) return InputKind::Hopf;
  fail("cannot tell the input kind from the keys");
}

Domain parse_domain(const Json& field) {
  const auto& kind = field_of(field, "kind", "field");
  if (!kind.is_string()) fail("field kind must be a string");
  auto k = kind.get<std::string>();
  if (k == "Q") return Domain::rationals();
  if (k == "Z") return Domain::integers();
  if (k == "Fp") {
    std::size_t p = parse_index(field_of(field, "p", "field"), "field p");
    if (p > 0xffffffffu) fail("field p out of range");
    return Domain::prime(static_cast<std::uint32_t>(p));
  }
  fail("unknown field kind \"" + k + "\"");
}

Scalar parse_scalar(Domain d, const Json& x) {
  if (x.is_string()) return Scalar::parse(d, x.get<std::string>());
  if (x.is_number_integer()) {
    if (x.is_number_unsigned()) return Scalar(d, mpq_class(mpz_class(std::to_string(x.get<unsigned long long>()))));
    return Scalar(d, mpq_class(mpz_class(std::to_string(x.get<long long>()))));
  }
  if (x.is_number_float()) fail("scalar " + x.dump() + " is a float; write it as a string such as \"1/2\"");
  fail("scalar " + x.dump() + " is not a string");
}

Vector parse_vector(Domain d, const Json& xs, std::size_t n) {
  if (!xs.is_array() || xs.size() != n) fail("expected a vector of " + std::to_string(n) + " scalars");
  Vector v;
  v.reserve(n);
  for (const auto& x : xs) v.push_back(parse_scalar(d, x));
  return v;
}

AlgebraData parse_algebra(const Json& entry, Domain d) {
  std::size_t dim = parse_dim(entry, "algebra");
  auto mult = parse_triples(d, field_of(entry, "mult", "algebra"), 4, "algebra mult");
  check_bounds(mult, dim, dim, dim, "algebra mult");
  auto unit = parse_vector(d, field_of(entry, "unit", "algebra"), dim);
  return AlgebraData::from_triples(d, dim, parse_labels(entry, "basis", dim), mult, std::move(unit));
}

HopfAlgebraData parse_hopf(const Json& entry, Domain d, bool verify) {
  HopfAlgebraData h;
  if (entry.is_object() && entry.contains("builtin")) {
    const auto& b = entry["builtin"];
    const auto& name_j = field_of(b, "name", "builtin");
    if (!name_j.is_string()) fail("builtin name must be a string");
    auto name = name_j.get<std::string>();
    if (name == "group_algebra") {
      const auto& tj = field_of(b, "table", "group_algebra");
      if (!tj.is_array() || tj.empty()) fail("group_algebra table must be a non-empty array");
      std::vector<std::vector<std::size_t>> table;
      for (const auto& row : tj) {
        if (!row.is_array()) fail("group_algebra table rows must be arrays");
        std::vector<std::size_t> r;
        for (const auto& x : row) r.push_back(parse_index(x, "group_algebra table"));
        table.push_back(std::move(r));
      }
      h = group_algebra(table, d, parse_labels(b, "labels", table.size()));
    } else if (name == "sweedler") {
      h = sweedler(d);
    } else if (name == "taft") {
      std::size_t n = parse_index(field_of(b, "n", "taft"), "taft n");
      h = taft(n, parse_scalar(d, field_of(b, "q", "taft")));
    } else if (name == "dual") {
      h = dual(parse_hopf(field_of(b, "of", "dual"), d, verify));
    } else {
      fail("unknown builtin \"" + name + "\"");
    }
  } else {
    auto a = parse_algebra(entry, d);
    std::size_t n = a.dim;
    auto comult = parse_triples(d, field_of(entry, "comult", "hopf"), 4, "comult");
    check_bounds(comult, n, n, n, "comult");
    auto counit = parse_vector(d, field_of(entry, "counit", "hopf"), n);
    auto anti = parse_triples(d, field_of(entry, "antipode", "hopf"), 3, "antipode");
    check_bounds(anti, n, n, 1, "antipode");
    h = HopfAlgebraData::from_triples(std::move(a), comult, std::move(counit), anti);
  }
  if (verify) require_report(verify_hopf(h), "Hopf algebra");
  return h;
}

Action parse_action(const Json& triples, const HopfAlgebraData& h, std::size_t dim) {
  auto ts = parse_triples(h.domain(), triples, 4, "action");
  check_bounds(ts, h.dim(), dim, dim, "action");
  return matrices_from_triples(h.domain(), ts, h.dim(), dim);
}

HopfAlgebraData load_hopf(const Json& doc, bool verify) {
  Domain d = parse_domain(field_of(doc, "field", "file"));
  return parse_hopf(hopf_entry_of(doc), d, verify);
}

ModuleAlgebraData load_extension(const Json& doc) {
  auto h = load_hopf(doc);
  auto a = parse_algebra(field_of(doc, "algebra", "extension"), h.domain());
  require_report(verify_algebra(a), "algebra");
  auto ts = parse_triples(h.domain(), field_of(doc, "action", "extension"), 4, "action");
  check_bounds(ts, h.dim(), a.dim, a.dim, "action");
  auto d = ModuleAlgebraData::from_triples(std::move(h), std::move(a), ts);
  require_report(verify_module_algebra(d), "module algebra");
  return d;
}

ComoduleAlgebraData load_comodule_extension(const Json& doc) {
  auto h = load_hopf(doc);
  auto a = parse_algebra(field_of(doc, "algebra", "extension"), h.domain());
  require_report(verify_algebra(a), "algebra");
  auto ts = parse_triples(h.domain(), field_of(doc, "coaction", "extension"), 4, "coaction");
  check_bounds(ts, a.dim, a.dim, h.dim(), "coaction");
  auto c = ComoduleData::from_triples(std::move(h), a.dim, ts);
  ComoduleAlgebraData s{std::move(a), std::move(c), false};
  require_report(verify_comodule_algebra(s), "comodule algebra");
  return s;
}

ComoduleAlgebraData load_any_comodule_algebra(const Json& doc) {
  switch (classify(doc)) {
    case InputKind::ComoduleExtension: return load_comodule_extension(doc);
    case InputKind::Extension: return comodule_algebra(load_extension(doc));
    default: fail("expected an extension file (hopf, algebra and action or coaction)");
  }
}

std::pair<HopfAlgebraData, Action> load_module(const Json& doc) {
  auto h = load_hopf(doc);
  std::size_t dim = parse_dim(doc, "module");
  auto act = parse_action(field_of(doc, "action", "module"), h, dim);
  require_report(verify_module(h, act), "module");
  return {std::move(h), std::move(act)};
}

ComoduleData load_comodule(const Json& doc) {
  auto h = load_hopf(doc);
  std::size_t dim = parse_dim(doc, "comodule");
  auto ts = parse_triples(h.domain(), field_of(doc, "coaction", "comodule"), 4, "coaction");
  check_bounds(ts, dim, dim, h.dim(), "coaction");
  return ComoduleData::from_triples(std::move(h), dim, ts);
}

AydModuleData load_ayd_module(const Json& doc) {
  auto h = load_hopf(doc);
  std::size_t dim = parse_dim(doc, "module");
  auto act = parse_action(field_of(doc, "action", "module"), h, dim);
  auto ts = parse_triples(h.domain(), field_of(doc, "left_coaction", "module"), 4, "left_coaction");
  check_bounds(ts, dim, h.dim(), dim, "left_coaction");
  LinearMap left(h.domain(), h.dim() * dim, dim);
  for (const auto& t : ts) left(t.j * dim + t.k, t.i) += t.c;
  return AydModuleData::from_left_coaction(std::move(h), std::move(act), left);
}

SmashModule load_smash_module(const Json& doc, const ModuleAlgebraData& d) {
  if (!doc.is_object()) fail("module file: expected an object");
  check_field_matches(doc, d.domain());
  SmashModule m;
  if (doc.contains("smash_module")) {
    const auto& w = doc["smash_module"];
    if (!w.is_string()) fail("smash_module must be \"S\", \"S#H\" or \"S+S#H\"");
    auto name = w.get<std::string>();
    if (name == "S") m = canonical_smash_module(d);
    else if (name == "S#H") m = regular_smash_module(d);
    else if (name == "S+S#H") m = direct_sum(canonical_smash_module(d), regular_smash_module(d));
    else fail("smash_module must be \"S\", \"S#H\" or \"S+S#H\"");
  } else {
    m.dim = parse_dim(doc, "module");
    auto st = parse_triples(d.domain(), field_of(doc, "s_action", "module"), 4, "s_action");
    check_bounds(st, d.dim_s(), m.dim, m.dim, "s_action");
    m.s_action = matrices_from_triples(d.domain(), st, d.dim_s(), m.dim);
    auto ht = parse_triples(d.domain(), field_of(doc, "h_action", "module"), 4, "h_action");
    check_bounds(ht, d.dim_h(), m.dim, m.dim, "h_action");
    m.h_action = matrices_from_triples(d.domain(), ht, d.dim_h(), m.dim);
  }
  require_report(verify_smash_module(d, m), "S#H-module");
  return m;
}

LatticeModule load_lattice(const Json& doc) {
  Domain q = parse_domain(field_of(doc, "field", "file"));
  if (q != Domain::rationals()) throw UnsupportedDomain("lattice files are over Q, got " + q.name());
  auto d = load_extension(doc);
  const auto& rows = field_of(doc, "lattice", "lattice file");
  if (!rows.is_array()) fail("lattice must be an array of basis vectors");
  std::vector<Vector> basis;
  for (const auto& r : rows) basis.push_back(parse_vector(q, r, d.dim_s()));
  auto l = Lattice::from_basis(basis, d.dim_s());
  return LatticeModule::make(std::move(d), std::move(l));
}

namespace {

void append(VerificationReport& out, const VerificationReport& r, const std::string& prefix) {
  for (auto c : r.checks) {
    c.name = prefix + ": " + c.name;
    out.checks.push_back(std::move(c));
  }
}

}  // namespace

VerificationReport verify_document(const Json& doc) {
  auto kind = classify(doc);
  auto h = load_hopf(doc, false);
  VerificationReport out = verify_hopf(h);
  if (!out.all_passed() || kind == InputKind::Hopf) return out;
  Domain d = h.domain();
  switch (kind) {
    case InputKind::Extension:
    case InputKind::Lattice: {
      auto a = parse_algebra(field_of(doc, "algebra", "extension"), d);
      auto ar = verify_algebra(a);
      append(out, ar, "algebra");
      if (!ar.all_passed()) return out;
      auto ts = parse_triples(d, field_of(doc, "action", "extension"), 4, "action");
      check_bounds(ts, h.dim(), a.dim, a.dim, "action");
      append(out, verify_module_algebra(ModuleAlgebraData::from_triples(h, std::move(a), ts)), "module algebra");
      break;
    }
    case InputKind::ComoduleExtension: {
      auto a = parse_algebra(field_of(doc, "algebra", "extension"), d);
      auto ar = verify_algebra(a);
      append(out, ar, "algebra");
      if (!ar.all_passed()) return out;
      auto ts = parse_triples(d, field_of(doc, "coaction", "extension"), 4, "coaction");
      check_bounds(ts, a.dim, a.dim, h.dim(), "coaction");
      LinearMap rho(d, a.dim * h.dim(), a.dim);
      for (const auto& t : ts) rho(t.j * h.dim() + t.k, t.i) += t.c;
      auto cr = verify_comodule(h, rho);
      append(out, cr, "comodule");
      if (!cr.all_passed()) return out;
      ComoduleAlgebraData s{std::move(a), ComoduleData::from_map(h, rho), false};
      auto sr = verify_comodule_algebra(s);
      sr.checks.erase(sr.checks.begin());  // the comodule check again
      append(out, sr, "comodule algebra");
      break;
    }
    case InputKind::Module: {
      std::size_t dim = parse_dim(doc, "module");
      append(out, verify_module(h, parse_action(field_of(doc, "action", "module"), h, dim)), "module");
      break;
    }
    case InputKind::Comodule: {
      std::size_t dim = parse_dim(doc, "comodule");
      auto ts = parse_triples(d, field_of(doc, "coaction", "comodule"), 4, "coaction");
      check_bounds(ts, dim, dim, h.dim(), "coaction");
      LinearMap rho(d, dim * h.dim(), dim);
      for (const auto& t : ts) rho(t.j * h.dim() + t.k, t.i) += t.c;
      append(out, verify_comodule(h, rho), "comodule");
      break;
    }
    case InputKind::AydModule: {
      std::size_t dim = parse_dim(doc, "module");
      auto act = parse_action(field_of(doc, "action", "module"), h, dim);
      auto mr = verify_module(h, act);
      append(out, mr, "module");
      if (!mr.all_passed()) return out;
      auto m = load_ayd_module(doc);
      VerificationReport ar;
      ar.checks = {ayd_check(m), stability_check(m)};
      append(out, ar, "AYD");
      break;
    }
    default:
      fail("verify does not apply to " + to_string(kind) + " files");
  }
  return out;
}

std::vector<Vector> parse_candidates(const std::string& text, std::size_t dim) {
  std::vector<Vector> out;
  std::stringstream all(text);
  std::string item;
  while (std::getline(all, item, ';')) {
    Vector v;
    std::stringstream one(item);
    std::string x;
    while (std::getline(one, x, ',')) v.push_back(Scalar::parse(Domain::rationals(), x));
    if (v.size() != dim)
      fail("candidate \"" + item + "\" has " + std::to_string(v.size()) + " coordinates, expected " + std::to_string(dim));
    out.push_back(std::move(v));
  }
  if (out.empty()) fail("empty candidate list");
  return out;
}

}  // namespace hopfgal::io
