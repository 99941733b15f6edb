#include "hopfgal/cocyclic.hpp"

#include <cstdlib>
#include <limits>

#include "hopfgal/errors.hpp"

namespace hopfgal {

namespace {

constexpr std::size_t kHuge = std::numeric_limits<std::size_t>::max() / 4;

// Saturates instead of overflowing; anything this large fails the bound.
std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (b != 0 && r > kHuge / b) return kHuge;
    r *= b;
  }
  return r;
}

std::size_t mul_sat(std::size_t a, std::size_t b) { return (a != 0 && b > kHuge / a) ? kHuge : a * b; }

// Index [a_0|…|a_{k-1}]m with slots in base `b` and a tail of size `tail`.
struct Split {
  std::vector<std::size_t> a;
  std::size_t m;
};

Split split(std::size_t idx, std::size_t slots, std::size_t b, std::size_t tail) {
  Split s{std::vector<std::size_t>(slots), idx % tail};
  idx /= tail;
  for (std::size_t k = slots; k-- > 0;) {
    s.a[k] = idx % b;
    idx /= b;
  }
  return s;
}

std::size_t join(const std::vector<std::size_t>& a, std::size_t b, std::size_t m, std::size_t tail) {
  std::size_t idx = 0;
  for (auto x : a) idx = idx * b + x;
  return idx * tail + m;
}

std::string witness_string(const std::vector<std::size_t>& w) {
  std::string out;
  for (auto i : w) out += (out.empty() ? "" : ", ") + std::to_string(i);
  return "(" + out + ")";
}

// Σ v_k L_k
LinearMap combine(Domain d, std::size_t n, const std::vector<LinearMap>& maps, std::span<const Scalar> v) {
  LinearMap out(d, n, n);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out = out + maps[k].scaled(v[k]);
  return out;
}

// S^{⊗slots} ⊗ T -> S^{⊗(slots-1)} ⊗ T multiplying slots i and i+1.
LinearMap multiply_slots(const AlgebraData& s, std::size_t slots, std::size_t i, std::size_t tail) {
  const std::size_t b = s.dim;
  LinearMap out(s.domain, ipow(b, slots - 1) * tail, ipow(b, slots) * tail);
  for (std::size_t col = 0; col < out.cols(); ++col) {
    auto x = split(col, slots, b, tail);
    auto prod = s.basis_product(x.a[i], x.a[i + 1]);
    std::vector<std::size_t> y = x.a;
    y.erase(y.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    for (std::size_t k = 0; k < b; ++k) {
      if (prod[k].is_zero()) continue;
      y[i] = k;
      out(join(y, b, x.m, tail), col) += prod[k];
    }
  }
  return out;
}

void check_s_action(const AlgebraData& s, const std::vector<LinearMap>& act, std::size_t dim) {
  if (act.size() != s.dim) throw FormatError("S-action needs one matrix per basis element of S");
  for (const auto& a : act)
    if (a.rows() != dim || a.cols() != dim) throw FormatError("S-action matrix has wrong shape");
}

// L_{st} = L_s L_t and L_1 = id
AxiomCheck s_module_check(const AlgebraData& s, const std::vector<LinearMap>& act, std::size_t dim) {
  AxiomCheck c{"S-module"};
  for (std::size_t a = 0; a < s.dim && c.passed; ++a)
    for (std::size_t b = 0; b < s.dim; ++b)
      if (!(combine(s.domain, dim, act, s.basis_product(a, b)) == act[a] * act[b])) {
        c.passed = false;
        c.witness = {a, b};
        break;
      }
  if (c.passed && !(combine(s.domain, dim, act, s.unit) == LinearMap::identity(s.domain, dim))) {
    c.passed = false;
    c.witness = {};
  }
  return c;
}

bool same_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.dim() == b.dim() && a.domain() == b.domain() && a.structure_equal(b);
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  if (const char* v = std::getenv("HOPFGAL_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v, &end, 10);
    if (*v == '\0' || *end != '\0' || x == 0)
      throw FormatError(std::string("HOPFGAL_MAX_DIM must be a positive integer, got '") + v + "'");
    l.max_dim = static_cast<std::size_t>(x);
  }
  return l;
}

void Limits::check_dim(std::size_t dim, const std::string& what) const {
  if (dim > max_dim)
    throw ResourceError(what + " has dimension " + (dim >= kHuge ? std::string("beyond 2^60") : std::to_string(dim)) +
                        ", above the bound " + std::to_string(max_dim));
}

void Limits::check_level(std::size_t n) const {
  if (n > max_level)
    throw ResourceError("level " + std::to_string(n) + " exceeds the level bound " + std::to_string(max_level));
}

// ---------------------------------------------------------------------------
// comodules

VerificationReport verify_comodule(const HopfAlgebraData& c, const LinearMap& rho) {
  const std::size_t n = rho.cols(), dc = c.dim();
  if (rho.rows() != n * dc) throw FormatError("coaction has wrong shape");
  const auto idm = LinearMap::identity(c.domain(), n), idc = LinearMap::identity(c.domain(), dc);
  VerificationReport rep;
  AxiomCheck coassoc{"coassociativity"}, counit{"counit"};
  for (std::size_t m = 0; m < n; ++m) {
    const Vector col = rho.column(m);
    if (coassoc.passed && apply_tensor(rho, idc, col) != apply_tensor(idm, c.comult, col)) {
      coassoc.passed = false;
      coassoc.witness = {m};
    }
    if (counit.passed && apply_tensor(idm, c.counit, col) != unit_vector(c.domain(), n, m)) {
      counit.passed = false;
      counit.witness = {m};
    }
  }
  rep.checks = {coassoc, counit};
  return rep;
}

ComoduleData ComoduleData::from_map(HopfAlgebraData c, LinearMap rho) {
  if (!(rho.domain() == c.domain())) throw DomainMismatch("coaction and Hopf algebra over different domains");
  auto rep = verify_comodule(c, rho);
  if (const auto* f = rep.first_failure())
    throw FormatError("coaction fails " + f->name + " at basis element " + witness_string(f->witness));
  ComoduleData out;
  out.dim = rho.cols();
  out.coaction = std::move(rho);
  out.hopf = std::move(c);
  return out;
}

ComoduleData ComoduleData::from_triples(HopfAlgebraData c, std::size_t dim, const std::vector<Triple>& rho) {
  LinearMap m(c.domain(), dim * c.dim(), dim);
  for (const auto& t : rho) {
    if (t.i >= dim || t.j >= dim || t.k >= c.dim())
      throw FormatError("coaction triple (" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " +
                        std::to_string(t.k) + ") out of range");
    m(t.j * c.dim() + t.k, t.i) += t.c;
  }
  return from_map(std::move(c), std::move(m));
}

ComoduleData ComoduleData::trivial(HopfAlgebraData c, std::size_t dim) {
  LinearMap m(c.domain(), dim * c.dim(), dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < c.dim(); ++k) m(i * c.dim() + k, i) = c.algebra.unit[k];
  return from_map(std::move(c), std::move(m));
}

ComoduleData ComoduleData::regular(HopfAlgebraData c) {
  LinearMap m = c.comult;
  return from_map(std::move(c), std::move(m));
}

ComoduleData module_to_comodule(const HopfAlgebraData& h, const Action& action) {
  auto rep = verify_module(h, action);
  if (const auto* f = rep.first_failure()) throw PreconditionError("not an H-module: '" + f->name + "' fails");
  const std::size_t n = action.empty() ? 0 : action.front().rows(), dh = h.dim();
  LinearMap rho(h.domain(), n * dh, n);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m = 0; m < n; ++m) rho(a * dh + i, m) = action[i](a, m);
  return ComoduleData::from_map(dual(h), std::move(rho));
}

Action comodule_to_module(const ComoduleData& c) {
  const std::size_t n = c.dim, dc = c.hopf.dim();
  Action out(dc, LinearMap(c.domain(), n, n));
  for (std::size_t j = 0; j < dc; ++j)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m = 0; m < n; ++m) out[j](a, m) = c.coaction(a * dc + j, m);
  return out;
}

std::vector<Vector> coinvariants(const ComoduleData& c) {
  const std::size_t n = c.dim, dc = c.hopf.dim();
  LinearMap triv(c.domain(), n * dc, n);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < dc; ++k) triv(m * dc + k, m) = c.hopf.algebra.unit[k];
  return kernel_basis(c.coaction - triv);
}

HomologyReport hopfological_homology_comodule(const ComoduleData& c) {
  const auto dual_h = dual(c.hopf);
  const auto action = comodule_to_module(c);
  auto co = coinvariants(c);
  std::vector<Vector> img;
  if (c.dim > 0) img = integral_image(dual_h, action);
  if (!is_subspace(c.domain(), c.dim, img, co)) throw InconsistencyError("I·M is not contained in M^coH");
  return {co.size(), img.size(), co.size() - img.size()};
}

ComoduleAlgebraData comodule_algebra(const ModuleAlgebraData& d) {
  return {d.algebra, module_to_comodule(d.hopf, d.action), true};
}

VerificationReport verify_comodule_algebra(const ComoduleAlgebraData& s) {
  const auto& a = s.algebra;
  const auto& rho = s.coaction.coaction;
  VerificationReport rep;
  AxiomCheck com{"comodule"};
  if (const auto* f = verify_comodule(s.hopf(), rho).first_failure()) {
    com.passed = false;
    com.witness = f->witness;
  }
  rep.checks.push_back(com);

  AxiomCheck mult{"multiplicative"};
  for (std::size_t i = 0; i < a.dim && mult.passed; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (rho.apply(a.basis_product(i, j)) !=
          tensor_multiply(a, s.hopf().algebra, rho.column(i), rho.column(j))) {
        mult.passed = false;
        mult.witness = {i, j};
        break;
      }
  rep.checks.push_back(mult);

  AxiomCheck unit{"unital"};
  if (rho.apply(a.unit) != tensor(a.unit, s.hopf().algebra.unit)) unit.passed = false;
  rep.checks.push_back(unit);
  return rep;
}

// ---------------------------------------------------------------------------
// anti-Yetter-Drinfeld modules

AydModuleData AydModuleData::from_left_coaction(HopfAlgebraData h, Action action, const LinearMap& left) {
  const std::size_t dh = h.dim(), n = left.cols();
  if (left.rows() != dh * n) throw FormatError("left coaction has wrong shape");
  auto rep = verify_module(h, action);
  if (const auto* f = rep.first_failure())
    throw FormatError("module action fails '" + f->name + "' at " + witness_string(f->witness));
  if (!antipode_bijective(h)) throw PreconditionError("anti-Yetter-Drinfeld modules need a bijective antipode");
  LinearMap rho(h.domain(), n * dh, n);
  for (std::size_t k = 0; k < dh; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m = 0; m < n; ++m) rho(a * dh + k, m) = left(k * n + a, m);
  AydModuleData out;
  out.coaction = ComoduleData::from_map(co_opposite(h), std::move(rho));
  out.hopf = std::move(h);
  out.action = std::move(action);
  return out;
}

LinearMap AydModuleData::left_coaction() const {
  const std::size_t dh = hopf.dim(), n = dim();
  LinearMap out(domain(), dh * n, n);
  for (std::size_t k = 0; k < dh; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m = 0; m < n; ++m) out(k * n + a, m) = coaction.coaction(a * dh + k, m);
  return out;
}

AxiomCheck ayd_check(const AydModuleData& md) {
  const auto& h = md.hopf;
  if (!antipode_bijective(h)) throw PreconditionError("anti-Yetter-Drinfeld check needs a bijective antipode");
  const Domain d = md.domain();
  const std::size_t dh = h.dim(), n = md.dim();
  const auto left = md.left_coaction();
  const auto delta2 = h.double_comult();
  AxiomCheck out{"anti-Yetter-Drinfeld"};
  for (std::size_t hi = 0; hi < dh; ++hi) {
    const Vector d2 = delta2.column(hi);
    for (std::size_t m = 0; m < n; ++m) {
      Vector lhs = left.apply(md.action[hi].column(m));
      Vector rhs = zero_vector(d, dh * n);
      const Vector lm = left.column(m);
      for (std::size_t t = 0; t < d2.size(); ++t) {
        if (d2[t].is_zero()) continue;
        const std::size_t a = t / (dh * dh), b = (t / dh) % dh, c = t % dh;
        for (std::size_t u = 0; u < lm.size(); ++u) {
          if (lm[u].is_zero()) continue;
          const std::size_t p = u / n, q = u % n;
          // h₁ m₋₁ α(h₃) ⊗ h₂·m₀
          Vector hv = h.algebra.multiply(h.algebra.basis_product(a, p), h.antipode.column(c));
          Vector mv = md.action[b].column(q);
          Vector term = tensor(hv, mv);
          const Scalar coef = d2[t] * lm[u];
          for (std::size_t r = 0; r < term.size(); ++r)
            if (!term[r].is_zero()) rhs[r] += coef * term[r];
        }
      }
      if (lhs != rhs) {
        out.passed = false;
        out.witness = {hi, m};
        return out;
      }
    }
  }
  return out;
}

AxiomCheck stability_check(const AydModuleData& md) {
  const std::size_t n = md.dim();
  const auto left = md.left_coaction();
  AxiomCheck out{"stability"};
  for (std::size_t m = 0; m < n; ++m) {
    Vector v = zero_vector(md.domain(), n);
    for (std::size_t u = 0; u < left.rows(); ++u) {
      const Scalar& c = left(u, m);
      if (c.is_zero()) continue;
      auto w = md.action[u / n].column(u % n);
      for (std::size_t k = 0; k < n; ++k) v[k] += c * w[k];
    }
    if (v != unit_vector(md.domain(), n, m)) {
      out.passed = false;
      out.witness = {m};
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// cotensor and the cyclic module

LinearMap tensor_power_coaction(const ComoduleAlgebraData& s, std::size_t slots) {
  const std::size_t ds = s.algebra.dim, dh = s.hopf().dim();
  const auto& rho = s.coaction.coaction;
  const auto& h = s.hopf().algebra;
  const std::size_t n = ipow(ds, slots);
  LinearMap out(s.algebra.domain, n * dh, n);
  for (std::size_t col = 0; col < n; ++col) {
    auto x = split(col, slots, ds, 1).a;
    Vector v = rho.column(x[0]);
    for (std::size_t j = 1; j < slots; ++j) {
      const Vector r = rho.column(x[j]);
      const std::size_t width = ipow(ds, j);
      Vector next = zero_vector(s.algebra.domain, width * ds * dh);
      for (std::size_t u = 0; u < v.size(); ++u) {
        if (v[u].is_zero()) continue;
        const std::size_t big = u / dh, hu = u % dh;
        for (std::size_t w = 0; w < r.size(); ++w) {
          if (r[w].is_zero()) continue;
          const std::size_t p = w / dh, c = w % dh;
          const Scalar coef = v[u] * r[w];
          const Vector hc = h.basis_product(hu, c);
          for (std::size_t g = 0; g < dh; ++g)
            if (!hc[g].is_zero()) next[(big * ds + p) * dh + g] += coef * hc[g];
        }
      }
      v = std::move(next);
    }
    for (std::size_t r = 0; r < v.size(); ++r) out(r, col) = v[r];
  }
  return out;
}

std::vector<Vector> cotensor(const ComoduleAlgebraData& s, std::size_t slots, const AydModuleData& m) {
  if (!same_hopf(s.hopf(), m.hopf)) throw DomainMismatch("S and M are comodules over different Hopf algebras");
  const std::size_t ds = s.algebra.dim, dh = m.hopf.dim(), dm = m.dim();
  const std::size_t nx = ipow(ds, slots);
  const auto p = tensor_power_coaction(s, slots);
  const auto left = m.left_coaction();
  LinearMap diff(s.algebra.domain, nx * dh * dm, nx * dm);
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t q = 0; q < dm; ++q) {
      const std::size_t col = a * dm + q;
      for (std::size_t r = 0; r < nx * dh; ++r)
        if (!p(r, a).is_zero()) diff(r * dm + q, col) += p(r, a);
      for (std::size_t r = 0; r < dh * dm; ++r)
        if (!left(r, q).is_zero()) diff((a * dh + r / dm) * dm + r % dm, col) -= left(r, q);
    }
  return kernel_basis(diff);
}

CyclicModule::CyclicModule(ComoduleAlgebraData s, AydModuleData m, Limits limits)
    : s_(std::move(s)), m_(std::move(m)), limits_(limits) {
  if (!same_hopf(s_.hopf(), m_.hopf)) throw DomainMismatch("S and M are comodules over different Hopf algebras");
  if (const auto* f = verify_comodule_algebra(s_).first_failure())
    throw PreconditionError("S is not a right H-comodule algebra: '" + f->name + "' fails at " +
                            witness_string(f->witness));
}

std::size_t CyclicModule::dim(std::size_t n) const {
  return mul_sat(ipow(s_.algebra.dim, n + 1), m_.dim());
}

LinearMap CyclicModule::face(std::size_t n, std::size_t i) const {
  if (n == 0 || i > n) throw PreconditionError("face d_" + std::to_string(i) + " undefined at level " + std::to_string(n));
  limits_.check_dim(dim(n), "level " + std::to_string(n));
  const std::size_t ds = s_.algebra.dim, dm = m_.dim(), dh = m_.hopf.dim();
  if (i < n) return multiply_slots(s_.algebra, n + 1, i, dm);
  // [a_n⁰ a_0 | a_1 … a_{n-1}] a_n¹ m
  const auto& rho = s_.coaction.coaction;
  LinearMap out(s_.algebra.domain, dim(n - 1), dim(n));
  for (std::size_t col = 0; col < dim(n); ++col) {
    auto x = split(col, n + 1, ds, dm);
    std::vector<std::size_t> y(x.a.begin(), x.a.end() - 1);
    for (std::size_t u = 0; u < ds * dh; ++u) {
      const Scalar& r = rho(u, x.a[n]);
      if (r.is_zero()) continue;
      const Vector prod = s_.algebra.basis_product(u / dh, x.a[0]);
      const Vector am = m_.action[u % dh].column(x.m);
      for (std::size_t k = 0; k < ds; ++k) {
        if (prod[k].is_zero()) continue;
        y[0] = k;
        for (std::size_t q = 0; q < dm; ++q)
          if (!am[q].is_zero()) out(join(y, ds, q, dm), col) += r * prod[k] * am[q];
      }
    }
  }
  return out;
}

LinearMap CyclicModule::degeneracy(std::size_t n, std::size_t i) const {
  if (i > n) throw PreconditionError("degeneracy s_" + std::to_string(i) + " undefined at level " + std::to_string(n));
  limits_.check_dim(dim(n + 1), "level " + std::to_string(n + 1));
  const std::size_t ds = s_.algebra.dim, dm = m_.dim();
  const auto& unit = s_.algebra.unit;
  LinearMap out(s_.algebra.domain, dim(n + 1), dim(n));
  for (std::size_t col = 0; col < dim(n); ++col) {
    auto x = split(col, n + 1, ds, dm);
    std::vector<std::size_t> y = x.a;
    y.insert(y.begin() + static_cast<std::ptrdiff_t>(i) + 1, 0);
    for (std::size_t u = 0; u < ds; ++u) {
      if (unit[u].is_zero()) continue;
      y[i + 1] = u;
      out(join(y, ds, x.m, dm), col) += unit[u];
    }
  }
  return out;
}

LinearMap CyclicModule::cyclic(std::size_t n) const {
  limits_.check_dim(dim(n), "level " + std::to_string(n));
  const std::size_t ds = s_.algebra.dim, dm = m_.dim(), dh = m_.hopf.dim();
  const auto& rho = s_.coaction.coaction;
  // [a_n⁰ | a_0 … a_{n-1}] a_n¹ m
  LinearMap out(s_.algebra.domain, dim(n), dim(n));
  for (std::size_t col = 0; col < dim(n); ++col) {
    auto x = split(col, n + 1, ds, dm);
    std::vector<std::size_t> y(n + 1);
    for (std::size_t k = 0; k < n; ++k) y[k + 1] = x.a[k];
    for (std::size_t u = 0; u < ds * dh; ++u) {
      const Scalar& r = rho(u, x.a[n]);
      if (r.is_zero()) continue;
      y[0] = u / dh;
      const Vector am = m_.action[u % dh].column(x.m);
      for (std::size_t q = 0; q < dm; ++q)
        if (!am[q].is_zero()) out(join(y, ds, q, dm), col) += r * am[q];
    }
  }
  return out;
}

std::vector<Vector> CyclicModule::cotensor_basis(std::size_t n) const {
  limits_.check_dim(mul_sat(dim(n), m_.hopf.dim()), "cotensor target at level " + std::to_string(n));
  return cotensor(s_, n + 1, m_);
}

CyclicLevelData cyclic_level(const CyclicModule& t, std::size_t n) {
  t.limits().check_level(n);
  t.limits().check_dim(t.dim(n), "level " + std::to_string(n));
  CyclicLevelData out;
  out.n = n;
  out.dim = t.dim(n);
  if (n > 0)
    for (std::size_t i = 0; i <= n; ++i) out.faces.push_back(t.face(n, i));
  for (std::size_t i = 0; i <= n; ++i) out.degeneracies.push_back(t.degeneracy(n, i));
  out.cyclic = t.cyclic(n);
  return out;
}

namespace {

// Records the first column where two maps differ.
bool record(AxiomCheck& c, const LinearMap& lhs, const LinearMap& rhs, std::vector<std::size_t> tag) {
  if (auto col = first_difference(lhs, rhs)) {
    c.passed = false;
    tag.push_back(*col);
    c.witness = std::move(tag);
    return false;
  }
  return true;
}

}  // namespace

CyclicCheck check_cyclic_identities(const CyclicModule& t, std::size_t n) {
  t.limits().check_level(n);
  t.limits().check_dim(t.dim(n), "level " + std::to_string(n));
  CyclicCheck out;
  out.level = n;
  out.dim = t.dim(n);
  const Domain d = t.algebra().algebra.domain;

  // (a) identities whose highest level is n
  auto& a = out.simplicial;
  if (n >= 2)
    for (std::size_t j = 1; j <= n && a.passed; ++j)
      for (std::size_t i = 0; i < j && a.passed; ++i)
        record(a, t.face(n - 1, i) * t.face(n, j), t.face(n - 1, j - 1) * t.face(n, i), {0, i, j});
  if (n >= 1) {
    const std::size_t k = n - 1;
    for (std::size_t j = 0; j <= k && a.passed; ++j)
      for (std::size_t i = 0; i <= k + 1 && a.passed; ++i) {
        const auto lhs = t.face(n, i) * t.degeneracy(k, j);
        if (i < j)
          record(a, lhs, t.degeneracy(k - 1, j - 1) * t.face(k, i), {1, i, j});
        else if (i == j || i == j + 1)
          record(a, lhs, LinearMap::identity(d, t.dim(k)), {1, i, j});
        else
          record(a, lhs, t.degeneracy(k - 1, j) * t.face(k, i - 1), {1, i, j});
      }
  }
  if (n >= 2) {
    const std::size_t k = n - 2;
    for (std::size_t j = 0; j <= k && a.passed; ++j)
      for (std::size_t i = 0; i <= j && a.passed; ++i)
        record(a, t.degeneracy(k + 1, i) * t.degeneracy(k, j), t.degeneracy(k + 1, j + 1) * t.degeneracy(k, i),
               {2, i, j});
  }

  // (b)
  if (n >= 1)
    record(out.face_cyclic, t.face(n, n) * t.cyclic(n), t.cyclic(n - 1) * t.face(n, n - 1), {});

  // (c)
  auto basis = t.cotensor_basis(n);
  out.cotensor_dim = basis.size();
  const auto tn = t.cyclic(n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    Vector v = basis[b];
    for (std::size_t k = 0; k <= n; ++k) v = tn.apply(v);
    if (v != basis[b]) {
      out.cyclicity.passed = false;
      out.cyclicity.witness = {b};
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// chain complexes

void check_complex(const ChainComplexData& c) {
  for (std::size_t n = 1; n + 1 <= c.differentials.size(); ++n)
    if (!(c.differentials[n - 1] * c.differentials[n]).is_zero())
      throw InconsistencyError("b_" + std::to_string(n) + " ∘ b_" + std::to_string(n + 1) + " ≠ 0");
}

std::vector<std::size_t> homology(const ChainComplexData& c) {
  std::vector<std::size_t> ranks(c.dims.size() + 1, 0);  // ranks[n] = rank b_n
  for (std::size_t n = 1; n <= c.differentials.size(); ++n) ranks[n] = rank(c.differentials[n - 1]);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < c.top(); ++n) out.push_back(c.dims[n] - ranks[n] - ranks[n + 1]);
  return out;
}

ChainComplexData cyclic_complex(const CyclicModule& t, std::size_t top) {
  ChainComplexData c;
  const Domain d = t.algebra().algebra.domain;
  for (std::size_t n = 0; n <= top; ++n) {
    t.limits().check_dim(t.dim(n), "level " + std::to_string(n));
    c.dims.push_back(t.dim(n));
  }
  for (std::size_t n = 1; n <= top; ++n) {
    LinearMap b(d, t.dim(n - 1), t.dim(n));
    for (std::size_t i = 0; i <= n; ++i) {
      auto f = t.face(n, i);
      b = i % 2 == 0 ? b + f : b - f;
    }
    c.differentials.push_back(std::move(b));
  }
  check_complex(c);
  return c;
}

ChainComplexData bar_complex(const AlgebraData& s, const std::vector<LinearMap>& s_action, std::size_t top,
                             const Limits& limits) {
  const std::size_t dm = s_action.empty() ? 0 : s_action.front().rows();
  check_s_action(s, s_action, dm);
  const std::size_t ds = s.dim;
  ChainComplexData c;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t dim = mul_sat(ipow(ds, n), dm);
    limits.check_dim(dim, "B_" + std::to_string(n));
    c.dims.push_back(dim);
  }
  // S ⊗ M -> M
  LinearMap act(s.domain, dm, ds * dm);
  for (std::size_t a = 0; a < ds; ++a)
    for (std::size_t q = 0; q < dm; ++q)
      for (std::size_t r = 0; r < dm; ++r) act(r, a * dm + q) = s_action[a](r, q);
  for (std::size_t n = 1; n <= top; ++n) {
    LinearMap b(s.domain, c.dims[n - 1], c.dims[n]);
    for (std::size_t i = 1; i <= n; ++i) {
      auto f = i < n ? multiply_slots(s, n, i - 1, dm) : kronecker(LinearMap::identity(s.domain, ipow(ds, n - 1)), act);
      b = i % 2 == 0 ? b + f : b - f;
    }
    c.differentials.push_back(std::move(b));
  }
  check_complex(c);
  return c;
}

// ---------------------------------------------------------------------------
// S#H-modules, Morita, bar shift

SmashModule canonical_smash_module(const ModuleAlgebraData& d) {
  SmashModule m;
  m.dim = d.dim_s();
  for (std::size_t i = 0; i < d.dim_s(); ++i) m.s_action.push_back(d.algebra.left_mult(d.algebra.basis(i)));
  m.h_action = d.action;
  return m;
}

SmashModule regular_smash_module(const ModuleAlgebraData& d) {
  const auto sp = smash(d);
  SmashModule m;
  m.dim = sp.dim;
  for (std::size_t i = 0; i < d.dim_s(); ++i)
    m.s_action.push_back(sp.left_mult(tensor(d.algebra.basis(i), d.hopf.algebra.unit)));
  for (std::size_t j = 0; j < d.dim_h(); ++j)
    m.h_action.push_back(sp.left_mult(tensor(d.algebra.unit, d.hopf.algebra.basis(j))));
  return m;
}

SmashModule direct_sum(const SmashModule& a, const SmashModule& b) {
  if (a.s_action.size() != b.s_action.size() || a.h_action.size() != b.h_action.size())
    throw FormatError("direct sum of modules over different algebras");
  SmashModule m;
  m.dim = a.dim + b.dim;
  for (std::size_t i = 0; i < a.s_action.size(); ++i) m.s_action.push_back(hopfgal::direct_sum(a.s_action[i], b.s_action[i]));
  for (std::size_t i = 0; i < a.h_action.size(); ++i) m.h_action.push_back(hopfgal::direct_sum(a.h_action[i], b.h_action[i]));
  return m;
}

VerificationReport verify_smash_module(const ModuleAlgebraData& d, const SmashModule& m) {
  check_s_action(d.algebra, m.s_action, m.dim);
  VerificationReport rep;
  rep.checks.push_back(s_module_check(d.algebra, m.s_action, m.dim));
  AxiomCheck hm{"H-module"};
  if (const auto* f = verify_module(d.hopf, m.h_action).first_failure()) {
    hm.passed = false;
    hm.witness = f->witness;
  }
  rep.checks.push_back(hm);

  AxiomCheck comp{"compatibility"};
  const std::size_t dh = d.dim_h();
  for (std::size_t h = 0; h < dh && comp.passed; ++h) {
    const Vector delta = d.hopf.comult.column(h);
    for (std::size_t s = 0; s < d.dim_s(); ++s) {
      LinearMap rhs(d.domain(), m.dim, m.dim);
      for (std::size_t u = 0; u < delta.size(); ++u) {
        if (delta[u].is_zero()) continue;
        auto ls = combine(d.domain(), m.dim, m.s_action, d.action[u / dh].column(s));
        rhs = rhs + (ls * m.h_action[u % dh]).scaled(delta[u]);
      }
      if (!(m.h_action[h] * m.s_action[s] == rhs)) {
        comp.passed = false;
        comp.witness = {h, s};
        break;
      }
    }
  }
  rep.checks.push_back(comp);
  return rep;
}

std::vector<Vector> fixed_points_smash(const ModuleAlgebraData& d, const SmashModule& m) {
  return module_invariants(d.hopf, m.h_action);
}

MoritaReport morita_decomposition(const ModuleAlgebraData& d, const SmashModule& m) {
  if (!is_bijective(galois_map_j(d)))
    throw PreconditionError("Morita hypothesis fails: j: S#H → End(S) is not bijective");
  if (const auto* f = verify_smash_module(d, m).first_failure())
    throw PreconditionError("not an S#H-module: '" + f->name + "' fails at " + witness_string(f->witness));
  MoritaReport r;
  r.fixed_points = fixed_points_smash(d, m);
  const std::size_t k = r.fixed_points.size();
  r.evaluation = LinearMap(d.domain(), m.dim, d.dim_s() * k);
  for (std::size_t a = 0; a < d.dim_s(); ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto v = m.s_action[a].apply(r.fixed_points[b]);
      for (std::size_t q = 0; q < m.dim; ++q) r.evaluation(q, a * k + b) = v[q];
    }
  r.bijective = is_bijective(r.evaluation);
  return r;
}

BarShiftReport bar_shift_check(const ModuleAlgebraData& d, const SmashModule& m, std::size_t top,
                               const Limits& limits) {
  BarShiftReport rep;
  rep.morita = morita_decomposition(d, m);
  const Domain dom = d.domain();
  const std::size_t ds = d.dim_s(), k = rep.morita.fixed_points.size();
  const auto bar = bar_complex(d.algebra, m.s_action, top, limits);
  std::optional<LinearMap> inv;
  if (rep.morita.bijective) inv = invert(rep.morita.evaluation);

  // b' on B_{n+1}(S, M^H): the n faces multiplying adjacent slots
  auto shifted_b = [&](std::size_t n) {
    LinearMap b(dom, mul_sat(ipow(ds, n), k), mul_sat(ipow(ds, n + 1), k));
    for (std::size_t i = 1; i <= n; ++i) {
      auto f = multiply_slots(d.algebra, n + 1, i - 1, k);
      b = i % 2 == 0 ? b + f : b - f;
    }
    return b;
  };

  rep.passed = rep.morita.bijective;
  std::optional<LinearMap> prev;
  for (std::size_t n = 0; n <= top; ++n) {
    ShiftLevel l;
    l.n = n;
    l.dim_left = bar.dims[n];
    l.dim_right = mul_sat(ipow(ds, n + 1), k);
    limits.check_dim(l.dim_right, "B_" + std::to_string(n + 1) + "(S, M^H)");
    if (inv) {
      auto phi = kronecker(LinearMap::identity(dom, ipow(ds, n)), *inv);
      l.iso_bijective = is_bijective(phi);
      if (n == 0)
        l.commutes = true;
      else
        l.commutes = *prev * bar.differentials[n - 1] == shifted_b(n) * phi;
      prev = std::move(phi);
    }
    rep.passed = rep.passed && l.dim_left == l.dim_right && l.iso_bijective;
    rep.levels.push_back(std::move(l));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// relative Hopf modules and the comodule-side shift

RelativeHopfModule relative_hopf_module_regular(const ComoduleAlgebraData& s) {
  RelativeHopfModule m;
  m.dim = s.algebra.dim;
  for (std::size_t i = 0; i < m.dim; ++i) m.s_action.push_back(s.algebra.left_mult(s.algebra.basis(i)));
  m.coaction = s.coaction;
  return m;
}

RelativeHopfModule relative_hopf_module_free(const ComoduleAlgebraData& s, std::size_t k) {
  const std::size_t ds = s.algebra.dim, dh = s.hopf().dim();
  const Domain d = s.algebra.domain;
  RelativeHopfModule m;
  m.dim = ds * k;
  const auto id = LinearMap::identity(d, k);
  for (std::size_t i = 0; i < ds; ++i) m.s_action.push_back(kronecker(s.algebra.left_mult(s.algebra.basis(i)), id));
  LinearMap rho(d, m.dim * dh, m.dim);
  for (std::size_t a = 0; a < ds; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t u = 0; u < ds * dh; ++u) rho(((u / dh) * k + b) * dh + u % dh, a * k + b) = s.coaction.coaction(u, a);
  m.coaction = ComoduleData::from_map(s.hopf(), std::move(rho));
  return m;
}

VerificationReport verify_relative_hopf_module(const ComoduleAlgebraData& s, const RelativeHopfModule& m) {
  check_s_action(s.algebra, m.s_action, m.dim);
  if (!same_hopf(s.hopf(), m.coaction.hopf)) throw DomainMismatch("S and M are comodules over different Hopf algebras");
  VerificationReport rep;
  rep.checks.push_back(s_module_check(s.algebra, m.s_action, m.dim));
  AxiomCheck comp{"relative Hopf module"};
  const auto& h = s.hopf();
  const std::size_t dh = h.dim();
  const auto& rs = s.coaction.coaction;
  const auto& rm = m.coaction.coaction;
  for (std::size_t a = 0; a < s.algebra.dim && comp.passed; ++a)
    for (std::size_t q = 0; q < m.dim; ++q) {
      Vector lhs = rm.apply(m.s_action[a].column(q));
      Vector rhs = zero_vector(h.domain(), m.dim * dh);
      for (std::size_t u = 0; u < rs.rows(); ++u) {
        if (rs(u, a).is_zero()) continue;
        for (std::size_t w = 0; w < rm.rows(); ++w) {
          if (rm(w, q).is_zero()) continue;
          auto term = tensor(m.s_action[u / dh].column(w / dh), h.algebra.basis_product(u % dh, w % dh));
          const Scalar c = rs(u, a) * rm(w, q);
          for (std::size_t r = 0; r < term.size(); ++r)
            if (!term[r].is_zero()) rhs[r] += c * term[r];
        }
      }
      if (lhs != rhs) {
        comp.passed = false;
        comp.witness = {a, q};
        break;
      }
    }
  rep.checks.push_back(comp);
  return rep;
}

LinearMap comodule_galois_map(const ComoduleAlgebraData& s) {
  const std::size_t ds = s.algebra.dim, dh = s.hopf().dim();
  const auto& rho = s.coaction.coaction;
  LinearMap out(s.algebra.domain, ds * dh, ds * ds);
  for (std::size_t a = 0; a < ds; ++a)
    for (std::size_t b = 0; b < ds; ++b)
      for (std::size_t u = 0; u < ds * dh; ++u) {
        if (rho(u, b).is_zero()) continue;
        auto prod = s.algebra.basis_product(a, u / dh);
        for (std::size_t k = 0; k < ds; ++k)
          if (!prod[k].is_zero()) out(k * dh + u % dh, a * ds + b) += rho(u, b) * prod[k];
      }
  return out;
}

TShiftReport t_shift_check(const ComoduleAlgebraData& s, const RelativeHopfModule& m, std::size_t top,
                           const Limits& limits) {
  const Domain d = s.algebra.domain;
  const std::size_t ds = s.algebra.dim, dh = s.hopf().dim(), dm = m.dim;
  const auto& alg = s.algebra;
  TShiftReport rep;
  rep.base = coinvariants(s.coaction);

  // S ⊗_R S as S ⊗ S modulo sr ⊗ t - s ⊗ rt
  std::vector<Vector> rel;
  for (const auto& r : rep.base)
    for (std::size_t a = 0; a < ds; ++a)
      for (std::size_t c = 0; c < ds; ++c) {
        Vector v = tensor(alg.multiply(alg.basis(a), r), alg.basis(c));
        Vector w = tensor(alg.basis(a), alg.multiply(r, alg.basis(c)));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
        rel.push_back(std::move(v));
      }
  rep.dim_tensor_over_base = ds * ds - span_basis(d, ds * ds, rel).size();
  rep.gamma_rank = rank(comodule_galois_map(s));
  rep.gamma_bijective = rep.gamma_rank == ds * dh && rep.dim_tensor_over_base == ds * dh;
  if (!rep.gamma_bijective)
    throw PreconditionError("singular Galois matrix: γ: S ⊗_R S → S ⊗ H has rank " + std::to_string(rep.gamma_rank) +
                            " with dim S ⊗_R S = " + std::to_string(rep.dim_tensor_over_base) +
                            " and dim S ⊗ H = " + std::to_string(ds * dh) + "; S/R is not Hopf-Galois");
  if (const auto* f = verify_relative_hopf_module(s, m).first_failure())
    throw PreconditionError("M is not a relative Hopf module: '" + f->name + "' fails at " +
                            witness_string(f->witness));

  rep.coinvariants = coinvariants(m.coaction);
  const std::size_t k = rep.coinvariants.size();
  rep.evaluation = LinearMap(d, dm, ds * k);
  for (std::size_t a = 0; a < ds; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto v = m.s_action[a].apply(rep.coinvariants[b]);
      for (std::size_t q = 0; q < dm; ++q) rep.evaluation(q, a * k + b) = v[q];
    }
  // S ⊗_R M^co
  std::size_t dim_over = ds * k;
  if (rep.base.size() > 1) {
    auto w = LinearMap::from_columns(d, rep.coinvariants, dm);
    std::vector<Vector> rel2;
    for (const auto& r : rep.base)
      for (std::size_t a = 0; a < ds; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          auto rw = combine(d, dm, m.s_action, r).apply(rep.coinvariants[b]);
          auto coords = solve(w, rw);
          if (!coords) throw InconsistencyError("R does not preserve M^coH");
          Vector v = tensor(alg.multiply(alg.basis(a), r), unit_vector(d, k, b));
          Vector u = tensor(alg.basis(a), *coords);
          for (std::size_t i = 0; i < v.size(); ++i) v[i] -= u[i];
          rel2.push_back(std::move(v));
        }
    dim_over -= span_basis(d, ds * k, rel2).size();
  }
  rep.evaluation_bijective = rank(rep.evaluation) == dm && dim_over == dm;

  rep.levels_checked = rep.base.size() == 1;
  rep.passed = rep.evaluation_bijective;
  if (rep.levels_checked) {
    std::optional<LinearMap> inv;
    if (rep.evaluation_bijective) inv = invert(rep.evaluation);
    for (std::size_t n = 0; n <= top; ++n) {
      ShiftLevel l;
      l.n = n;
      l.dim_left = mul_sat(ipow(ds, n + 1), dm);
      l.dim_right = mul_sat(ipow(ds, n + 2), k);
      limits.check_dim(l.dim_left, "T_" + std::to_string(n) + "(S, M)");
      limits.check_dim(l.dim_right, "T_" + std::to_string(n + 1) + "(S, M^co)");
      if (inv) l.iso_bijective = is_bijective(kronecker(LinearMap::identity(d, ipow(ds, n + 1)), *inv));
      rep.passed = rep.passed && l.dim_left == l.dim_right && l.iso_bijective;
      rep.levels.push_back(l);
    }
  }
  return rep;
}

}  // namespace hopfgal
