#include "hopfgal/actions.hpp"

#include "hopfgal/errors.hpp"

namespace hopfgal {

namespace {

void check_action_shape(const HopfAlgebraData& h, const Action& action, std::size_t dim) {
  if (action.size() != h.dim())
    throw FormatError("action has " + std::to_string(action.size()) + " matrices for a Hopf algebra of dimension " +
                      std::to_string(h.dim()));
  for (const auto& a : action)
    if (a.rows() != dim || a.cols() != dim) throw FormatError("action matrix has wrong shape");
}

std::size_t action_dim(const Action& action) { return action.empty() ? 0 : action.front().rows(); }

}  // namespace

LinearMap act_by(const HopfAlgebraData& h, const Action& action, std::span<const Scalar> elt) {
  const std::size_t n = action_dim(action);
  LinearMap out(h.domain(), n, n);
  for (std::size_t i = 0; i < elt.size(); ++i)
    if (!elt[i].is_zero()) out = out + action[i].scaled(elt[i]);
  return out;
}

LinearMap action_map(const HopfAlgebraData& h, const Action& action) {
  const std::size_t n = action_dim(action);
  LinearMap out(h.domain(), n * n, h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) out(a * n + b, k) = action[k](a, b);
  return out;
}

VerificationReport verify_module(const HopfAlgebraData& h, const Action& action) {
  const std::size_t n = action_dim(action);
  check_action_shape(h, action, n);
  VerificationReport rep;
  AxiomCheck law{"module"};
  for (std::size_t a = 0; a < h.dim() && law.passed; ++a)
    for (std::size_t b = 0; b < h.dim() && law.passed; ++b) {
      auto lhs = act_by(h, action, h.algebra.basis_product(a, b));
      auto rhs = action[a] * action[b];
      if (auto c = first_difference(lhs, rhs)) {
        law.passed = false;
        law.witness = {a, b, *c};
      }
    }
  rep.checks.push_back(law);

  AxiomCheck unit{"module unit"};
  if (auto c = first_difference(act_by(h, action, h.algebra.unit), LinearMap::identity(h.domain(), n))) {
    unit.passed = false;
    unit.witness = {*c};
  }
  rep.checks.push_back(unit);
  return rep;
}

std::vector<Vector> module_invariants(const HopfAlgebraData& h, const Action& action) {
  const std::size_t n = action_dim(action);
  const auto id = LinearMap::identity(h.domain(), n);
  std::vector<LinearMap> blocks;
  for (std::size_t k = 0; k < h.dim(); ++k) blocks.push_back(action[k] - id.scaled(h.counit(0, k)));
  return kernel_basis(vstack(blocks));
}

std::vector<Vector> integral_image(const HopfAlgebraData& h, const Action& action) {
  return image_basis(act_by(h, action, left_integral(h)));
}

HomologyReport hopfological_homology_module(const HopfAlgebraData& h, const Action& action) {
  auto rep = verify_module(h, action);
  if (const auto* f = rep.first_failure())
    throw PreconditionError("not an H-module: '" + f->name + "' fails");
  const std::size_t n = action_dim(action);
  auto inv = module_invariants(h, action);
  auto img = integral_image(h, action);
  if (!is_subspace(h.domain(), n, img, inv))
    throw InconsistencyError("I·V is not contained in V^H");
  return {inv.size(), img.size(), inv.size() - img.size()};
}

ModuleAlgebraData ModuleAlgebraData::from_triples(HopfAlgebraData hopf, AlgebraData algebra,
                                                  const std::vector<Triple>& action) {
  const std::size_t n = algebra.dim;
  Action a(hopf.dim(), LinearMap(algebra.domain, n, n));
  for (const auto& t : action) {
    if (t.i >= hopf.dim() || t.j >= n || t.k >= n)
      throw FormatError("action triple (" + std::to_string(t.i) + ", " + std::to_string(t.j) + ", " +
                        std::to_string(t.k) + ") out of range");
    a[t.i](t.k, t.j) += t.c;
  }
  return from_matrices(std::move(hopf), std::move(algebra), std::move(a));
}

ModuleAlgebraData ModuleAlgebraData::from_matrices(HopfAlgebraData hopf, AlgebraData algebra, Action action) {
  if (!(hopf.domain() == algebra.domain))
    throw DomainMismatch("Hopf algebra over " + hopf.domain().name() + ", algebra over " + algebra.domain.name());
  check_action_shape(hopf, action, algebra.dim);
  return {std::move(hopf), std::move(algebra), std::move(action)};
}

Vector ModuleAlgebraData::act(std::span<const Scalar> h, std::span<const Scalar> s) const {
  return act_by(hopf, action, h).apply(s);
}

VerificationReport verify_module_algebra(const ModuleAlgebraData& d) {
  auto rep = verify_module(d.hopf, d.action);
  const std::size_t n = d.dim_s(), m = d.dim_h();
  const auto& s = d.algebra;

  AxiomCheck law{"module-algebra"};
  for (std::size_t h = 0; h < m && law.passed; ++h) {
    const Vector delta = d.hopf.comult.column(h);
    for (std::size_t a = 0; a < n && law.passed; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Vector lhs = d.action[h].apply(s.basis_product(a, b));
        Vector rhs = zero_vector(d.domain(), n);
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t q = 0; q < m; ++q) {
            const Scalar& c = delta[p * m + q];
            if (c.is_zero()) continue;
            auto term = s.multiply(d.action[p].column(a), d.action[q].column(b));
            for (std::size_t k = 0; k < n; ++k) rhs[k] += c * term[k];
          }
        if (lhs != rhs) {
          law.passed = false;
          law.witness = {h, a, b};
          break;
        }
      }
  }
  rep.checks.push_back(law);

  AxiomCheck unit{"module-algebra unit"};
  for (std::size_t h = 0; h < m; ++h) {
    Vector expect = s.unit;
    for (auto& x : expect) x *= d.hopf.counit(0, h);
    if (d.action[h].apply(s.unit) != expect) {
      unit.passed = false;
      unit.witness = {h};
      break;
    }
  }
  rep.checks.push_back(unit);
  return rep;
}

std::vector<Vector> invariants(const ModuleAlgebraData& d) { return module_invariants(d.hopf, d.action); }

AlgebraData smash(const ModuleAlgebraData& d) {
  const std::size_t n = d.dim_s(), m = d.dim_h(), dim = n * m;
  const auto& s = d.algebra;
  const auto& h = d.hopf.algebra;
  AlgebraData out;
  out.domain = d.domain();
  out.dim = dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out.labels.push_back(s.labels[i] + "#" + h.labels[j]);
  out.unit = tensor(s.unit, h.unit);
  out.mult = LinearMap(d.domain(), dim, dim * dim);
  // (s#h)(t#k) = Σ s(h₁·t) # h₂k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector delta = d.hopf.comult.column(j);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          Vector prod = zero_vector(d.domain(), dim);
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
              const Scalar& c = delta[a * m + b];
              if (c.is_zero()) continue;
              auto left = s.multiply(s.basis(i), d.action[a].column(k));
              auto term = tensor(left, h.basis_product(b, l));
              for (std::size_t r = 0; r < dim; ++r) prod[r] += c * term[r];
            }
          const std::size_t col = (i * m + j) * dim + k * m + l;
          for (std::size_t r = 0; r < dim; ++r) out.mult(r, col) = prod[r];
        }
    }
  if (const auto* f = verify_algebra(out).first_failure())
    throw InconsistencyError("smash product fails " + f->name + "; action data is not a module algebra");
  return out;
}

LinearMap galois_map_j(const ModuleAlgebraData& d) {
  const std::size_t n = d.dim_s(), m = d.dim_h();
  LinearMap out(d.domain(), n * n, n * m);
  for (std::size_t i = 0; i < n; ++i) {
    auto ls = d.algebra.left_mult(d.algebra.basis(i));
    for (std::size_t j = 0; j < m; ++j) {
      auto e = ls * d.action[j];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out(a * n + b, i * m + j) = e(a, b);
    }
  }
  return out;
}

LinearMap induced_coaction(const ModuleAlgebraData& d) {
  const std::size_t n = d.dim_s(), m = d.dim_h();
  LinearMap out(d.domain(), n * m, n);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t s = 0; s < n; ++s) out(s * m + i, t) = d.action[i](s, t);
  return out;
}

LinearMap galois_map_gamma(const ModuleAlgebraData& d) {
  const std::size_t n = d.dim_s(), m = d.dim_h();
  LinearMap out(d.domain(), n * m, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < m; ++i) {
        auto v = d.algebra.multiply(d.algebra.basis(a), d.action[i].column(b));
        for (std::size_t s = 0; s < n; ++s) out(s * m + i, a * n + b) = v[s];
      }
  return out;
}

bool gamma_is_algebra_map(const ModuleAlgebraData& d) {
  auto gamma = galois_map_gamma(d);
  if (!is_bijective(gamma))
    throw PreconditionError("γ is not bijective (rank " + std::to_string(rank(gamma)) + ", " +
                            std::to_string(gamma.rows()) + " × " + std::to_string(gamma.cols()) + ")");
  const auto hd = dual(d.hopf);
  const auto& s = d.algebra;
  const std::size_t nn = d.dim_s() * d.dim_s();
  std::vector<Vector> images(nn);
  for (std::size_t p = 0; p < nn; ++p) images[p] = gamma.column(p);
  for (std::size_t p = 0; p < nn; ++p)
    for (std::size_t q = 0; q < nn; ++q) {
      auto lhs = gamma.apply(tensor_multiply(s, s, unit_vector(d.domain(), nn, p), unit_vector(d.domain(), nn, q)));
      auto rhs = tensor_multiply(s, hd.algebra, images[p], images[q]);
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_faithful(const HopfAlgebraData& h, const Action& action) {
  return rank(action_map(h, action)) == h.dim();
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::NotAnExtension: return "not-an-extension";
    case Classification::HExtension: return "H-extension";
    case Classification::Tame: return "tame";
    case Classification::HopfGalois: return "Hopf-Galois";
    case Classification::TameHopfGalois: return "tame Hopf-Galois";
  }
  return "?";
}

namespace {

// span == K·1
bool is_scalar_line(const ModuleAlgebraData& d, const std::vector<Vector>& span) {
  return span.size() == 1 && in_span(d.domain(), d.dim_s(), span, d.algebra.unit);
}

}  // namespace

ExtensionReport classify_extension(const ModuleAlgebraData& d) {
  if (!d.domain().is_field()) throw UnsupportedDomain("classify_extension needs a field; use the lattice tools over Z");
  ExtensionReport r;
  r.invariants = invariants(d);
  r.invariants_trivial = is_scalar_line(d, r.invariants);
  r.faithful = is_faithful(d);
  r.rank_equal = d.dim_s() == d.dim_h();
  r.integral_image = integral_image(d.hopf, d.action);
  if (!is_subspace(d.domain(), d.dim_s(), r.integral_image, r.invariants))
    throw InconsistencyError("I·S is not contained in S^H");
  r.integral_surjective = is_scalar_line(d, r.integral_image);
  r.homology_dim = r.invariants.size() - r.integral_image.size();
  r.j_bijective = is_bijective(galois_map_j(d));
  r.gamma_bijective = is_bijective(galois_map_gamma(d));
  r.commutative = d.algebra.is_commutative();
  r.cocommutative = d.hopf.is_cocommutative();
  r.local = is_local(d.hopf);
  r.semisimple = is_semisimple(d.hopf);
  r.equivalence_applies = r.local && r.cocommutative && r.rank_equal;
  const bool original = r.commutative && r.cocommutative;
  r.hopf_galois_form = original ? "original" : "principal homogeneous space";
  r.hopf_galois = original ? r.j_bijective : r.gamma_bijective;
  r.tame = r.invariants_trivial && r.rank_equal && r.faithful && r.integral_surjective;
  if (!r.invariants_trivial)
    r.classification = Classification::NotAnExtension;
  else if (r.tame && r.hopf_galois)
    r.classification = Classification::TameHopfGalois;
  else if (r.tame)
    r.classification = Classification::Tame;
  else if (r.hopf_galois)
    r.classification = Classification::HopfGalois;
  else
    r.classification = Classification::HExtension;
  return r;
}

TotalIntegral total_integral_map(const ModuleAlgebraData& d) {
  const Domain dom = d.domain();
  const std::size_t n = d.dim_s(), m = d.dim_h();
  if (!is_scalar_line(d, invariants(d))) throw PreconditionError("S^H ≠ K·1");
  const auto& mu = d.hopf.algebra.mult;
  const auto hd = dual(d.hopf);
  const Vector lambda = left_integral(d.hopf);

  // Φ(h) = h⇀t with (h⇀t)(k) = t(kh); t an integral of H* making Φ invertible
  std::optional<LinearMap> phi;
  for (const auto& t : {left_integral(hd), right_integrals(hd).basis.front()}) {
    LinearMap p(dom, m, m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t h = 0; h < m; ++h)
        for (std::size_t k = 0; k < m; ++k)
          if (!t[k].is_zero()) p(a, h) += t[k] * mu(k, a * m + h);
    if (is_bijective(p)) {
      Scalar c(dom);
      for (std::size_t k = 0; k < m; ++k) c += t[k] * lambda[k];
      phi = p.scaled(c.inverse());  // Λ⇀t = ε
      break;
    }
  }
  if (!phi) throw InconsistencyError("no integral of H* generates H* as an H-module");

  TotalIntegral out;
  auto a_lambda = act_by(d.hopf, d.action, lambda);
  auto z = solve(a_lambda, d.algebra.unit);
  if (!z) {
    out.obstruction = "1 ∉ I·S (dim I·S = " + std::to_string(rank(a_lambda)) + "); no z with Λ·z = 1";
    return out;
  }
  out.present = true;
  out.z = *z;
  std::vector<Vector> cols;
  for (std::size_t h = 0; h < m; ++h) cols.push_back(d.action[h].apply(*z));
  LinearMap g = LinearMap::from_columns(dom, cols, n) * invert(*phi);

  Vector eps(d.hopf.counit.row(0).begin(), d.hopf.counit.row(0).end());
  out.unital = g.apply(eps) == d.algebra.unit;
  out.h_linear = true;
  for (std::size_t h = 0; h < m && out.h_linear; ++h) {
    LinearMap hit(dom, m, m);
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t b = 0; b < m; ++b) hit(k, b) = mu(b, k * m + h);
    out.h_linear = g * hit == d.action[h] * g;
  }
  out.g = std::move(g);
  return out;
}

}  // namespace hopfgal
