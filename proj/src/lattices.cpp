#include "hopfgal/lattices.hpp"

#include <algorithm>

#include "hopfgal/errors.hpp"
#include "hopfgal/linalg.hpp"
#include "hopfgal/normal_form.hpp"

namespace hopfgal {

namespace {

const Domain kQ = Domain::rationals();
const Domain kZ = Domain::integers();

void require_rational(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (x.domain().kind() != DomainKind::Rational)
      throw FormatError("lattice vectors must have rational entries, got " + x.domain().name());
}

mpz_class common_denominator(const std::vector<Vector>& rows) {
  mpz_class d = 1;
  for (const auto& r : rows)
    for (const auto& x : r) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.to_rational().get_den_mpz_t());
  return d;
}

bool integral(const Scalar& x) { return x.to_rational().get_den() == 1; }

bool integral(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return integral(x); });
}

Scalar to_z(const Scalar& x) { return Scalar(kZ, x.to_rational()); }
Scalar to_q(const Scalar& x) { return Scalar(kQ, x.to_rational()); }

Vector to_q(std::span<const Scalar> v) {
  Vector out;
  for (const auto& x : v) out.push_back(to_q(x));
  return out;
}

// Canonical basis of the ℤ-span of `gens`.
std::vector<Vector> canonical(const std::vector<Vector>& gens, std::size_t ambient) {
  if (gens.empty()) return {};
  const mpz_class den = common_denominator(gens);
  LinearMap z(kZ, gens.size(), ambient);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c)
      z(r, ambient - 1 - c) = Scalar(kZ, mpq_class(gens[r][c].to_rational() * den));
  const LinearMap h = row_lattice_basis(z);
  std::vector<Vector> out;
  for (std::size_t r = h.rows(); r-- > 0;) {
    Vector v(ambient, Scalar(kQ));
    for (std::size_t c = 0; c < ambient; ++c) {
      mpq_class q(h(r, ambient - 1 - c).to_rational() / den);
      q.canonicalize();
      v[c] = Scalar(kQ, q);
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Σ_k h_k A_k as a ℚ-matrix on S_ℚ.
LinearMap acting(const ModuleAlgebraData& d, std::span<const Scalar> h) {
  LinearMap out(kQ, d.dim_s(), d.dim_s());
  for (std::size_t k = 0; k < h.size(); ++k)
    if (!h[k].is_zero()) out = out + d.action[k].scaled(h[k]);
  return out;
}

std::vector<mpz_class> prime_divisors(mpz_class n) {
  std::vector<mpz_class> out;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

VerificationReport order_checks(const HopfAlgebraData& h, const Lattice& l) {
  if (h.domain().kind() != DomainKind::Rational) throw UnsupportedDomain("orders live in Hopf algebras over Q");
  if (l.ambient() != h.dim()) throw FormatError("order lattice has the wrong ambient dimension");
  const auto& b = l.basis();
  VerificationReport rep;

  AxiomCheck one{"contains 1"};
  one.passed = l.contains(h.algebra.unit);
  rep.checks.push_back(one);

  AxiomCheck mult{"multiplicatively closed"};
  for (std::size_t i = 0; i < b.size() && mult.passed; ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!l.contains(h.algebra.multiply(b[i], b[j]))) {
        mult.passed = false;
        mult.witness = {i, j};
        break;
      }
  rep.checks.push_back(mult);

  AxiomCheck comult{"comultiplication"}, counit{"counit"}, anti{"antipode"};
  const Lattice ll = tensor(l, l);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (comult.passed && !ll.contains(h.comult.apply(b[i]))) {
      comult.passed = false;
      comult.witness = {i};
    }
    if (counit.passed && !integral(h.counit.apply(b[i])[0])) {
      counit.passed = false;
      counit.witness = {i};
    }
    if (anti.passed && !l.contains(h.antipode.apply(b[i]))) {
      anti.passed = false;
      anti.witness = {i};
    }
  }
  rep.checks.insert(rep.checks.end(), {comult, counit, anti});
  return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::from_basis(const std::vector<Vector>& rows, std::size_t ambient, LatticeKind kind) {
  for (const auto& r : rows) {
    if (r.size() != ambient) throw FormatError("lattice basis vector has the wrong length");
    require_rational(r);
  }
  if (span_basis(kQ, ambient, rows).size() != rows.size())
    throw FormatError("lattice basis vectors are linearly dependent over Q");
  return span(rows, ambient, kind);
}

Lattice Lattice::span(const std::vector<Vector>& generators, std::size_t ambient, LatticeKind kind) {
  for (const auto& r : generators) {
    if (r.size() != ambient) throw FormatError("lattice generator has the wrong length");
    require_rational(r);
  }
  Lattice l;
  l.ambient_ = ambient;
  l.kind_ = kind;
  l.basis_ = canonical(generators, ambient);
  return l;
}

Lattice Lattice::standard(std::size_t ambient, LatticeKind kind) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vector(kQ, ambient, i));
  return span(rows, ambient, kind);
}

LinearMap Lattice::basis_matrix() const { return LinearMap::from_rows(kQ, basis_, ambient_); }

std::optional<Vector> Lattice::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw FormatError("vector has the wrong length for this lattice");
  if (basis_.empty()) {
    if (is_zero(v)) return Vector{};
    return std::nullopt;
  }
  return solve(LinearMap::from_columns(kQ, basis_, ambient_), to_q(v));
}

bool Lattice::contains(std::span<const Scalar> v) const {
  auto c = coordinates(v);
  return c && integral(*c);
}

bool Lattice::contains(const Lattice& o) const {
  return o.ambient_ == ambient_ &&
         std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vector& v) { return contains(v); });
}

Lattice tensor(const Lattice& a, const Lattice& b) {
  std::vector<Vector> rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) rows.push_back(tensor(x, y));
  return Lattice::span(rows, a.ambient() * b.ambient(), a.kind());
}

// ---------------------------------------------------------------------------
// modules and orders

LatticeModule LatticeModule::make(ModuleAlgebraData d, Lattice l) {
  if (d.domain().kind() != DomainKind::Rational)
    throw UnsupportedDomain("lattice modules need the rational form of the extension, got " + d.domain().name());
  if (l.ambient() != d.dim_s() || !l.full_rank())
    throw FormatError("the lattice must have full rank " + std::to_string(d.dim_s()) + " in S");
  return {std::move(d), std::move(l)};
}

OrderData OrderData::make(HopfAlgebraData h, Lattice l) {
  auto rep = order_checks(h, l);
  OrderData o;
  o.contains_one = rep.check("contains 1").passed;
  o.multiplicatively_closed = rep.check("multiplicatively closed").passed;
  o.comult_stable = rep.check("comultiplication").passed;
  o.counit_integral = rep.check("counit").passed;
  o.antipode_stable = rep.check("antipode").passed;
  o.hopf = std::move(h);
  o.lattice = std::move(l);
  return o;
}

VerificationReport is_hopf_order(const OrderData& o) { return order_checks(o.hopf, o.lattice); }

std::optional<LinearMap> lattice_action(const LatticeModule& s, std::span<const Scalar> h) {
  const auto a = acting(s.extension, h);
  const auto& b = s.lattice.basis();
  const std::size_t r = b.size();
  LinearMap out(kZ, r, r);
  for (std::size_t j = 0; j < r; ++j) {
    auto c = s.lattice.coordinates(a.apply(b[j]));
    if (!c || !integral(*c)) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i) out(i, j) = to_z((*c)[i]);
  }
  return out;
}

OrderData associated_order(const LatticeModule& s) {
  const auto& d = s.extension;
  const std::size_t dh = d.dim_h(), r = s.rank();
  const auto& b = s.lattice.basis();
  // column k: lattice coordinates of e_k·b_j, stacked over j
  LinearMap m(kQ, r * r, dh);
  for (std::size_t k = 0; k < dh; ++k)
    for (std::size_t j = 0; j < r; ++j) {
      auto c = s.lattice.coordinates(d.action[k].apply(b[j]));
      if (!c) throw FormatError("the action does not preserve the ambient space of the lattice");
      for (std::size_t i = 0; i < r; ++i) m(j * r + i, k) = (*c)[i];
    }
  if (rank(m) != dh)
    throw PreconditionError("H does not act faithfully, so {h : h·S ⊆ S} is not a lattice");

  // ℤ^N ∩ im(m) as the integer kernel of the annihilator of im(m)
  std::vector<Vector> ann = kernel_basis(m.transpose());
  LinearMap annz(kZ, ann.size(), r * r);
  for (std::size_t i = 0; i < ann.size(); ++i) {
    const mpz_class den = common_denominator({ann[i]});
    for (std::size_t c = 0; c < r * r; ++c) annz(i, c) = Scalar(kZ, mpq_class(ann[i][c].to_rational() * den));
  }
  const LinearMap w = integer_kernel(annz);
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    auto c = solve(m, to_q(w.row(i)));
    if (!c) throw InconsistencyError("saturated image vector outside the image");
    gens.push_back(std::move(*c));
  }
  auto o = OrderData::make(d.hopf, Lattice::span(gens, dh, LatticeKind::Order));
  if (!o.contains_one || !o.multiplicatively_closed)
    throw InconsistencyError("the associated order is not an order");
  return o;
}

Lattice lattice_integrals(const OrderData& o) {
  if (!o.is_hopf_order()) throw PreconditionError("integrals of a lattice need a Hopf order");
  if (!o.lattice.full_rank()) throw PreconditionError("the order must have full rank in H");
  const Vector lambda = left_integral(o.hopf);
  auto y = *o.lattice.coordinates(lambda);
  const mpz_class den = common_denominator({y});
  mpz_class g = 0;
  std::vector<mpz_class> z;
  for (const auto& x : y) {
    z.push_back(mpz_class(x.to_rational() * den));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  Vector gen = zero_vector(kQ, o.lattice.ambient());
  const auto& b = o.lattice.basis();
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Scalar c(kQ, mpq_class(z[i] / g));
    for (std::size_t k = 0; k < gen.size(); ++k) gen[k] += c * b[i][k];
  }
  return Lattice::from_basis({gen}, o.lattice.ambient(), LatticeKind::Order);
}

IntegralTameReport tame_check_integral(const OrderData& o, const LatticeModule& s) {
  if (!o.hopf.structure_equal(s.extension.hopf)) throw DomainMismatch("the order lives in a different Hopf algebra");
  if (!o.is_hopf_order()) throw PreconditionError("tameness over Z needs a Hopf order");
  const auto& ob = o.lattice.basis();
  const std::size_t r = s.rank();

  std::vector<LinearMap> blocks;
  for (std::size_t k = 0; k < ob.size(); ++k) {
    auto t = lattice_action(s, ob[k]);
    if (!t)
      throw PreconditionError("action not integral: basis element " + std::to_string(k) +
                              " of the order does not preserve S");
    const Scalar eps = to_z(o.hopf.counit.apply(ob[k])[0]);
    blocks.push_back(*t - LinearMap::identity(kZ, r).scaled(eps));
  }

  IntegralTameReport rep;
  const LinearMap fixed = integer_kernel(vstack(blocks));  // rows in S-coordinates
  const auto& sb = s.lattice.basis();
  auto ambient = [&](std::span<const Scalar> coords) {
    Vector v = zero_vector(kQ, s.lattice.ambient());
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (std::size_t c = 0; c < v.size(); ++c) v[c] += to_q(coords[i]) * sb[i][c];
    return v;
  };
  for (std::size_t i = 0; i < fixed.rows(); ++i) rep.fixed.push_back(ambient(fixed.row(i)));

  const Lattice j = lattice_integrals(o);
  rep.integral = j.basis()[0];
  const LinearMap tl = *lattice_action(s, rep.integral);
  const LinearMap image = row_lattice_basis(tl.transpose());
  for (std::size_t i = 0; i < image.rows(); ++i) rep.integral_image.push_back(ambient(image.row(i)));

  // J·S in S^𝒜 coordinates
  const std::size_t f = fixed.rows();
  LinearMap ct(kZ, f, image.rows());
  std::vector<Vector> fixed_cols;
  for (std::size_t a = 0; a < f; ++a) fixed_cols.push_back(to_q(fixed.row(a)));
  const LinearMap fq = LinearMap::from_columns(kQ, fixed_cols, r);
  if (f > 0)
    for (std::size_t i = 0; i < image.rows(); ++i) {
      auto x = solve(fq, to_q(image.row(i)));
      if (!x || !integral(*x)) throw InconsistencyError("J·S is not contained in S^A");
      for (std::size_t a = 0; a < f; ++a) ct(a, i) = to_z((*x)[a]);
    }
  else if (image.rows() > 0)
    throw InconsistencyError("J·S is not contained in S^A");

  std::size_t nonzero = 0;
  if (f > 0 && image.rows() > 0)
    for (const auto& d : smith_normal_form(ct)) {
      if (d == 0) continue;
      ++nonzero;
      if (d != 1) rep.factors.push_back(d);
    }
  for (std::size_t i = nonzero; i < f; ++i) rep.factors.push_back(0);
  for (const auto& d : rep.factors) {
    if (d == 0) {
      rep.free_obstruction = true;
      continue;
    }
    for (auto& p : prime_divisors(d))
      if (std::find(rep.obstructed_primes.begin(), rep.obstructed_primes.end(), p) == rep.obstructed_primes.end())
        rep.obstructed_primes.push_back(p);
  }
  std::sort(rep.obstructed_primes.begin(), rep.obstructed_primes.end());

  const Vector& unit = s.extension.algebra.unit;
  Vector neg = unit;
  for (auto& x : neg) x = -x;
  rep.fixed_is_base = f == 1 && (rep.fixed[0] == unit || rep.fixed[0] == neg);
  rep.faithful = is_faithful(s.extension);
  rep.rank_equal = s.rank() == o.lattice.rank();
  rep.hypotheses = rep.fixed_is_base && rep.faithful && rep.rank_equal;
  rep.homology_zero = rep.factors.empty();
  rep.tame = rep.faithful && rep.fixed_is_base && rep.homology_zero;
  rep.field_tame = classify_extension(s.extension).tame;
  return rep;
}

std::optional<FreeGenerator> free_rank_one_generator(const OrderData& o, const LatticeModule& s,
                                                     const std::vector<Vector>& candidates) {
  if (!tame_check_integral(o, s).tame) throw PreconditionError("free generator search needs a tame extension");
  const auto& ob = o.lattice.basis();
  const std::size_t r = s.rank();
  for (const auto& z : candidates) {
    if (z.size() != s.lattice.ambient()) throw FormatError("candidate has the wrong length");
    require_rational(z);
    if (!s.lattice.contains(z)) continue;
    FreeGenerator g;
    g.generator = z;
    g.coordinates = LinearMap(kZ, ob.size(), r);
    bool ok = true;
    for (std::size_t k = 0; k < ob.size() && ok; ++k) {
      auto c = s.lattice.coordinates(acting(s.extension, ob[k]).apply(z));
      ok = c && integral(*c);
      if (ok)
        for (std::size_t i = 0; i < r; ++i) g.coordinates(k, i) = to_z((*c)[i]);
    }
    if (!ok) continue;
    g.hnf = row_lattice_basis(g.coordinates);
    if (g.hnf == LinearMap::identity(kZ, r)) return g;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// instances

namespace {

HopfAlgebraData rational_c2() { return group_algebra({{0, 1}, {1, 0}}, kQ, {"1", "σ"}); }

// {1, y} with y² = a + b y, C2 acting by `sigma`.
LatticeModule quadratic_ring(const std::string& y, long a, long b, std::initializer_list<std::initializer_list<long>> sigma) {
  auto q = [](long v) { return Scalar(kQ, v); };
  auto s = AlgebraData::from_triples(kQ, 2, {"1", y},
                                     {{0, 0, 0, q(1)}, {0, 1, 1, q(1)}, {1, 0, 1, q(1)}, {1, 1, 0, q(a)}, {1, 1, 1, q(b)}},
                                     unit_vector(kQ, 2, 0));
  auto d = ModuleAlgebraData::from_matrices(rational_c2(), std::move(s),
                                            {LinearMap::identity(kQ, 2), LinearMap::from_ints(kQ, sigma)});
  return LatticeModule::make(std::move(d), Lattice::standard(2));
}

}  // namespace

LatticeModule gaussian_integers() { return quadratic_ring("i", -1, 0, {{1, 0}, {0, -1}}); }

// σ(ζ3) = ζ3² = -1 - ζ3
LatticeModule eisenstein_integers() { return quadratic_ring("ζ3", -1, -1, {{1, -1}, {0, -1}}); }

OrderData integral_group_ring(const HopfAlgebraData& h) {
  return OrderData::make(h, Lattice::standard(h.dim(), LatticeKind::Order));
}

}  // namespace hopfgal
