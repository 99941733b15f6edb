#include "hopfgal/hopf.hpp"

#include "hopfgal/errors.hpp"

namespace hopfgal {

HopfAlgebraData HopfAlgebraData::from_triples(AlgebraData algebra, const std::vector<Triple>& comult,
                                              Vector counit, const std::vector<Triple>& antipode) {
  HopfAlgebraData h;
  const std::size_t n = algebra.dim;
  const Domain d = algebra.domain;
  h.comult = LinearMap(d, n * n, n);
  for (const auto& t : comult) {
    if (t.i >= n || t.j >= n || t.k >= n)
      throw FormatError("comultiplication triple (" + std::to_string(t.i) + ", " +
                        std::to_string(t.j) + ", " + std::to_string(t.k) + ") out of range");
    h.comult(t.j * n + t.k, t.i) += t.c;
  }
  if (counit.size() != n) throw FormatError("counit vector has wrong length");
  h.counit = LinearMap::from_rows(d, {counit}, n);
  h.antipode = LinearMap(d, n, n);
  for (const auto& t : antipode) {
    if (t.i >= n || t.j >= n)
      throw FormatError("antipode entry (" + std::to_string(t.i) + ", " + std::to_string(t.j) +
                        ") out of range");
    h.antipode(t.j, t.i) += t.c;
  }
  h.algebra = std::move(algebra);
  return h;
}

Scalar HopfAlgebraData::counit_of(std::span<const Scalar> h) const { return counit.apply(h)[0]; }

LinearMap HopfAlgebraData::double_comult() const {
  const auto id = LinearMap::identity(domain(), dim());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < dim(); ++i) cols.push_back(apply_tensor(comult, id, comult.column(i)));
  return LinearMap::from_columns(domain(), cols, dim() * dim() * dim());
}

bool HopfAlgebraData::is_cocommutative() const {
  return swap_map(domain(), dim(), dim()) * comult == comult;
}

bool HopfAlgebraData::structure_equal(const HopfAlgebraData& o) const {
  return algebra.mult == o.algebra.mult && algebra.unit == o.algebra.unit && comult == o.comult &&
         counit == o.counit && antipode == o.antipode;
}

VerificationReport verify_hopf(const HopfAlgebraData& h) {
  const std::size_t n = h.dim();
  const Domain d = h.domain();
  if (h.comult.rows() != n * n || h.comult.cols() != n || h.counit.rows() != 1 ||
      h.counit.cols() != n || h.antipode.rows() != n || h.antipode.cols() != n ||
      h.algebra.mult.rows() != n || h.algebra.mult.cols() != n * n || h.algebra.unit.size() != n)
    throw FormatError("structure constant shapes do not match dimension " + std::to_string(n));

  VerificationReport rep = verify_algebra(h.algebra);
  const auto id = LinearMap::identity(d, n);
  std::vector<Vector> delta(n);
  for (std::size_t i = 0; i < n; ++i) delta[i] = h.comult.column(i);

  AxiomCheck coassoc{"coassociativity"};
  for (std::size_t i = 0; i < n; ++i)
    if (apply_tensor(h.comult, id, delta[i]) != apply_tensor(id, h.comult, delta[i])) {
      coassoc.passed = false;
      coassoc.witness = {i};
      break;
    }
  rep.checks.push_back(coassoc);

  AxiomCheck counit{"counit"};
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = unit_vector(d, n, i);
    if (apply_tensor(h.counit, id, delta[i]) != e || apply_tensor(id, h.counit, delta[i]) != e) {
      counit.passed = false;
      counit.witness = {i};
      break;
    }
  }
  rep.checks.push_back(counit);

  // Δ and ε multiplicative and unital
  AxiomCheck bialg{"bialgebra"};
  for (std::size_t i = 0; i < n && bialg.passed; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = h.algebra.basis_product(i, j);
      if (h.coproduct(ij) != tensor_multiply(h.algebra, h.algebra, delta[i], delta[j]) ||
          !(h.counit_of(ij) == h.counit(0, i) * h.counit(0, j))) {
        bialg.passed = false;
        bialg.witness = {i, j};
        break;
      }
    }
  if (bialg.passed && (h.coproduct(h.algebra.unit) != tensor(h.algebra.unit, h.algebra.unit) ||
                       !h.counit_of(h.algebra.unit).is_one())) {
    bialg.passed = false;
    bialg.witness = {0};
  }
  rep.checks.push_back(bialg);

  AxiomCheck anti{"antipode"};
  for (std::size_t i = 0; i < n; ++i) {
    Vector left = zero_vector(d, n), right = zero_vector(d, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = delta[i][a * n + b];
        if (c.is_zero()) continue;
        const Vector ea = unit_vector(d, n, a), eb = unit_vector(d, n, b);
        Vector l = h.algebra.multiply(h.antipode.column(a), eb);
        Vector r = h.algebra.multiply(ea, h.antipode.column(b));
        for (std::size_t k = 0; k < n; ++k) {
          left[k] += c * l[k];
          right[k] += c * r[k];
        }
      }
    Vector target = h.algebra.unit;
    for (auto& t : target) t *= h.counit(0, i);
    if (left != target || right != target) {
      anti.passed = false;
      anti.witness = {i};
      break;
    }
  }
  rep.checks.push_back(anti);
  return rep;
}

void require_hopf(const HopfAlgebraData& h) {
  auto rep = verify_hopf(h);
  if (const auto* f = rep.first_failure()) {
    std::string w;
    for (auto i : f->witness) w += (w.empty() ? "" : ", ") + std::to_string(i);
    throw PreconditionError("Hopf axiom '" + f->name + "' fails at (" + w + ")");
  }
}

namespace {

std::string witness3(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

HopfAlgebraData group_algebra(const std::vector<std::vector<std::size_t>>& table, Domain d,
                              std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw FormatError("empty group table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw FormatError("group table row " + std::to_string(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n) throw FormatError("group table entry out of range at " + witness3(a, b, table[a][b]));
  }
  for (std::size_t a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a)
      throw FormatError("not a group: index 0 is not an identity, witness " + witness3(0, a, table[a][0] != a ? table[a][0] : table[0][a]));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw FormatError("not a group: associativity fails at " + witness3(a, b, c));
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) inv[a] = b;
    if (inv[a] == n) throw FormatError("not a group: element " + std::to_string(a) + " has no inverse");
  }

  if (labels.empty()) {
    labels.push_back("1");
    for (std::size_t a = 1; a < n; ++a) labels.push_back("g" + std::to_string(a));
  }
  std::vector<Triple> mult, comult, anti;
  Vector unit = unit_vector(d, n, 0), counit;
  const Scalar one(d, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.push_back({a, b, table[a][b], one});
    comult.push_back({a, a, a, one});
    anti.push_back({a, inv[a], 0, one});
    counit.push_back(one);
  }
  auto alg = AlgebraData::from_triples(d, n, std::move(labels), mult, std::move(unit));
  return HopfAlgebraData::from_triples(std::move(alg), comult, std::move(counit), anti);
}

HopfAlgebraData taft(std::size_t n, const Scalar& q) {
  const Domain d = q.domain();
  if (n < 2) throw PreconditionError("taft algebra needs n >= 2");
  for (std::size_t k = 1; k < n; ++k)
    if (q.pow(k).is_one())
      throw PreconditionError("q = " + q.to_string() + " is not a primitive root: q^" +
                              std::to_string(k) + " = 1");
  if (!q.pow(n).is_one())
    throw PreconditionError("q = " + q.to_string() + " is not an n-th root of unity (q^" +
                            std::to_string(n) + " ≠ 1)");

  const std::size_t dim = n * n;
  auto index = [n](std::size_t gi, std::size_t xj) { return xj * n + gi; };
  std::vector<std::string> labels(dim);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      std::string g = i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i));
      std::string x = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
      labels[index(i, j)] = (g + x).empty() ? "1" : g + x;
    }

  // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
  std::vector<Triple> mult;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t e = 0; e < n; ++e)
          if (b + e < n) mult.push_back({index(a, b), index(c, e), index((a + c) % n, b + e), q.pow(b * c)});
  auto alg = AlgebraData::from_triples(d, dim, labels, mult, unit_vector(d, dim, 0));

  const Vector g = alg.basis(index(1, 0)), x = alg.basis(index(0, 1)), one = alg.basis(0);
  const Vector dg = tensor(g, g);
  Vector dx = tensor(x, one);
  {
    Vector gx = tensor(g, x);
    for (std::size_t i = 0; i < dx.size(); ++i) dx[i] += gx[i];
  }
  const Vector ginv = alg.basis(index(n - 1, 0));
  Vector sx = alg.multiply(ginv, x);
  for (auto& s : sx) s = -s;

  LinearMap comult(d, dim * dim, dim), anti(d, dim, dim);
  Vector counit = zero_vector(d, dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector dv = tensor(one, one), av = one;
      for (std::size_t k = 0; k < a; ++k) dv = tensor_multiply(alg, alg, dv, dg);
      for (std::size_t k = 0; k < b; ++k) dv = tensor_multiply(alg, alg, dv, dx);
      // α is an anti-homomorphism: α(g^a x^b) = α(x)^b α(g)^a
      for (std::size_t k = 0; k < b; ++k) av = alg.multiply(av, sx);
      for (std::size_t k = 0; k < a; ++k) av = alg.multiply(av, ginv);
      const std::size_t col = index(a, b);
      for (std::size_t r = 0; r < dim * dim; ++r) comult(r, col) = dv[r];
      for (std::size_t r = 0; r < dim; ++r) anti(r, col) = av[r];
      if (b == 0) counit[col] = Scalar(d, 1);
    }
  HopfAlgebraData h;
  h.algebra = std::move(alg);
  h.comult = std::move(comult);
  h.counit = LinearMap::from_rows(d, {counit}, dim);
  h.antipode = std::move(anti);
  return h;
}

HopfAlgebraData sweedler(Domain d) {
  if (d.kind() == DomainKind::Prime && d.modulus() == 2)
    throw UnsupportedDomain("Sweedler's algebra needs characteristic ≠ 2");
  auto h = taft(2, Scalar(d, -1));
  h.algebra.labels = {"1", "g", "x", "gx"};
  return h;
}

HopfAlgebraData dual(const HopfAlgebraData& h) {
  if (!h.domain().is_field()) throw UnsupportedDomain("dual needs a field domain; got " + h.domain().name());
  HopfAlgebraData out;
  out.algebra.domain = h.domain();
  out.algebra.dim = h.dim();
  bool all_dual = true;
  for (const auto& l : h.labels())
    if (l.rfind("δ_", 0) != 0) all_dual = false;
  for (const auto& l : h.labels()) out.algebra.labels.push_back(all_dual ? l.substr(std::string("δ_").size()) : "δ_" + l);
  out.algebra.mult = h.comult.transpose();
  auto eps = h.counit.row(0);
  out.algebra.unit = Vector(eps.begin(), eps.end());
  out.comult = h.algebra.mult.transpose();
  out.counit = LinearMap::from_rows(h.domain(), {h.algebra.unit}, h.dim());
  out.antipode = h.antipode.transpose();
  return out;
}

HopfAlgebraData co_opposite(const HopfAlgebraData& h) {
  HopfAlgebraData out = h;
  out.comult = swap_map(h.domain(), h.dim(), h.dim()) * h.comult;
  out.antipode = invert(h.antipode);
  return out;
}

namespace {

IntegralSpace integrals(const HopfAlgebraData& h, Side side) {
  const Domain d = h.domain();
  std::vector<LinearMap> blocks;
  const auto id = LinearMap::identity(d, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Vector e = h.algebra.basis(i);
    auto m = side == Side::Left ? h.algebra.left_mult(e) : h.algebra.right_mult(e);
    blocks.push_back(m - id.scaled(h.counit(0, i)));
  }
  IntegralSpace s{side, kernel_basis(vstack(blocks))};
  if (s.basis.size() != 1)
    throw InconsistencyError("integral space has dimension " + std::to_string(s.basis.size()) +
                             " instead of 1; Hopf data is corrupted");
  return s;
}

}  // namespace

IntegralSpace left_integrals(const HopfAlgebraData& h) { return integrals(h, Side::Left); }
IntegralSpace right_integrals(const HopfAlgebraData& h) { return integrals(h, Side::Right); }
Vector left_integral(const HopfAlgebraData& h) { return left_integrals(h).basis.front(); }

bool is_semisimple(const HopfAlgebraData& h) { return !h.counit_of(left_integral(h)).is_zero(); }

bool antipode_bijective(const HopfAlgebraData& h) {
  if (!h.domain().is_field()) return abs(determinant(h.antipode).to_rational()) == 1;
  return is_bijective(h.antipode);
}

bool is_local(const HopfAlgebraData& h) {
  const Domain d = h.domain();
  const std::size_t n = h.dim();
  auto ideal = kernel_basis(h.counit);
  auto power = ideal;
  for (std::size_t k = 0; k <= n && !power.empty(); ++k) {
    std::vector<Vector> next;
    for (const auto& a : power)
      for (const auto& b : ideal) next.push_back(h.algebra.multiply(a, b));
    power = span_basis(d, n, next);
  }
  return power.empty();
}

}  // namespace hopfgal
