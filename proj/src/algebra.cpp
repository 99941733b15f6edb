#include "hopfgal/algebra.hpp"

#include "hopfgal/errors.hpp"

namespace hopfgal {

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const AxiomCheck* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const AxiomCheck& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

AlgebraData AlgebraData::from_triples(Domain d, std::size_t dim, std::vector<std::string> labels,
                                      const std::vector<Triple>& mult, Vector unit) {
  AlgebraData a;
  a.domain = d;
  a.dim = dim;
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  if (labels.size() != dim) throw FormatError("expected " + std::to_string(dim) + " basis labels");
  a.labels = std::move(labels);
  a.mult = LinearMap(d, dim, dim * dim);
  for (const auto& t : mult) {
    if (t.i >= dim || t.j >= dim || t.k >= dim)
      throw FormatError("multiplication triple (" + std::to_string(t.i) + ", " + std::to_string(t.j) +
                        ", " + std::to_string(t.k) + ") out of range for dimension " +
                        std::to_string(dim));
    a.mult(t.k, t.i * dim + t.j) += t.c;
  }
  if (unit.size() != dim) throw FormatError("unit vector has wrong length");
  a.unit = std::move(unit);
  return a;
}

Vector AlgebraData::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  if (a.size() != dim || b.size() != dim) throw FormatError("algebra element has wrong length");
  Vector out = zero_vector(domain, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      const std::size_t col = i * dim + j;
      for (std::size_t k = 0; k < dim; ++k)
        if (!mult(k, col).is_zero()) out[k] += c * mult(k, col);
    }
  }
  return out;
}

LinearMap AlgebraData::left_mult(std::span<const Scalar> a) const {
  LinearMap out(domain, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vector col = multiply(a, basis(j));
    for (std::size_t r = 0; r < dim; ++r) out(r, j) = col[r];
  }
  return out;
}

LinearMap AlgebraData::right_mult(std::span<const Scalar> a) const {
  LinearMap out(domain, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vector col = multiply(basis(j), a);
    for (std::size_t r = 0; r < dim; ++r) out(r, j) = col[r];
  }
  return out;
}

LinearMap AlgebraData::unit_map() const { return LinearMap::from_columns(domain, {unit}, dim); }

bool AlgebraData::is_commutative() const {
  return mult * swap_map(domain, dim, dim) == mult;
}

VerificationReport verify_algebra(const AlgebraData& a) {
  VerificationReport rep;
  const std::size_t n = a.dim;
  if (a.mult.rows() != n || a.mult.cols() != n * n || a.unit.size() != n)
    throw FormatError("structure constant shapes do not match dimension " + std::to_string(n));

  AxiomCheck assoc{"associativity"};
  for (std::size_t i = 0; i < n && assoc.passed; ++i)
    for (std::size_t j = 0; j < n && assoc.passed; ++j) {
      const Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (a.multiply(ij, a.basis(k)) != a.multiply(a.basis(i), a.basis_product(j, k))) {
          assoc.passed = false;
          assoc.witness = {i, j, k};
          break;
        }
      }
    }
  rep.checks.push_back(assoc);

  AxiomCheck unit{"unit"};
  for (std::size_t i = 0; i < n; ++i) {
    const Vector e = a.basis(i);
    if (a.multiply(a.unit, e) != e || a.multiply(e, a.unit) != e) {
      unit.passed = false;
      unit.witness = {i};
      break;
    }
  }
  rep.checks.push_back(unit);
  return rep;
}

AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  AlgebraData t;
  t.domain = a.domain;
  t.dim = a.dim * b.dim;
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) t.labels.push_back(x + "⊗" + y);
  // (a⊗b)(c⊗d) = ac ⊗ bd
  auto mid = kronecker({LinearMap::identity(a.domain, a.dim), swap_map(a.domain, b.dim, a.dim),
                        LinearMap::identity(a.domain, b.dim)});
  t.mult = kronecker(a.mult, b.mult) * mid;
  t.unit = tensor(a.unit, b.unit);
  return t;
}

Vector tensor(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.empty() || b.empty()) return {};
  Vector out(a.size() * b.size(), Scalar(a.front().domain()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Vector apply_tensor(const LinearMap& f, const LinearMap& g, std::span<const Scalar> v) {
  const std::size_t gc = g.cols(), gr = g.rows();
  if (v.size() != f.cols() * gc) throw FormatError("tensor vector has wrong length");
  Vector out = zero_vector(f.domain(), f.rows() * gr);
  for (std::size_t a = 0; a < f.cols(); ++a)
    for (std::size_t b = 0; b < gc; ++b) {
      const Scalar& c = v[a * gc + b];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < f.rows(); ++r) {
        if (f(r, a).is_zero()) continue;
        const Scalar fc = f(r, a) * c;
        for (std::size_t s = 0; s < gr; ++s)
          if (!g(s, b).is_zero()) out[r * gr + s] += fc * g(s, b);
      }
    }
  return out;
}

Vector tensor_multiply(const AlgebraData& a, const AlgebraData& b, std::span<const Scalar> u,
                       std::span<const Scalar> v) {
  const std::size_t m = b.dim;
  if (u.size() != a.dim * m || v.size() != a.dim * m) throw FormatError("tensor element has wrong length");
  Vector out = zero_vector(a.domain, a.dim * m);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p].is_zero()) continue;
    for (std::size_t q = 0; q < v.size(); ++q) {
      if (v[q].is_zero()) continue;
      const Scalar c = u[p] * v[q];
      const std::size_t ca = (p / m) * a.dim + q / m, cb = (p % m) * m + q % m;
      for (std::size_t r = 0; r < a.dim; ++r) {
        if (a.mult(r, ca).is_zero()) continue;
        const Scalar rc = c * a.mult(r, ca);
        for (std::size_t s = 0; s < m; ++s)
          if (!b.mult(s, cb).is_zero()) out[r * m + s] += rc * b.mult(s, cb);
      }
    }
  }
  return out;
}

std::optional<std::size_t> first_difference(const LinearMap& a, const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InconsistencyError("comparing maps of different shapes");
  for (std::size_t c = 0; c < a.cols(); ++c)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!(a(r, c) == b(r, c))) return c;
  return std::nullopt;
}

std::vector<std::size_t> decode_index(std::size_t idx, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = idx % dims[k];
    idx /= dims[k];
  }
  return out;
}

std::string format_vector(std::span<const Scalar> v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    mpq_class q = v[i].to_rational();
    bool neg = v[i].domain().kind() != DomainKind::Prime && sgn(q) < 0;
    if (neg) q = -q;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (q == 1) {
      out += labels[i];
    } else if (labels[i] == "1") {
      out += q.get_str();
    } else {
      out += q.get_str() + "·" + labels[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace hopfgal
