#include "hopfgal/linalg.hpp"

#include <utility>

#include "hopfgal/errors.hpp"

namespace hopfgal {

namespace {

void require_field(const Domain& d, const char* op) {
  if (!d.is_field())
    throw UnsupportedDomain(std::string(op) + " needs a field domain; got " + d.name() +
                            " (use the normal-form routines over Z)");
}

}  // namespace

namespace detail {

Echelon rref_generic(const LinearMap& m) {
  require_field(m.domain(), "rref");
  LinearMap a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    Scalar inv = a(row, col).inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Scalar f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

Echelon rref_prime_field(const LinearMap& m, kernels::Isa isa) {
  const Domain d = m.domain();
  if (d.kind() != DomainKind::Prime) throw UnsupportedDomain("rref_prime_field needs F_p");
  const std::uint32_t p = d.modulus();
  const std::size_t nr = m.rows(), nc = m.cols();
  auto axpy = p < kernels::kMaxSimdModulus ? kernels::axpy_mod_for(isa) : &kernels::scalar::axpy_mod;
  auto scale = p < kernels::kMaxSimdModulus ? kernels::scale_mod_for(isa) : &kernels::scalar::scale_mod;

  std::vector<std::uint32_t> buf(nr * nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      buf[r * nc + c] = static_cast<std::uint32_t>(m(r, c).residue());
  auto row_span = [&](std::size_t r) { return std::span<std::uint32_t>(buf.data() + r * nc, nc); };

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && buf[piv * nc + col] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != row) std::swap_ranges(row_span(piv).begin(), row_span(piv).end(), row_span(row).begin());
    std::uint32_t inv = static_cast<std::uint32_t>(Scalar(d, buf[row * nc + col]).inverse().residue());
    scale(row_span(row), inv, p);
    for (std::size_t r = 0; r < nr; ++r) {
      std::uint32_t f = buf[r * nc + col];
      if (r == row || f == 0) continue;
      axpy(row_span(r), row_span(row), p - f, p);
    }
    pivots.push_back(col);
    ++row;
  }
  LinearMap out(d, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = Scalar(d, static_cast<long>(buf[r * nc + c]));
  return {std::move(out), std::move(pivots)};
}

}  // namespace detail

Echelon rref(const LinearMap& m) {
  if (m.domain().kind() == DomainKind::Prime)
    return detail::rref_prime_field(m, kernels::active_isa());
  return detail::rref_generic(m);
}

std::size_t rank(const LinearMap& m) { return rref(m).pivots.size(); }

std::vector<Vector> span_basis(Domain d, std::size_t dim, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return {};
  Echelon e = rref(LinearMap::from_rows(d, vectors, dim));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    auto row = e.reduced.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::vector<Vector> kernel_basis(const LinearMap& m) {
  require_field(m.domain(), "kernel_basis");
  const Domain d = m.domain();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(d, m.cols());
    v[f] = Scalar(d, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    raw.push_back(std::move(v));
  }
  return span_basis(d, m.cols(), raw);
}

std::vector<Vector> image_basis(const LinearMap& m) {
  require_field(m.domain(), "image_basis");
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return span_basis(m.domain(), m.rows(), cols);
}

LinearMap invert(const LinearMap& m) {
  require_field(m.domain(), "invert");
  if (m.rows() != m.cols()) throw FormatError("invert needs a square matrix");
  const std::size_t n = m.rows();
  Echelon e = rref(hstack({m, LinearMap::identity(m.domain(), n)}));
  std::size_t r = 0;
  while (r < e.pivots.size() && e.pivots[r] < n) ++r;
  if (r < n) throw SingularMatrix(r, n);
  LinearMap inv(m.domain(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve(const LinearMap& m, std::span<const Scalar> b) {
  require_field(m.domain(), "solve");
  if (b.size() != m.rows()) throw FormatError("right-hand side length mismatch");
  LinearMap rhs(m.domain(), m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) rhs(r, 0) = b[r];
  Echelon e = rref(hstack({m, rhs}));
  Vector x = zero_vector(m.domain(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

bool in_span(Domain d, std::size_t dim, const std::vector<Vector>& basis,
             std::span<const Scalar> v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<Vector> rows = basis;
  rows.emplace_back(v.begin(), v.end());
  return rank(LinearMap::from_rows(d, rows, dim)) == rank(LinearMap::from_rows(d, basis, dim));
}

bool is_subspace(Domain d, std::size_t dim, const std::vector<Vector>& sub,
                 const std::vector<Vector>& super) {
  for (const auto& v : sub)
    if (!in_span(d, dim, super, v)) return false;
  return true;
}

std::size_t intersection_dim(Domain d, std::size_t dim, const std::vector<Vector>& a,
                             const std::vector<Vector>& b) {
  std::vector<Vector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  std::size_t ra = span_basis(d, dim, a).size(), rb = span_basis(d, dim, b).size();
  return ra + rb - span_basis(d, dim, both).size();
}

LinearMap kronecker(const LinearMap& a, const LinearMap& b) {
  if (!(a.domain() == b.domain())) throw DomainMismatch("kronecker across domains");
  LinearMap out(a.domain(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (!y.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return out;
}

LinearMap kronecker(std::initializer_list<LinearMap> factors) {
  if (factors.size() == 0) throw FormatError("kronecker of no factors");
  auto it = factors.begin();
  LinearMap out = *it++;
  for (; it != factors.end(); ++it) out = kronecker(out, *it);
  return out;
}

LinearMap hstack(const std::vector<LinearMap>& blocks) {
  if (blocks.empty()) throw FormatError("hstack of no blocks");
  std::size_t rows = blocks.front().rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw FormatError("hstack row mismatch");
    cols += b.cols();
  }
  LinearMap out(blocks.front().domain(), rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, off + c) = b(r, c);
    off += b.cols();
  }
  return out;
}

LinearMap vstack(const std::vector<LinearMap>& blocks) {
  if (blocks.empty()) throw FormatError("vstack of no blocks");
  std::size_t cols = blocks.front().cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw FormatError("vstack column mismatch");
    rows += b.rows();
  }
  LinearMap out(blocks.front().domain(), rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(off + r, c) = b(r, c);
    off += b.rows();
  }
  return out;
}

LinearMap direct_sum(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.domain(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

LinearMap swap_map(Domain d, std::size_t a, std::size_t b) {
  LinearMap out(d, a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) out(j * a + i, i * b + j) = Scalar(d, 1);
  return out;
}

Scalar determinant(const LinearMap& m) {
  if (m.rows() != m.cols()) throw FormatError("determinant needs a square matrix");
  const Domain d = m.domain();
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(d, 1);
  LinearMap a = m;
  Scalar sign(d, 1), prev(d, 1);
  // Bareiss: every division below is exact, so the same code serves ℤ and fields.
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t s = k + 1;
      while (s < n && a(s, k).is_zero()) ++s;
      if (s == n) return Scalar(d);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(s, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = Scalar(d);
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_bijective(const LinearMap& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

}  // namespace hopfgal
