#include "hopfgal/normal_form.hpp"

#include <utility>

#include "hopfgal/errors.hpp"

namespace hopfgal {

namespace {

using ZRow = std::vector<mpz_class>;
using ZMat = std::vector<ZRow>;

ZMat to_z(const LinearMap& m) {
  if (m.domain().kind() != DomainKind::Integer)
    throw UnsupportedDomain("integer normal forms need domain Z; got " + m.domain().name());
  ZMat a(m.rows(), ZRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c).to_rational().get_num();
  return a;
}

LinearMap from_z(const ZMat& a, std::size_t cols) {
  const Domain z = Domain::integers();
  LinearMap m(z, a.size(), cols);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(z, mpq_class(a[r][c]));
  return m;
}

// (row_i, row_j) <- (s row_i + t row_j, (a/g) row_j - (b/g) row_i) where
// g = s a + t b; determinant of the transform is 1.
void combine(ZRow& ri, ZRow& rj, const mpz_class& a, const mpz_class& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_class ag = a / g, bg = b / g;
  for (std::size_t k = 0; k < ri.size(); ++k) {
    mpz_class x = ri[k], y = rj[k];
    ri[k] = s * x + t * y;
    rj[k] = ag * y - bg * x;
  }
}

void axpy(ZRow& dst, const ZRow& src, const mpz_class& f) {
  for (std::size_t k = 0; k < dst.size(); ++k)
    if (sgn(src[k]) != 0) dst[k] -= f * src[k];
}

// Row HNF of a in place, applying the same operations to u.
void hnf_in_place(ZMat& a, ZMat& u, std::size_t cols) {
  const std::size_t n = a.size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    std::swap(u[piv], u[row]);
    for (std::size_t j = row + 1; j < n; ++j) {
      if (sgn(a[j][col]) == 0) continue;
      mpz_class x = a[row][col], y = a[j][col];
      // u is kept in lockstep by stacking it beside a.
      ZRow ar = a[row], aj = a[j];
      ar.insert(ar.end(), u[row].begin(), u[row].end());
      aj.insert(aj.end(), u[j].begin(), u[j].end());
      combine(ar, aj, x, y);
      a[row].assign(ar.begin(), ar.begin() + static_cast<std::ptrdiff_t>(cols));
      u[row].assign(ar.begin() + static_cast<std::ptrdiff_t>(cols), ar.end());
      a[j].assign(aj.begin(), aj.begin() + static_cast<std::ptrdiff_t>(cols));
      u[j].assign(aj.begin() + static_cast<std::ptrdiff_t>(cols), aj.end());
    }
    if (sgn(a[row][col]) < 0) {
      for (auto& x : a[row]) x = -x;
      for (auto& x : u[row]) x = -x;
    }
    const mpz_class& p = a[row][col];
    for (std::size_t i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), p.get_mpz_t());
      if (sgn(q) == 0) continue;
      axpy(a[i], a[row], q);
      axpy(u[i], u[row], q);
    }
    ++row;
  }
}

}  // namespace

HermiteForm hermite_normal_form(const LinearMap& m) {
  ZMat a = to_z(m);
  ZMat u(m.rows(), ZRow(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i) u[i][i] = 1;
  hnf_in_place(a, u, m.cols());
  return {from_z(a, m.cols()), from_z(u, m.rows())};
}

std::vector<std::size_t> echelon_pivots(const LinearMap& h) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c).is_zero()) ++c;
    if (c == h.cols()) break;
    piv.push_back(c);
  }
  return piv;
}

LinearMap row_lattice_basis(const LinearMap& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::size_t rk = echelon_pivots(hf.h).size();
  LinearMap out(hf.h.domain(), rk, m.cols());
  for (std::size_t r = 0; r < rk; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = hf.h(r, c);
  return out;
}

std::vector<mpz_class> smith_normal_form(const LinearMap& m) {
  ZMat a = to_z(m);
  const std::size_t nr = m.rows(), nc = m.cols();
  const std::size_t k = std::min(nr, nc);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = nr, pc = nc;
      for (std::size_t r = t; r < nr; ++r)
        for (std::size_t c = t; c < nc; ++c)
          if (sgn(a[r][c]) != 0 && (pr == nr || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == nr) goto done;
      std::swap(a[pr], a[t]);
      for (auto& row : a) std::swap(row[pc], row[t]);

      bool clean = true;
      for (std::size_t r = t + 1; r < nr; ++r) {
        if (sgn(a[r][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
        axpy(a[r], a[t], q);
        if (sgn(a[r][t]) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < nc; ++c) {
        if (sgn(a[t][c]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t r = t; r < nr; ++r) a[r][c] -= q * a[r][t];
        if (sgn(a[t][c]) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce d_t | every remaining entry.
      bool divides = true;
      for (std::size_t r = t + 1; r < nr && divides; ++r)
        for (std::size_t c = t + 1; c < nc; ++c)
          if (!mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t cc = t; cc < nc; ++cc) a[t][cc] += a[r][cc];
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
done:
  std::vector<mpz_class> out;
  for (std::size_t t = 0; t < k; ++t) out.push_back(abs(a[t][t]));
  return out;
}

std::vector<mpz_class> nontrivial_factors(const std::vector<mpz_class>& factors) {
  std::vector<mpz_class> out;
  for (const auto& f : factors)
    if (f != 1) out.push_back(f);
  return out;
}

LinearMap integer_kernel(const LinearMap& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  ZMat at = to_z(m.transpose());  // nc x nr
  ZMat u(nc, ZRow(nc));
  for (std::size_t i = 0; i < nc; ++i) u[i][i] = 1;
  hnf_in_place(at, u, nr);
  ZMat ker;
  for (std::size_t r = 0; r < nc; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < nr; ++c)
      if (sgn(at[r][c]) != 0) zero = false;
    if (zero) ker.push_back(u[r]);
  }
  if (ker.empty()) return LinearMap(Domain::integers(), 0, nc);
  return row_lattice_basis(from_z(ker, nc));
}

}  // namespace hopfgal
