#include "hopfgal/linear_map.hpp"

#include <cassert>

#include "hopfgal/errors.hpp"

namespace hopfgal {

Vector zero_vector(Domain d, std::size_t n) { return Vector(n, Scalar(d)); }

Vector unit_vector(Domain d, std::size_t n, std::size_t i) {
  Vector v = zero_vector(d, n);
  v.at(i) = Scalar(d, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

LinearMap::LinearMap(Domain d, std::size_t rows, std::size_t cols)
    : dom_(d), rows_(rows), cols_(cols), data_(rows * cols, Scalar(d)) {}

LinearMap LinearMap::identity(Domain d, std::size_t n) {
  LinearMap m(d, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(d, 1);
  return m;
}

LinearMap LinearMap::from_rows(Domain d, const std::vector<Vector>& rows, std::size_t cols) {
  LinearMap m(d, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw FormatError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

LinearMap LinearMap::from_columns(Domain d, const std::vector<Vector>& cols, std::size_t rows) {
  LinearMap m(d, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw FormatError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

LinearMap LinearMap::from_ints(Domain d, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  LinearMap m(d, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw FormatError("ragged integer matrix");
    std::size_t c = 0;
    for (long v : row) m(r, c++) = Scalar(d, v);
    ++r;
  }
  return m;
}

Vector LinearMap::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector LinearMap::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw FormatError("vector length does not match domain dimension");
  Vector out = zero_vector(dom_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(dom_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  if (!(dom_ == o.dom_)) throw DomainMismatch("matrix product across domains");
  if (cols_ != o.rows_) throw FormatError("matrix product shape mismatch");
  LinearMap out(dom_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      auto orow = o.row(k);
      auto dst = out.row(i);
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!orow[j].is_zero()) dst[j] += a * orow[j];
    }
  }
  return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (!(dom_ == o.dom_)) throw DomainMismatch("matrix sum across domains");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw FormatError("matrix sum shape mismatch");
  LinearMap out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (!(dom_ == o.dom_)) throw DomainMismatch("matrix difference across domains");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw FormatError("matrix difference shape mismatch");
  LinearMap out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

LinearMap LinearMap::scaled(const Scalar& s) const {
  LinearMap out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool LinearMap::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool LinearMap::operator==(const LinearMap& o) const {
  return dom_ == o.dom_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

}  // namespace hopfgal
