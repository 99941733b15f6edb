#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hopfgal/scalar.hpp"

namespace hopfgal {

using Vector = std::vector<Scalar>;

Vector zero_vector(Domain d, std::size_t n);
Vector unit_vector(Domain d, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

// Dense matrix of a linear map K^cols -> K^rows, stored row-major.
// Column j is the image of the j-th domain basis vector.
class LinearMap {
 public:
  LinearMap(Domain d, std::size_t rows, std::size_t cols);

  static LinearMap identity(Domain d, std::size_t n);
  static LinearMap from_rows(Domain d, const std::vector<Vector>& rows, std::size_t cols);
  static LinearMap from_columns(Domain d, const std::vector<Vector>& cols, std::size_t rows);
  // Convenience for tests and builtins.
  static LinearMap from_ints(Domain d, std::initializer_list<std::initializer_list<long>> rows);

  const Domain& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t codomain_dim() const { return rows_; }
  std::size_t domain_dim() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  Vector apply(std::span<const Scalar> v) const;
  LinearMap transpose() const;
  LinearMap operator*(const LinearMap& o) const;
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Scalar& s) const;
  bool is_zero() const;
  bool operator==(const LinearMap& o) const;

 private:
  Domain dom_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace hopfgal
