#pragma once

#include <vector>

#include "icoflux/q5.hpp"

namespace icoflux {

using Q5Vector = std::vector<Q5Scalar>;

// Dense exact matrix over Q(sqrt 5).
class Q5Matrix {
 public:
  Q5Matrix() = default;
  Q5Matrix(int rows, int cols);
  static Q5Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Q5Scalar& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Q5Scalar& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool operator==(const Q5Matrix& o) const;
  bool is_zero() const;

  Q5Matrix operator*(const Q5Matrix& o) const;
  Q5Matrix operator+(const Q5Matrix& o) const;
  Q5Matrix operator-(const Q5Matrix& o) const;
  Q5Matrix scaled(const Q5Scalar& s) const;
  Q5Matrix transpose() const;
  Q5Matrix block(int r0, int c0, int nr, int nc) const;

  Q5Vector col(int j) const;
  Q5Vector apply(const Q5Vector& v) const;
  Q5Scalar trace() const;

  int rank() const;
  // Exact Gauss-Jordan inverse; throws std::domain_error on a singular matrix.
  Q5Matrix inverse() const;

  std::vector<std::vector<double>> to_double() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Q5Scalar> e_;
};

// Incremental exact row reduction. Feeds vectors in caller order and keeps the
// ones that enlarge the span, which is exactly the "first independent columns"
// rule used for basis extraction.
class SpanBuilder {
 public:
  explicit SpanBuilder(int dim) : dim_(dim) {}

  // true if v was independent of the current span (and was added to it)
  bool insert(Q5Vector v);
  bool contains(Q5Vector v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  Q5Vector reduce(Q5Vector v) const;

  int dim_;
  std::vector<std::pair<int, Q5Vector>> rows_;  // (pivot, row), mutually reduced
};

}  // namespace icoflux
