#include "icoflux/q5_matrix.hpp"

#include <stdexcept>

namespace icoflux {

Q5Matrix::Q5Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {}

Q5Matrix Q5Matrix::identity(int n) {
  Q5Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Q5Matrix::operator==(const Q5Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Q5Matrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

Q5Matrix Q5Matrix::operator*(const Q5Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Q5Matrix: dimension mismatch in product");
  Q5Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Q5Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Q5Scalar& bkj = o.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Q5Matrix Q5Matrix::operator+(const Q5Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Q5Matrix: dimension mismatch in sum");
  Q5Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Q5Matrix Q5Matrix::operator-(const Q5Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Q5Matrix: dimension mismatch in difference");
  Q5Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Q5Matrix Q5Matrix::scaled(const Q5Scalar& s) const {
  Q5Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

Q5Matrix Q5Matrix::transpose() const {
  Q5Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Q5Matrix Q5Matrix::block(int r0, int c0, int nr, int nc) const {
  Q5Matrix r(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

Q5Vector Q5Matrix::col(int j) const {
  Q5Vector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Q5Vector Q5Matrix::apply(const Q5Vector& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Q5Matrix: dimension mismatch in apply");
  Q5Vector r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Q5Scalar Q5Matrix::trace() const {
  Q5Scalar t;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

int Q5Matrix::rank() const {
  SpanBuilder span(cols_);
  for (int i = 0; i < rows_; ++i) {
    Q5Vector row(cols_);
    for (int j = 0; j < cols_; ++j) row[j] = at(i, j);
    span.insert(std::move(row));
  }
  return span.rank();
}

Q5Matrix Q5Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Q5Matrix: inverse of non-square matrix");
  int n = rows_;
  Q5Matrix a = *this;
  Q5Matrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("Q5Matrix: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Q5Scalar pinv = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= pinv;
      inv.at(col, j) *= pinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      Q5Scalar f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<double>> Q5Matrix::to_double() const {
  std::vector<std::vector<double>> m(rows_, std::vector<double>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j).to_double();
  return m;
}

Q5Vector SpanBuilder::reduce(Q5Vector v) const {
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot].is_zero()) continue;
    Q5Scalar f = v[pivot];
    for (int j = 0; j < dim_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool SpanBuilder::insert(Q5Vector v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < dim_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  Q5Scalar pinv = v[pivot].inverse();
  for (int j = 0; j < dim_; ++j) v[j] *= pinv;
  // keep rows mutually reduced so a single pass in reduce() is enough
  for (auto& [p, row] : rows_) {
    if (row[pivot].is_zero()) continue;
    Q5Scalar f = row[pivot];
    for (int j = 0; j < dim_; ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  rows_.emplace_back(pivot, std::move(v));
  return true;
}

bool SpanBuilder::contains(Q5Vector v) const {
  v = reduce(std::move(v));
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace icoflux
