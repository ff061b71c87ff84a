#pragma once

#include "rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lie2 {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class S>
using BasicVector = std::vector<S>;
using Vector = BasicVector<Rational>;

template <class S>
bool is_zero(const std::vector<S>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class S>
std::vector<S> zeros(std::size_t n) {
  return std::vector<S>(n, S(0));
}

template <class S>
std::vector<S> unit(std::size_t n, std::size_t i) {
  std::vector<S> v(n, S(0));
  v.at(i) = S(1);
  return v;
}

// y += c*x
template <class S>
void axpy(std::vector<S>& y, const S& c, const std::vector<S>& x) {
  if (y.size() != x.size()) throw DimensionMismatch("axpy: vector sizes differ");
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!is_zero(x[i])) y[i] += c * x[i];
}

template <class S>
std::vector<S> add(std::vector<S> a, const std::vector<S>& b) {
  axpy(a, S(1), b);
  return a;
}

template <class S>
std::vector<S> sub(std::vector<S> a, const std::vector<S>& b) {
  axpy(a, S(-1), b);
  return a;
}

template <class S>
std::vector<S> neg(std::vector<S> a) {
  for (auto& x : a) x = -x;
  return a;
}

template <class S>
std::vector<S> scaled(const S& c, std::vector<S> a) {
  for (auto& x : a) x *= c;
  return a;
}

template <class S>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}
  BasicMatrix(std::initializer_list<std::initializer_list<S>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static BasicMatrix from_columns(std::size_t rows, const std::vector<std::vector<S>>& columns) {
    BasicMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) throw DimensionMismatch("column length differs from row count");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  S& at(std::size_t r, std::size_t c) {
    check(r, c);
    return data_[r * cols_ + c];
  }
  const S& at(std::size_t r, std::size_t c) const {
    check(r, c);
    return data_[r * cols_ + c];
  }

  std::span<const S> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<S> column(std::size_t c) const {
    std::vector<S> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  const std::vector<S>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!lie2::is_zero(x)) return false;
    return true;
  }

  bool same_shape(const BasicMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  BasicMatrix transpose() const {
    BasicMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector: length " + std::to_string(v.size()) + " vs " + std::to_string(cols_) + " columns");
    std::vector<S> out(rows_, S(0));
    for (std::size_t c = 0; c < cols_; ++c) {
      if (lie2::is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r)
        if (!lie2::is_zero((*this)(r, c))) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
    BasicMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (lie2::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!lie2::is_zero(b(k, j))) out(i, j) += x * b(k, j);
      }
    return out;
  }
  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("matrix sum: shapes differ");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("matrix difference: shapes differ");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend BasicMatrix operator-(BasicMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend BasicMatrix operator*(const S& c, BasicMatrix a) {
    for (auto& x : a.data_) x *= c;
    return a;
  }
  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(std::declval<const S&>()));
    BasicMatrix<T> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

 private:
  void check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> data_;
};

using Matrix = BasicMatrix<Rational>;

template <class S>
BasicMatrix<S> power(const BasicMatrix<S>& m, unsigned k) {
  BasicMatrix<S> out = BasicMatrix<S>::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

}  // namespace lie2
