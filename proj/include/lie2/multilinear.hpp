#pragma once

#include "combinatorics.hpp"
#include "matrix.hpp"

#include <functional>
#include <span>
#include <vector>

namespace lie2 {

// A multilinear map with p alternating arguments from a space of dimension m
// and q symmetric arguments from a space of dimension n, valued in a space of
// dimension out. Values are stored only on increasing tuples (strict for the
// alternating block, weak for the symmetric block); flat index is
// (rank(xs) * multiset_count(n,q) + rank(as)) * out + r.
template <class T>
class BasicMultilinearMap {
 public:
  BasicMultilinearMap() = default;
  BasicMultilinearMap(std::size_t p, std::size_t q, std::size_t m, std::size_t n, std::size_t out)
      : p_(p), q_(q), m_(m), n_(n), out_(out), a_count_(multiset_count(n, q)),
        data_(binomial(m, p) * a_count_ * out, T(0)) {}

  std::size_t alt_arity() const { return p_; }
  std::size_t sym_arity() const { return q_; }
  std::size_t alt_dim() const { return m_; }
  std::size_t sym_dim() const { return n_; }
  std::size_t out_dim() const { return out_; }
  std::size_t tuple_count() const { return binomial(m_, p_) * a_count_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool same_shape(const BasicMultilinearMap& o) const {
    // a dimension only matters when some argument lives there
    return p_ == o.p_ && q_ == o.q_ && (p_ == 0 || m_ == o.m_) && (q_ == 0 || n_ == o.n_) && out_ == o.out_;
  }

  // index of the block for sorted tuples
  std::size_t tuple_index(std::span<const std::size_t> xs, std::span<const std::size_t> as) const {
    return combination_rank(xs, m_) * a_count_ + multiset_rank(as, n_);
  }

  std::span<T> block(std::size_t tuple) { return {data_.data() + tuple * out_, out_}; }
  std::span<const T> block(std::size_t tuple) const { return {data_.data() + tuple * out_, out_}; }

  // Value at basis arguments in any order; permutation signs applied on the
  // alternating block, repeated alternating arguments give zero.
  std::vector<T> value(std::span<const std::size_t> xs, std::span<const std::size_t> as = {}) const {
    Tuple x(xs.begin(), xs.end()), a(as.begin(), as.end());
    check_args(x, a);
    int s = sort_alternating(x);
    std::vector<T> out(out_, T(0));
    if (s == 0) return out;
    std::sort(a.begin(), a.end());
    auto b = block(tuple_index(x, a));
    for (std::size_t r = 0; r < out_; ++r) out[r] = s > 0 ? b[r] : -b[r];
    return out;
  }
  std::vector<T> value(std::initializer_list<std::size_t> xs, std::initializer_list<std::size_t> as = {}) const {
    return value(std::span<const std::size_t>(xs.begin(), xs.size()), std::span<const std::size_t>(as.begin(), as.size()));
  }

  // Stores v at the given arguments, so that value(xs, as) == v afterwards.
  void set(std::span<const std::size_t> xs, std::span<const std::size_t> as, const std::vector<T>& v) {
    if (v.size() != out_) throw DimensionMismatch("multilinear value has wrong length");
    Tuple x(xs.begin(), xs.end()), a(as.begin(), as.end());
    check_args(x, a);
    int s = sort_alternating(x);
    if (s == 0) throw std::invalid_argument("repeated argument in an alternating slot");
    std::sort(a.begin(), a.end());
    auto b = block(tuple_index(x, a));
    for (std::size_t r = 0; r < out_; ++r) b[r] = s > 0 ? v[r] : -v[r];
  }
  void set(std::initializer_list<std::size_t> xs, std::initializer_list<std::size_t> as, const std::vector<T>& v) {
    set(std::span<const std::size_t>(xs.begin(), xs.size()), std::span<const std::size_t>(as.begin(), as.size()), v);
  }

  // Multilinear expansion at arbitrary vectors.
  template <class S>
  std::vector<T> evaluate(const std::vector<std::vector<S>>& xs, const std::vector<std::vector<S>>& as = {}) const {
    if (xs.size() != p_ || as.size() != q_) throw DimensionMismatch("multilinear map called with wrong arity");
    for (const auto& x : xs)
      if (x.size() != m_) throw DimensionMismatch("argument of wrong dimension");
    for (const auto& a : as)
      if (a.size() != n_) throw DimensionMismatch("argument of wrong dimension");
    using lie2::is_zero;
    std::vector<T> out(out_, T(0));
    Tuple xi(p_), ai(q_);
    std::function<void(std::size_t, const T&)> rec = [&](std::size_t k, const T& coef) {
      if (k < p_) {
        for (std::size_t i = 0; i < m_; ++i)
          if (!is_zero(xs[k][i])) {
            xi[k] = i;
            rec(k + 1, coef * T(xs[k][i]));
          }
        return;
      }
      if (k < p_ + q_) {
        for (std::size_t j = 0; j < n_; ++j)
          if (!is_zero(as[k - p_][j])) {
            ai[k - p_] = j;
            rec(k + 1, coef * T(as[k - p_][j]));
          }
        return;
      }
      Tuple x = xi, a = ai;
      int s = sort_alternating(x);
      if (s == 0) return;
      std::sort(a.begin(), a.end());
      auto b = block(tuple_index(x, a));
      T c = s > 0 ? coef : -coef;
      for (std::size_t r = 0; r < out_; ++r)
        if (!is_zero(b[r])) out[r] += c * b[r];
    };
    rec(0, T(1));
    return out;
  }

  // Visits every stored (increasing) tuple.
  template <class F>
  void for_each_tuple(F&& f) const {
    auto xs_all = combinations(m_, p_);
    auto as_all = multisets(n_, q_);
    std::size_t t = 0;
    for (const auto& x : xs_all)
      for (const auto& a : as_all) f(x, a, block(t++));
  }
  template <class F>
  void for_each_tuple_mut(F&& f) {
    auto xs_all = combinations(m_, p_);
    auto as_all = multisets(n_, q_);
    std::size_t t = 0;
    for (const auto& x : xs_all)
      for (const auto& a : as_all) f(x, a, block(t++));
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!lie2::is_zero(v)) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    BasicMultilinearMap<U> out(p_, q_, m_, n_, out_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data()[i] = f(data_[i]);
    return out;
  }

  friend BasicMultilinearMap operator+(BasicMultilinearMap a, const BasicMultilinearMap& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("multilinear sum: shapes differ");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend BasicMultilinearMap operator-(BasicMultilinearMap a, const BasicMultilinearMap& b) {
    if (!a.same_shape(b)) throw DimensionMismatch("multilinear difference: shapes differ");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend BasicMultilinearMap operator*(const T& c, BasicMultilinearMap a) {
    for (auto& x : a.data_) x *= c;
    return a;
  }
  friend bool operator==(const BasicMultilinearMap& a, const BasicMultilinearMap& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  void check_args(const Tuple& x, const Tuple& a) const {
    if (x.size() != p_ || a.size() != q_) throw DimensionMismatch("multilinear map called with wrong arity");
    for (auto i : x)
      if (i >= m_) throw std::out_of_range("alternating argument index out of range");
    for (auto j : a)
      if (j >= n_) throw std::out_of_range("symmetric argument index out of range");
  }

  std::size_t p_ = 0, q_ = 0, m_ = 0, n_ = 0, out_ = 0, a_count_ = 1;
  std::vector<T> data_;
};

using MultilinearMap = BasicMultilinearMap<Rational>;

}  // namespace lie2
