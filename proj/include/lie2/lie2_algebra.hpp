#pragma once

#include "lambda_poly.hpp"
#include "multilinear.hpp"

#include <string>

namespace lie2 {

struct GradedSpace {
  std::size_t dim0 = 0;  // g_0
  std::size_t dim1 = 0;  // g_{-1}
  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

// Structure constants of a 2-term algebra g_0 ⊕ g_{-1}:
//   d(f_j) = Σ_i d(i,j) e_i,  [e_i,e_j] = l2_00(i,j),  [e_i,f_j] = l2_01(i;j),
//   l3(e_i,e_j,e_k) in g_{-1}.
// No bracket on g_{-1} ∧ g_{-1}. [f_j,e_i] is -[e_i,f_j].
template <class S>
struct BasicLie2Algebra {
  std::size_t dim0 = 0, dim1 = 0;
  BasicMatrix<S> d;
  BasicMultilinearMap<S> l2_00;
  BasicMultilinearMap<S> l2_01;
  BasicMultilinearMap<S> l3;

  BasicLie2Algebra() = default;
  BasicLie2Algebra(std::size_t m, std::size_t n)
      : dim0(m), dim1(n), d(m, n), l2_00(2, 0, m, n, m), l2_01(1, 1, m, n, n), l3(3, 0, m, n, n) {}

  GradedSpace space() const { return {dim0, dim1}; }

  std::vector<S> e(std::size_t i) const { return unit<S>(dim0, i); }
  std::vector<S> f(std::size_t j) const { return unit<S>(dim1, j); }

  std::vector<S> diff(const std::vector<S>& a) const { return d.apply(a); }
  std::vector<S> bracket(const std::vector<S>& x, const std::vector<S>& y) const { return l2_00.template evaluate<S>({x, y}); }
  // [x,a] with x in g_0, a in g_{-1}
  std::vector<S> action(const std::vector<S>& x, const std::vector<S>& a) const { return l2_01.template evaluate<S>({x}, {a}); }
  std::vector<S> jacobiator(const std::vector<S>& x, const std::vector<S>& y, const std::vector<S>& z) const {
    return l3.template evaluate<S>({x, y, z});
  }

  bool is_skeletal() const { return d.is_zero(); }
  bool is_strict() const { return l3.is_zero(); }

  void check_shape() const {
    if (d.rows() != dim0 || d.cols() != dim1 || !l2_00.same_shape(BasicMultilinearMap<S>(2, 0, dim0, dim1, dim0)) ||
        !l2_01.same_shape(BasicMultilinearMap<S>(1, 1, dim0, dim1, dim1)) ||
        !l3.same_shape(BasicMultilinearMap<S>(3, 0, dim0, dim1, dim1)))
      throw DimensionMismatch("structure tensors do not match the declared dimensions");
  }

  template <class F>
  auto map(F&& fn) const {
    using U = decltype(fn(std::declval<const S&>()));
    BasicLie2Algebra<U> out;
    out.dim0 = dim0;
    out.dim1 = dim1;
    out.d = d.map(fn);
    out.l2_00 = l2_00.map(fn);
    out.l2_01 = l2_01.map(fn);
    out.l3 = l3.map(fn);
    return out;
  }

  friend bool operator==(const BasicLie2Algebra& a, const BasicLie2Algebra& b) {
    return a.dim0 == b.dim0 && a.dim1 == b.dim1 && a.d == b.d && a.l2_00 == b.l2_00 && a.l2_01 == b.l2_01 &&
           a.l3 == b.l3;
  }
};

using Lie2Algebra = BasicLie2Algebra<Rational>;
using LambdaAlgebra = BasicLie2Algebra<LambdaPoly>;

inline LambdaAlgebra lift(const Lie2Algebra& L) {
  return L.map([](const Rational& q) { return LambdaPoly(q); });
}

inline Lie2Algebra evaluate_at(const LambdaAlgebra& L, const Rational& x) {
  return L.map([&](const LambdaPoly& p) { return p.evaluate(x); });
}

inline Lie2Algebra coefficient_of(const LambdaAlgebra& L, std::size_t k) {
  return L.map([&](const LambdaPoly& p) { return p.coefficient(k); });
}

}  // namespace lie2
