#pragma once

#include "axioms.hpp"

namespace lie2 {

// An ordinary Lie algebra by structure constants.
struct LieAlgebraData {
  std::size_t dim = 0;
  MultilinearMap bracket;  // (2,0,dim,0,dim)

  LieAlgebraData() = default;
  explicit LieAlgebraData(std::size_t k) : dim(k), bracket(2, 0, k, 0, k) {}

  Vector e(std::size_t i) const { return unit<Rational>(dim, i); }
  Vector operator()(const Vector& x, const Vector& y) const { return bracket.evaluate<Rational>({x, y}); }
  void set(std::size_t i, std::size_t j, const Vector& v) { bracket.set({i, j}, {}, v); }

  void check_shape() const {
    if (!bracket.same_shape(MultilinearMap(2, 0, dim, 0, dim))) throw DimensionMismatch("bracket does not match dimension");
  }
  friend bool operator==(const LieAlgebraData&, const LieAlgebraData&) = default;
};

inline AxiomReport check_jacobi(const LieAlgebraData& h) {
  h.check_shape();
  AxiomReport rep;
  auto& c = rep.add("Jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0");
  for (const auto& t : combinations(h.dim, 3)) {
    auto x = h.e(t[0]), y = h.e(t[1]), z = h.e(t[2]);
    auto r = add(add(h(h(x, y), z), h(h(y, z), x)), h(h(z, x), y));
    c.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}}, std::move(r));
  }
  return rep;
}

// A Lie algebra as a 2-term algebra concentrated in degree 0.
inline Lie2Algebra as_lie2(const LieAlgebraData& h) {
  Lie2Algebra L(h.dim, 0);
  L.l2_00 = h.bracket;
  return L;
}

// s = h1 ⊕ h2 with the two summands commuting.
inline LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b) {
  LieAlgebraData s(a.dim + b.dim);
  for (const auto& t : combinations(a.dim, 2)) {
    auto v = a.bracket.value({t[0], t[1]});
    Vector w(s.dim, Rational(0));
    std::copy(v.begin(), v.end(), w.begin());
    s.set(t[0], t[1], w);
  }
  for (const auto& t : combinations(b.dim, 2)) {
    auto v = b.bracket.value({t[0], t[1]});
    Vector w(s.dim, Rational(0));
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(a.dim));
    s.set(a.dim + t[0], a.dim + t[1], w);
  }
  return s;
}

}  // namespace lie2
