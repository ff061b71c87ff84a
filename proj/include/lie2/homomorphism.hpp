#pragma once

#include "axioms.hpp"
#include "linalg.hpp"

namespace lie2 {

// F0: g_0 -> g'_0, F1: g_{-1} -> g'_{-1}, F2: ∧²g_0 -> g'_{-1}.
template <class S>
struct BasicHomomorphism {
  BasicMatrix<S> F0, F1;
  BasicMultilinearMap<S> F2;

  std::vector<S> f2(const std::vector<S>& x, const std::vector<S>& y) const { return F2.template evaluate<S>({x, y}); }

  friend bool operator==(const BasicHomomorphism&, const BasicHomomorphism&) = default;
};

using Homomorphism = BasicHomomorphism<Rational>;

template <class S>
BasicMultilinearMap<S> zero_f2(std::size_t m, std::size_t n, std::size_t target_n) {
  return BasicMultilinearMap<S>(2, 0, m, n, target_n);
}

template <class S>
BasicHomomorphism<S> identity_homomorphism(const GradedSpace& g) {
  return {BasicMatrix<S>::identity(g.dim0), BasicMatrix<S>::identity(g.dim1), zero_f2<S>(g.dim0, g.dim1, g.dim1)};
}

inline Homomorphism identity_homomorphism(const GradedSpace& g) { return identity_homomorphism<Rational>(g); }

template <class S>
void check_shapes(const BasicHomomorphism<S>& F, const GradedSpace& src, const GradedSpace& dst) {
  if (F.F0.rows() != dst.dim0 || F.F0.cols() != src.dim0 || F.F1.rows() != dst.dim1 || F.F1.cols() != src.dim1 ||
      F.F2.alt_arity() != 2 || F.F2.sym_arity() != 0 || F.F2.alt_dim() != src.dim0 || F.F2.out_dim() != dst.dim1)
    throw DimensionMismatch("homomorphism components do not match source and target");
}

template <class S>
BasicReport<S> check_homomorphism(const BasicHomomorphism<S>& F, const BasicLie2Algebra<S>& L,
                                  const BasicLie2Algebra<S>& Lp) {
  check_shapes(F, L.space(), Lp.space());
  BasicReport<S> rep;
  auto& c1 = rep.add("i", "F0 d = d' F1");
  auto& c2 = rep.add("ii", "F0[x,y] - [F0x,F0y]' = d' F2(x,y)");
  auto& c3 = rep.add("iii", "F1[x,a] - [F0x,F1a]' = F2(x,da)");
  auto& c4 = rep.add("iv", "F2([x,y],z) + c.p. + F1 l3(x,y,z) = [F0x,F2(y,z)]' + c.p. + l3'(F0x,F0y,F0z)");
  const std::size_t m = L.dim0, n = L.dim1;

  for (std::size_t a = 0; a < n; ++a) {
    auto r = sub(F.F0.apply(L.diff(L.f(a))), Lp.diff(F.F1.apply(L.f(a))));
    c1.record({{'f', a}}, std::move(r));
  }
  for (const auto& t : combinations(m, 2)) {
    auto x = L.e(t[0]), y = L.e(t[1]);
    auto r = F.F0.apply(L.bracket(x, y));
    r = sub(r, Lp.bracket(F.F0.apply(x), F.F0.apply(y)));
    r = sub(r, Lp.diff(F.f2(x, y)));
    c2.record({{'e', t[0]}, {'e', t[1]}}, std::move(r));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      auto r = F.F1.apply(L.action(x, fa));
      r = sub(r, Lp.action(F.F0.apply(x), F.F1.apply(fa)));
      r = sub(r, F.f2(x, L.diff(fa)));
      c3.record({{'e', i}, {'f', a}}, std::move(r));
    }
  for (const auto& t : combinations(m, 3)) {
    std::vector<std::vector<S>> v = {L.e(t[0]), L.e(t[1]), L.e(t[2])};
    auto r = F.F1.apply(L.jacobiator(v[0], v[1], v[2]));
    for (int c = 0; c < 3; ++c) {
      const auto &x = v[c], &y = v[(c + 1) % 3], &z = v[(c + 2) % 3];
      r = add(r, F.f2(L.bracket(x, y), z));
      r = sub(r, Lp.action(F.F0.apply(x), F.f2(y, z)));
    }
    r = sub(r, Lp.jacobiator(F.F0.apply(v[0]), F.F0.apply(v[1]), F.F0.apply(v[2])));
    c4.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}}, std::move(r));
  }
  return rep;
}

// G∘F = (G0F0, G1F1, G2∘(F0×F0) + G1∘F2)
template <class S>
BasicHomomorphism<S> compose(const BasicHomomorphism<S>& G, const BasicHomomorphism<S>& F) {
  if (G.F0.cols() != F.F0.rows() || G.F1.cols() != F.F1.rows() || G.F2.alt_dim() != F.F0.rows())
    throw DimensionMismatch("compose: target of F is not the source of G");
  const std::size_t m = F.F0.cols(), n = F.F1.cols();
  BasicHomomorphism<S> H{G.F0 * F.F0, G.F1 * F.F1, zero_f2<S>(m, n, G.F1.rows())};
  for (const auto& t : combinations(m, 2)) {
    auto x = unit<S>(m, t[0]), y = unit<S>(m, t[1]);
    auto v = add(G.f2(F.F0.apply(x), F.F0.apply(y)), G.F1.apply(F.f2(x, y)));
    H.F2.set(t, {}, v);
  }
  return H;
}

inline Homomorphism invert(const Homomorphism& F) {
  Matrix A0 = inverse(F.F0), A1 = inverse(F.F1);
  const std::size_t m = A0.cols(), n = A1.cols();
  Homomorphism H{A0, A1, zero_f2<Rational>(m, n, A1.rows())};
  for (const auto& t : combinations(m, 2)) {
    auto v = neg(A1.apply(F.f2(A0.column(t[0]), A0.column(t[1]))));
    H.F2.set(t, {}, v);
  }
  return H;
}

// The structure on the source of F making F an isomorphism onto Lp.
inline Lie2Algebra transport_structure(const Homomorphism& F, const Lie2Algebra& Lp) {
  const std::size_t m = F.F0.cols(), n = F.F1.cols();
  check_shapes(F, {m, n}, Lp.space());
  Matrix A0 = inverse(F.F0), A1 = inverse(F.F1);
  Lie2Algebra L(m, n);
  L.d = A0 * Lp.d * F.F1;
  for (const auto& t : combinations(m, 2)) {
    auto x = L.e(t[0]), y = L.e(t[1]);
    auto v = add(Lp.bracket(F.F0.apply(x), F.F0.apply(y)), Lp.diff(F.f2(x, y)));
    L.l2_00.set(t, {}, A0.apply(v));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      auto v = add(Lp.action(F.F0.apply(x), F.F1.apply(fa)), F.f2(x, L.diff(fa)));
      L.l2_01.set(Tuple{i}, Tuple{a}, A1.apply(v));
    }
  for (const auto& t : combinations(m, 3)) {
    std::vector<Vector> v = {L.e(t[0]), L.e(t[1]), L.e(t[2])};
    auto r = Lp.jacobiator(F.F0.apply(v[0]), F.F0.apply(v[1]), F.F0.apply(v[2]));
    for (int c = 0; c < 3; ++c) {
      const auto &x = v[c], &y = v[(c + 1) % 3], &z = v[(c + 2) % 3];
      r = add(r, Lp.action(F.F0.apply(x), F.f2(y, z)));
      r = sub(r, F.f2(L.bracket(x, y), z));
    }
    L.l3.set(t, {}, A1.apply(r));
  }
  return L;
}

}  // namespace lie2
