#pragma once

#include "cocycle_equations.hpp"
#include "homomorphism.hpp"

namespace lie2 {

// (ω1, ω2⁰, ω2¹, ω3): the first-order terms of d, [·,·] on g_0, [·,·] on
// g_0 ⊗ g_{-1} and l3.
struct DeformationDatum {
  Matrix omega1;
  MultilinearMap omega2_0, omega2_1, omega3;

  static DeformationDatum zero(const GradedSpace& g) {
    Lie2Algebra z(g.dim0, g.dim1);
    return {z.d, z.l2_00, z.l2_01, z.l3};
  }
  friend bool operator==(const DeformationDatum&, const DeformationDatum&) = default;
};

inline Lie2Algebra as_structure(const DeformationDatum& w) {
  Lie2Algebra L;
  L.dim0 = w.omega1.rows();
  L.dim1 = w.omega1.cols();
  L.d = w.omega1;
  L.l2_00 = w.omega2_0;
  L.l2_01 = w.omega2_1;
  L.l3 = w.omega3;
  L.check_shape();
  return L;
}

inline DeformationDatum datum_from_structure(const Lie2Algebra& S) { return {S.d, S.l2_00, S.l2_01, S.l3}; }

// The datum as a degree 2 cochain with values in the adjoint module.
inline Cochain to_cochain(const DeformationDatum& w) {
  Lie2Algebra S = as_structure(w);
  const std::size_t m = S.dim0, n = S.dim1;
  Cochain c = Cochain::zero({m, n, m, n}, 2);
  if (n > 0) {
    auto& psi = c[Degree2Parts::psi];
    for (std::size_t a = 0; a < n; ++a) psi.set(Tuple{}, Tuple{a}, w.omega1.column(a));
    c[Degree2Parts::nu] = w.omega2_1;
  }
  if (m >= 2) c[Degree2Parts::omega] = w.omega2_0;
  if (m >= 3) c[Degree2Parts::theta] = w.omega3;
  return c;
}

inline DeformationDatum datum_from_cochain(const Cochain& c) {
  const auto& sh = c.shape;
  if (c.degree != 2 || sh.v0 != sh.m || sh.v1 != sh.n) throw DimensionMismatch("not an adjoint-valued degree 2 cochain");
  DeformationDatum w = DeformationDatum::zero({sh.m, sh.n});
  if (c.has(Degree2Parts::psi)) {
    const auto& psi = c[Degree2Parts::psi];
    for (std::size_t a = 0; a < sh.n; ++a) {
      auto col = psi.value(Tuple{}, Tuple{a});
      for (std::size_t i = 0; i < sh.m; ++i) w.omega1(i, a) = col[i];
    }
  }
  if (c.has(Degree2Parts::omega)) w.omega2_0 = c[Degree2Parts::omega];
  if (c.has(Degree2Parts::nu)) w.omega2_1 = c[Degree2Parts::nu];
  if (c.has(Degree2Parts::theta)) w.omega3 = c[Degree2Parts::theta];
  return w;
}

inline Lie2Algebra deform(const Lie2Algebra& L, const DeformationDatum& w, const Rational& lambda0) {
  Lie2Algebra S = as_structure(w);
  if (!(S.space() == L.space())) throw DimensionMismatch("datum does not match the algebra");
  Lie2Algebra out = L;
  out.d = L.d + lambda0 * S.d;
  out.l2_00 = L.l2_00 + lambda0 * S.l2_00;
  out.l2_01 = L.l2_01 + lambda0 * S.l2_01;
  out.l3 = L.l3 + lambda0 * S.l3;
  return out;
}

inline LambdaAlgebra deform_family(const Lie2Algebra& L, const DeformationDatum& w) {
  Lie2Algebra S = as_structure(w);
  if (!(S.space() == L.space())) throw DimensionMismatch("datum does not match the algebra");
  LambdaAlgebra base = lift(L), lin = lift(S);
  const LambdaPoly lam = LambdaPoly::lambda();
  base.d = base.d + lam * lin.d;
  base.l2_00 = base.l2_00 + lam * lin.l2_00;
  base.l2_01 = base.l2_01 + lam * lin.l2_01;
  base.l3 = base.l3 + lam * lin.l3;
  return base;
}

// Names of the identities at each order in λ, indexed like check_axioms.
inline const std::vector<std::string>& equation_labels() {
  static const std::vector<std::string> labels = {"2-cocycle01", "2-cocycle02", "2-cocycle1", "2-cocycle2", "2-cocycle3"};
  return labels;
}

struct SymbolicDeformation {
  LambdaAlgebra family;
  LambdaReport residuals;  // check_axioms over λ-polynomials

  bool all_zero() const { return residuals.pass(); }

  // λ^k coefficients; order 1 and 2 carry the primed and double-primed names.
  AxiomReport order(std::size_t k) const {
    AxiomReport r = coefficient_report(residuals, k);
    if (k == 1 || k == 2) {
      std::size_t i = 0;
      for (auto& c : r.conditions) c.name = equation_labels()[i++] + (k == 1 ? "'" : "''");
    }
    return r;
  }
};

inline SymbolicDeformation deform_symbolic(const Lie2Algebra& L, const DeformationDatum& w) {
  SymbolicDeformation out{deform_family(L, w), {}};
  out.residuals = check_axioms(out.family);
  return out;
}

// First-order identities, written out directly. Residual conventions follow
// check_axioms so that they coincide with the λ^1 coefficients.
inline AxiomReport primed_equations(const Lie2Algebra& L, const DeformationDatum& w) {
  Lie2Algebra W = as_structure(w);
  const std::size_t m = L.dim0, n = L.dim1;
  AxiomReport rep;
  auto& c1 = rep.add("2-cocycle01'", "ω1[x,a] + dω2¹(x,a) - ω2⁰(x,da) - [x,ω1 a] = 0");
  auto& c2 = rep.add("2-cocycle02'", "[ω1 a,b] - [a,ω1 b] + ω2¹(da,b) - ω2¹(a,db) = 0");
  auto& c3 = rep.add("2-cocycle1'", "ω2⁰([x,y],z) + [ω2⁰(x,y),z] + c.p. + ω1 l3(x,y,z) + dω3(x,y,z) = 0");
  auto& c4 = rep.add("2-cocycle2'", "first-order part of [[x,y],a] + [[y,a],x] + [[a,x],y] + l3(x,y,da) = 0");
  auto& c5 = rep.add("2-cocycle3'", "ω3([x,y],z,t) + l3(ω2⁰(x,y),z,t) + c.p. = ω2¹(l3(x,y,z),t) + [ω3(x,y,z),t] + c.p.");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      auto r = W.diff(L.action(x, fa));
      r = add(r, L.diff(W.action(x, fa)));
      r = sub(r, W.bracket(x, L.diff(fa)));
      r = sub(r, L.bracket(x, W.diff(fa)));
      c1.record({{'e', i}, {'f', a}}, std::move(r));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto fa = L.f(a), fb = L.f(b);
      auto r = L.action(W.diff(fa), fb);
      r = add(r, L.action(W.diff(fb), fa));
      r = add(r, W.action(L.diff(fa), fb));
      r = add(r, W.action(L.diff(fb), fa));
      c2.record({{'f', a}, {'f', b}}, std::move(r));
    }
  for (const auto& t : combinations(m, 3)) {
    std::vector<Vector> v = {L.e(t[0]), L.e(t[1]), L.e(t[2])};
    auto r = add(W.diff(L.jacobiator(v[0], v[1], v[2])), L.diff(W.jacobiator(v[0], v[1], v[2])));
    for (int k = 0; k < 3; ++k) {
      const auto &x = v[k], &y = v[(k + 1) % 3], &z = v[(k + 2) % 3];
      r = add(r, W.bracket(L.bracket(x, y), z));
      r = add(r, L.bracket(W.bracket(x, y), z));
    }
    c3.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}}, std::move(r));
  }
  for (const auto& t : combinations(m, 2))
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(t[0]), y = L.e(t[1]), fa = L.f(a);
      auto r = add(W.action(L.bracket(x, y), fa), L.action(W.bracket(x, y), fa));
      r = sub(r, W.action(x, L.action(y, fa)));
      r = sub(r, L.action(x, W.action(y, fa)));
      r = add(r, W.action(y, L.action(x, fa)));
      r = add(r, L.action(y, W.action(x, fa)));
      r = add(r, W.jacobiator(x, y, L.diff(fa)));
      r = add(r, L.jacobiator(x, y, W.diff(fa)));
      c4.record({{'e', t[0]}, {'e', t[1]}, {'f', a}}, std::move(r));
    }
  static const auto sh22 = shuffles(4, 2);
  static const auto sh31 = shuffles(4, 3);
  for (const auto& t : combinations(m, 4)) {
    std::vector<Vector> x;
    for (auto i : t) x.push_back(L.e(i));
    auto r = zeros<Rational>(n);
    for (const auto& s : sh22) {
      const auto &a = x[s.chosen[0]], &b = x[s.chosen[1]], &c = x[s.rest[0]], &d = x[s.rest[1]];
      axpy(r, Rational(s.sign), W.jacobiator(L.bracket(a, b), c, d));
      axpy(r, Rational(s.sign), L.jacobiator(W.bracket(a, b), c, d));
    }
    for (const auto& s : sh31) {
      const auto &a = x[s.chosen[0]], &b = x[s.chosen[1]], &c = x[s.chosen[2]], &d = x[s.rest[0]];
      axpy(r, Rational(s.sign), W.action(d, L.jacobiator(a, b, c)));
      axpy(r, Rational(s.sign), L.action(d, W.jacobiator(a, b, c)));
    }
    c5.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}, {'e', t[3]}}, std::move(r));
  }
  return rep;
}

// The datum generates a deformation iff it is a 2-cocycle for the adjoint
// module and itself satisfies the axioms.
inline AxiomReport check_deformation_datum(const Lie2Algebra& L, const DeformationDatum& w) {
  Lie2Algebra W = as_structure(w);
  if (!(W.space() == L.space())) throw DimensionMismatch("datum does not match the algebra");
  AxiomReport rep = primed_equations(L, w);
  const bool closed = is_cocycle(to_cochain(w), L, adjoint_representation(L));
  if (closed != rep.pass())
    throw std::logic_error("first-order identities disagree with the coboundary of the datum");
  AxiomReport own = check_axioms(W);
  std::size_t i = 0;
  for (auto& c : own.conditions) c.name = equation_labels()[i++] + "''";
  rep.append(own);
  return rep;
}

// (N0, N1, N2) with T0 = 1 + λN0, T1 = 1 + λN1, T2 = λN2.
struct TrivializationCandidate {
  Matrix N0, N1;
  MultilinearMap N2;  // ∧²g_0 -> g_{-1}

  static TrivializationCandidate zero(const GradedSpace& g) {
    return {Matrix(g.dim0, g.dim0), Matrix(g.dim1, g.dim1), MultilinearMap(2, 0, g.dim0, g.dim1, g.dim1)};
  }
};

struct TrivializationReport {
  LambdaReport morphism;  // homomorphism identities as λ-polynomials
  AxiomReport unfolded;   // first-order matching plus the quadratic and cubic conditions
  bool pass() const { return morphism.pass(); }
};

inline TrivializationReport check_trivializing_morphism(const Lie2Algebra& L, const DeformationDatum& w,
                                                        const TrivializationCandidate& t) {
  const std::size_t m = L.dim0, n = L.dim1;
  if (t.N0.rows() != m || t.N0.cols() != m || t.N1.rows() != n || t.N1.cols() != n ||
      !t.N2.same_shape(MultilinearMap(2, 0, m, n, n)))
    throw DimensionMismatch("candidate does not match the algebra");
  Lie2Algebra W = as_structure(w);
  TrivializationReport out;

  const LambdaPoly lam = LambdaPoly::lambda();
  auto lift_m = [](const Matrix& M) { return M.map([](const Rational& q) { return LambdaPoly(q); }); };
  BasicHomomorphism<LambdaPoly> T{BasicMatrix<LambdaPoly>::identity(m) + lam * lift_m(t.N0),
                                  BasicMatrix<LambdaPoly>::identity(n) + lam * lift_m(t.N1),
                                  lam * t.N2.map([](const Rational& q) { return LambdaPoly(q); })};
  out.morphism = check_homomorphism(T, deform_family(L, w), lift(L));

  auto N0 = [&](const Vector& x) { return t.N0.apply(x); };
  auto N1 = [&](const Vector& a) { return t.N1.apply(a); };
  auto N2 = [&](const Vector& x, const Vector& y) { return t.N2.evaluate<Rational>({x, y}); };
  AxiomReport& u = out.unfolded;
  auto& o1 = u.add("omega1", "ω1 a = dN1 a - N0 da");
  auto& o20 = u.add("omega2_0", "ω2⁰(x,y) = [N0x,y] + [x,N0y] - N0[x,y] + dN2(x,y)");
  auto& o21 = u.add("omega2_1", "ω2¹(x,a) = [N0x,a] + [x,N1a] - N1[x,a] + N2(x,da)");
  auto& o3 = u.add("omega3", "ω3 = l3(N0x,y,z) + c.p. - N1 l3 + [x,N2(y,z)] + c.p. - N2([x,y],z) - c.p.");
  auto& n0 = u.add("Nijenhuis0", "N0(dN1a - N0da) = 0");
  auto& n1 = u.add("Nijenhuis1", "[N0x,N0y] - N0[N0x,y] - N0[x,N0y] + N0²[x,y] - N0dN2(x,y) = 0");
  auto& n2 = u.add("Nijenhuis2", "[N0x,N1a] + N2(x,ω1a) - N1[N0x,a] - N1[x,N1a] + N1²[x,a] - N1N2(x,da) = 0");
  auto& n3 = u.add("Nijenhuis3", "cubic-order coherence of N with l3 and ω2⁰");
  auto& n33 = u.add("Nijenhuis33", "l3(N0x,N0y,N0z) = 0");

  for (std::size_t a = 0; a < n; ++a) {
    auto fa = L.f(a);
    auto expect = sub(L.diff(N1(fa)), N0(L.diff(fa)));
    o1.record({{'f', a}}, sub(W.diff(fa), expect));
    n0.record({{'f', a}}, N0(expect));
  }
  for (const auto& tt : combinations(m, 2)) {
    auto x = L.e(tt[0]), y = L.e(tt[1]);
    auto e = add(L.bracket(N0(x), y), L.bracket(x, N0(y)));
    e = sub(e, N0(L.bracket(x, y)));
    e = add(e, L.diff(N2(x, y)));
    o20.record({{'e', tt[0]}, {'e', tt[1]}}, sub(W.bracket(x, y), e));
    auto r = L.bracket(N0(x), N0(y));
    r = sub(r, N0(L.bracket(N0(x), y)));
    r = sub(r, N0(L.bracket(x, N0(y))));
    r = add(r, N0(N0(L.bracket(x, y))));
    r = sub(r, N0(L.diff(N2(x, y))));
    n1.record({{'e', tt[0]}, {'e', tt[1]}}, std::move(r));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      auto e = add(L.action(N0(x), fa), L.action(x, N1(fa)));
      e = sub(e, N1(L.action(x, fa)));
      e = add(e, N2(x, L.diff(fa)));
      o21.record({{'e', i}, {'f', a}}, sub(W.action(x, fa), e));
      auto r = add(L.action(N0(x), N1(fa)), N2(x, W.diff(fa)));
      r = sub(r, N1(L.action(N0(x), fa)));
      r = sub(r, N1(L.action(x, N1(fa))));
      r = add(r, N1(N1(L.action(x, fa))));
      r = sub(r, N1(N2(x, L.diff(fa))));
      n2.record({{'e', i}, {'f', a}}, std::move(r));
    }
  for (const auto& tt : combinations(m, 3)) {
    std::vector<Vector> v = {L.e(tt[0]), L.e(tt[1]), L.e(tt[2])};
    auto l3xyz = L.jacobiator(v[0], v[1], v[2]);
    auto e = neg(N1(l3xyz));
    auto r = neg(N1(N1(l3xyz)));
    for (int k = 0; k < 3; ++k) {
      const auto &x = v[k], &y = v[(k + 1) % 3], &z = v[(k + 2) % 3];
      e = add(e, L.jacobiator(N0(x), y, z));
      e = add(e, L.action(x, N2(y, z)));
      e = sub(e, N2(L.bracket(x, y), z));
      r = add(r, N1(L.jacobiator(N0(x), y, z)));
      r = add(r, N1(L.action(x, N2(y, z))));
      r = sub(r, N1(N2(L.bracket(x, y), z)));
      r = sub(r, L.jacobiator(N0(x), N0(y), z));
      r = sub(r, L.action(N0(x), N2(y, z)));
      r = add(r, N2(W.bracket(x, y), z));
    }
    std::vector<Arg> args = {{'e', tt[0]}, {'e', tt[1]}, {'e', tt[2]}};
    o3.record(args, sub(W.jacobiator(v[0], v[1], v[2]), e));
    n3.record(args, std::move(r));
    n33.record(args, L.jacobiator(N0(v[0]), N0(v[1]), N0(v[2])));
  }
  if (out.morphism.pass() != out.unfolded.pass())
    throw std::logic_error("trivialization: morphism identities and unfolded conditions disagree");
  return out;
}

}  // namespace lie2
