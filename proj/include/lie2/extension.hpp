#pragma once

#include "cocycle_equations.hpp"
#include "deformation.hpp"
#include "homomorphism.hpp"

#include <optional>

namespace lie2 {

// An abelian Lie 2-algebra is just its complex h_{-1} -> h_0.
using AbelianComplex = TwoTermComplex;

struct ExtensionDatum {
  Lie2Algebra base;
  AbelianComplex fiber;
  Representation rep;
  Cochain cocycle;  // degree 2, valued in the fiber

  friend bool operator==(const ExtensionDatum&, const ExtensionDatum&) = default;
};

// σ0: g_0 -> g_0 ⊕ h_0, σ1: g_{-1} -> g_{-1} ⊕ h_{-1}
struct Splitting {
  Matrix sigma0, sigma1;
};

// F0(x+u) = x + b0 x + u, F1(a+m) = a + b1 a + m, F2 = b2.
struct EquivalenceWitness {
  Matrix b0, b1;
  MultilinearMap b2;  // ∧²g_0 -> h_{-1}
};

namespace detail {

inline Vector stack(const Vector& top, const Vector& bottom) {
  Vector v = top;
  v.insert(v.end(), bottom.begin(), bottom.end());
  return v;
}

inline Vector tail(const Vector& v, std::size_t from) { return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.end()); }

inline Vector head(const Vector& v, std::size_t n) { return Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)); }

inline void check_datum(const ExtensionDatum& E) {
  E.base.check_shape();
  E.rep.check_shape(E.base.space());
  if (!(E.rep.module == E.fiber)) throw DimensionMismatch("representation acts on a different complex");
  if (!(E.cocycle.shape == shape_of(E.base, E.rep)) || E.cocycle.degree != 2)
    throw DimensionMismatch("cocycle is not a degree 2 cochain of the base with values in the fiber");
}

}  // namespace detail

// Structure on g ⊕ h: g_0 coordinates first, then h_0; likewise g_{-1}, h_{-1}.
inline Lie2Algebra build_extension(const ExtensionDatum& E) {
  detail::check_datum(E);
  const auto& g = E.base;
  const auto& mu = E.rep;
  const std::size_t m = g.dim0, n = g.dim1, v0 = E.fiber.dim0, v1 = E.fiber.dim1;
  const std::size_t M = m + v0, N = n + v1;
  const auto& c = E.cocycle;
  auto part = [&](const ComponentKey& k, std::initializer_list<std::size_t> xs, std::initializer_list<std::size_t> as,
                  std::size_t out) { return c.has(k) ? c[k].value(xs, as) : Vector(out, Rational(0)); };

  Lie2Algebra X(M, N);
  for (std::size_t a = 0; a < n; ++a) {
    auto col = detail::stack(g.d.column(a), part(Degree2Parts::psi, {}, {a}, v0));
    for (std::size_t r = 0; r < M; ++r) X.d(r, a) = col[r];
  }
  for (std::size_t j = 0; j < v1; ++j)
    for (std::size_t r = 0; r < v0; ++r) X.d(m + r, n + j) = E.fiber.partial(r, j);

  for (const auto& t : combinations(m, 2))
    X.l2_00.set(t, {}, detail::stack(g.l2_00.value(t), part(Degree2Parts::omega, {t[0], t[1]}, {}, v0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t u = 0; u < v0; ++u)
      X.l2_00.set({i, m + u}, {}, detail::stack(Vector(m, Rational(0)), mu.mu0[i].x0.column(u)));

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < n; ++a)
      X.l2_01.set({i}, {a}, detail::stack(g.l2_01.value({i}, {a}), part(Degree2Parts::nu, {i}, {a}, v1)));
    for (std::size_t j = 0; j < v1; ++j)
      X.l2_01.set({i}, {n + j}, detail::stack(Vector(n, Rational(0)), mu.mu0[i].x1.column(j)));
  }
  for (std::size_t u = 0; u < v0; ++u)
    for (std::size_t a = 0; a < n; ++a)
      X.l2_01.set({m + u}, {a}, detail::stack(Vector(n, Rational(0)), neg(mu.mu1[a].column(u))));

  for (const auto& t : combinations(m, 3))
    X.l3.set(t, {}, detail::stack(g.l3.value(t), part(Degree2Parts::theta, {t[0], t[1], t[2]}, {}, v1)));
  for (const auto& t : combinations(m, 2))
    for (std::size_t u = 0; u < v0; ++u)
      X.l3.set({t[0], t[1], m + u}, {}, detail::stack(Vector(n, Rational(0)), neg(mu.mu2_at(t[0], t[1]).column(u))));
  return X;
}

inline Lie2Algebra semidirect_product(const Lie2Algebra& g, const AbelianComplex& h, const Representation& mu) {
  auto rep = check_representation(mu, g, h);
  if (!rep.pass()) throw InvalidInput("not a representation: " + failure_summary(rep));
  return build_extension({g, h, mu, Cochain::zero(shape_of(g, mu), 2)});
}

inline Splitting canonical_splitting(const GradedSpace& g, const AbelianComplex& h) {
  Splitting s{Matrix(g.dim0 + h.dim0, g.dim0), Matrix(g.dim1 + h.dim1, g.dim1)};
  for (std::size_t i = 0; i < g.dim0; ++i) s.sigma0(i, i) = 1;
  for (std::size_t a = 0; a < g.dim1; ++a) s.sigma1(a, a) = 1;
  return s;
}

// Checks that X on g ⊕ h has h as an abelian ideal with the canonical
// projection a strict morphism, i.e. that X is an abelian extension in normal form.
inline AxiomReport check_extension_form(const Lie2Algebra& X, const GradedSpace& g) {
  const std::size_t m = g.dim0, n = g.dim1, M = X.dim0, N = X.dim1;
  if (m > M || n > N) throw DimensionMismatch("base larger than the extension");
  AxiomReport rep;
  auto& c0 = rep.add("ideal", "d, brackets and l3 with an argument in h land in h");
  auto& c1 = rep.add("abelian", "brackets and l3 with two arguments in h vanish");
  for (std::size_t j = n; j < N; ++j) c0.record({{'f', j}}, detail::head(X.diff(X.f(j)), m));
  for (const auto& t : combinations(M, 2)) {
    int inh = (t[0] >= m) + (t[1] >= m);
    if (inh == 0) continue;
    auto v = X.l2_00.value(t);
    (inh == 1 ? c0 : c1).record({{'e', t[0]}, {'e', t[1]}}, inh == 1 ? detail::head(v, m) : v);
  }
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t a = 0; a < N; ++a) {
      int inh = (i >= m) + (a >= n);
      if (inh == 0) continue;
      auto v = X.l2_01.value({i}, {a});
      (inh == 1 ? c0 : c1).record({{'e', i}, {'f', a}}, inh == 1 ? detail::head(v, n) : v);
    }
  for (const auto& t : combinations(M, 3)) {
    int inh = (t[0] >= m) + (t[1] >= m) + (t[2] >= m);
    if (inh == 0) continue;
    auto v = X.l3.value(t);
    (inh == 1 ? c0 : c1).record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}}, inh == 1 ? detail::head(v, n) : v);
  }
  return rep;
}

// Reads off (g, h, μ, (ψ,ω,ν,θ)) from an extension in normal form and a splitting.
inline ExtensionDatum extract_from_splitting(const Lie2Algebra& X, const Splitting& s) {
  X.check_shape();
  const std::size_t m = s.sigma0.cols(), n = s.sigma1.cols();
  if (s.sigma0.rows() != X.dim0 || s.sigma1.rows() != X.dim1 || m > X.dim0 || n > X.dim1)
    throw DimensionMismatch("splitting does not match the extension");
  const std::size_t v0 = X.dim0 - m, v1 = X.dim1 - n;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i < m; ++i)
      if (s.sigma0(r, i) != (r == i ? 1 : 0)) throw InvalidInput("p0 σ0 is not the identity");
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t a = 0; a < n; ++a)
      if (s.sigma1(r, a) != (r == a ? 1 : 0)) throw InvalidInput("p1 σ1 is not the identity");
  auto form = check_extension_form(X, {m, n});
  if (!form.pass()) throw InvalidInput("not an abelian extension in normal form: " + failure_summary(form));

  auto s0 = [&](const Vector& x) { return s.sigma0.apply(x); };
  auto s1 = [&](const Vector& a) { return s.sigma1.apply(a); };
  auto h0 = [&](const Vector& v) { return detail::tail(v, m); };
  auto h1 = [&](const Vector& v) { return detail::tail(v, n); };
  auto inc0 = [&](const Vector& u) { return detail::stack(Vector(m, Rational(0)), u); };
  auto inc1 = [&](const Vector& w) { return detail::stack(Vector(n, Rational(0)), w); };

  ExtensionDatum E;
  Lie2Algebra& g = E.base;
  g = Lie2Algebra(m, n);
  for (std::size_t a = 0; a < n; ++a) {
    auto col = detail::head(X.diff(s1(g.f(a))), m);
    for (std::size_t r = 0; r < m; ++r) g.d(r, a) = col[r];
  }
  for (const auto& t : combinations(m, 2)) g.l2_00.set(t, {}, detail::head(X.bracket(s0(g.e(t[0])), s0(g.e(t[1]))), m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) g.l2_01.set({i}, {a}, detail::head(X.action(s0(g.e(i)), s1(g.f(a))), n));
  for (const auto& t : combinations(m, 3))
    g.l3.set(t, {}, detail::head(X.jacobiator(s0(g.e(t[0])), s0(g.e(t[1])), s0(g.e(t[2]))), n));

  E.fiber = AbelianComplex{v0, v1, Matrix(v0, v1)};
  for (std::size_t j = 0; j < v1; ++j) {
    auto col = h0(X.diff(inc1(unit<Rational>(v1, j))));
    for (std::size_t r = 0; r < v0; ++r) E.fiber.partial(r, j) = col[r];
  }

  Representation& mu = E.rep;
  mu = Representation::zero(g.space(), E.fiber);
  for (std::size_t i = 0; i < m; ++i) {
    auto sx = s0(g.e(i));
    for (std::size_t u = 0; u < v0; ++u) {
      auto col = h0(X.bracket(sx, inc0(unit<Rational>(v0, u))));
      for (std::size_t r = 0; r < v0; ++r) mu.mu0[i].x0(r, u) = col[r];
    }
    for (std::size_t j = 0; j < v1; ++j) {
      auto col = h1(X.action(sx, inc1(unit<Rational>(v1, j))));
      for (std::size_t r = 0; r < v1; ++r) mu.mu0[i].x1(r, j) = col[r];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    auto sa = s1(g.f(a));
    for (std::size_t u = 0; u < v0; ++u) {
      auto col = h1(X.action(inc0(unit<Rational>(v0, u)), sa));  // μ1(a)u = [σa,u] = -[u,σa]
      for (std::size_t r = 0; r < v1; ++r) mu.mu1[a](r, u) = -col[r];
    }
  }
  for (const auto& t : combinations(m, 2)) {
    Matrix M(v1, v0);
    auto sx = s0(g.e(t[0])), sy = s0(g.e(t[1]));
    for (std::size_t u = 0; u < v0; ++u) {
      auto col = h1(X.jacobiator(sx, sy, inc0(unit<Rational>(v0, u))));
      for (std::size_t r = 0; r < v1; ++r) M(r, u) = -col[r];
    }
    mu.set_mu2(t[0], t[1], M);
  }

  E.cocycle = Cochain::zero(shape_of(g, mu), 2);
  Cochain& c = E.cocycle;
  if (c.has(Degree2Parts::psi))
    for (std::size_t a = 0; a < n; ++a) {
      auto fa = g.f(a);
      c[Degree2Parts::psi].set({}, {a}, h0(sub(X.diff(s1(fa)), s0(g.diff(fa)))));
    }
  if (c.has(Degree2Parts::omega))
    for (const auto& t : combinations(m, 2)) {
      auto x = g.e(t[0]), y = g.e(t[1]);
      c[Degree2Parts::omega].set(t, {}, h0(sub(X.bracket(s0(x), s0(y)), s0(g.bracket(x, y)))));
    }
  if (c.has(Degree2Parts::nu))
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < n; ++a) {
        auto x = g.e(i), fa = g.f(a);
        c[Degree2Parts::nu].set({i}, {a}, h1(sub(X.action(s0(x), s1(fa)), s1(g.action(x, fa)))));
      }
  if (c.has(Degree2Parts::theta))
    for (const auto& t : combinations(m, 3)) {
      auto x = g.e(t[0]), y = g.e(t[1]), z = g.e(t[2]);
      c[Degree2Parts::theta].set(t, {}, h1(sub(X.jacobiator(s0(x), s0(y), s0(z)), s1(g.jacobiator(x, y, z)))));
    }
  return E;
}

// b as a degree 1 cochain: (1,0,0) = b0, (0,1,-1) = b1, (2,0,-1) = b2.
inline Cochain witness_cochain(const EquivalenceWitness& w, const CochainShape& sh) {
  Cochain b = Cochain::zero(sh, 1);
  const ComponentKey k0{1, 0, 0}, k1{0, 1, -1}, k2{2, 0, -1};
  if (b.has(k0))
    for (std::size_t i = 0; i < sh.m; ++i) b[k0].set({i}, {}, w.b0.column(i));
  if (b.has(k1))
    for (std::size_t a = 0; a < sh.n; ++a) b[k1].set({}, {a}, w.b1.column(a));
  if (b.has(k2)) b[k2] = w.b2;
  return b;
}

inline EquivalenceWitness witness_from_cochain(const Cochain& b) {
  const auto& sh = b.shape;
  EquivalenceWitness w{Matrix(sh.v0, sh.m), Matrix(sh.v1, sh.n), MultilinearMap(2, 0, sh.m, sh.n, sh.v1)};
  const ComponentKey k0{1, 0, 0}, k1{0, 1, -1}, k2{2, 0, -1};
  if (b.has(k0))
    for (std::size_t i = 0; i < sh.m; ++i) {
      auto col = b[k0].value({i}, {});
      for (std::size_t r = 0; r < sh.v0; ++r) w.b0(r, i) = col[r];
    }
  if (b.has(k1))
    for (std::size_t a = 0; a < sh.n; ++a) {
      auto col = b[k1].value({}, {a});
      for (std::size_t r = 0; r < sh.v1; ++r) w.b1(r, a) = col[r];
    }
  if (b.has(k2)) w.b2 = b[k2];
  return w;
}

// A witness b with D(b) = c1 - c2, or nothing when the classes differ.
inline std::optional<EquivalenceWitness> classify(const Lie2Algebra& g, const AbelianComplex& h, const Representation& mu,
                                                  const Cochain& c1, const Cochain& c2) {
  auto rep = check_representation(mu, g, h);
  if (!rep.pass()) throw InvalidInput("not a representation: " + failure_summary(rep));
  if (!is_cocycle(c1, g, mu)) throw InvalidInput("first cochain is not a 2-cocycle");
  if (!is_cocycle(c2, g, mu)) throw InvalidInput("second cochain is not a 2-cocycle");
  auto b = is_coboundary(c1 - c2, g, mu);
  if (!b) return std::nullopt;
  if (!(apply_D(*b, g, mu) == c1 - c2)) throw std::logic_error("classify: witness does not solve D b = c1 - c2");
  return witness_from_cochain(*b);
}

// F: E(c1) -> E(c2) induced by a witness.
inline Homomorphism induced_equivalence(const GradedSpace& g, const AbelianComplex& h, const EquivalenceWitness& w) {
  const std::size_t m = g.dim0, n = g.dim1, M = m + h.dim0, N = n + h.dim1;
  Homomorphism F = identity_homomorphism(GradedSpace{M, N});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t r = 0; r < h.dim0; ++r) F.F0(m + r, i) = w.b0(r, i);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < h.dim1; ++r) F.F1(n + r, a) = w.b1(r, a);
  for (const auto& t : combinations(m, 2))
    F.F2.set(t, {}, detail::stack(Vector(n, Rational(0)), w.b2.value(t)));
  return F;
}

// (ψ̄, ω̄, ν̄, θ̄) on g ⋉ h, depending only on the g components of the arguments.
inline Cochain extend_cocycle_to_semidirect(const Lie2Algebra& g, const AbelianComplex& h, const Representation& mu,
                                            const Cochain& c) {
  if (!(c.shape == shape_of(g, mu)) || c.degree != 2) throw DimensionMismatch("cocycle does not match the data");
  const std::size_t m = g.dim0, n = g.dim1, M = m + h.dim0, N = n + h.dim1;
  Cochain out = Cochain::zero({M, N, M, N}, 2);
  auto lift0 = [&](const Vector& u) { return detail::stack(Vector(m, Rational(0)), u); };
  auto lift1 = [&](const Vector& w) { return detail::stack(Vector(n, Rational(0)), w); };
  if (c.has(Degree2Parts::psi))
    for (std::size_t a = 0; a < n; ++a) out[Degree2Parts::psi].set({}, {a}, lift0(c[Degree2Parts::psi].value({}, {a})));
  if (c.has(Degree2Parts::omega))
    for (const auto& t : combinations(m, 2)) out[Degree2Parts::omega].set(t, {}, lift0(c[Degree2Parts::omega].value(t)));
  if (c.has(Degree2Parts::nu))
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < n; ++a) out[Degree2Parts::nu].set({i}, {a}, lift1(c[Degree2Parts::nu].value({i}, {a})));
  if (c.has(Degree2Parts::theta))
    for (const auto& t : combinations(m, 3)) out[Degree2Parts::theta].set(t, {}, lift1(c[Degree2Parts::theta].value(t)));
  return out;
}

}  // namespace lie2
