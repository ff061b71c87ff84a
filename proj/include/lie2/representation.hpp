#pragma once

#include "axioms.hpp"
#include "linalg.hpp"

namespace lie2 {

// V_{-1} --∂--> V_0
struct TwoTermComplex {
  std::size_t dim0 = 0, dim1 = 0;
  Matrix partial;  // dim0 x dim1
  friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

inline TwoTermComplex underlying_complex(const Lie2Algebra& L) { return {L.dim0, L.dim1, L.d}; }

// degree 0 endomorphism: X0 on V_0, X1 on V_{-1}
struct EndPair {
  Matrix x0, x1;
  friend bool operator==(const EndPair&, const EndPair&) = default;
};

inline EndPair operator+(const EndPair& a, const EndPair& b) { return {a.x0 + b.x0, a.x1 + b.x1}; }
inline EndPair operator-(const EndPair& a, const EndPair& b) { return {a.x0 - b.x0, a.x1 - b.x1}; }

inline Vector flatten(const Matrix& m) { return m.data(); }
inline Vector flatten(const EndPair& p) {
  Vector v = p.x0.data();
  v.insert(v.end(), p.x1.data().begin(), p.x1.data().end());
  return v;
}

struct Representation {
  TwoTermComplex module;
  std::vector<EndPair> mu0;  // one per basis vector of g_0
  std::vector<Matrix> mu1;   // one per basis vector of g_{-1}; V_0 -> V_{-1}
  std::vector<Matrix> mu2;   // one per pair i<j (lexicographic); V_0 -> V_{-1}

  static Representation zero(const GradedSpace& g, const TwoTermComplex& V) {
    Representation r;
    r.module = V;
    r.mu0.assign(g.dim0, EndPair{Matrix(V.dim0, V.dim0), Matrix(V.dim1, V.dim1)});
    r.mu1.assign(g.dim1, Matrix(V.dim1, V.dim0));
    r.mu2.assign(binomial(g.dim0, 2), Matrix(V.dim1, V.dim0));
    return r;
  }

  std::size_t g0_dim() const { return mu0.size(); }
  std::size_t g1_dim() const { return mu1.size(); }

  Matrix mu2_at(std::size_t i, std::size_t j) const {
    if (i == j) return Matrix(module.dim1, module.dim0);
    Tuple t = {std::min(i, j), std::max(i, j)};
    const Matrix& m = mu2.at(combination_rank(t, g0_dim()));
    return i < j ? m : -m;
  }
  void set_mu2(std::size_t i, std::size_t j, const Matrix& v) {
    if (i == j) throw std::invalid_argument("mu2 is alternating");
    Tuple t = {std::min(i, j), std::max(i, j)};
    mu2.at(combination_rank(t, g0_dim())) = i < j ? v : -v;
  }

  EndPair mu0_of(const Vector& x) const {
    EndPair out{Matrix(module.dim0, module.dim0), Matrix(module.dim1, module.dim1)};
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) out = out + EndPair{x[i] * mu0[i].x0, x[i] * mu0[i].x1};
    return out;
  }
  Matrix mu1_of(const Vector& a) const {
    Matrix out(module.dim1, module.dim0);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!is_zero(a[j])) out = out + a[j] * mu1[j];
    return out;
  }
  Matrix mu2_of(const Vector& x, const Vector& y) const {
    Matrix out(module.dim1, module.dim0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        if (i != j && !is_zero(x[i]) && !is_zero(y[j])) out = out + Rational(x[i] * y[j]) * mu2_at(i, j);
    return out;
  }

  void check_shape(const GradedSpace& g) const {
    const auto& V = module;
    bool ok = mu0.size() == g.dim0 && mu1.size() == g.dim1 && mu2.size() == binomial(g.dim0, 2) &&
              V.partial.rows() == V.dim0 && V.partial.cols() == V.dim1;
    for (const auto& p : mu0)
      ok = ok && p.x0.rows() == V.dim0 && p.x0.cols() == V.dim0 && p.x1.rows() == V.dim1 && p.x1.cols() == V.dim1;
    for (const auto& a : mu1) ok = ok && a.rows() == V.dim1 && a.cols() == V.dim0;
    for (const auto& a : mu2) ok = ok && a.rows() == V.dim1 && a.cols() == V.dim0;
    if (!ok) throw DimensionMismatch("representation maps do not match the algebra and the module");
  }

  friend bool operator==(const Representation&, const Representation&) = default;
};

// graded commutators in End(V)
inline EndPair commutator(const EndPair& X, const EndPair& Y) {
  return {X.x0 * Y.x0 - Y.x0 * X.x0, X.x1 * Y.x1 - Y.x1 * X.x1};
}
inline Matrix commutator(const EndPair& X, const Matrix& A) { return X.x1 * A - A * X.x0; }
inline EndPair delta(const TwoTermComplex& V, const Matrix& A) { return {V.partial * A, A * V.partial}; }

// End(V) as a strict algebra. g_0 basis: kernel of X0∂ = ∂X1 over the
// variables vec(X0), vec(X1) (row-major). g_{-1} basis: matrix units of
// Hom(V_0, V_{-1}), row-major.
struct EndAlgebra {
  Lie2Algebra algebra;
  std::vector<EndPair> basis0;
  std::vector<Matrix> basis1;
};

inline EndAlgebra build_end_algebra_with_basis(const TwoTermComplex& V) {
  const std::size_t v0 = V.dim0, v1 = V.dim1, nx0 = v0 * v0, nvar = v0 * v0 + v1 * v1;
  Matrix cons(v0 * v1, nvar);
  for (std::size_t r = 0; r < v0; ++r)
    for (std::size_t c = 0; c < v1; ++c) {
      for (std::size_t k = 0; k < v0; ++k) cons(r * v1 + c, r * v0 + k) += V.partial(k, c);
      for (std::size_t k = 0; k < v1; ++k) cons(r * v1 + c, nx0 + k * v1 + c) -= V.partial(r, k);
    }
  RowReduced rr = row_reduce(cons);
  std::vector<bool> pivot(nvar, false);
  for (auto p : rr.pivots) pivot[p] = true;
  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < nvar; ++j)
    if (!pivot[j]) free_vars.push_back(j);
  auto ker = kernel_basis(cons);

  EndAlgebra out;
  for (const auto& v : ker) {
    EndPair X{Matrix(v0, v0), Matrix(v1, v1)};
    for (std::size_t r = 0; r < v0; ++r)
      for (std::size_t c = 0; c < v0; ++c) X.x0(r, c) = v[r * v0 + c];
    for (std::size_t r = 0; r < v1; ++r)
      for (std::size_t c = 0; c < v1; ++c) X.x1(r, c) = v[nx0 + r * v1 + c];
    out.basis0.push_back(std::move(X));
  }
  for (std::size_t r = 0; r < v1; ++r)
    for (std::size_t c = 0; c < v0; ++c) {
      Matrix A(v1, v0);
      A(r, c) = 1;
      out.basis1.push_back(std::move(A));
    }

  const std::size_t m = out.basis0.size(), n = out.basis1.size();
  // kernel_basis vectors are 1 at their own free variable and 0 at the others
  auto coords0 = [&](const EndPair& X) {
    Vector flat = flatten(X), c(m);
    for (std::size_t i = 0; i < m; ++i) c[i] = flat[free_vars[i]];
    Vector back = zeros<Rational>(nvar);
    for (std::size_t i = 0; i < m; ++i) axpy(back, c[i], ker[i]);
    if (back != flat) throw std::logic_error("element lies outside End^0_∂");
    return c;
  };
  auto coords1 = [&](const Matrix& A) { return flatten(A); };

  Lie2Algebra& L = out.algebra;
  L = Lie2Algebra(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto c = coords0(delta(V, out.basis1[j]));
    for (std::size_t i = 0; i < m; ++i) L.d(i, j) = c[i];
  }
  for (const auto& t : combinations(m, 2))
    L.l2_00.set(t, {}, coords0(commutator(out.basis0[t[0]], out.basis0[t[1]])));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      L.l2_01.set(Tuple{i}, Tuple{j}, coords1(commutator(out.basis0[i], out.basis1[j])));
  return out;
}

inline Lie2Algebra build_end_algebra(const TwoTermComplex& V) { return build_end_algebra_with_basis(V).algebra; }

inline AxiomReport check_representation(const Representation& mu, const Lie2Algebra& L) {
  L.check_shape();
  mu.check_shape(L.space());
  const auto& V = mu.module;
  const std::size_t m = L.dim0, n = L.dim1;
  AxiomReport rep;
  auto& c0 = rep.add("End", "mu0(x)_0 ∂ = ∂ mu0(x)_1");
  auto& c1 = rep.add("i", "mu0(da) = δ mu1(a)");
  auto& c2 = rep.add("ii", "mu0[x,y] - [mu0 x, mu0 y] = δ mu2(x,y)");
  auto& c3 = rep.add("iii", "mu1[x,a] - [mu0 x, mu1 a] = mu2(x,da)");
  auto& c4 = rep.add("iv", "mu2([x,y],z) + c.p. + mu1 l3(x,y,z) = [mu0 x, mu2(y,z)] + c.p.");

  for (std::size_t i = 0; i < m; ++i)
    c0.record({{'e', i}}, flatten(mu.mu0[i].x0 * V.partial - V.partial * mu.mu0[i].x1));
  for (std::size_t a = 0; a < n; ++a)
    c1.record({{'f', a}}, flatten(mu.mu0_of(L.diff(L.f(a))) - delta(V, mu.mu1[a])));
  for (const auto& t : combinations(m, 2)) {
    auto x = L.e(t[0]), y = L.e(t[1]);
    EndPair r = mu.mu0_of(L.bracket(x, y)) - commutator(mu.mu0[t[0]], mu.mu0[t[1]]) - delta(V, mu.mu2_at(t[0], t[1]));
    c2.record({{'e', t[0]}, {'e', t[1]}}, flatten(r));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      Matrix r = mu.mu1_of(L.action(x, fa)) - commutator(mu.mu0[i], mu.mu1[a]) - mu.mu2_of(x, L.diff(fa));
      c3.record({{'e', i}, {'f', a}}, flatten(r));
    }
  for (const auto& t : combinations(m, 3)) {
    std::vector<Vector> v = {L.e(t[0]), L.e(t[1]), L.e(t[2])};
    Matrix r = mu.mu1_of(L.jacobiator(v[0], v[1], v[2]));
    for (int c = 0; c < 3; ++c) {
      const auto &x = v[c], &y = v[(c + 1) % 3], &z = v[(c + 2) % 3];
      r = r + mu.mu2_of(L.bracket(x, y), z);
      r = r - commutator(mu.mu0_of(x), mu.mu2_of(y, z));
    }
    c4.record({{'e', t[0]}, {'e', t[1]}, {'e', t[2]}}, flatten(r));
  }
  return rep;
}

inline AxiomReport check_representation(const Representation& mu, const Lie2Algebra& L, const TwoTermComplex& V) {
  if (!(mu.module == V)) throw DimensionMismatch("representation is attached to a different complex");
  return check_representation(mu, L);
}

// ad0_x(y+b) = [x,y] + [x,b],  ad1_a x = [a,x],  ad2_{x,y} z = -l3(x,y,z)
inline Representation adjoint_representation(const Lie2Algebra& L) {
  const std::size_t m = L.dim0, n = L.dim1;
  Representation r = Representation::zero(L.space(), underlying_complex(L));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      auto col = L.l2_00.value({i, k});
      for (std::size_t s = 0; s < m; ++s) r.mu0[i].x0(s, k) = col[s];
    }
    for (std::size_t k = 0; k < n; ++k) {
      auto col = L.l2_01.value({i}, {k});
      for (std::size_t s = 0; s < n; ++s) r.mu0[i].x1(s, k) = col[s];
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      auto col = L.l2_01.value({k}, {j});
      for (std::size_t s = 0; s < n; ++s) r.mu1[j](s, k) = -col[s];
    }
  for (const auto& t : combinations(m, 2)) {
    Matrix M(n, m);
    for (std::size_t k = 0; k < m; ++k) {
      auto col = L.l3.value({t[0], t[1], k});
      for (std::size_t s = 0; s < n; ++s) M(s, k) = -col[s];
    }
    r.set_mu2(t[0], t[1], M);
  }
  return r;
}

}  // namespace lie2
