#pragma once

#include "deformation.hpp"
#include "lie_algebra.hpp"

#include <optional>

namespace lie2 {

struct NijenhuisOperator {
  Matrix N0, N1;

  static NijenhuisOperator zero(const GradedSpace& g) { return {Matrix(g.dim0, g.dim0), Matrix(g.dim1, g.dim1)}; }
  friend bool operator==(const NijenhuisOperator&, const NijenhuisOperator&) = default;
};

inline void check_shapes(const Lie2Algebra& L, const NijenhuisOperator& N) {
  if (N.N0.rows() != L.dim0 || N.N0.cols() != L.dim0 || N.N1.rows() != L.dim1 || N.N1.cols() != L.dim1)
    throw DimensionMismatch("operator does not match the algebra");
}

inline NijenhuisOperator scaled(const Rational& c, const NijenhuisOperator& N) { return {c * N.N0, c * N.N1}; }

// ([·,·]_N on g_0, [·,·]_N on g_0 ⊗ g_{-1}, l3^N) with d = 0.
inline Lie2Algebra nijenhuis_structure(const Lie2Algebra& L, const NijenhuisOperator& N) {
  check_shapes(L, N);
  const std::size_t m = L.dim0, n = L.dim1;
  Lie2Algebra S(m, n);
  auto N0 = [&](const Vector& x) { return N.N0.apply(x); };
  auto N1 = [&](const Vector& a) { return N.N1.apply(a); };
  for (const auto& t : combinations(m, 2)) {
    auto x = L.e(t[0]), y = L.e(t[1]);
    auto v = add(L.bracket(N0(x), y), L.bracket(x, N0(y)));
    S.l2_00.set(t, {}, sub(v, N0(L.bracket(x, y))));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      auto v = add(L.action(N0(x), fa), L.action(x, N1(fa)));
      S.l2_01.set({i}, {a}, sub(v, N1(L.action(x, fa))));
    }
  for (const auto& t : combinations(m, 3)) {
    auto x = L.e(t[0]), y = L.e(t[1]), z = L.e(t[2]);
    auto v = add(add(L.jacobiator(N0(x), y, z), L.jacobiator(x, N0(y), z)), L.jacobiator(x, y, N0(z)));
    S.l3.set(t, {}, sub(v, N1(L.jacobiator(x, y, z))));
  }
  return S;
}

inline AxiomReport check_nijenhuis(const Lie2Algebra& L, const NijenhuisOperator& N) {
  check_shapes(L, N);
  const std::size_t m = L.dim0, n = L.dim1;
  Lie2Algebra S = nijenhuis_structure(L, N);
  auto N0 = [&](const Vector& x) { return N.N0.apply(x); };
  auto N1 = [&](const Vector& a) { return N.N1.apply(a); };
  AxiomReport rep;
  // (i) asks for both composites to vanish, not just to agree.
  auto& c1 = rep.add("i", "d∘N1 = N0∘d = 0");
  auto& c2 = rep.add("ii", "N0[x,y]_N = [N0x,N0y]");
  auto& c3 = rep.add("iii", "N1[x,a]_N = [N0x,N1a]");
  auto& c4 = rep.add("iv", "N1 l3^N(x,y,z) = 0");
  auto& c5 = rep.add("v", "l3(N0x,N0y,N0z) = 0");
  auto& c6 = rep.add("vi", "l3(N0x,N0y,z) + c.p. = 0");
  for (std::size_t a = 0; a < n; ++a) {
    auto fa = L.f(a);
    auto r = L.diff(N1(fa));
    auto s = N0(L.diff(fa));
    r.insert(r.end(), s.begin(), s.end());
    c1.record({{'f', a}}, std::move(r));
  }
  for (const auto& t : combinations(m, 2)) {
    auto x = L.e(t[0]), y = L.e(t[1]);
    c2.record({{'e', t[0]}, {'e', t[1]}}, sub(N0(S.bracket(x, y)), L.bracket(N0(x), N0(y))));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      auto x = L.e(i), fa = L.f(a);
      c3.record({{'e', i}, {'f', a}}, sub(N1(S.action(x, fa)), L.action(N0(x), N1(fa))));
    }
  for (const auto& t : combinations(m, 3)) {
    auto x = L.e(t[0]), y = L.e(t[1]), z = L.e(t[2]);
    std::vector<Arg> args = {{'e', t[0]}, {'e', t[1]}, {'e', t[2]}};
    c4.record(args, N1(S.jacobiator(x, y, z)));
    c5.record(args, L.jacobiator(N0(x), N0(y), N0(z)));
    auto r = add(add(L.jacobiator(N0(x), N0(y), z), L.jacobiator(N0(y), N0(z), x)), L.jacobiator(N0(z), N0(x), y));
    c6.record(args, std::move(r));
  }
  return rep;
}

// (N0, N1) as a degree 1 cochain of the adjoint module.
inline Cochain nijenhuis_cochain(const Lie2Algebra& L, const NijenhuisOperator& N) {
  check_shapes(L, N);
  const std::size_t m = L.dim0, n = L.dim1;
  Cochain c = Cochain::zero({m, n, m, n}, 1);
  const ComponentKey k0{1, 0, 0}, k1{0, 1, -1};
  if (c.has(k0))
    for (std::size_t i = 0; i < m; ++i) c[k0].set({i}, {}, N.N0.column(i));
  if (c.has(k1))
    for (std::size_t a = 0; a < n; ++a) c[k1].set({}, {a}, N.N1.column(a));
  return c;
}

// The first-order datum generated by N. It is D(N0,N1) in the adjoint complex,
// which is checked.
inline DeformationDatum nijenhuis_deformation(const Lie2Algebra& L, const NijenhuisOperator& N) {
  auto rep = check_nijenhuis(L, N);
  if (!rep.pass()) throw InvalidInput("not a Nijenhuis operator: " + failure_summary(rep));
  Lie2Algebra S = nijenhuis_structure(L, N);
  DeformationDatum w{L.d * N.N1 - N.N0 * L.d, S.l2_00, S.l2_01, S.l3};
  CohomologyConfig cfg;
  cfg.max_degree = std::max(cfg.max_degree, 2);
  auto Dn = datum_from_cochain(apply_D(nijenhuis_cochain(L, N), L, adjoint_representation(L), cfg));
  if (!(Dn == w)) throw std::logic_error("Nijenhuis datum differs from the coboundary of (N0,N1)");
  return w;
}

// P(N) for P(X) = Σ c_k X^k; coeffs[k] multiplies X^k and coeffs[0] must vanish.
inline NijenhuisOperator polynomial_of_nijenhuis(const Lie2Algebra& L, const NijenhuisOperator& N,
                                                 const std::vector<Rational>& coeffs) {
  check_shapes(L, N);
  if (!coeffs.empty() && !is_zero(coeffs[0])) throw InvalidInput("polynomial must have no constant term");
  auto rep = check_nijenhuis(L, N);
  if (!rep.pass()) throw InvalidInput("not a Nijenhuis operator: " + failure_summary(rep));
  NijenhuisOperator out = NijenhuisOperator::zero(L.space());
  Matrix p0 = Matrix::identity(L.dim0), p1 = Matrix::identity(L.dim1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    p0 = p0 * N.N0;
    p1 = p1 * N.N1;
    if (is_zero(coeffs[k])) continue;
    out.N0 = out.N0 + coeffs[k] * p0;
    out.N1 = out.N1 + coeffs[k] * p1;
  }
  return out;
}

// N1^j l3^{N^k} = 0 and the six-term identity for the powers N0^j, N0^k.
inline AxiomReport power_identities(const Lie2Algebra& L, const NijenhuisOperator& N, std::size_t j, std::size_t k) {
  check_shapes(L, N);
  NijenhuisOperator Nk{power(N.N0, k), power(N.N1, k)};
  Lie2Algebra Sk = nijenhuis_structure(L, Nk);
  Matrix N1j = power(N.N1, j), N0j = power(N.N0, j);
  AxiomReport rep;
  auto& c1 = rep.add("Pc1", "N1^j l3^{N^k}(x,y,z) = 0");
  auto& c2 = rep.add("Pc2", "l3(N0^k x,N0^j y,z) + l3(N0^k x,y,N0^j z) + l3(x,N0^k y,N0^j z) + (j <-> k) = 0");
  for (const auto& t : combinations(L.dim0, 3)) {
    auto x = L.e(t[0]), y = L.e(t[1]), z = L.e(t[2]);
    std::vector<Arg> args = {{'e', t[0]}, {'e', t[1]}, {'e', t[2]}};
    c1.record(args, N1j.apply(Sk.jacobiator(x, y, z)));
    auto six = [&](const Matrix& A, const Matrix& B) {
      auto r = L.jacobiator(A.apply(x), B.apply(y), z);
      r = add(r, L.jacobiator(A.apply(x), y, B.apply(z)));
      return add(r, L.jacobiator(x, A.apply(y), B.apply(z)));
    };
    c2.record(args, add(six(Nk.N0, N0j), six(N0j, Nk.N0)));
  }
  return rep;
}

struct QuadraticLieAlgebra {
  LieAlgebraData lie;
  Matrix form;  // symmetric Gram matrix

  std::size_t dim() const { return lie.dim; }
  Rational pairing(const Vector& x, const Vector& y) const {
    Vector gy = form.apply(y);
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
    return s;
  }
  friend bool operator==(const QuadraticLieAlgebra&, const QuadraticLieAlgebra&) = default;
};

inline AxiomReport check_quadratic(const QuadraticLieAlgebra& s) {
  const std::size_t k = s.dim();
  if (s.form.rows() != k || s.form.cols() != k) throw DimensionMismatch("form does not match the Lie algebra");
  AxiomReport rep = check_jacobi(s.lie);
  auto& sym = rep.add("symmetric", "<x,y> = <y,x>");
  auto& inv = rep.add("invariant", "<[x,y],z> + <y,[x,z]> = 0");
  for (const auto& t : combinations(k, 2))
    sym.record({{'e', t[0]}, {'e', t[1]}}, {s.form(t[0], t[1]) - s.form(t[1], t[0])});
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& t : multisets(k, 2)) {
      auto x = s.lie.e(i), y = s.lie.e(t[0]), z = s.lie.e(t[1]);
      inv.record({{'e', i}, {'e', t[0]}, {'e', t[1]}}, {s.pairing(s.lie(x, y), z) + s.pairing(y, s.lie(x, z))});
    }
  if (rank(s.form) < k) rep.warnings.push_back("quadratic form is degenerate");
  return rep;
}

// d = 0, g_{-1} = ℚ, [x,y] = [x,y]_s, l3(x,y,z) = <[x,y],z>.
inline Lie2Algebra build_lie_of_quadratic(const QuadraticLieAlgebra& s, std::vector<std::string>* warnings = nullptr) {
  auto rep = check_quadratic(s);
  if (!rep.pass()) throw InvalidInput("not a quadratic Lie algebra: " + failure_summary(rep));
  if (warnings) warnings->insert(warnings->end(), rep.warnings.begin(), rep.warnings.end());
  const std::size_t k = s.dim();
  Lie2Algebra L(k, 1);
  L.l2_00 = s.lie.bracket;
  for (const auto& t : combinations(k, 3))
    L.l3.set(t, {}, {s.pairing(s.lie(s.lie.e(t[0]), s.lie.e(t[1])), s.lie.e(t[2]))});
  return L;
}

struct TLambdaInvariance {
  bool holds = false;
  AxiomReport report;                // skew-symmetry and isotropy of the image
  bool nondegenerate = false;
  std::optional<bool> square_zero;   // N0² = 0, evaluated when holds and nondegenerate
};

inline TLambdaInvariance t_lambda_invariance_report(const QuadraticLieAlgebra& s, const Matrix& N0) {
  const std::size_t k = s.dim();
  if (N0.rows() != k || N0.cols() != k) throw DimensionMismatch("operator does not match the quadratic algebra");
  TLambdaInvariance out;
  auto& skew = out.report.add("skew", "<N0x,y> + <x,N0y> = 0");
  auto& iso = out.report.add("isotropic", "<N0x,N0y> = 0");
  for (const auto& t : multisets(k, 2)) {
    auto x = s.lie.e(t[0]), y = s.lie.e(t[1]);
    std::vector<Arg> args = {{'e', t[0]}, {'e', t[1]}};
    skew.record(args, {s.pairing(N0.apply(x), y) + s.pairing(x, N0.apply(y))});
    iso.record(args, {s.pairing(N0.apply(x), N0.apply(y))});
  }
  out.holds = out.report.pass();
  out.nondegenerate = rank(s.form) == k;
  if (out.holds && out.nondegenerate) {
    out.square_zero = (N0 * N0).is_zero();
    if (!*out.square_zero) throw std::logic_error("invariant operator on a nondegenerate form with N0² ≠ 0");
  }
  return out;
}

inline bool check_t_lambda_invariance(const QuadraticLieAlgebra& s, const Matrix& N0) {
  return t_lambda_invariance_report(s, N0).holds;
}

// <(1+λN0)x, (1+λN0)y> - <x,y> as a polynomial in λ, on basis pairs.
inline LambdaReport t_lambda_defect(const QuadraticLieAlgebra& s, const Matrix& N0) {
  const std::size_t k = s.dim();
  LambdaReport rep;
  auto& c = rep.add("T_lambda", "<T_λ x, T_λ y> = <x,y>");
  const LambdaPoly lam = LambdaPoly::lambda();
  for (const auto& t : multisets(k, 2)) {
    auto x = s.lie.e(t[0]), y = s.lie.e(t[1]);
    auto nx = N0.apply(x), ny = N0.apply(y);
    LambdaPoly p = lam * LambdaPoly(s.pairing(nx, y) + s.pairing(x, ny)) + lam * lam * LambdaPoly(s.pairing(nx, ny));
    c.record({{'e', t[0]}, {'e', t[1]}}, {p});
  }
  return rep;
}

// Equations for (N0, 0) on Lie(s), stated on s itself.
inline AxiomReport s_nijenhuis_report(const QuadraticLieAlgebra& s, const Matrix& N0) {
  const std::size_t k = s.dim();
  const auto& br = s.lie;
  auto N = [&](const Vector& x) { return N0.apply(x); };
  AxiomReport rep;
  auto& c1 = rep.add("SNijenhuis01", "[N0x,N0y] - N0[N0x,y] - N0[x,N0y] + N0²[x,y] = 0");
  auto& c2 = rep.add("SNijenhuis02", "<[N0x,N0y],N0z> = 0");
  auto& c3 = rep.add("SNijenhuis03", "<[N0x,N0y],z> + <[N0x,y],N0z> + <[x,N0y],N0z> = 0");
  for (const auto& t : combinations(k, 2)) {
    auto x = br.e(t[0]), y = br.e(t[1]);
    auto r = sub(br(N(x), N(y)), N(br(N(x), y)));
    r = sub(r, N(br(x, N(y))));
    r = add(r, N(N(br(x, y))));
    c1.record({{'e', t[0]}, {'e', t[1]}}, std::move(r));
  }
  for (const auto& t : combinations(k, 3)) {
    auto x = br.e(t[0]), y = br.e(t[1]), z = br.e(t[2]);
    std::vector<Arg> args = {{'e', t[0]}, {'e', t[1]}, {'e', t[2]}};
    c2.record(args, {s.pairing(br(N(x), N(y)), N(z))});
    c3.record(args, {s.pairing(br(N(x), N(y)), z) + s.pairing(br(N(x), y), N(z)) + s.pairing(br(x, N(y)), N(z))});
  }
  return rep;
}

// (ad*_x ξ)(y) = -ξ([x,y])
inline Vector coadjoint(const LieAlgebraData& h, const Vector& x, const Vector& xi) {
  Vector out(h.dim, Rational(0));
  for (std::size_t l = 0; l < h.dim; ++l) {
    auto b = h(x, h.e(l));
    Rational v = 0;
    for (std::size_t r = 0; r < h.dim; ++r) v += xi[r] * b[r];
    out[l] = -v;
  }
  return out;
}

// h ⊕ h* with [x+ξ, y+η] = [x,y] + ad*_x η - ad*_y ξ and the canonical pairing.
// Basis: x_1..x_k, then the dual basis ξ_1..ξ_k.
inline QuadraticLieAlgebra double_of(const LieAlgebraData& h) {
  auto rep = check_jacobi(h);
  if (!rep.pass()) throw InvalidInput("not a Lie algebra: " + failure_summary(rep));
  const std::size_t k = h.dim;
  QuadraticLieAlgebra s{LieAlgebraData(2 * k), Matrix(2 * k, 2 * k)};
  auto embed = [&](const Vector& v, std::size_t off) {
    Vector w(2 * k, Rational(0));
    for (std::size_t i = 0; i < k; ++i) w[off + i] = v[i];
    return w;
  };
  for (const auto& t : combinations(k, 2)) s.lie.set(t[0], t[1], embed(h(h.e(t[0]), h.e(t[1])), 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s.lie.set(i, k + j, embed(coadjoint(h, h.e(i), h.e(j)), k));
  for (std::size_t i = 0; i < k; ++i) {
    s.form(i, k + i) = 1;
    s.form(k + i, i) = 1;
  }
  return s;
}

struct NijenhuisExample {
  QuadraticLieAlgebra quadratic;
  Lie2Algebra algebra;
  NijenhuisOperator N;
};

inline bool is_antisymmetric(const Matrix& M) { return M.rows() == M.cols() && (M + M.transpose()).is_zero(); }

// N0 = (0 0 / H 0) on h ⊕ h*, N1 = 0. H(j,i) is the ξ_j coefficient of H x_i.
inline NijenhuisExample string_type_nijenhuis(const LieAlgebraData& h, const Matrix& H) {
  const std::size_t k = h.dim;
  if (H.rows() != k || H.cols() != k) throw DimensionMismatch("H does not match the Lie algebra");
  if (!is_antisymmetric(H)) throw InvalidInput("H is not skew-symmetric");
  NijenhuisExample ex{double_of(h), {}, {}};
  ex.algebra = build_lie_of_quadratic(ex.quadratic);
  ex.N = NijenhuisOperator::zero(ex.algebra.space());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) ex.N.N0(k + j, i) = H(j, i);
  const bool def_verdict = check_nijenhuis(ex.algebra, ex.N).pass();
  const bool s_verdict = s_nijenhuis_report(ex.quadratic, ex.N.N0).pass();
  if (def_verdict != s_verdict) throw std::logic_error("string-type operator: the two Nijenhuis tests disagree");
  return ex;
}

// T(ad*_{Tu} v - ad*_{Tv} u) - [Tu,Tv] on pairs of dual basis vectors. T(i,j) is
// the x_i coefficient of T ξ_j.
inline AxiomReport o_operator_report(const LieAlgebraData& h, const Matrix& T) {
  const std::size_t k = h.dim;
  if (T.rows() != k || T.cols() != k) throw DimensionMismatch("T does not match the Lie algebra");
  AxiomReport rep;
  auto& c = rep.add("O-operator", "T(ad*_{Tu}v - ad*_{Tv}u) = [Tu,Tv]");
  for (const auto& t : combinations(k, 2)) {
    auto u = h.e(t[0]), v = h.e(t[1]);
    auto Tu = T.apply(u), Tv = T.apply(v);
    auto r = T.apply(sub(coadjoint(h, Tu, v), coadjoint(h, Tv, u)));
    c.record({{'e', t[0]}, {'e', t[1]}}, sub(r, h(Tu, Tv)));
  }
  return rep;
}

// N0 = (0 T / 0 0) on h ⊕ h*, N1 = 0, for a skew O-operator T: h* -> h of the
// coadjoint module.
inline NijenhuisExample o_operator_nijenhuis(const LieAlgebraData& h, const Matrix& T) {
  const std::size_t k = h.dim;
  if (T.rows() != k || T.cols() != k) throw DimensionMismatch("T does not match the Lie algebra");
  if (!is_antisymmetric(T)) throw InvalidInput("T is not skew-symmetric");
  auto jac = check_jacobi(h);
  if (!jac.pass()) throw InvalidInput("not a Lie algebra: " + failure_summary(jac));
  auto rep = o_operator_report(h, T);
  if (!rep.pass()) throw InvalidInput("not an O-operator: " + failure_summary(rep));
  NijenhuisExample ex{double_of(h), {}, {}};
  ex.algebra = build_lie_of_quadratic(ex.quadratic);
  ex.N = NijenhuisOperator::zero(ex.algebra.space());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) ex.N.N0(i, k + j) = T(i, j);
  return ex;
}

}  // namespace lie2
