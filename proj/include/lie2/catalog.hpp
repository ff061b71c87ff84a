#pragma once

#include "extension.hpp"
#include "nijenhuis.hpp"

#include <functional>
#include <map>
#include <random>

namespace lie2::catalog {

inline Lie2Algebra abelian(std::size_t m, std::size_t n) { return Lie2Algebra(m, n); }

// m = n = 1, every structure map zero
inline Lie2Algebra abelian_a1() { return abelian(1, 1); }

// basis e, f, h: [e,f] = h, [h,e] = 2e, [h,f] = -2f
inline LieAlgebraData sl2() {
  LieAlgebraData s(3);
  s.set(0, 1, {0, 0, 1});
  s.set(2, 0, {2, 0, 0});
  s.set(2, 1, {0, -2, 0});
  return s;
}

inline Matrix killing_form(const LieAlgebraData& s) {
  const std::size_t k = s.dim;
  std::vector<Matrix> ad(k, Matrix(k, k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto col = s(s.e(i), s.e(j));
      for (std::size_t r = 0; r < k; ++r) ad[i](r, j) = col[r];
    }
  Matrix K(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Matrix p = ad[i] * ad[j];
      for (std::size_t r = 0; r < k; ++r) K(i, j) += p(r, r);
    }
  return K;
}

inline QuadraticLieAlgebra sl2_quadratic() {
  auto s = sl2();
  return {s, killing_form(s)};
}

inline Lie2Algebra str_sl2() { return build_lie_of_quadratic(sl2_quadratic()); }

// [x,y] = y
inline LieAlgebraData aff1() {
  LieAlgebraData h(2);
  h.set(0, 1, {0, 1});
  return h;
}

inline Matrix standard_skew() { return Matrix{{0, 1}, {-1, 0}}; }

// [x,y] = y, [x,z] = z. Not unimodular, so a skew H need not give a closed
// 2-form and the induced deformation is nonzero (on aff(1) or sl2 it vanishes).
inline LieAlgebraData r3() {
  LieAlgebraData h(3);
  h.set(0, 1, {0, 1, 0});
  h.set(0, 2, {0, 0, 1});
  return h;
}

inline Matrix skew3() { return Matrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}; }

inline NijenhuisExample string_type() { return string_type_nijenhuis(r3(), skew3()); }

inline NijenhuisExample o_operator() { return o_operator_nijenhuis(aff1(), standard_skew()); }

struct Entry {
  std::string name;
  std::string description;
  std::function<Lie2Algebra()> algebra;
  std::function<std::optional<NijenhuisOperator>()> nijenhuis;
};

inline const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {"abelian", "m = n = 1, all structure maps zero", abelian_a1,
       [] { return std::optional<NijenhuisOperator>(NijenhuisOperator::zero({1, 1})); }},
      {"str_sl2", "string Lie 2-algebra of sl2 with the Killing form", str_sl2,
       [] { return std::optional<NijenhuisOperator>(NijenhuisOperator::zero({3, 1})); }},
      {"string_type", "Lie(h ⊕ h*) for h: [x,y] = y, [x,z] = z, with N0 = (0 0 / H 0), H = (0 1 0 / -1 0 1 / 0 -1 0)",
       [] { return string_type().algebra; }, [] { return std::optional<NijenhuisOperator>(string_type().N); }},
      {"o_operator", "Lie(h ⊕ h*) for h = aff(1), with N0 = (0 T / 0 0), T = (0 1 / -1 0)",
       [] { return o_operator().algebra; }, [] { return std::optional<NijenhuisOperator>(o_operator().N); }},
  };
  return all;
}

inline const Entry& entry(std::string_view name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw InvalidInput("unknown builtin: " + std::string(name));
}

// Random data for tests.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  Rational small(int lo = -2, int hi = 2) { return Rational(std::uniform_int_distribution<int>(lo, hi)(rng_)); }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Matrix matrix(std::size_t r, std::size_t c) {
    Matrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) M(i, j) = small();
    return M;
  }

  Matrix invertible(std::size_t k) {
    for (;;) {
      Matrix M = matrix(k, k);
      if (rank(M) == k) return M;
    }
  }

  MultilinearMap tensor(std::size_t p, std::size_t q, std::size_t m, std::size_t n, std::size_t out) {
    MultilinearMap T(p, q, m, n, out);
    for (auto& v : T.data()) v = small();
    return T;
  }

  Cochain cochain(const CochainShape& sh, int degree) {
    Cochain c = Cochain::zero(sh, degree);
    for (auto& [k, comp] : c.components)
      for (auto& v : comp.data()) v = small();
    return c;
  }

  // Strict Lie 2-algebras with dim g_0 <= 4, dim g_{-1} <= 3, as crossed
  // modules: either an ideal mapped in by inclusion, or a module with d = 0.
  // A random change of basis is applied at the end.
  Lie2Algebra strict_algebra() {
    for (;;) {
      LieAlgebraData base = lie_algebra();
      const std::size_t m = base.dim;
      Lie2Algebra L;
      if (index(2) == 0) {
        L = ideal_crossed_module(base);
      } else {
        L = module_crossed_module(base);
      }
      if (L.dim1 > 3 || m > 4) continue;
      Homomorphism F{invertible(L.dim0), invertible(L.dim1), MultilinearMap(2, 0, L.dim0, L.dim1, L.dim1)};
      Lie2Algebra out = transport_structure(F, L);
      if (!check_axioms(out).pass()) throw std::logic_error("generator produced an invalid algebra");
      return out;
    }
  }

  LieAlgebraData lie_algebra() {
    switch (index(7)) {
      case 0: return LieAlgebraData(1 + index(3));
      case 1: return aff1();
      case 2: return sl2();
      case 3: return heisenberg();
      case 4: return direct_sum(aff1(), aff1());
      case 5: return direct_sum(sl2(), LieAlgebraData(1));
      default: return r3();
    }
  }

 private:
  static LieAlgebraData heisenberg() {
    LieAlgebraData h(3);
    h.set(0, 1, {0, 0, 1});
    return h;
  }
  // [x,y] = y, [x,z] = z
  static LieAlgebraData r3() {
    LieAlgebraData h(3);
    h.set(0, 1, {0, 1, 0});
    h.set(0, 2, {0, 0, 1});
    return h;
  }

  // g_{-1} = [g,g] or g itself, d the inclusion, action the bracket.
  Lie2Algebra ideal_crossed_module(const LieAlgebraData& h) {
    const std::size_t m = h.dim;
    std::vector<Vector> gens;
    for (const auto& t : combinations(m, 2)) gens.push_back(h(h.e(t[0]), h.e(t[1])));
    std::vector<Vector> basis;
    if (index(2) == 0 || gens.empty()) {
      for (std::size_t i = 0; i < m; ++i) basis.push_back(h.e(i));
    } else {
      for (const auto& v : gens) {
        auto trial = basis;
        trial.push_back(v);
        if (span_dim(trial, m) > basis.size()) basis.push_back(v);
      }
    }
    const std::size_t n = basis.size();
    Lie2Algebra L(m, n);
    L.l2_00 = h.bracket;
    Matrix B = Matrix::from_columns(m, basis);
    L.d = B;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t a = 0; a < n; ++a) {
        auto coords = solve(B, h(h.e(i), basis[a]));
        if (!coords) throw std::logic_error("derived algebra is not an ideal");
        L.l2_01.set({i}, {a}, *coords);
      }
    return L;
  }

  // d = 0 and g_{-1} a module: the adjoint module, a trivial one, or their sum.
  Lie2Algebra module_crossed_module(const LieAlgebraData& h) {
    const std::size_t m = h.dim;
    const std::size_t kind = index(3);
    const std::size_t n = kind == 0 ? m : kind == 1 ? 1 + index(2) : (m < 3 ? m + 1 : m);
    Lie2Algebra L(m, n);
    L.l2_00 = h.bracket;
    if (kind != 1)
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t a = 0; a < m && a < n; ++a) {
          auto v = h(h.e(i), h.e(a));
          v.resize(n, Rational(0));
          L.l2_01.set({i}, {a}, v);
        }
    return L;
  }

  std::mt19937_64 rng_;
};

}  // namespace lie2::catalog
