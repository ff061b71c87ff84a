#include "lie2/catalog.hpp"

#include <gtest/gtest.h>

using namespace lie2;

namespace {

struct Setting {
  Lie2Algebra g;
  Representation mu;
};

std::vector<Setting> settings() {
  catalog::Generator gen(81);
  std::vector<Setting> out;
  auto s = catalog::str_sl2();
  out.push_back({s, adjoint_representation(s)});
  auto L = gen.strict_algebra();
  out.push_back({L, adjoint_representation(L)});
  auto a = catalog::abelian_a1();
  out.push_back({a, Representation::zero(a.space(), TwoTermComplex{2, 1, Matrix{{1}, {0}}})});
  return out;
}

Splitting shifted(catalog::Generator& gen, const GradedSpace& g, const AbelianComplex& h) {
  Splitting s = canonical_splitting(g, h);
  for (std::size_t r = g.dim0; r < s.sigma0.rows(); ++r)
    for (std::size_t c = 0; c < g.dim0; ++c) s.sigma0(r, c) = gen.small();
  for (std::size_t r = g.dim1; r < s.sigma1.rows(); ++r)
    for (std::size_t c = 0; c < g.dim1; ++c) s.sigma1(r, c) = gen.small();
  return s;
}

}  // namespace

TEST(Semidirect, ZeroActionIsDirectSum) {
  auto g = catalog::str_sl2();
  AbelianComplex h{1, 2, Matrix{{1, 1}}};
  auto S = semidirect_product(g, h, Representation::zero(g.space(), h));
  EXPECT_TRUE(check_axioms(S).pass());
  EXPECT_EQ(S.dim0, 4u);
  EXPECT_EQ(S.dim1, 3u);
  // block structure: brackets of g stay in g, h is central
  EXPECT_EQ(S.bracket(S.e(0), S.e(1)), (Vector{0, 0, 1, 0}));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(is_zero(S.bracket(S.e(i), S.e(3))));
  EXPECT_EQ(S.diff(S.f(1)), (Vector{0, 0, 0, 1}));
}

TEST(Semidirect, AdjointOnStringAlgebra) {
  auto g = catalog::str_sl2();
  auto h = underlying_complex(g);
  auto mu = adjoint_representation(g);
  auto S = semidirect_product(g, h, mu);
  EXPECT_TRUE(check_axioms(S).pass());
  EXPECT_EQ(S, build_extension({g, h, mu, Cochain::zero(shape_of(g, mu), 2)}));
  // the projection is a strict morphism
  Matrix p0(3, 6), p1(1, 2);
  for (std::size_t i = 0; i < 3; ++i) p0(i, i) = 1;
  p1(0, 0) = 1;
  EXPECT_TRUE(check_homomorphism(Homomorphism{p0, p1, MultilinearMap(2, 0, 6, 2, 1)}, S, g).pass());
}

TEST(Semidirect, RejectsInvalidRepresentation) {
  auto g = catalog::str_sl2();
  auto mu = adjoint_representation(g);
  mu.mu0[0].x0 = Matrix::identity(3);
  EXPECT_THROW(semidirect_product(g, underlying_complex(g), mu), InvalidInput);
}

TEST(Build, AxiomsIffCocycle) {
  catalog::Generator gen(83);
  for (const auto& [g, mu] : settings()) {
    auto sh = shape_of(g, mu);
    for (int trial = 0; trial < 4; ++trial) {
      auto c = apply_D(gen.cochain(sh, 1), g, mu);
      ASSERT_TRUE(is_cocycle(c, g, mu));
      EXPECT_TRUE(check_axioms(build_extension({g, mu.module, mu, c})).pass());
      auto r = gen.cochain(sh, 2);
      bool closed = is_cocycle(r, g, mu);
      auto ax = check_axioms(build_extension({g, mu.module, mu, r}));
      EXPECT_EQ(ax.pass(), closed);
      EXPECT_EQ(cocycle_equations(r, g, mu).pass(), closed);
    }
  }
}

TEST(Extract, RoundTripAndSplittingIndependence) {
  catalog::Generator gen(85);
  for (const auto& [g, mu] : settings()) {
    auto sh = shape_of(g, mu);
    auto c = apply_D(gen.cochain(sh, 1), g, mu);
    ExtensionDatum E{g, mu.module, mu, c};
    auto X = build_extension(E);
    EXPECT_EQ(extract_from_splitting(X, canonical_splitting(g.space(), mu.module)), E);
    for (int i = 0; i < 5; ++i) {
      auto Ei = extract_from_splitting(X, shifted(gen, g.space(), mu.module));
      EXPECT_EQ(Ei.rep, mu);
      EXPECT_TRUE(check_representation(Ei.rep, g).pass());
      EXPECT_TRUE(is_cocycle(Ei.cocycle, g, mu));
      EXPECT_TRUE(is_coboundary(Ei.cocycle - c, g, mu).has_value());
    }
  }
}

TEST(Extract, RejectsBadSplitting) {
  auto g = catalog::str_sl2();
  auto mu = adjoint_representation(g);
  auto X = semidirect_product(g, mu.module, mu);
  auto s = canonical_splitting(g.space(), mu.module);
  s.sigma0(0, 0) = 2;
  EXPECT_THROW(extract_from_splitting(X, s), InvalidInput);
  // h must be an abelian ideal
  auto Y = X;
  Y.l2_00.set({3, 4}, {}, {0, 0, 0, 1, 0, 0});
  EXPECT_THROW(extract_from_splitting(Y, canonical_splitting(g.space(), mu.module)), InvalidInput);
}

TEST(Classify, WitnessesAndRankCriterion) {
  catalog::Generator gen(87);
  for (const auto& [g, mu] : settings()) {
    auto sh = shape_of(g, mu);
    auto D1 = coboundary_matrix(g, mu, 1);
    auto c = apply_D(gen.cochain(sh, 1), g, mu);
    auto self = classify(g, mu.module, mu, c, c);
    ASSERT_TRUE(self.has_value());
    EXPECT_TRUE(witness_cochain(*self, sh).is_zero());
    auto db = apply_D(gen.cochain(sh, 1), g, mu);
    auto w = classify(g, mu.module, mu, c + db, c);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(apply_D(witness_cochain(*w, sh), g, mu), db);
    // every cocycle basis element against zero, checked against ranks
    for (const auto& v : kernel_basis(coboundary_matrix(g, mu, 2))) {
      auto z = Cochain::from_flat(sh, 2, v);
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < D1.cols(); ++j) cols.push_back(D1.column(j));
      std::size_t im = span_dim(cols, D1.rows());
      cols.push_back(v);
      bool in_image = span_dim(cols, D1.rows()) == im;
      auto wz = classify(g, mu.module, mu, z, Cochain::zero(sh, 2));
      EXPECT_EQ(wz.has_value(), in_image);
      if (wz) {
        EXPECT_EQ(apply_D(witness_cochain(*wz, sh), g, mu), z);
      }
    }
  }
}

TEST(Classify, RejectsNonCocycles) {
  catalog::Generator gen(89);
  auto g = catalog::str_sl2();
  auto mu = adjoint_representation(g);
  auto sh = shape_of(g, mu);
  Cochain bad;
  do bad = gen.cochain(sh, 2);
  while (is_cocycle(bad, g, mu));
  EXPECT_THROW(classify(g, mu.module, mu, bad, Cochain::zero(sh, 2)), InvalidInput);
}

TEST(Classify, InducedEquivalence) {
  catalog::Generator gen(91);
  for (const auto& [g, mu] : settings()) {
    auto sh = shape_of(g, mu);
    auto c1 = apply_D(gen.cochain(sh, 1), g, mu);
    auto c2 = c1 + apply_D(gen.cochain(sh, 1), g, mu);
    auto w = classify(g, mu.module, mu, c1, c2);
    ASSERT_TRUE(w.has_value());
    auto F = induced_equivalence(g.space(), mu.module, *w);
    auto X1 = build_extension({g, mu.module, mu, c1}), X2 = build_extension({g, mu.module, mu, c2});
    EXPECT_TRUE(check_homomorphism(F, X1, X2).pass());
    const std::size_t m = g.dim0, n = g.dim1, v0 = mu.module.dim0, v1 = mu.module.dim1;
    // q∘F = p and F∘i = j
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t col = 0; col < m + v0; ++col) EXPECT_EQ(F.F0(r, col), r == col ? 1 : 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n + v1; ++col) EXPECT_EQ(F.F1(r, col), r == col ? 1 : 0);
    for (std::size_t col = m; col < m + v0; ++col)
      for (std::size_t r = 0; r < m + v0; ++r) EXPECT_EQ(F.F0(r, col), r == col ? 1 : 0);
    // F2 only sees g_0 and lands in h_{-1}
    for (const auto& t : combinations(m + v0, 2)) {
      auto v = F.F2.value(t);
      if (t[1] >= m) {
        EXPECT_TRUE(is_zero(v));
      }
      for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(v[k], 0);
    }
  }
}

TEST(Remark, ExtensionDeformsSemidirectProduct) {
  catalog::Generator gen(93);
  for (const auto& [g, mu] : settings()) {
    auto sh = shape_of(g, mu);
    auto S = semidirect_product(g, mu.module, mu);
    EXPECT_TRUE(extend_cocycle_to_semidirect(g, mu.module, mu, Cochain::zero(sh, 2)).is_zero());
    auto c = apply_D(gen.cochain(sh, 1), g, mu);
    auto bar = extend_cocycle_to_semidirect(g, mu.module, mu, c);
    CohomologyConfig cfg;
    EXPECT_TRUE(is_cocycle(bar, S, adjoint_representation(S), cfg));
    EXPECT_EQ(deform(S, datum_from_cochain(bar), 1), build_extension({g, mu.module, mu, c}));
  }
}
