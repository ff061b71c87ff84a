#include "lie2/catalog.hpp"
#include "lie2/cocycle_equations.hpp"

#include <gtest/gtest.h>

using namespace lie2;

namespace {

// dim H^n = dim C^n - rank D_n - rank D_{n-1}
std::size_t by_ranks(const Lie2Algebra& L, const Representation& mu, int n, const CohomologyConfig& cfg = {}) {
  std::size_t h = cochain_space_dim(L, mu, n).total - rank(coboundary_matrix(L, mu, n, cfg));
  if (n > -1) h -= rank(coboundary_matrix(L, mu, n - 1, cfg));
  return h;
}

}  // namespace

TEST(CochainSpace, StrSl2Counts) {
  auto L = catalog::str_sl2();
  auto ad = adjoint_representation(L);
  auto d2 = cochain_space_dim(L, ad, 2);
  EXPECT_EQ(d2.total, 16u);
  std::map<ComponentKey, std::size_t> parts(d2.breakdown.begin(), d2.breakdown.end());
  EXPECT_EQ(parts.at(ComponentKey{0, 1, 0}), 3u);
  EXPECT_EQ(parts.at(ComponentKey{2, 0, 0}), 9u);
  EXPECT_EQ(parts.at(ComponentKey{1, 1, -1}), 3u);
  EXPECT_EQ(parts.at(ComponentKey{3, 0, -1}), 1u);
  EXPECT_EQ(cochain_space_dim(L, ad, 1).total, 13u);
  EXPECT_EQ(cochain_space_dim(L, ad, -1).total, 1u);
}

TEST(CochainSpace, MatrixShapesMatchCounts) {
  auto L = catalog::string_type().algebra;
  auto ad = adjoint_representation(L);
  for (int n = -1; n <= 2; ++n) {
    auto D = coboundary_matrix(L, ad, n);
    EXPECT_EQ(D.cols(), cochain_space_dim(L, ad, n).total);
    EXPECT_EQ(D.rows(), cochain_space_dim(L, ad, n + 1).total);
  }
}

TEST(Coboundary, AbelianIsZero) {
  auto L = catalog::abelian_a1();
  auto ad = adjoint_representation(L);
  for (int n = -1; n <= 2; ++n) EXPECT_TRUE(coboundary_matrix(L, ad, n).is_zero());
  EXPECT_EQ(cohomology_dim(L, ad, 0), 2u);
}

TEST(Coboundary, SquaresToZero) {
  CohomologyConfig cfg;
  cfg.max_degree = 4;
  std::vector<Lie2Algebra> algebras = {catalog::str_sl2(), catalog::o_operator().algebra};
  catalog::Generator gen(41);
  for (int i = 0; i < 4; ++i) algebras.push_back(gen.strict_algebra());
  for (const auto& L : algebras) {
    auto ad = adjoint_representation(L);
    for (int n = -1; n <= 2; ++n) EXPECT_TRUE(d_squared(L, ad, n, cfg).is_zero());
  }
}

TEST(Coboundary, NonAdjointModule) {
  // trivial action on a complex with nonzero differential
  CohomologyConfig cfg;
  cfg.max_degree = 4;
  auto L = catalog::str_sl2();
  auto mu = Representation::zero(L.space(), TwoTermComplex{2, 1, Matrix{{1}, {1}}});
  ASSERT_TRUE(check_representation(mu, L).pass());
  for (int n = -1; n <= 2; ++n) EXPECT_TRUE(d_squared(L, mu, n, cfg).is_zero());
}

TEST(Coboundary, MatrixAgreesWithDirectApplication) {
  catalog::Generator gen(45);
  auto L = catalog::str_sl2();
  auto ad = adjoint_representation(L);
  auto sh = shape_of(L, ad);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(gen.index(4)) - 1;
    auto c = gen.cochain(sh, n);
    EXPECT_EQ(coboundary_matrix(L, ad, n).apply(c.flatten()), apply_D(c, L, ad).flatten());
  }
}

TEST(Coboundary, DegreeOverflow) {
  auto L = catalog::str_sl2();
  auto ad = adjoint_representation(L);
  EXPECT_THROW(coboundary_matrix(L, ad, 3), DegreeOverflow);
  CohomologyConfig cfg;
  cfg.max_degree = 4;
  EXPECT_NO_THROW(coboundary_matrix(L, ad, 3, cfg));
}

TEST(Cohomology, StrSl2LowDegrees) {
  auto L = catalog::str_sl2();
  auto ad = adjoint_representation(L);
  EXPECT_EQ(cohomology_dim(L, ad, -1), 1u);
  EXPECT_EQ(cohomology_dim(L, ad, 0), 0u);
  EXPECT_EQ(by_ranks(L, ad, -1), 1u);
  EXPECT_EQ(by_ranks(L, ad, 0), 0u);
}

TEST(Cohomology, AgreesWithRankCount) {
  catalog::Generator gen(47);
  for (int i = 0; i < 5; ++i) {
    auto L = gen.strict_algebra();
    auto ad = adjoint_representation(L);
    for (int n = -1; n <= 2; ++n) EXPECT_EQ(cohomology_dim(L, ad, n), by_ranks(L, ad, n));
  }
}

TEST(Cocycles, ZeroCochain) {
  auto L = catalog::str_sl2();
  auto ad = adjoint_representation(L);
  auto z = Cochain::zero(shape_of(L, ad), 2);
  EXPECT_TRUE(is_cocycle(z, L, ad));
  auto b = is_coboundary(z, L, ad);
  ASSERT_TRUE(b.has_value());
  EXPECT_TRUE(apply_D(*b, L, ad).is_zero());
}

TEST(Cocycles, CoboundaryWitness) {
  catalog::Generator gen(49);
  auto L = catalog::string_type().algebra;
  auto ad = adjoint_representation(L);
  for (int trial = 0; trial < 5; ++trial) {
    auto b = gen.cochain(shape_of(L, ad), 1);
    auto c = apply_D(b, L, ad);
    EXPECT_TRUE(is_cocycle(c, L, ad));
    auto w = is_coboundary(c, L, ad);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(apply_D(*w, L, ad), c);
  }
}

TEST(Cocycles, EquationsMatchCoboundary) {
  catalog::Generator gen(51);
  std::vector<Lie2Algebra> algebras = {catalog::str_sl2(), catalog::string_type().algebra};
  for (int i = 0; i < 4; ++i) algebras.push_back(gen.strict_algebra());
  for (const auto& L : algebras) {
    auto ad = adjoint_representation(L);
    auto sh = shape_of(L, ad);
    // generic cochains, and cocycles perturbed in one coordinate
    for (int trial = 0; trial < 6; ++trial) {
      auto c = gen.cochain(sh, 2);
      EXPECT_EQ(cocycle_equations(c, L, ad).pass(), is_cocycle(c, L, ad));
      auto z = apply_D(gen.cochain(sh, 1), L, ad);
      EXPECT_TRUE(cocycle_equations(z, L, ad).pass());
      auto flat = z.flatten();
      if (flat.empty()) continue;
      flat[gen.index(flat.size())] += 1;
      auto p = Cochain::from_flat(sh, 2, flat);
      EXPECT_EQ(cocycle_equations(p, L, ad).pass(), is_cocycle(p, L, ad));
    }
  }
}

TEST(Cocycles, ShapeMismatchThrows) {
  auto L = catalog::str_sl2();
  auto ad = adjoint_representation(L);
  auto c = Cochain::zero({2, 1, 2, 1}, 2);
  EXPECT_THROW(apply_D(c, L, ad), DimensionMismatch);
}
