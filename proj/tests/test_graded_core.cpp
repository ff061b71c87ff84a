#include "lie2/catalog.hpp"

#include <gtest/gtest.h>

using namespace lie2;

namespace {

Homomorphism random_iso(catalog::Generator& gen, const GradedSpace& g) {
  return {gen.invertible(g.dim0), gen.invertible(g.dim1), gen.tensor(2, 0, g.dim0, g.dim1, g.dim1)};
}

}  // namespace

TEST(Multilinear, AlternationBySign) {
  MultilinearMap T(2, 0, 3, 0, 1);
  T.set({0, 2}, {}, {5});
  EXPECT_EQ(T.value({2, 0}), (Vector{-5}));
  EXPECT_EQ(T.value({1, 1}), (Vector{0}));
  auto v = T.evaluate<Rational>({{1, 0, 0}, {0, 0, 1}});
  EXPECT_EQ(v, (Vector{5}));
  // bilinear and alternating on arbitrary vectors
  Vector x{1, 2, 3}, y{0, -1, 4};
  EXPECT_EQ(T.evaluate<Rational>({x, y}), neg(T.evaluate<Rational>({y, x})));
  EXPECT_EQ(T.evaluate<Rational>({x, x}), (Vector{0}));
  EXPECT_EQ(T.evaluate<Rational>({x, y}), (Vector{5 * (1 * 4 - 3 * 0)}));
}

TEST(Multilinear, SymmetricSlots) {
  MultilinearMap T(0, 2, 0, 2, 1);
  T.set({}, {0, 1}, {3});
  EXPECT_EQ(T.value({}, {1, 0}), (Vector{3}));
}

TEST(Multilinear, ShapeErrors) {
  MultilinearMap T(2, 0, 3, 0, 1);
  EXPECT_THROW(T.set({0, 5}, {}, {1}), std::out_of_range);
  EXPECT_THROW(T.set({0, 1}, {}, {1, 2}), DimensionMismatch);
}

TEST(Axioms, BuiltinsPass) {
  EXPECT_TRUE(check_axioms(catalog::str_sl2()).pass());
  EXPECT_TRUE(check_axioms(catalog::abelian(3, 2)).pass());
  EXPECT_TRUE(check_axioms(catalog::string_type().algebra).pass());
  EXPECT_TRUE(check_axioms(as_lie2(catalog::sl2())).pass());
}

TEST(Axioms, StrSl2StructureConstants) {
  auto L = catalog::str_sl2();
  EXPECT_EQ(L.dim0, 3u);
  EXPECT_EQ(L.dim1, 1u);
  EXPECT_EQ(L.bracket(L.e(0), L.e(1)), L.e(2));                 // [e,f] = h
  EXPECT_EQ(L.bracket(L.e(2), L.e(0)), (Vector{2, 0, 0}));      // [h,e] = 2e
  EXPECT_EQ(L.bracket(L.e(2), L.e(1)), (Vector{0, -2, 0}));     // [h,f] = -2f
  EXPECT_EQ(L.jacobiator(L.e(0), L.e(1), L.e(2)), (Vector{8}));  // K([e,f],h) = K(h,h)
  EXPECT_TRUE(L.is_skeletal());
  EXPECT_FALSE(L.is_strict());
}

TEST(Axioms, PerturbedBracketLocalized) {
  auto L = catalog::str_sl2();
  L.l2_00.set({0, 1}, {}, {0, 0, 1});
  L.l2_00.set({1, 2}, {}, {0, 3, 0});  // [f,h] = 3f instead of 2f
  auto r = check_axioms(L);
  EXPECT_EQ(r.failed(), std::vector<std::string>{"iii"});
  const auto& c = r.condition("iii");
  ASSERT_FALSE(c.violations.empty());
  EXPECT_EQ(describe(c.violations.front().args), "(e1,e2,e3)");
}

TEST(Axioms, CheckedAllTuples) {
  auto r = check_axioms(catalog::abelian(4, 2));
  EXPECT_EQ(r.condition("i").checked, 8u);
  EXPECT_EQ(r.condition("ii").checked, 3u);
  EXPECT_EQ(r.condition("iii").checked, 4u);
  EXPECT_EQ(r.condition("v").checked, 1u);
}

TEST(Axioms, ShapeMismatchThrows) {
  Lie2Algebra L(2, 1);
  L.d = Matrix(1, 1);
  EXPECT_THROW(check_axioms(L), DimensionMismatch);
}

TEST(Homomorphism, IdentityAndScalars) {
  auto L = catalog::str_sl2();
  EXPECT_TRUE(check_homomorphism(identity_homomorphism(L.space()), L, L).pass());
  // F0 = 2I, F1 = 3I: [2x,2y] = 4[x,y] but F0[x,y] = 2[x,y]
  Homomorphism F{Rational(2) * Matrix::identity(3), Rational(3) * Matrix::identity(1),
                 MultilinearMap(2, 0, 3, 1, 1)};
  auto r = check_homomorphism(F, L, L);
  EXPECT_FALSE(r.condition("ii").pass());
  EXPECT_FALSE(r.condition("iv").pass());
  EXPECT_TRUE(r.condition("i").pass());
}

TEST(Homomorphism, TransportComposeInvert) {
  catalog::Generator gen(11);
  auto Lp = catalog::str_sl2();
  for (int trial = 0; trial < 3; ++trial) {
    auto F = random_iso(gen, Lp.space());
    auto L = transport_structure(F, Lp);
    EXPECT_TRUE(check_axioms(L).pass());
    EXPECT_TRUE(check_homomorphism(F, L, Lp).pass());
    auto G = invert(F);
    EXPECT_TRUE(check_homomorphism(G, Lp, L).pass());
    EXPECT_EQ(compose(G, F), identity_homomorphism(L.space()));
    EXPECT_EQ(compose(F, G), identity_homomorphism(Lp.space()));
  }
}

TEST(Homomorphism, CompositionOfMorphisms) {
  catalog::Generator gen(12);
  auto L2 = gen.strict_algebra();
  auto F = random_iso(gen, L2.space()), G = random_iso(gen, L2.space());
  auto L1 = transport_structure(G, L2);
  auto L0 = transport_structure(F, L1);
  EXPECT_TRUE(check_homomorphism(compose(G, F), L0, L2).pass());
}

TEST(LambdaAlgebra, LiftedAxiomsVanish) {
  auto L = lift(catalog::str_sl2());
  EXPECT_TRUE(check_axioms(L).pass());
  EXPECT_EQ(evaluate_at(L, 5), catalog::str_sl2());
}
