#include <gtest/gtest.h>

#include "gpea/catalog.hpp"
#include "gpea/core.hpp"

using namespace gpea;

namespace {

constexpr Elem P = 1, Q = 2, R = 3, S = 4, T = 5;

// The smallest GPEA that is not weakly commutative: atoms 2, 3, 4 with
// 2+4 = 3+2 = 4+3 = 1.
Gpea cyclic5() {
  RawTable t(5);
  t.set(2, 4, 1);
  t.set(3, 2, 1);
  t.set(4, 3, 1);
  return Gpea::from(t);
}

}  // namespace

TEST(Axioms, OneElementPasses) {
  RawTable t(1);
  EXPECT_TRUE(validate_axioms(t).ok());
}

TEST(Axioms, Fig1Passes) { EXPECT_NO_THROW(fig1()); }

TEST(Axioms, IdempotentAtomFailsCancellation) {
  RawTable t(2);
  t.set(1, 1, 1);
  const AxiomReport r = validate_axioms(t);
  EXPECT_FALSE(r.pass[2]);
  ASSERT_TRUE(r.witness[2]);
  EXPECT_EQ(*r.witness[2], (std::array<Elem, 3>{1, 0, 1}));
  EXPECT_TRUE(r.pass[0] && r.pass[1] && r.pass[3] && r.pass[4]);
}

TEST(Axioms, SumToZeroFailsPositivity) {
  RawTable t(2);
  t.set(1, 1, 0);
  const AxiomReport r = validate_axioms(t);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.pass[4]);
  EXPECT_THROW(Gpea::from(t), AxiomError);
}

TEST(Axioms, OneSidedAssociativityIsRejected) {
  // a+a = b, a+b = c but b+a undefined: (a+a)+a = b+a is missing while
  // a+(a+a) exists.
  RawTable t(4);
  t.set(1, 1, 2);
  t.set(1, 2, 3);
  EXPECT_FALSE(validate_axioms(t).pass[0]);
}

TEST(Order, Fig1Hasse) {
  const Gpea f = fig1();
  const OrderRelation o = induced_order(f);
  for (Elem x = 0; x < 6; ++x) EXPECT_TRUE(o.leq(0, x));
  EXPECT_TRUE(o.leq(P, S));
  EXPECT_TRUE(o.leq(R, S));
  EXPECT_TRUE(o.leq(R, T));
  EXPECT_TRUE(o.leq(Q, T));
  EXPECT_FALSE(o.leq(S, T));
  EXPECT_FALSE(o.leq(T, S));
  EXPECT_FALSE(o.leq(P, T));
  EXPECT_EQ(o.pairs().size(), 6u + 5u + 4u);
}

TEST(Order, ChainIsTotalOrder) {
  const OrderRelation o = induced_order(chain(2));
  EXPECT_TRUE(o.leq(0, 1));
  EXPECT_TRUE(o.leq(1, 2));
  EXPECT_FALSE(o.leq(2, 1));
}

TEST(Subtract, ZeroAndFig1) {
  const Gpea f = fig1();
  for (Elem x = 0; x < 6; ++x) {
    const auto s = subtract(f, 0, x);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->left, x);
    EXPECT_EQ(s->right, x);
  }
  const auto rs = subtract(f, R, S);
  ASSERT_TRUE(rs);
  EXPECT_EQ(rs->left, P);
  EXPECT_EQ(rs->right, P);
  EXPECT_FALSE(subtract(f, P, T));
}

TEST(Subtract, Chain) {
  const auto s = subtract(chain(2), 1, 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->left, 1);
  EXPECT_EQ(s->right, 1);
}

TEST(Subtract, NoncommutativeSidesDiffer) {
  const Gpea g = cyclic5();
  EXPECT_EQ(g.left_sub(2, 1), 4);
  EXPECT_EQ(g.right_sub(1, 2), 3);
  EXPECT_FALSE(classify(g).weakly_commutative);
  const PeaView v = pea_view(g);
  EXPECT_EQ(v.right_supp, (std::vector<Elem>{1, 0, 4, 2, 3}));
  EXPECT_EQ(v.left_supp, (std::vector<Elem>{1, 0, 3, 4, 2}));
  EXPECT_TRUE(check_pea_identities(g, v));
}

TEST(Axioms, OneSidedSumBreaksConjugation) {
  RawTable t(4);
  t.set(1, 2, 3);
  const AxiomReport r = validate_axioms(t);
  EXPECT_FALSE(r.pass[1]);
  EXPECT_TRUE(r.pass[0] && r.pass[2] && r.pass[3] && r.pass[4]);
}

TEST(Classify, Flags) {
  // Truncated addition leaves 1+2 undefined, so C2 is not total.
  const StructureFlags c2 = classify(chain(2));
  EXPECT_FALSE(c2.total);
  EXPECT_TRUE(c2.commutative);
  EXPECT_TRUE(c2.has_unit);
  EXPECT_TRUE(c2.upward_directed);

  const StructureFlags f = classify(fig1());
  EXPECT_FALSE(f.total);
  EXPECT_TRUE(f.commutative);
  EXPECT_FALSE(f.has_unit);
  EXPECT_FALSE(f.upward_directed);
  EXPECT_TRUE(f.downward_directed);

  const StructureFlags z = classify(chain(0));
  EXPECT_TRUE(z.total && z.weakly_commutative && z.commutative && z.has_unit && z.upward_directed &&
              z.downward_directed);
}

TEST(PeaView, Supplements) {
  const PeaView b = pea_view(chain(1));
  EXPECT_EQ(b.tilde(0), 1);
  EXPECT_EQ(b.tilde(1), 0);
  EXPECT_EQ(b.minus(0), 1);

  const Gpea c2 = chain(2);
  const PeaView v = pea_view(c2);
  EXPECT_EQ(v.right_supp, (std::vector<Elem>{2, 1, 0}));
  EXPECT_EQ(v.left_supp, (std::vector<Elem>{2, 1, 0}));
  EXPECT_TRUE(check_pea_identities(c2, v));

  EXPECT_THROW(pea_view(fig1()), PreconditionError);
}

TEST(Morphisms, Automorphisms) {
  const Gpea z = chain(0);
  EXPECT_EQ(find_morphisms(z, z, MorphismMode::kAuto), (std::vector<Permutation>{{0}}));

  const Gpea f = fig1();
  const auto autos = find_morphisms(f, f, MorphismMode::kAuto);
  ASSERT_EQ(autos.size(), 2u);
  EXPECT_EQ(autos[0], identity_permutation(6));
  EXPECT_EQ(autos[1], (Permutation{0, Q, P, R, T, S}));

  EXPECT_TRUE(find_morphisms(chain(2), f, MorphismMode::kIso).empty());
  EXPECT_EQ(find_morphisms(chain(3), chain(3), MorphismMode::kAuto).size(), 1u);
  EXPECT_EQ(find_morphisms(boolean(2), boolean(2), MorphismMode::kAuto).size(), 2u);
}

TEST(Morphisms, IsomorphismNeedsReverseDefinedness) {
  // Identity from two atoms to boolean(2) is a morphism, not an isomorphism.
  RawTable atoms(4);
  atoms.set(1, 2, 3);
  atoms.set(2, 1, 3);
  const Gpea b = Gpea::from(atoms);
  RawTable three(4);
  const Gpea a = Gpea::from(three);
  const Permutation id = identity_permutation(4);
  EXPECT_TRUE(is_morphism(a, b, id));
  EXPECT_FALSE(is_isomorphism(a, b, id));
}

TEST(Permutations, Algebra) {
  const Permutation p{1, 2, 0};
  EXPECT_EQ(compose(p, inverse(p)), identity_permutation(3));
  EXPECT_TRUE(is_bijection(p, 3));
  EXPECT_FALSE(is_bijection(Permutation{0, 0, 1}, 3));
  EXPECT_EQ(format_elements(p), "1,2,0");
}
