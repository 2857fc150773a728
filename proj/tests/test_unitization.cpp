#include <gtest/gtest.h>

#include "gpea/catalog.hpp"
#include "gpea/unitization.hpp"

using namespace gpea;

namespace {

constexpr Elem P = 1, Q = 2, R = 3, S = 4, T = 5;

const Permutation kFig1Swap{0, Q, P, R, T, S};

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

TEST(Unitizing, WeaklyCommutativeIdentity) {
  for (const auto& name : catalog_names()) {
    const Gpea g = builtin(name);
    EXPECT_TRUE(is_unitizing(g, identity_permutation(g.size()))) << name;
  }
  const Gpea nc = cyclic5();
  EXPECT_FALSE(is_unitizing(nc, identity_permutation(5)));
  EXPECT_TRUE(is_automorphism(nc, identity_permutation(5)));
  // a PEA, so only a -> a--
  EXPECT_EQ(enumerate_unitizing(nc), (std::vector<Permutation>{{0, 1, 4, 2, 3}}));
}

TEST(Unitizing, Lists) {
  EXPECT_EQ(enumerate_unitizing(chain(0)), (std::vector<Permutation>{{0}}));
  EXPECT_EQ(enumerate_unitizing(chain(2)), (std::vector<Permutation>{{0, 1, 2}}));
  EXPECT_EQ(enumerate_unitizing(fig1()), (std::vector<Permutation>{identity_permutation(6), kFig1Swap}));
}

TEST(Unitizing, PeaHasExactlyDoubleMinus) {
  for (const auto& name : {"chain(1)", "chain(3)", "boolean(2)", "boolean(3)"}) {
    const Gpea g = builtin(name);
    const PeaView v = pea_view(g);
    Permutation mm(g.size());
    for (Elem a = 0; a < static_cast<Elem>(g.size()); ++a) mm[a] = v.minus(v.minus(a));
    EXPECT_EQ(enumerate_unitizing(g), std::vector<Permutation>{mm}) << name;
  }
}

TEST(Unitize, SmallCases) {
  const UnitizationAlgebra z = gamma_unitize(chain(0), {0});
  EXPECT_FALSE(find_morphisms(z.algebra, chain(1), MorphismMode::kIso, {}, 1).empty());

  // C1: 0, 1, η0 = 2 = unit, η1 = 3; 1 + η1 = η(1⟍1) = η0, η1 + 1 = η0.
  const UnitizationAlgebra u = gamma_unitize(chain(1), {0, 1});
  EXPECT_EQ(u.unit, 2);
  EXPECT_EQ(u.algebra.op(1, 3), 2);
  EXPECT_EQ(u.algebra.op(3, 1), 2);
  EXPECT_EQ(u.algebra.op(1, 1), kUndefined);
  EXPECT_EQ(u.algebra.op(3, 3), kUndefined);
  EXPECT_FALSE(u.algebra.leq(1, 3));
  EXPECT_FALSE(u.algebra.leq(3, 1));
  EXPECT_FALSE(find_morphisms(u.algebra, boolean(2), MorphismMode::kIso, {}, 1).empty());
}

TEST(Unitize, Fig1) {
  const UnitizationAlgebra ua = gamma_unitize(fig1(), identity_permutation(6));
  EXPECT_EQ(ua.algebra.size(), 12u);
  EXPECT_EQ(ua.algebra.top(), 6);
  const PeaView v = pea_view(ua.algebra);
  EXPECT_EQ(v.tilde(6), 0);
  for (Elem a = 0; a < 6; ++a) {
    EXPECT_EQ(v.tilde(a), ua.eta(a));
    EXPECT_EQ(v.minus(v.minus(a)), a);
    // (ηa)~ = a~~, which for γ = id is a again
    EXPECT_EQ(v.tilde(ua.eta(a)), v.tilde(v.tilde(a)));
  }
  EXPECT_EQ(ua.algebra.name(ua.eta(P)), "p~");
}

TEST(Unitize, SwapOnFig1) {
  const UnitizationAlgebra ua = gamma_unitize(fig1(), kFig1Swap);
  const PeaView v = pea_view(ua.algebra);
  for (Elem a = 0; a < 6; ++a) EXPECT_EQ(v.minus(v.minus(a)), kFig1Swap[a]);
}

TEST(Unitize, RejectsNonUnitizing) {
  EXPECT_THROW(gamma_unitize(chain(2), {0, 2, 1}), PreconditionError);
  EXPECT_THROW(gamma_unitize(chain(2), {0, 1}), PreconditionError);
}

TEST(Recognize, Roundtrip) {
  for (const auto& gamma : enumerate_unitizing(fig1())) {
    const UnitizationAlgebra ua = gamma_unitize(fig1(), gamma);
    const RecognitionResult r = recognize_unitization(ua.algebra, ua.lift(ElementSubset::full(6)));
    ASSERT_TRUE(r.value) << r.diagnostics;
    EXPECT_EQ(r.value->gamma, gamma);
    EXPECT_EQ(r.value->iso, identity_permutation(12));
    EXPECT_TRUE(r.value->iso_unique);
  }
}

TEST(Recognize, BooleanAtom) {
  const RecognitionResult r = recognize_unitization(boolean(2), ElementSubset(4, {0, 1}));
  ASSERT_TRUE(r.value) << r.diagnostics;
  EXPECT_EQ(r.value->gamma, (Permutation{0, 1}));
  EXPECT_EQ(r.value->iso, (Permutation{0, 1, 3, 2}));
}

TEST(Recognize, ChainIsNot) {
  const RecognitionResult r = recognize_unitization(chain(2), ElementSubset(3, {0, 1}));
  EXPECT_FALSE(r.value);
  EXPECT_NE(r.diagnostics.find("(U1)"), std::string::npos);
  // the unit itself never belongs to P
  EXPECT_NE(recognize_unitization(chain(1), ElementSubset::full(2)).diagnostics.find("(U2)"), std::string::npos);
  EXPECT_FALSE(recognize_unitization(fig1(), ElementSubset(6, {0})).value);
}

TEST(States, Counts) {
  EXPECT_EQ(two_valued_states(boolean(2)).size(), 2u);
  EXPECT_EQ(two_valued_states(chain(2)).size(), 0u);
  EXPECT_EQ(two_valued_states(chain(1)).size(), 1u);
  EXPECT_THROW(two_valued_states(fig1()), PreconditionError);
}

TEST(States, IndicatorOfEta) {
  const UnitizationAlgebra ua = gamma_unitize(fig1(), kFig1Swap);
  const ElementSubset p = ua.lift(ElementSubset::full(6));
  bool found = false;
  for (const auto& s : two_valued_states(ua.algebra)) {
    if (s.kernel != p) continue;
    found = true;
    for (Elem x = 0; x < 12; ++x) EXPECT_EQ(s.value[x], ua.in_base(x) ? 0 : 1);
  }
  EXPECT_TRUE(found);
}

TEST(Extend, Lift) {
  const UnitizationAlgebra ua = gamma_unitize(fig1(), identity_permutation(6));
  EXPECT_EQ(extend_congruence(ua, Partition::identity(6)), Partition::identity(12));
  const Partition star = extend_congruence(ua, sim_from_ideal(fig1(), ElementSubset(6, {0, R})));
  EXPECT_EQ(star.block_count(), 6u);
  EXPECT_TRUE(star.related(ua.eta(P), ua.eta(S)));
  EXPECT_FALSE(star.related(P, ua.eta(P)));

  const UnitizationAlgebra z = gamma_unitize(chain(0), {0});
  EXPECT_EQ(extend_congruence(z, Partition::single_block(1)).block_count(), 2u);
}

TEST(Suite, Fig1ZeroR) {
  // Expected by design to give GCR = false; r+p = s = 0+s makes it true.
  const UnitizationAlgebra ua = gamma_unitize(fig1(), identity_permutation(6));
  const SuiteReport r = congruence_suite(ua, ElementSubset(6, {0, R}));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.star_c3 && r.riesz_gamma_ideal && r.gamma_congruence && r.star_congruence);
  EXPECT_EQ(r.gcr, true);
  EXPECT_EQ(r.star_riesz, true);
  EXPECT_EQ(r.riesz_in_unit, true);
  EXPECT_EQ(r.sim_matches_star, true);
}

TEST(Suite, ChainAndZero) {
  const Gpea c = chain(2);
  const UnitizationAlgebra ua = gamma_unitize(c, {0, 1, 2});
  for (const auto& ideal : normal_riesz_ideals(c, Permutation{0, 1, 2})) {
    const SuiteReport r = congruence_suite(ua, ideal);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.gcr, true);
    EXPECT_EQ(r.riesz_in_unit, true);
  }
  const UnitizationAlgebra uf = gamma_unitize(fig1(), identity_permutation(6));
  const SuiteReport z = congruence_suite(uf, ElementSubset(6, {0}));
  EXPECT_TRUE(z.ok() && z.star_c3 && z.riesz_gamma_ideal && z.gamma_congruence && z.star_congruence);
  EXPECT_THROW(congruence_suite(uf, ElementSubset(6, {0, S})), PreconditionError);
}

TEST(Suite, NonGcrWitness) {
  // Some small instance must separate the four conditions from GCR.
  std::size_t witnesses = 0;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const Gpea& g : enumerate_gpeas(n))
      for (const auto& gamma : enumerate_unitizing(g)) {
        const UnitizationAlgebra ua = gamma_unitize(g, gamma);
        for (const auto& ideal : enumerate_ideals(g, IdealKind::kNormal)) {
          const IdealFlags f = classify_subset(g, ideal, gamma);
          if (!f.r1 || !f.gamma_closed.value_or(false)) continue;
          const SuiteReport r = congruence_suite(ua, ideal);
          EXPECT_TRUE(r.ok());
          if (r.riesz_gamma_ideal && r.gcr == false) ++witnesses;
        }
      }
  EXPECT_GT(witnesses, 0u);
}

TEST(Extension, QuotientUnitization) {
  const Gpea b = boolean(2);
  const UnitizationAlgebra ua = gamma_unitize(b, identity_permutation(4));
  const Partition rel = sim_from_ideal(b, ElementSubset(4, {0, 2}));
  EXPECT_TRUE(extension_theorem(ua, rel));
  EXPECT_TRUE(quotient_unitization(ua, rel));
  EXPECT_TRUE(quotient_unitization(ua, Partition::identity(4)));
  EXPECT_THROW(quotient_unitization(ua, Partition::from_blocks(4, {{0, 3}, {1}, {2}})), PreconditionError);
}

TEST(BaseIdeal, NormalRieszIffUpward) {
  for (const auto& name : catalog_names()) {
    const Gpea g = builtin(name);
    for (const auto& gamma : enumerate_unitizing(g)) {
      const UnitizationAlgebra ua = gamma_unitize(g, gamma);
      EXPECT_TRUE(p_normal_riesz_check(ua)) << name;
      EXPECT_TRUE(restriction_check(ua)) << name;
    }
  }
}

TEST(Smallest, ReadingsOnSmallChains) {
  // U(C1) is boolean(2): {0,1} and {0,η1} are both minimal.
  const SmallestIdealReport c1 = smallest_ideal_check(gamma_unitize(chain(1), {0, 1}));
  EXPECT_FALSE(c1.unit_side);
  EXPECT_TRUE(c1.base_nontrivial);
  EXPECT_FALSE(c1.holds());

  const SmallestIdealReport z = smallest_ideal_check(gamma_unitize(chain(0), {0}));
  EXPECT_TRUE(z.unit_side);
  EXPECT_FALSE(z.base_nontrivial);
  EXPECT_TRUE(z.base_literal);
  EXPECT_TRUE(z.readings_diverge());
}
