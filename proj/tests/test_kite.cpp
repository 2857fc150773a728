#include <gtest/gtest.h>

#include <cstdlib>

#include "gpea/catalog.hpp"
#include "gpea/kite.hpp"
#include "gpea/unitization.hpp"

using namespace gpea;

TEST(Codec, RoundTrip) {
  const TupleCodec c(3, 3);
  EXPECT_EQ(c.count(), 27u);
  EXPECT_EQ(c.decode(5), (std::vector<Elem>{0, 1, 2}));
  for (Elem t = 0; t < 27; ++t) EXPECT_EQ(c.encode(c.decode(t)), t);
}

TEST(Power, Small) {
  EXPECT_EQ(power_gpea(chain(0), 3).size(), 1u);
  EXPECT_EQ(power_gpea(chain(1), 2), boolean(2));
  const Gpea p = power_gpea(chain(2), 3);
  EXPECT_EQ(p.size(), 27u);
  const StructureFlags f = classify(p);
  EXPECT_TRUE(f.commutative);
  EXPECT_FALSE(f.total);
  EXPECT_THROW(power_gpea(chain(2), 8), BudgetExceeded);
  EXPECT_THROW(power_gpea(chain(2), 3, 26), BudgetExceeded);
  EXPECT_NO_THROW(power_gpea(chain(2), 3, 27));
}

TEST(Power, NamesFollowBase) {
  const Gpea p = power_gpea(fig1(), 2);
  EXPECT_EQ(p.name(1 * 6 + 3), "(p,r)");
  EXPECT_EQ(power_gpea(chain(1), 2).name(3), "3");
}

TEST(Spec, Validation) {
  EXPECT_THROW(check_spec({chain(1), 2, {0, 0}, {0, 1}}), PreconditionError);
  EXPECT_THROW(check_spec({chain(1), 2, {0, 1}, {0, 1, 2}}), PreconditionError);
  EXPECT_THROW(check_spec({chain(1), 0, {}, {}}), PreconditionError);
}

TEST(KiteConditions, EqualMapsOnWeaklyCommutativeBase) {
  for (const auto& base : {chain(2), fig1()}) {
    const KcVerdict kc = check_kc({base, 2, {1, 0}, {1, 0}});
    EXPECT_TRUE(kc.kci);
    EXPECT_TRUE(kc.kcii);
  }
  EXPECT_TRUE(check_kc({chain(2), 1, {0}, {0}}).kci);
}

TEST(KiteConditions, DistinctMapsFailOnNontrivialBase) {
  const KcVerdict kc = check_kc({chain(2), 2, {0, 1}, {1, 0}});
  EXPECT_FALSE(kc.kci);
  EXPECT_FALSE(kc.kcii);
  EXPECT_EQ(kc.kci.detail, "KCI fails at a=(0,1) b=(0,2) i=1");
  EXPECT_FALSE(check_kc({chain(2), 3, {0, 1, 2}, {1, 2, 0}}).kci);
  // the trivial base satisfies everything
  EXPECT_TRUE(check_kc({chain(0), 3, {0, 1, 2}, {1, 2, 0}}).kci);
}

TEST(KiteConditions, NoncommutativeBaseFailsEvenWithEqualMaps) {
  RawTable t(5);
  t.set(2, 4, 1);
  t.set(3, 2, 1);
  t.set(4, 3, 1);
  const Gpea g = Gpea::from(t);
  EXPECT_FALSE(check_kc({g, 1, {0}, {0}}).kci);
  EXPECT_FALSE(check_kc({g, 2, {1, 0}, {1, 0}}).kci);
}

TEST(KiteGamma, Formula) {
  EXPECT_EQ(kite_gamma({chain(2), 2, {1, 0}, {1, 0}}), identity_permutation(9));

  // γ(a)_i = a_{ρλ⁻¹ i}; with λ = id, ρ = (0 1 2): γ(a0,a1,a2) = (a1,a2,a0)
  const KiteSpec spec{chain(2), 3, {0, 1, 2}, {1, 2, 0}};
  const Permutation g = kite_gamma(spec);
  const TupleCodec c(3, 3);
  EXPECT_EQ(c.decode(g[c.encode(std::vector<Elem>{0, 1, 2})]), (std::vector<Elem>{1, 2, 0}));
  EXPECT_FALSE(is_unitizing(power_gpea(chain(2), 3), g));

  const KiteSpec swap{fig1(), 2, {0, 1}, {1, 0}};
  EXPECT_EQ(static_cast<bool>(check_kc(swap).kci), is_unitizing(power_gpea(fig1(), 2), kite_gamma(swap)));
}

TEST(Build, SmallKites) {
  const Gpea k1 = build_kite({chain(1), 1, {0}, {0}});
  EXPECT_EQ(k1.size(), 4u);
  EXPECT_FALSE(find_morphisms(k1, boolean(2), MorphismMode::kIso, {}, 1).empty());

  const Gpea k0 = build_kite({chain(0), 3, {1, 2, 0}, {0, 2, 1}});
  EXPECT_EQ(k0.size(), 2u);
  EXPECT_EQ(k0.top(), 1);

  const Gpea k = build_kite({chain(2), 3, {1, 0, 2}, {1, 0, 2}});
  EXPECT_EQ(k.size(), 54u);
  EXPECT_EQ(k.top(), 27);
}

TEST(Build, Refusals) {
  EXPECT_THROW(build_kite({chain(2), 3, {0, 1, 2}, {1, 2, 0}}), PreconditionError);
  EXPECT_THROW(build_kite({chain(2), 7, identity_permutation(7), identity_permutation(7)}, 4096), BudgetExceeded);
}

TEST(Build, IdentityKiteIsUnitizationOfPower) {
  const KiteSpec spec{boolean(2), 2, {0, 1}, {0, 1}};
  const UnitizationAlgebra ua = gamma_unitize(power_gpea(spec.base, 2), identity_permutation(16));
  EXPECT_EQ(build_kite(spec), ua.algebra);
}

TEST(Iso, Reports) {
  const KiteIsoReport id = kite_iso({chain(2), 2, {0, 1}, {0, 1}});
  EXPECT_TRUE(id.ok());
  EXPECT_EQ(id.phi, identity_permutation(18));
  EXPECT_TRUE(id.exhaustive_uniqueness);

  // φ(ηa) = η(a_{λi}): with λ = swap, η(a0,a1) goes to η(a1,a0)
  const KiteIsoReport sw = kite_iso({chain(2), 2, {1, 0}, {1, 0}});
  EXPECT_TRUE(sw.ok()) << sw.failures.front();
  const TupleCodec c(3, 2);
  const Elem src = 9 + c.encode(std::vector<Elem>{1, 2});
  EXPECT_EQ(sw.phi[src], 9 + c.encode(std::vector<Elem>{2, 1}));

  const KiteIsoReport big = kite_iso({chain(2), 3, {1, 0, 2}, {1, 0, 2}});
  EXPECT_TRUE(big.ok());
  EXPECT_TRUE(big.exhaustive_uniqueness);
  EXPECT_THROW(kite_iso({chain(2), 2, {0, 1}, {1, 0}}), PreconditionError);
}

TEST(Connectivity, Orbits) {
  EXPECT_EQ(index_connectivity({chain(1), 3, {1, 2, 0}, {1, 2, 0}}).components, Partition::identity(3));
  EXPECT_EQ(index_connectivity({chain(1), 3, {0, 1, 2}, {1, 2, 0}}).components, Partition::single_block(3));
  const ConnectivityReport r = index_connectivity({chain(1), 4, {0, 1, 2, 3}, {1, 0, 3, 2}});
  EXPECT_EQ(r.components, Partition::from_blocks(4, {{0, 1}, {2, 3}}));
  EXPECT_TRUE(r.ok()) << r.failures.front();
  EXPECT_FALSE(r.kite_rdp1);  // no kite without KCI
}

TEST(Connectivity, KiteFlags) {
  const ConnectivityReport r = index_connectivity({chain(1), 2, {0, 1}, {0, 1}});
  EXPECT_TRUE(r.ok());
  ASSERT_TRUE(r.kite_rdp1);
}

TEST(Budget, Environment) {
  ::setenv("GPEA_BUDGET", "100", 1);
  EXPECT_EQ(default_budget(), 100u);
  ::setenv("GPEA_BUDGET", "lots", 1);
  EXPECT_THROW(default_budget(), PreconditionError);
  ::unsetenv("GPEA_BUDGET");
  EXPECT_EQ(default_budget(), 4096u);
}
