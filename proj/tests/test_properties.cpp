#include <gtest/gtest.h>

#include <random>

#include "gpea/catalog.hpp"
#include "gpea/ideals.hpp"
#include "gpea/kite.hpp"
#include "gpea/unitization.hpp"

using namespace gpea;

namespace {

std::vector<Gpea> small_instances() {
  std::vector<Gpea> out;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& g : enumerate_gpeas(n)) out.push_back(std::move(g));
  for (const auto& name : catalog_names()) out.push_back(builtin(name));
  return out;
}

// Straight transcription of the five axioms, no shortcuts.
bool naive_gpea(const RawTable& t) {
  const auto n = static_cast<Elem>(t.size());
  auto op = [&](Elem a, Elem b) { return a == kUndefined || b == kUndefined ? kUndefined : t.at(a, b); };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem s = op(a, b);
      if (s == kUndefined) continue;
      bool conj = false;
      for (Elem x = 0; x < n && !conj; ++x)
        for (Elem y = 0; y < n && !conj; ++y) conj = op(x, a) == s && op(b, y) == s;
      if (!conj) return false;
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (a == b) continue;
        if (op(a, c) != kUndefined && op(a, c) == op(b, c)) return false;
        if (op(c, a) != kUndefined && op(c, a) == op(c, b)) return false;
      }
  for (Elem a = 0; a < n; ++a)
    if (op(a, 0) != a || op(0, a) != a) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (op(a, b) == 0 && (a != 0 || b != 0)) return false;
  return true;
}

}  // namespace

TEST(Property, ValidatorAgreesWithNaiveAxioms) {
  std::mt19937 rng(20240611);
  std::size_t accepted = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    RawTable t(n);
    std::uniform_int_distribution<int> pick(-1, static_cast<int>(n) - 1);
    for (Elem a = 1; a < static_cast<Elem>(n); ++a)
      for (Elem b = 1; b < static_cast<Elem>(n); ++b)
        t.set(a, b, rng() % 2 ? kUndefined : static_cast<Elem>(pick(rng)));
    const bool mine = validate_axioms(t).ok();
    ASSERT_EQ(mine, naive_gpea(t)) << serialize(t);
    accepted += mine;
  }
  EXPECT_GT(accepted, 100u);
}

TEST(Property, SubtractionsInvertSums) {
  for (const Gpea& g : small_instances()) {
    const auto n = static_cast<Elem>(g.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!g.leq(a, b)) continue;
        EXPECT_EQ(g.op(a, g.left_sub(a, b)), b);
        EXPECT_EQ(g.op(g.right_sub(b, a), a), b);
      }
    EXPECT_NO_THROW(induced_order(g));
  }
}

TEST(Property, UnitizationClauses) {
  for (const Gpea& g : small_instances())
    for (const auto& gamma : enumerate_unitizing(g)) {
      const UnitizationAlgebra ua = gamma_unitize(g, gamma);
      const auto n = static_cast<Elem>(g.size());
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          EXPECT_EQ(ua.algebra.op(a, b), g.op(a, b));
          EXPECT_EQ(ua.algebra.op(ua.eta(a), ua.eta(b)), kUndefined);
        }
      EXPECT_FALSE(ua.in_base(ua.algebra.top()));
    }
}

TEST(Property, NormalIdealsSatisfyLemmas) {
  for (const Gpea& g : small_instances())
    for (const auto& s : enumerate_ideals(g, IdealKind::kNormal)) EXPECT_TRUE(normal_ideal_lemmas(g, s));
}

TEST(Property, RieszIdealsGiveRieszCongruences) {
  for (const Gpea& g : small_instances())
    for (const auto& s : normal_riesz_ideals(g)) {
      const Partition rel = sim_from_ideal(g, s);
      // without an upper bound the full ideal already breaks CR
      if (classify(g).upward_directed) EXPECT_TRUE(classify_relation(g, rel).riesz_congruence());
      EXPECT_TRUE(riesz_congruence_roundtrip(g, rel));
    }
}

TEST(Property, QuotientsOfPeasArePeas) {
  for (const Gpea& g : small_instances()) {
    if (!g.has_unit()) continue;
    for (const auto& rel : enumerate_partitions(g.size())) {
      const CongruenceFlags f = classify_relation(g, rel);
      if (!f.congruence() || !f.c4 || !f.c5) continue;
      EXPECT_TRUE(quotient(g, rel).has_unit());
    }
  }
}

TEST(Property, SerializationRoundTrip) {
  for (const Gpea& g : small_instances()) EXPECT_EQ(load(serialize(g)), g);
}

// On a nontrivial finite base, KCI holds exactly when λ = ρ and the base is
// weakly commutative.
TEST(Property, KciNeedsEqualMaps) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const Gpea& g : enumerate_gpeas(n)) {
      const bool wc = classify(g).weakly_commutative;
      for (std::size_t k = 1; k <= 2; ++k) {
        Permutation lambda = identity_permutation(k);
        do {
          Permutation rho = identity_permutation(k);
          do {
            const KiteSpec spec{g, k, lambda, rho};
            EXPECT_EQ(static_cast<bool>(check_kc(spec).kci), wc && lambda == rho);
            EXPECT_NO_THROW(kite_gamma(spec));
          } while (std::next_permutation(rho.begin(), rho.end()));
        } while (std::next_permutation(lambda.begin(), lambda.end()));
      }
    }
}

TEST(Property, AutomorphismsAreAutomorphisms) {
  for (const Gpea& g : small_instances())
    for (const auto& p : find_morphisms(g, g, MorphismMode::kAuto)) {
      EXPECT_TRUE(is_automorphism(g, p));
      EXPECT_TRUE(is_automorphism(g, inverse(p)));
    }
}
