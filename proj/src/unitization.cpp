#include "gpea/unitization.hpp"

#include <algorithm>
#include <sstream>

namespace gpea {

ElementSubset UnitizationAlgebra::lift(const ElementSubset& s) const {
  ElementSubset out(algebra.size());
  for (Elem a : s.members()) out.insert(a);
  return out;
}

bool is_unitizing(const Gpea& g, std::span<const Elem> gamma) {
  if (!is_automorphism(g, gamma)) return false;
  const auto n = static_cast<Elem>(g.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.defined(gamma[a], b) != g.defined(b, a)) return false;
  return true;
}

std::vector<Permutation> enumerate_unitizing(const Gpea& g) {
  std::vector<Permutation> out;
  for (auto& perm : find_morphisms(g, g, MorphismMode::kAuto))
    if (is_unitizing(g, perm)) out.push_back(std::move(perm));
  return out;
}

RawTable unitization_table(const Gpea& g, std::span<const Elem> gamma) {
  const auto n = static_cast<Elem>(g.size());
  RawTable t(g.size() * 2);
  for (Elem a = 0; a < n; ++a) {
    if (g.table().has_custom_name(a)) t.set_name(a, g.name(a));
    t.set_name(a + n, g.name(a) + "~");
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      t.set(a, b, g.op(a, b));
      // a + ηb = η(b⟍a) when a ≤ b
      if (g.leq(a, b)) t.set(a, b + n, g.right_sub(b, a) + n);
      // ηa + b = η(γb⟋a) when γb ≤ a
      if (g.leq(gamma[b], a)) t.set(a + n, b, g.left_sub(gamma[b], a) + n);
    }
  }
  return t;
}

UnitizationAlgebra gamma_unitize(const Gpea& g, const Permutation& gamma) {
  if (gamma.size() != g.size() || !is_unitizing(g, gamma))
    throw PreconditionError("gamma " + format_elements(gamma) + " is not a unitizing automorphism");
  RawTable table = unitization_table(g, gamma);
  AxiomReport report = validate_axioms(table);
  if (!report.ok()) throw ContractViolation("unitization fails the axioms:\n" + report.describe());
  const auto n = static_cast<Elem>(g.size());
  UnitizationAlgebra ua{g, gamma, Gpea::from(std::move(table)), n};
  const Gpea& u = ua.algebra;
  if (u.top() != n) throw ContractViolation("unitization does not have eta(0) as its unit");

  ElementSubset base(u.size());
  for (Elem a = 0; a < n; ++a) base.insert(a);
  if (!is_normal_ideal(u, base)) throw ContractViolation("P is not a normal ideal of its unitization");
  for (Elem x = n; x < 2 * n; ++x) {
    ElementSubset bigger = base;
    bigger.insert(x);
    if (ideal_closure(u, bigger, IdealKind::kIdeal).count() != u.size())
      throw ContractViolation("P is not a maximal proper ideal: adding " + std::to_string(x) +
                              " yields a proper ideal");
  }
  const PeaView v = pea_view(u);
  for (Elem a = 0; a < n; ++a) {
    if (v.tilde(a) != a + n)
      throw ContractViolation("a~ != eta(a) at a=" + std::to_string(a));
    if (v.minus(v.minus(a)) != gamma[a])
      throw ContractViolation("a-- != gamma(a) at a=" + std::to_string(a));
  }
  return ua;
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

RecognitionResult recognize_unitization(const Gpea& u, const ElementSubset& p) {
  RecognitionResult result;
  auto reject = [&](std::string why) {
    result.diagnostics = std::move(why);
    return result;
  };
  if (!u.has_unit()) return reject("no unit: not a PEA");
  if (p.universe() != u.size()) return reject("subset universe does not match carrier");
  if (!p.contains(0)) return reject("(U1) subset does not contain 0");
  if (p.contains(u.top())) return reject("(U2) the unit lies in the subset");
  const auto n = static_cast<Elem>(u.size());
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const Elem s = u.op(x, y);
      if (s == kUndefined) continue;
      if (p.contains(x) && p.contains(y) && !p.contains(s))
        return reject("(U1) " + u.name(x) + "+" + u.name(y) + " leaves the subset");
      if (!p.contains(x) && !p.contains(y))
        return reject("(U3) " + u.name(x) + "+" + u.name(y) + " is defined outside the subset");
    }
  }

  const std::vector<Elem> members = p.members();
  const auto k = static_cast<Elem>(members.size());
  std::vector<Elem> local(u.size(), kUndefined);
  for (Elem i = 0; i < k; ++i) local[members[i]] = i;
  RawTable sub(members.size(), false);
  for (Elem i = 0; i < k; ++i) {
    sub.set_name(i, u.name(members[i]));
    for (Elem j = 0; j < k; ++j)
      if (const Elem s = u.op(members[i], members[j]); s != kUndefined) sub.set(i, j, local[s]);
  }
  if (!validate_axioms(sub).ok()) return reject("(U1) restriction is not a GPEA");
  Gpea base = Gpea::from(std::move(sub));

  const PeaView vu = pea_view(u);
  Permutation gamma(members.size());
  for (Elem i = 0; i < k; ++i) {
    const Elem dd = vu.minus(vu.minus(members[i]));
    if (local[dd] == kUndefined)
      throw ContractViolation("x-- maps " + u.name(members[i]) + " outside the subset");
    gamma[i] = local[dd];
  }
  if (!is_unitizing(base, gamma))
    throw ContractViolation("the automorphism induced by a unitization is not unitizing");

  const UnitizationAlgebra w = gamma_unitize(base, gamma);
  if (w.algebra.size() != u.size())
    throw ContractViolation("unitization has " + std::to_string(u.size()) + " elements, expected " +
                            std::to_string(w.algebra.size()));
  const PeaView vw = pea_view(w.algebra);
  Permutation iso(w.algebra.size());
  for (Elem i = 0; i < k; ++i) {
    iso[i] = members[i];
    // φx = (x^{-_W})^{~_u} for x = ηi
    iso[i + k] = vu.tilde(members[vw.minus(i + k)]);
  }
  if (!is_isomorphism(w.algebra, u, iso) || iso[w.unit] != u.top())
    throw ContractViolation("canonical map onto the unitization is not a PEA-isomorphism");

  Recognition rec{std::move(base), members, std::move(gamma), std::move(iso), true};
  if (u.size() <= 64) {
    std::vector<Elem> pinned(w.algebra.size(), kUndefined);
    for (Elem i = 0; i < k; ++i) pinned[i] = members[i];
    rec.iso_unique = find_morphisms(w.algebra, u, MorphismMode::kPeaMorphism, pinned, 2).size() == 1;
  }
  result.value = std::move(rec);
  result.diagnostics = "recognized";
  return result;
}

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

std::vector<TwoValuedState> two_valued_states(const Gpea& u) {
  if (!u.has_unit()) throw PreconditionError("two-valued states need a unit");
  const auto n = static_cast<Elem>(u.size());
  // Each defined sum a⊕b = c is checked once its largest participant is set.
  std::vector<std::vector<std::array<Elem, 3>>> due(u.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (const Elem c = u.op(a, b); c != kUndefined) due[std::max({a, b, c})].push_back({a, b, c});

  std::vector<TwoValuedState> out;
  std::vector<std::uint8_t> value(u.size(), 0);
  auto rec = [&](auto&& self, Elem x) -> void {
    if (x == n) {
      ElementSubset kernel(u.size());
      for (Elem a = 0; a < n; ++a)
        if (value[a] == 0) kernel.insert(a);
      if (!is_normal_ideal(u, kernel))
        throw ContractViolation("kernel " + kernel.to_string() + " of a state is not a normal ideal");
      out.push_back({value, std::move(kernel)});
      return;
    }
    for (std::uint8_t v = 0; v <= 1; ++v) {
      if (x == 0 && v != 0) continue;
      if (x == u.top() && v != 1) continue;
      value[x] = v;
      bool ok = true;
      for (const auto& [a, b, c] : due[x])
        if (value[a] + value[b] != value[c]) {
          ok = false;
          break;
        }
      if (ok) self(self, x + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Congruences on U
// ---------------------------------------------------------------------------

Partition extend_congruence(const UnitizationAlgebra& ua, const Partition& rel) {
  if (rel.size() != ua.base_size()) throw PreconditionError("relation does not match the base");
  const std::size_t n = ua.base_size();
  const int k = static_cast<int>(rel.block_count());
  std::vector<int> block(2 * n);
  for (std::size_t a = 0; a < n; ++a) {
    block[a] = rel.block(static_cast<Elem>(a));
    block[a + n] = k + rel.block(static_cast<Elem>(a));
  }
  return Partition(std::move(block));
}

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

Verdict lemma_gammacongprops(const UnitizationAlgebra& ua, const Partition& sim, const Partition& star) {
  const PeaView v = pea_view(ua.algebra);
  const auto n = static_cast<Elem>(ua.base_size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const bool ab = sim.related(a, b);
      if (star.related(v.minus(a), v.minus(b)) != ab)
        return Verdict::fail("a- ~* b- iff a ~ b fails at a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
      const Elem bdd = v.minus(v.minus(b));
      const Elem att = v.tilde(v.tilde(a));
      if (bdd >= n || att >= n) return Verdict::fail("double supplement leaves P");
      const bool x = sim.related(a, bdd);
      const bool y = sim.related(att, b);
      const bool z = star.related(v.tilde(a), v.minus(b));
      if (x != y || y != z)
        return Verdict::fail("a ~ b-- iff a~~ ~ b iff a~ ~* b- fails at a=" + std::to_string(a) +
                             " b=" + std::to_string(b));
    }
  return Verdict::pass();
}

}  // namespace

SuiteReport congruence_suite(const UnitizationAlgebra& ua, const ElementSubset& ideal) {
  const Gpea& p = ua.base;
  const Gpea& u = ua.algebra;
  const IdealFlags flags = classify_subset(p, ideal, ua.gamma);
  if (!flags.normal || !flags.r1 || !flags.gamma_closed.value_or(false))
    throw PreconditionError("congruence suite needs a normal R1 gamma-ideal, got " + ideal.to_string());

  SuiteReport r;
  Partition sim;
  try {
    sim = sim_from_ideal(p, ideal);
  } catch (const NotEquivalence& e) {
    r.failures.push_back({"sim_equivalence", std::string("~_I is not an equivalence for a normal R1-ideal: ") + e.what()});
    return r;
  }
  for (Elem a = 0; a < static_cast<Elem>(p.size()); ++a)
    if (sim.related(a, 0) != ideal.contains(a))
      r.failures.push_back({"sim_zero_class", "a ~_I 0 iff a in I fails at " + std::to_string(a)});

  const Partition star = extend_congruence(ua, sim);
  const CongruenceFlags fp = classify_relation(p, sim, ideal, ua.gamma);
  const CongruenceFlags fu = classify_relation(u, star);

  r.star_c3 = fu.c3;
  r.riesz_gamma_ideal = flags.riesz;
  r.gamma_congruence = fp.congruence() && fp.gamma_congruence.value_or(false) && fp.c4 && fp.c5prime;
  r.star_congruence = fu.congruence() && fu.c4 && fu.c4prime.value_or(false) && fu.c5prime && fu.c5;
  if (!(r.star_c3 == r.riesz_gamma_ideal && r.riesz_gamma_ideal == r.gamma_congruence &&
        r.gamma_congruence == r.star_congruence)) {
    r.failures.push_back({"equivalences", "equivalent conditions disagree: (i)=" + flag(r.star_c3) +
                                             " (ii)=" + flag(r.riesz_gamma_ideal) +
                                             " (iii)=" + flag(r.gamma_congruence) +
                                             " (iv)=" + flag(r.star_congruence)});
    return r;
  }
  if (!r.riesz_gamma_ideal) return r;

  if (Verdict v = lemma_gammacongprops(ua, sim, star); !v) r.failures.push_back({"gamma_congruence_lemma", v.detail});

  r.gcr = fp.gcr;
  r.gcr_right = fp.gcr_right;
  if (*r.gcr != *r.gcr_right)
    r.failures.push_back({"gcr_forms", "the two readings of GCR differ: left=" + flag(*r.gcr) +
                                          " right=" + flag(*r.gcr_right)});
  r.star_riesz = fu.riesz_congruence();
  if (*r.star_riesz != *r.gcr)
    r.failures.push_back({"gcr_condition", "~* Riesz congruence=" + flag(*r.star_riesz) + " but GCR=" + flag(*r.gcr)});
  const IdealFlags in_u = classify_subset(u, ua.lift(ideal));
  r.riesz_in_unit = in_u.normal && in_u.riesz;
  if (*r.riesz_in_unit != *r.gcr)
    r.failures.push_back({"gcr_riesz_ideal", "I normal Riesz in U=" + flag(*r.riesz_in_unit) + " but GCR=" + flag(*r.gcr)});
  if (is_upward_directed(p) && !*r.riesz_in_unit)
    r.failures.push_back({"upward_corollary", "upward directed base but I is not a normal Riesz ideal of U"});
  if (*r.riesz_in_unit) {
    try {
      r.sim_matches_star = sim_from_ideal(u, ua.lift(ideal)) == star;
    } catch (const NotEquivalence&) {
      r.sim_matches_star = false;
    }
    if (!*r.sim_matches_star) r.failures.push_back({"sim_extension", "~_{U,I} differs from ~_I*"});
  }
  return r;
}

Verdict extension_theorem(const UnitizationAlgebra& ua, const Partition& rel) {
  const CongruenceFlags fp = classify_relation(ua.base, rel, std::nullopt, ua.gamma);
  if (!fp.congruence()) throw PreconditionError("extension theorem needs a congruence on P");
  const bool rhs = fp.gamma_congruence.value_or(false) && fp.c4 && fp.c5prime;
  const bool lhs = classify_relation(ua.algebra, extend_congruence(ua, rel)).congruence();
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("~* congruence=" + flag(lhs) + " but gamma-congruence with C4, C5'=" + flag(rhs) +
                       " for " + rel.to_string());
}

Verdict quotient_unitization(const UnitizationAlgebra& ua, const Partition& rel) {
  const CongruenceFlags fp = classify_relation(ua.base, rel, std::nullopt, ua.gamma);
  if (!fp.congruence() || !fp.gamma_congruence.value_or(false) || !fp.c4 || !fp.c5prime)
    throw PreconditionError("quotient unitization needs a gamma-congruence with C4 and C5'");
  const Gpea q = quotient(ua.base, rel);
  const std::size_t k = rel.block_count();
  Permutation gt(k);
  for (std::size_t b = 0; b < k; ++b)
    gt[b] = static_cast<Elem>(rel.block(ua.gamma[rel.blocks()[b].front()]));
  if (!is_unitizing(q, gt))
    return Verdict::fail("induced automorphism " + format_elements(gt) + " is not unitizing");
  const UnitizationAlgebra v = gamma_unitize(q, gt);
  std::optional<Gpea> w;
  try {
    w = quotient(ua.algebra, extend_congruence(ua, rel));
  } catch (const GpeaError& e) {
    return Verdict::fail(std::string("U/~* is not available: ") + e.what());
  }
  std::vector<Elem> pinned(v.algebra.size(), kUndefined);
  for (std::size_t b = 0; b < k; ++b) pinned[b] = static_cast<Elem>(b);
  if (w->size() != v.algebra.size() ||
      find_morphisms(v.algebra, *w, MorphismMode::kPeaIso, pinned, 1).empty())
    return Verdict::fail("U/~* is not the induced unitization of P/~ for " + rel.to_string());
  return Verdict::pass();
}

Verdict p_normal_riesz_check(const UnitizationAlgebra& ua) {
  ElementSubset p = ua.lift(ElementSubset::full(ua.base_size()));
  const IdealFlags f = classify_subset(ua.algebra, p);
  const bool lhs = f.normal && f.riesz;
  const bool rhs = is_upward_directed(ua.base);
  if (lhs == rhs) return Verdict::pass();
  return Verdict::fail("P normal Riesz in U=" + flag(lhs) + " but upward directed=" + flag(rhs));
}

Verdict restriction_check(const UnitizationAlgebra& ua) {
  const std::size_t n = ua.base_size();
  for (const auto& j : normal_riesz_ideals(ua.algebra)) {
    ElementSubset jp(n);
    for (std::size_t a = 0; a < n; ++a)
      if (j.contains(static_cast<Elem>(a))) jp.insert(static_cast<Elem>(a));
    const IdealFlags f = classify_subset(ua.base, jp, ua.gamma);
    if (!f.normal || !f.riesz || !f.gamma_closed.value_or(false))
      return Verdict::fail("restriction of " + j.to_string() + " to P is not a gamma-closed normal Riesz ideal");
  }
  return Verdict::pass();
}

SmallestIdealReport smallest_ideal_check(const UnitizationAlgebra& ua) {
  SmallestIdealReport r;
  r.unit_ideal = smallest_normal_riesz_ideal(ua.algebra);
  r.base_ideal = smallest_normal_riesz_ideal(ua.base, ua.gamma);
  r.unit_side = r.unit_ideal.has_value();
  r.base_nontrivial = r.base_ideal.has_value();
  const auto family = normal_riesz_ideals(ua.base, ua.gamma);
  r.base_literal = std::any_of(family.begin(), family.end(), [&](const ElementSubset& c) {
    return std::all_of(family.begin(), family.end(),
                       [&](const ElementSubset& o) { return c.subset_of(o); });
  });
  return r;
}

}  // namespace gpea
