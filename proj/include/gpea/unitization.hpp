#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpea/core.hpp"
#include "gpea/ideals.hpp"

namespace gpea {

/// The γ-unitization U = P ∪ ηP. Elements 0..n-1 of `algebra` are P, element
/// n+a is ηa, and the unit is η0 = n.
struct UnitizationAlgebra {
  Gpea base;
  Permutation gamma;
  Gpea algebra;
  Elem unit;

  std::size_t base_size() const { return base.size(); }
  Elem eta(Elem a) const { return a + static_cast<Elem>(base.size()); }
  bool in_base(Elem x) const { return x < static_cast<Elem>(base.size()); }
  /// Embeds a subset of the base into the carrier of U.
  ElementSubset lift(const ElementSubset& s) const;
};

/// γ is a GPEA-automorphism and γa⊕b is defined iff b⊕a is.
bool is_unitizing(const Gpea& g, std::span<const Elem> gamma);

/// Unitizing automorphisms in lexicographic order.
std::vector<Permutation> enumerate_unitizing(const Gpea& g);

/// The raw operation table of U, following the four definedness clauses.
RawTable unitization_table(const Gpea& g, std::span<const Elem> gamma);

/// Builds U and checks it: axioms, unit η0, P a normal maximal proper ideal,
/// a~ = ηa and a⁻⁻ = γa. Throws PreconditionError if γ is not unitizing and
/// ContractViolation if any of the checks fails.
UnitizationAlgebra gamma_unitize(const Gpea& g, const Permutation& gamma);

struct Recognition {
  Gpea base;            // the subalgebra on `members`, relabeled 0..k-1
  std::vector<Elem> members;
  Permutation gamma;    // x ↦ x⁻⁻ restricted to the base, in base labels
  Permutation iso;      // from gamma_unitize(base, gamma).algebra onto u
  bool iso_unique = false;
};

struct RecognitionResult {
  std::optional<Recognition> value;
  std::string diagnostics;
};

/// Decides whether `u` is a binary unitization of the subset `p` and, if so,
/// returns the corresponding automorphism and the isomorphism
/// φx = (x^{-_U})^{~_V} from the γ-unitization onto u.
RecognitionResult recognize_unitization(const Gpea& u, const ElementSubset& p);

struct TwoValuedState {
  std::vector<std::uint8_t> value;
  ElementSubset kernel;
};

/// Every {0,1}-valued state; each kernel is checked to be a normal ideal
/// (ContractViolation otherwise). Throws PreconditionError without a unit.
std::vector<TwoValuedState> two_valued_states(const Gpea& u);

/// ∼* on U: a ∼* b and ηa ∼* ηb iff a ∼ b; P and ηP are never related.
Partition extend_congruence(const UnitizationAlgebra& ua, const Partition& rel);

struct SuiteFailure {
  std::string theorem;
  std::string detail;
};

struct SuiteReport {
  // The four mutually equivalent conditions.
  bool star_c3 = false;           // ∼* satisfies C3 on U
  bool riesz_gamma_ideal = false;  // I is a normal Riesz γ-ideal
  bool gamma_congruence = false;   // ∼_I is a γ-congruence with C4 and C5′
  bool star_congruence = false;    // ∼* is a congruence with C4, C4′, C5′, C5

  std::optional<bool> gcr;
  std::optional<bool> gcr_right;
  std::optional<bool> star_riesz;       // ∼* is a Riesz congruence on U
  std::optional<bool> riesz_in_unit;    // I is a normal Riesz ideal of U
  std::optional<bool> sim_matches_star;  // ∼_{U,I} = ∼_I*

  std::vector<SuiteFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks the relations between I, ∼_I, ∼* and U for a normal R1 γ-ideal I.
/// Throws PreconditionError otherwise.
SuiteReport congruence_suite(const UnitizationAlgebra& ua, const ElementSubset& ideal);

/// For a congruence ∼ on P: ∼* is a congruence on U iff ∼ is a γ-congruence
/// with C4 and C5′.
Verdict extension_theorem(const UnitizationAlgebra& ua, const Partition& rel);

/// U/∼* is the γ̃-unitization of P/∼ via the identity on P/∼. Throws
/// PreconditionError unless ∼ is a γ-congruence with C4 and C5′.
Verdict quotient_unitization(const UnitizationAlgebra& ua, const Partition& rel);

/// P is a normal Riesz ideal of U iff P is upward directed.
Verdict p_normal_riesz_check(const UnitizationAlgebra& ua);

/// Every normal Riesz ideal of U meets P in a γ-closed normal Riesz ideal.
Verdict restriction_check(const UnitizationAlgebra& ua);

struct SmallestIdealReport {
  bool unit_side = false;         // U has a smallest nontrivial normal Riesz ideal
  bool base_nontrivial = false;   // P has a smallest nontrivial normal Riesz γ-ideal
  bool base_literal = false;      // same, {0} allowed
  std::optional<ElementSubset> unit_ideal;
  std::optional<ElementSubset> base_ideal;

  bool holds() const { return unit_side == base_nontrivial; }
  bool readings_diverge() const { return base_nontrivial != base_literal; }
};

SmallestIdealReport smallest_ideal_check(const UnitizationAlgebra& ua);

}  // namespace gpea
