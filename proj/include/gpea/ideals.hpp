#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gpea/core.hpp"

namespace gpea {

/// A subset of a finite carrier, stored as a membership mask.
class ElementSubset {
 public:
  ElementSubset() = default;
  explicit ElementSubset(std::size_t universe) : mask_(universe, 0) {}
  ElementSubset(std::size_t universe, std::initializer_list<Elem> members);
  static ElementSubset from_members(std::size_t universe, const std::vector<Elem>& members);
  static ElementSubset full(std::size_t universe);

  std::size_t universe() const { return mask_.size(); }
  bool contains(Elem a) const { return mask_[static_cast<std::size_t>(a)] != 0; }
  void insert(Elem a) { mask_[static_cast<std::size_t>(a)] = 1; }
  void erase(Elem a) { mask_[static_cast<std::size_t>(a)] = 0; }
  std::size_t count() const;
  std::vector<Elem> members() const;
  bool subset_of(const ElementSubset& other) const;
  ElementSubset intersect(const ElementSubset& other) const;
  bool is_zero_only() const { return count() == 1 && contains(0); }

  std::string to_string() const;

  /// Lexicographic on the membership mask read from element 0 upwards.
  auto operator<=>(const ElementSubset& other) const = default;

 private:
  std::vector<char> mask_;
};

struct IdealFlags {
  bool order_ideal = false;
  bool ideal = false;
  bool normal = false;
  bool sub_gpea = false;
  bool r1 = false;
  bool riesz = false;
  std::optional<bool> gamma_closed;  // only when an automorphism is supplied
};

/// Classifies a subset against every ideal notion. Throws PreconditionError
/// when `gamma` is given but is not an automorphism.
IdealFlags classify_subset(const Gpea& g, const ElementSubset& s,
                           const std::optional<Permutation>& gamma = std::nullopt);

bool is_ideal(const Gpea& g, const ElementSubset& s);
bool is_normal_ideal(const Gpea& g, const ElementSubset& s);
bool is_gamma_closed(const ElementSubset& s, const Permutation& gamma);

/// Checks, for a normal ideal, that membership transfers along subtraction of
/// a summand and, in a PEA, along double supplements and between the two
/// supplements. Throws PreconditionError when `s` is not normal.
Verdict normal_ideal_lemmas(const Gpea& g, const ElementSubset& s);

enum class IdealKind { kIdeal, kNormal };

/// Smallest ideal (or normal ideal) containing `seed` and 0.
ElementSubset ideal_closure(const Gpea& g, const ElementSubset& seed, IdealKind kind);

/// All ideals (or normal ideals), sorted by membership mask.
std::vector<ElementSubset> enumerate_ideals(const Gpea& g, IdealKind kind);

/// All normal Riesz ideals, optionally restricted to γ-closed ones.
std::vector<ElementSubset> normal_riesz_ideals(const Gpea& g,
                                               const std::optional<Permutation>& gamma = std::nullopt);

/// Among the normal Riesz (γ-)ideals different from {0}, the one contained in
/// all others; nullopt when the family is empty or has no least member.
std::optional<ElementSubset> smallest_normal_riesz_ideal(
    const Gpea& g, const std::optional<Permutation>& gamma = std::nullopt,
    bool exclude_improper = false);

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

/// An equivalence relation given by blocks. Block ids are canonical: numbered
/// by first occurrence scanning elements upward, so element 0 is in block 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> block_of);
  static Partition identity(std::size_t n);
  static Partition single_block(std::size_t n);
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Elem>>& blocks);

  std::size_t size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  int block(Elem a) const { return block_of_[static_cast<std::size_t>(a)]; }
  bool related(Elem a, Elem b) const { return block(a) == block(b); }
  const std::vector<std::vector<Elem>>& blocks() const { return blocks_; }
  const std::vector<int>& block_of() const { return block_of_; }
  std::string to_string() const;

  bool operator==(const Partition& other) const { return block_of_ == other.block_of_; }

 private:
  std::vector<int> block_of_;
  std::vector<std::vector<Elem>> blocks_;
};

/// All partitions of an n-element carrier (restricted growth strings).
std::vector<Partition> enumerate_partitions(std::size_t n);

/// The raw relation a ∼_I b does not turn out to be an equivalence.
class NotEquivalence : public GpeaError {
 public:
  using GpeaError::GpeaError;
};

/// a ∼ b iff a⟍x = b⟍y for some x, y ∈ I below a, b. Throws PreconditionError
/// when `ideal` is not an ideal and NotEquivalence when the relation is not
/// transitive. For a normal ideal the left-handed reading is checked to agree
/// (ContractViolation otherwise).
Partition sim_from_ideal(const Gpea& g, const ElementSubset& ideal);

struct CongruenceFlags {
  bool c1 = true;
  bool c2 = false;
  bool c3 = false;
  bool c4 = false;
  bool c5 = false;
  std::optional<bool> c4prime;  // only on algebras with a unit
  bool c5prime = false;
  bool cr = false;
  std::optional<bool> gcr;        // only with an ideal
  std::optional<bool> gcr_right;  // the a⊕k = b⊕ℓ reading of the same condition
  std::optional<bool> gamma_congruence;

  bool weak_congruence() const { return c1 && c2; }
  bool congruence() const { return c1 && c2 && c3; }
  /// Congruence satisfying C4, C5′ and CR.
  bool riesz_congruence() const { return congruence() && c4 && c5prime && cr; }
  std::string describe() const;
};

CongruenceFlags classify_relation(const Gpea& g, const Partition& rel,
                                  const std::optional<ElementSubset>& ideal_for_gcr = std::nullopt,
                                  const std::optional<Permutation>& gamma = std::nullopt);

bool satisfies_c2(const Gpea& g, const Partition& rel);
bool satisfies_c3(const Gpea& g, const Partition& rel);
bool satisfies_c4(const Gpea& g, const Partition& rel);
bool satisfies_c5(const Gpea& g, const Partition& rel);
bool satisfies_c5prime(const Gpea& g, const Partition& rel);
bool is_gamma_congruence(const Partition& rel, const Permutation& gamma);

/// Block table [a]⊕[b] := [a1⊕b1] for some representatives. Requires C2.
RawTable quotient_table(const Gpea& g, const Partition& rel);

/// Quotient by a congruence satisfying C4 and C5. Throws PreconditionError
/// otherwise and ContractViolation if the block table fails the axioms.
Gpea quotient(const Gpea& g, const Partition& rel);

/// For a congruence with C4 and C5′: CR holds iff every class is up- and
/// downward directed; for a Riesz congruence the zero class I is a normal
/// Riesz ideal with ∼_I equal to the relation.
Verdict riesz_congruence_roundtrip(const Gpea& g, const Partition& rel);

/// Every class is upward and downward directed inside itself.
bool classes_directed(const Gpea& g, const Partition& rel);

}  // namespace gpea
