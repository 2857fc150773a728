#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpea {

/// Index of an element of a finite carrier. Element 0 is always the zero.
using Elem = std::int32_t;

inline constexpr Elem kUndefined = -1;

/// A bijection (or, for morphisms, any map) on element indices, stored as the
/// image list `perm[i]`.
using Permutation = std::vector<Elem>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class GpeaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated domain.
class PreconditionError : public GpeaError {
 public:
  using GpeaError::GpeaError;
};

/// A property that must hold by construction (or by a theorem) was observed
/// to fail. Surfaced loudly; the verification harness counts these.
class ContractViolation : public GpeaError {
 public:
  using GpeaError::GpeaError;
};

class BudgetExceeded : public GpeaError {
 public:
  using GpeaError::GpeaError;
};

/// Pass/fail with a human-readable witness on failure.
struct Verdict {
  bool ok = true;
  std::string detail;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

/// A partial binary operation table that has not been checked against the
/// axioms yet.
class RawTable {
 public:
  /// With `neutral_zero` the zero row and column are filled in (x+0 = 0+x = x).
  explicit RawTable(std::size_t size, bool neutral_zero = true);

  std::size_t size() const { return size_; }

  Elem at(Elem a, Elem b) const { return op_[index(a, b)]; }
  bool defined(Elem a, Elem b) const { return at(a, b) != kUndefined; }

  /// Throws std::out_of_range for indices outside the carrier.
  void set(Elem a, Elem b, Elem value);
  void clear(Elem a, Elem b) { set(a, b, kUndefined); }

  const std::string& name(Elem a) const { return names_.at(static_cast<std::size_t>(a)); }
  void set_name(Elem a, std::string token);
  bool has_custom_name(Elem a) const;

  /// Row-major flattened entries, kUndefined for missing pairs.
  const std::vector<Elem>& entries() const { return op_; }

  bool same_operation(const RawTable& other) const {
    return size_ == other.size_ && op_ == other.op_;
  }
  bool operator==(const RawTable& other) const = default;

 private:
  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b);
  }
  void check_range(Elem a) const;

  std::size_t size_;
  std::vector<Elem> op_;
  std::vector<std::string> names_;
};

inline constexpr int kAxiomCount = 5;

/// Verdict per axiom GPEA1..GPEA5; `witness[k]` is set iff axiom k+1 failed.
struct AxiomReport {
  std::array<bool, kAxiomCount> pass{true, true, true, true, true};
  std::array<std::optional<std::array<Elem, 3>>, kAxiomCount> witness{};

  bool ok() const;
  std::string describe() const;
};

/// Checks associativity (as a full biconditional on existence), conjugation,
/// cancellation, neutrality and positivity over every triple. Witnesses are
/// the lexicographically smallest failing triples; for cancellation the two
/// cancelled elements are reported larger-first, since the condition is
/// symmetric in them.
AxiomReport validate_axioms(const RawTable& table);

class AxiomError : public GpeaError {
 public:
  explicit AxiomError(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// A table that passed validate_axioms, together with its induced order and
/// both subtractions. Immutable.
class Gpea {
 public:
  /// Throws AxiomError when the table is not a GPEA.
  static Gpea from(RawTable table);

  std::size_t size() const { return table_.size(); }
  Elem op(Elem a, Elem b) const { return table_.at(a, b); }
  bool defined(Elem a, Elem b) const { return table_.defined(a, b); }
  bool leq(Elem a, Elem b) const { return leq_[idx(a, b)] != 0; }

  /// a⟋b, the unique c with a⊕c = b; kUndefined unless a ≤ b.
  Elem left_sub(Elem a, Elem b) const { return left_sub_[idx(a, b)]; }
  /// b⟍a, the unique d with d⊕a = b; kUndefined unless a ≤ b.
  Elem right_sub(Elem b, Elem a) const { return right_sub_[idx(a, b)]; }

  const RawTable& table() const { return table_; }
  const std::string& name(Elem a) const { return table_.name(a); }
  Elem top() const { return top_; }
  bool has_unit() const { return top_ != kUndefined; }

  /// Elements in index order.
  std::vector<Elem> elements() const;

  bool operator==(const Gpea& other) const { return table_.same_operation(other.table_); }

 private:
  explicit Gpea(RawTable table);
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b);
  }

  RawTable table_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> left_sub_;
  std::vector<Elem> right_sub_;
  Elem top_ = kUndefined;
};

// ---------------------------------------------------------------------------
// Order, subtraction, structure flags
// ---------------------------------------------------------------------------

struct OrderRelation {
  std::size_t size = 0;
  std::vector<std::uint8_t> matrix;

  bool leq(Elem a, Elem b) const {
    return matrix[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)] != 0;
  }
  std::vector<std::pair<Elem, Elem>> pairs() const;
};

/// a ≤ b iff a⊕c = b for some c. Throws ContractViolation if this disagrees
/// with the left-handed reading (d⊕a = b for some d) or is not a partial
/// order with minimum 0.
OrderRelation induced_order(const Gpea& g);

struct Subtraction {
  Elem left;   // a⟋b
  Elem right;  // b⟍a
};

/// Both subtractions of a from b; nullopt when a ≰ b.
std::optional<Subtraction> subtract(const Gpea& g, Elem a, Elem b);

struct StructureFlags {
  bool total = false;
  bool weakly_commutative = false;
  bool commutative = false;
  bool has_unit = false;
  bool upward_directed = false;
  bool downward_directed = false;
};

StructureFlags classify(const Gpea& g);

bool is_upward_directed(const Gpea& g);

// ---------------------------------------------------------------------------
// PEA supplements
// ---------------------------------------------------------------------------

struct PeaView {
  Elem unit = 0;
  std::vector<Elem> right_supp;  // a ↦ a~, a⊕a~ = 1
  std::vector<Elem> left_supp;   // a ↦ a⁻, a⁻⊕a = 1

  Elem tilde(Elem a) const { return right_supp[static_cast<std::size_t>(a)]; }
  Elem minus(Elem a) const { return left_supp[static_cast<std::size_t>(a)]; }
};

/// Throws PreconditionError when g has no unit, ContractViolation when one of
/// the basic PEA identities fails.
PeaView pea_view(const Gpea& g);

/// Pointwise check of the basic supplement identities (double supplements,
/// order reversal, existence via supplements, the three-element exchange
/// laws) and the subtraction formulas expressed through supplements.
Verdict check_pea_identities(const Gpea& g, const PeaView& view);

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

enum class MorphismMode {
  kIso,          // bijective, existence transfers both ways
  kAuto,         // kIso with p == q
  kPeaIso,       // kIso and φ1 = 1
  kMorphism,     // any GPEA-morphism
  kPeaMorphism,  // GPEA-morphism with φ1 = 1
};

/// All maps p → q of the requested kind, in lexicographic order of their image
/// tuples. `prescribed[x]`, when not kUndefined, pins the image of x.
std::vector<Permutation> find_morphisms(const Gpea& p, const Gpea& q, MorphismMode mode,
                                        std::span<const Elem> prescribed = {},
                                        std::size_t limit = std::numeric_limits<std::size_t>::max());

bool is_morphism(const Gpea& p, const Gpea& q, std::span<const Elem> map);
bool is_isomorphism(const Gpea& p, const Gpea& q, std::span<const Elem> map);
bool is_automorphism(const Gpea& g, std::span<const Elem> map);

Permutation identity_permutation(std::size_t n);
Permutation compose(std::span<const Elem> outer, std::span<const Elem> inner);
Permutation inverse(std::span<const Elem> perm);
bool is_bijection(std::span<const Elem> perm, std::size_t n);

std::string format_elements(std::span<const Elem> elems);

}  // namespace gpea
