#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpea/core.hpp"
#include "gpea/ideals.hpp"

namespace gpea {

/// Default carrier budget, overridable through GPEA_BUDGET.
std::size_t default_budget();

/// Tuples are numbered Σ a_i · n^(k-1-i): coordinate 0 is most significant.
class TupleCodec {
 public:
  TupleCodec(std::size_t base_size, std::size_t index_size);
  std::size_t count() const { return count_; }
  std::size_t index_size() const { return k_; }
  std::vector<Elem> decode(Elem t) const;
  Elem encode(std::span<const Elem> coords) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t count_;
};

/// Coordinatewise power P^k. Throws BudgetExceeded when |P|^k exceeds budget.
Gpea power_gpea(const Gpea& p, std::size_t k, std::size_t budget = default_budget());

struct KiteSpec {
  Gpea base;
  std::size_t index_size;
  Permutation lambda;
  Permutation rho;
};

/// Throws PreconditionError unless λ and ρ are bijections on the index set.
void check_spec(const KiteSpec& spec);

struct KcVerdict {
  Verdict kci;
  Verdict kcii;
};

/// (KCI) a_{ρi}⊕b_i exists iff b_i⊕a_{λi} exists; (KCII) the same with λ and
/// ρ exchanged. Checked over all tuple pairs and indices.
KcVerdict check_kc(const KiteSpec& spec, std::size_t budget = default_budget());

/// γ(a)_i = a_{ρλ⁻¹i} on P^I, checked to be unitizing exactly when (KCI)
/// holds (ContractViolation otherwise).
Permutation kite_gamma(const KiteSpec& spec, std::size_t budget = default_budget());

/// Carrier P^I followed by (ηP)^I, η-tuples offset by |P^I|. Throws
/// PreconditionError when (KCI) fails and ContractViolation when the table
/// fails the axioms.
Gpea build_kite(const KiteSpec& spec, std::size_t budget = default_budget());

struct KiteIsoReport {
  Permutation phi;           // from the γ-unitization of P^I onto the kite
  bool exhaustive_uniqueness = false;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Verifies φ(ηa) = η(a_{λi}), its uniqueness, both negation formulas and
/// a⁻⁻ = γa on the kite. Throws PreconditionError when (KCI) fails.
KiteIsoReport kite_iso(const KiteSpec& spec, std::size_t budget = default_budget());

struct ConnectivityReport {
  Partition components;
  std::optional<bool> kite_rdp1;
  std::optional<bool> kite_smallest;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Orbits of ρλ⁻¹ on I; for disconnected components checks that the tuples
/// supported on each are normal γ-ideals meeting in {0}, and, when the kite
/// exists and has RDP1, that a smallest nontrivial normal Riesz ideal forces
/// I to be connected.
ConnectivityReport index_connectivity(const KiteSpec& spec, std::size_t budget = default_budget());

}  // namespace gpea
