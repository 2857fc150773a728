#pragma once

#include <array>
#include <optional>
#include <string>

#include "gpea/core.hpp"

namespace gpea {

/// Verdicts of the four Riesz decomposition properties. Witnesses are the
/// lexicographically smallest failures: (a, b, c, d) with a⊕b = c⊕d for the
/// table properties, (a, b, c) with a ≤ b⊕c for RDP0.
struct RdpProfile {
  bool rdp0 = true;
  bool rdp = true;
  bool rdp1 = true;
  bool rdp2 = true;
  std::optional<std::array<Elem, 3>> rdp0_witness;
  std::optional<std::array<Elem, 4>> rdp_witness;
  std::optional<std::array<Elem, 4>> rdp1_witness;
  std::optional<std::array<Elem, 4>> rdp2_witness;

  bool same_verdicts(const RdpProfile& other) const {
    return rdp0 == other.rdp0 && rdp == other.rdp && rdp1 == other.rdp1 && rdp2 == other.rdp2;
  }
  std::string describe() const;
};

/// A decomposition table
///        c    d
///   a   e11  e12
///   b   e21  e22
struct Decomposition {
  Elem e11, e12, e21, e22;
};

/// Every decomposition of a⊕b = c⊕d, ordered by e11.
std::vector<Decomposition> decompositions(const Gpea& g, Elem a, Elem b, Elem c, Elem d);

/// RDP1 and RDP2 read as: some decomposition has the extra property.
RdpProfile rdp_profile(const Gpea& g);

struct TransferReport {
  RdpProfile base;
  RdpProfile unitization;
  bool agree() const { return base.same_verdicts(unitization); }
};

/// Profiles of P and of its γ-unitization. Throws PreconditionError unless P
/// is total and γ unitizing.
TransferReport rdp_transfer(const Gpea& g, const Permutation& gamma);

/// Same comparison without the totality requirement.
TransferReport compare_rdp(const Gpea& g, const Permutation& gamma);

}  // namespace gpea
