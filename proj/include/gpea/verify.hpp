#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpea/core.hpp"

namespace gpea {

struct NamedGpea {
  std::string label;
  Gpea g;
};

struct VerifyOptions {
  std::size_t max_size = 5;  // enumerated instances
  bool include_catalog = true;
  std::vector<std::string> kite_bases{"chain(1)", "chain(2)"};
  std::size_t max_index = 3;
  std::size_t budget = 4096;
};

struct TheoremResult {
  std::string theorem;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::vector<std::string> samples;  // first few failure details
};

/// Informational counts that are not asserted.
struct Observation {
  std::string name;
  std::size_t instances = 0;
  std::size_t hits = 0;
};

struct VerifyReport {
  std::vector<TheoremResult> theorems;
  std::vector<Observation> observations;
  bool ok() const;
  const TheoremResult* find(std::string_view theorem) const;
  /// Human-readable failures followed by one RESULT line per theorem.
  std::string render() const;
};

/// Catalog builtins plus every enumerated GPEA up to max_size, isomorphic
/// duplicates removed, ordered by size then table.
std::vector<NamedGpea> verification_instances(const VerifyOptions& opts);

VerifyReport verify_unitization(const std::vector<NamedGpea>& instances);
VerifyReport verify_congruence(const std::vector<NamedGpea>& instances);
VerifyReport verify_rdp(const std::vector<NamedGpea>& instances);
VerifyReport verify_kite(const VerifyOptions& opts);

/// scope ∈ {all, unitization, congruence, kite, rdp}; PreconditionError
/// otherwise.
VerifyReport verify(std::string_view scope, const VerifyOptions& opts = {});

}  // namespace gpea
