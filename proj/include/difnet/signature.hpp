#pragma once

#include <string>
#include <vector>

#include "difnet/errors.hpp"

namespace difnet {

// Identifiers follow [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_identifier(const std::string& name);

/// Agent and feature universes, canonically sorted. Gives the abbreviation
/// expanders enough context to work without a full model.
struct Signature {
  std::vector<std::string> agents;
  std::vector<std::string> features;

  // Validates, sorts and de-duplicates both lists; both must be non-empty.
  static Signature make(std::vector<std::string> agents,
                        std::vector<std::string> features);

  int agent_index(const std::string& name) const;    // throws UnknownAgent
  int feature_index(const std::string& name) const;  // throws UnknownFeature
  bool has_agent(const std::string& name) const;
  bool has_feature(const std::string& name) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.agents == b.agents && a.features == b.features;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

}  // namespace difnet
