#include "difnet/signature.hpp"

#include <algorithm>
#include <cctype>

namespace difnet {

bool is_valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  const unsigned char head = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(head) && name[0] != '_') return false;
  for (std::size_t i = 1; i < name.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if (!std::isalnum(c) && name[i] != '_') return false;
  }
  return true;
}

namespace {

std::vector<std::string> canonicalize(std::vector<std::string> names,
                                      ErrorCode empty_code, const char* what) {
  for (const auto& n : names)
    if (!is_valid_identifier(n))
      throw Error(ErrorCode::InvalidIdentifier, std::string(what) + " \"" + n + "\"");
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.empty()) throw Error(empty_code, std::string(what) + " list is empty");
  return names;
}

int index_of(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return -1;
  return static_cast<int>(it - names.begin());
}

}  // namespace

Signature Signature::make(std::vector<std::string> agents,
                          std::vector<std::string> features) {
  Signature sig;
  sig.agents = canonicalize(std::move(agents), ErrorCode::EmptyAgents, "agent");
  sig.features = canonicalize(std::move(features), ErrorCode::EmptyFeatures, "feature");
  return sig;
}

int Signature::agent_index(const std::string& name) const {
  const int i = index_of(agents, name);
  if (i < 0) throw Error(ErrorCode::UnknownAgent, "\"" + name + "\"");
  return i;
}

int Signature::feature_index(const std::string& name) const {
  const int i = index_of(features, name);
  if (i < 0) throw Error(ErrorCode::UnknownFeature, "\"" + name + "\"");
  return i;
}

bool Signature::has_agent(const std::string& name) const {
  return index_of(agents, name) >= 0;
}

bool Signature::has_feature(const std::string& name) const {
  return index_of(features, name) >= 0;
}

}  // namespace difnet
