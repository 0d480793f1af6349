#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "difnet/rational.hpp"
#include "difnet/signature.hpp"
#include "difnet/update_op.hpp"

namespace difnet {

/// Whether link formation considers pairs with a == b. In Literal mode the
/// network update reads the similarity condition for every ordered pair, so
/// self-loops appear after one update (an agent always agrees with itself).
/// Irreflexive mode skips a == b everywhere link formation is involved.
enum class UpdateMode { Literal, Irreflexive };

const char* update_mode_token(UpdateMode mode);           // "literal" | "irreflexive"
UpdateMode parse_update_mode(const std::string& token);

/// A finite social network: agents carrying feature sets, a directed
/// influence relation, a similarity threshold omega for link formation and
/// an influenceability threshold tau for feature adoption.
///
/// Values are immutable once constructed; every update returns a new model.
/// Internally agents and features are kept sorted and the relation/valuation
/// live in bitmasks, which caps both universes at 64 names.
class Model {
 public:
  /// Validates and canonicalizes the raw components.
  /// influence pairs are (influencer, influenced): (a,b) means a influences b.
  /// Requires 0 <= omega <= 1 and 0 < tau <= 1.
  static Model make(std::vector<std::string> agents,
                    std::vector<std::string> features,
                    std::vector<std::pair<std::string, std::string>> influence,
                    std::vector<std::pair<std::string, std::vector<std::string>>> valuation,
                    Rational omega, Rational tau,
                    UpdateMode mode = UpdateMode::Literal);

  /// Bulk constructor for enumeration-heavy callers: in_masks[b] bit a set
  /// means (a,b) is in the relation, val_masks[a] bit j means agent a has
  /// feature j. Sizes must match the signature; stray high bits are rejected.
  static Model from_bitmasks(Signature sig, std::vector<std::uint64_t> in_masks,
                             std::vector<std::uint64_t> val_masks,
                             Rational omega, Rational tau,
                             UpdateMode mode = UpdateMode::Literal);

  const std::vector<std::string>& agents() const { return sig_.agents; }
  const std::vector<std::string>& features() const { return sig_.features; }
  const Signature& signature() const { return sig_; }
  Rational omega() const { return omega_; }
  Rational tau() const { return tau_; }
  UpdateMode mode() const { return mode_; }

  int agent_count() const { return static_cast<int>(sig_.agents.size()); }
  int feature_count() const { return static_cast<int>(sig_.features.size()); }

  // Name-based accessors (throw UnknownAgent/UnknownFeature).
  bool has_edge(const std::string& from, const std::string& to) const;
  bool agent_has(const std::string& agent, const std::string& feature) const;
  std::vector<std::string> influencers(const std::string& agent) const;
  bool has_pressure(const std::string& agent, const std::string& feature) const;
  Rational similarity(const std::string& a, const std::string& b) const;
  bool are_similar(const std::string& a, const std::string& b) const;

  // Index-based accessors for enumeration-heavy callers. No bounds checks.
  bool has_edge_at(int from, int to) const { return (in_[to] >> from) & 1u; }
  bool agent_has_at(int agent, int feature) const { return (val_[agent] >> feature) & 1u; }
  bool has_pressure_at(int agent, int feature) const;
  bool are_similar_at(int a, int b) const;

  // One-step updates. All reads come from the pre-update model, so agent
  // iteration order cannot influence the result.
  Model diffusion_update() const;
  Model network_update() const;
  Model synchronous_update() const;
  Model update(UpdateOp op) const;

  Model with_mode(UpdateMode mode) const;

  std::vector<std::pair<std::string, std::string>> influence_pairs() const;
  std::vector<std::string> features_of(const std::string& agent) const;

  /// Equality on the semantic components (universes, relation, valuation,
  /// thresholds); the update mode is carried policy, not part of the state.
  friend bool operator==(const Model& a, const Model& b);
  friend bool operator!=(const Model& a, const Model& b) { return !(a == b); }

 private:
  Model() = default;

  Signature sig_;
  std::vector<std::uint64_t> in_;   // in_[b] bit a set <=> (a,b) in the relation
  std::vector<std::uint64_t> val_;  // val_[a] bit j set <=> agent a has feature j
  Rational omega_;
  Rational tau_;
  UpdateMode mode_ = UpdateMode::Literal;
};

/// Left-to-right fold of updates. Throws EmptySequence on an empty input.
Model apply_sequence(const Model& model, const UpdateSequence& seq);

/// Applies op until two successive models coincide. Returns the fixpoint and
/// the number of applications that changed the model. Terminates because
/// both updates only ever grow features and links over a finite universe.
std::pair<Model, int> stabilize(const Model& model, UpdateOp op);

}  // namespace difnet
