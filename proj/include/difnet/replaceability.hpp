#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "difnet/evaluator.hpp"
#include "difnet/model.hpp"

namespace difnet {

/// The canonical sequence family: the only shapes, up to equivalence on a
/// model, that can stand in for one synchronous update.
///   Diff -> <diff>, Net -> <net>, DiffNet -> <diff,net>,
///   NetDiff(n) -> <net, diff^n>.
UpdateSequence canonical_sequence(PsiKind kind, int steps = 0);

/// Evaluates the condition formula of the given shape on the model.
/// For NetDiff, requires 0 <= steps < the agent count (steps = 0 degenerates
/// to the Net condition).
bool check_psi(const Model& model, PsiKind kind, int steps = 0);

struct ReplaceabilityVerdict {
  bool replaceable;
  /// Present exactly when replaceable: a sequence from the canonical family
  /// with apply_sequence(model, sequence) == model.synchronous_update(),
  /// verified before being returned.
  std::optional<UpdateSequence> sequence;
  /// The (kind, steps) of every condition that evaluated false, in test
  /// order; filled exactly when not replaceable.
  std::vector<std::pair<PsiKind, int>> failed_conditions;
};

/// Tests the canonical conditions in the order Diff, Net, DiffNet,
/// NetDiff(1) .. NetDiff(agent_count - 1); the first that holds names the
/// replacing sequence (shortest wins ties).
ReplaceabilityVerdict find_replacement(const Model& model);

/// Exhaustive oracle: enumerates every diff/net sequence of length 1..max_len
/// in length-lexicographic order (diff before net) and returns the first one
/// matching the synchronous update, if any. Throws BudgetExceeded when the
/// candidate count 2^(max_len+1) passes the configured cap.
std::optional<UpdateSequence> brute_force_replaceable(
    const Model& model, int max_len, std::int64_t candidate_cap = 1 << 22);

/// If the diff/net sequence reproduces the synchronous update on the model,
/// names a canonical shape equivalent to it there; otherwise nullopt.
/// A canonical shape must exist in the equivalent case, so failing to find
/// one raises InvariantViolation.
std::optional<std::pair<PsiKind, int>> classify_sequence(const Model& model,
                                                         const UpdateSequence& seq);

/// Stage-wise replacement of `steps` synchronous updates: replaces each
/// stage via find_replacement and concatenates. Returns nullopt as soon as
/// one stage has no canonical replacement (a replacement for the multi-step
/// update as a whole may still exist; this check is sufficient, not
/// necessary).
std::optional<UpdateSequence> find_replacement_multi(const Model& model, int steps);

struct SearchConfig {
  int agent_count = 3;
  int feature_count = 3;
  Rational omega{1, 2};
  Rational tau{1, 2};
  UpdateMode mode = UpdateMode::Literal;
  std::uint64_t seed = 0;
  std::int64_t budget = 100000;
  /// Deterministic full enumeration of the model space instead of seeded
  /// sampling; only available while edge and valuation bits fit 24 bits.
  bool exhaustive = false;
};

/// How a witness relates to the line of argument that separates one
/// synchronous step from every diff/net sequence.
struct WitnessFacts {
  bool edge_only_sync = false;     // some pair linked by sync but not by diff
  bool edge_not_diffnet = false;   // ...nor by diff-then-net
  bool feature_only_sync = false;  // some feature adopted by sync but not by net
  bool diffnet_stable = false;     // diff-then-net result is a fixpoint of both
  bool net_stable = false;         // net result is a fixpoint of both

  bool all() const {
    return edge_only_sync && edge_not_diffnet && feature_only_sync &&
           diffnet_stable && net_stable;
  }
};

WitnessFacts witness_facts(const Model& model);

struct SearchResult {
  Model witness;
  WitnessFacts facts;
  std::int64_t candidates_tested = 0;
};

/// Looks for a model over the configured signature on which no diff/net
/// sequence reproduces the synchronous update (confirmed against the
/// brute-force oracle). Prefers a witness with all five facts when the
/// budget allows; throws SearchExhausted if no witness turns up at all.
SearchResult search_irreplaceable(const SearchConfig& cfg);

/// Agent/feature names used for generated signatures: a, b, c, ... and
/// f, g, h, ...
std::vector<std::string> default_agent_names(int count);
std::vector<std::string> default_feature_names(int count);

}  // namespace difnet
