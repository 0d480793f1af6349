#pragma once

#include <optional>

#include "difnet/formula.hpp"
#include "difnet/model.hpp"

namespace difnet {

/// Truth of a formula in a model. Dynamic operators evaluate their body on
/// the corresponding updated model; sim/pressure macro atoms are answered by
/// the model's own predicates instead of being expanded; psi macro atoms
/// evaluate the corresponding condition formula over the model's signature,
/// thresholds and mode.
bool satisfies(const Model& model, const Formula& formula);

/// Result of comparing two update sequences on one model.
struct EquivalenceReport {
  bool equivalent;
  /// First atom (in printed lexicographic order) on which the two updated
  /// models disagree; present exactly when not equivalent.
  std::optional<Formula> witness;
};

/// Applies both sequences to the model and compares the results atom by atom.
EquivalenceReport sequences_equivalent(const Model& model,
                                       const UpdateSequence& s1,
                                       const UpdateSequence& s2);

/// True iff the two models satisfy the same edge and feature atoms; for
/// models over one signature with equal thresholds this coincides with
/// structural equality. Throws SignatureMismatch otherwise.
bool atomic_agreement(const Model& m1, const Model& m2);

/// All atoms over the signature, sorted by their printed form (edge atoms
/// first, then feature atoms).
std::vector<Formula> all_atoms(const Signature& sig);

}  // namespace difnet
