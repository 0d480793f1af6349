#pragma once

#include <string>
#include <utility>
#include <vector>

#include "difnet/formula.hpp"
#include "difnet/model.hpp"
#include "difnet/rational.hpp"
#include "difnet/signature.hpp"

namespace difnet {

/// One rewrite applied at `path` (child indices from the root) in the
/// evolving tree: the subformula `before` was replaced by `after`.
struct RewriteStep {
  std::string rule;
  std::vector<int> path;
  Formula before;
  Formula after;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
};

struct ReduceOptions {
  /// Expand sim/pressure/psi macro atoms everywhere, producing a purely
  /// propositional result. By default macros are kept readable and only
  /// expanded where a dynamic operator has to be pushed through them.
  bool expand_macros = false;
};

/// Translates a formula into the static fragment by pushing each dynamic
/// operator innermost-first (leftmost tie-break) through the body:
/// edge and feature atoms rewrite through the one-step update laws, the
/// operators distribute over conjunction and commute with negation, and
/// derived connectives or macro atoms in dynamic scope are desugared or
/// expanded on the way. The result contains no dynamic operator.
std::pair<Formula, RewriteTrace> reduce(const Formula& formula,
                                        const Signature& sig,
                                        const Rational& omega,
                                        const Rational& tau,
                                        UpdateMode mode = UpdateMode::Literal,
                                        ReduceOptions options = {});

/// True iff the formula contains no dynamic operator, including inside psi
/// macro atoms (the DiffNet and NetDiff shapes hide dynamic subformulas).
bool is_static(const Formula& formula);

/// Replays a trace against the formula it was produced from; returns the
/// rewritten result. Throws InvariantViolation if a step does not match.
Formula apply_trace(const Formula& formula, const RewriteTrace& trace);

}  // namespace difnet
