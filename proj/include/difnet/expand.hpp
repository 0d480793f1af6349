#pragma once

#include "difnet/formula.hpp"
#include "difnet/model.hpp"
#include "difnet/rational.hpp"
#include "difnet/signature.hpp"

namespace difnet {

/// Static formula equivalent to "agent feels enough pressure to adopt
/// feature": a disjunct per pair G subset-of N subset-of agents with N
/// non-empty and |G|/|N| >= tau, asserting exactly-N incoming edges and the
/// feature on all of G. Grows like 3^|agents|; capped at 16 agents.
Formula expand_pressure(const std::string& agent, const std::string& feature,
                        const Signature& sig, const Rational& tau);

/// Static formula equivalent to "a and b agree on enough features": a
/// disjunct per E subset-of features with |E|/|features| >= omega, each a
/// conjunction of agreement biconditionals. The empty-E disjunct (omega <= 0)
/// is the empty conjunction, i.e. true. Capped at 16 features.
Formula expand_similarity(const std::string& a, const std::string& b,
                          const Signature& sig, const Rational& omega);

/// The condition formula of the given shape over a whole signature, with
/// sim/pressure left as macro atoms:
///   Diff:      AND_{a,b} (N_ab | !sim(a,b))
///   Net:       AND_{a,f} (has(a,f) | !pressure(a,f))
///   DiffNet:   AND_{a,b} (!N_ab -> (sim(a,b) <-> [diff] sim(a,b)))
///   NetDiff_n: AND_{a,f} (!has(a,f) ->
///                 (pressure(a,f) <-> OR_{0<=i<n} [net][diff]^i pressure(a,f)))
/// NetDiff with n = 0 carries the empty disjunction (false), which makes it
/// logically equivalent to the Net shape. In irreflexive mode the pair
/// conjunctions skip a == b.
Formula psi_formula(PsiKind kind, int steps, const Signature& sig,
                    const Rational& omega, const Rational& tau,
                    UpdateMode mode = UpdateMode::Literal);

}  // namespace difnet
