#include "difnet/evaluator.hpp"

#include "difnet/expand.hpp"

namespace difnet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool satisfies(const Model& model, const Formula& formula) {
  return std::visit(
      overloaded{
          [&](const TrueNode&) { return true; },
          [&](const FalseNode&) { return false; },
          [&](const EdgeAtom& a) { return model.has_edge(a.from, a.to); },
          [&](const FeatureAtom& a) { return model.agent_has(a.agent, a.feature); },
          [&](const SimAtom& a) { return model.are_similar(a.a, a.b); },
          [&](const PressureAtom& a) { return model.has_pressure(a.agent, a.feature); },
          [&](const PsiAtom& a) {
            return satisfies(model,
                             psi_formula(a.kind, a.steps, model.signature(),
                                         model.omega(), model.tau(), model.mode()));
          },
          [&](const NotNode& n) { return !satisfies(model, n.child); },
          [&](const BinaryNode& b) {
            switch (b.op) {
              case BinaryOp::And:
                return satisfies(model, b.lhs) && satisfies(model, b.rhs);
              case BinaryOp::Or:
                return satisfies(model, b.lhs) || satisfies(model, b.rhs);
              case BinaryOp::Implies:
                return !satisfies(model, b.lhs) || satisfies(model, b.rhs);
              case BinaryOp::Iff:
                return satisfies(model, b.lhs) == satisfies(model, b.rhs);
            }
            return false;
          },
          [&](const DynNode& d) { return satisfies(model.update(d.op), d.child); },
      },
      formula.node().v);
}

std::vector<Formula> all_atoms(const Signature& sig) {
  std::vector<Formula> atoms;
  // Printed forms sort edge atoms ("N(...)") ahead of feature atoms
  // ("has(...)"), and both groups by their name pairs; emitting them in that
  // order directly keeps witness selection reproducible.
  for (const auto& a : sig.agents)
    for (const auto& b : sig.agents) atoms.push_back(Formula::edge(a, b));
  for (const auto& a : sig.agents)
    for (const auto& f : sig.features) atoms.push_back(Formula::has(a, f));
  return atoms;
}

EquivalenceReport sequences_equivalent(const Model& model,
                                       const UpdateSequence& s1,
                                       const UpdateSequence& s2) {
  const Model m1 = apply_sequence(model, s1);
  const Model m2 = apply_sequence(model, s2);
  if (m1 == m2) return {true, std::nullopt};
  for (const Formula& atom : all_atoms(model.signature()))
    if (satisfies(m1, atom) != satisfies(m2, atom)) return {false, atom};
  throw Error(ErrorCode::InvariantViolation,
              "unequal updated models satisfy the same atoms");
}

bool atomic_agreement(const Model& m1, const Model& m2) {
  if (m1.signature() != m2.signature())
    throw Error(ErrorCode::SignatureMismatch, "models have different signatures");
  if (m1.omega() != m2.omega() || m1.tau() != m2.tau())
    throw Error(ErrorCode::SignatureMismatch, "models have different thresholds");
  for (const Formula& atom : all_atoms(m1.signature()))
    if (satisfies(m1, atom) != satisfies(m2, atom)) return false;
  return true;
}

}  // namespace difnet
