#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "difnet/update_op.hpp"

namespace difnet {

struct FormulaNode;

/// Shapes of the four condition formulas characterizing when the synchronous
/// update coincides with a staged one: Diff = one diffusion step, Net = one
/// network step, DiffNet = diffusion then network, NetDiff = network then
/// `steps` diffusions.
enum class PsiKind { Diff, Net, DiffNet, NetDiff };

enum class BinaryOp { And, Or, Implies, Iff };

/// Immutable formula tree. Copies share structure; equality is structural
/// (sugar connectives are not identified with their expansions).
class Formula {
 public:
  Formula();  // defaults to the constant true
  explicit Formula(FormulaNode node);

  static Formula truth(bool value);
  static Formula edge(std::string from, std::string to);
  static Formula has(std::string agent, std::string feature);
  static Formula sim(std::string a, std::string b);
  static Formula pressure(std::string agent, std::string feature);
  static Formula psi(PsiKind kind, int steps = 0);
  static Formula neg(Formula f);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula iff(Formula l, Formula r);
  static Formula after(UpdateOp op, Formula f);

  const FormulaNode& node() const { return *node_; }

  template <typename T>
  const T* as() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  std::shared_ptr<const FormulaNode> node_;
};

struct TrueNode {};
struct FalseNode {};
struct EdgeAtom { std::string from, to; };            // N(from,to)
struct FeatureAtom { std::string agent, feature; };   // has(agent,feature)
struct SimAtom { std::string a, b; };                 // sim(a,b)
struct PressureAtom { std::string agent, feature; };  // pressure(agent,feature)
struct PsiAtom { PsiKind kind; int steps; };          // steps used by NetDiff only
struct NotNode { Formula child; };
struct BinaryNode { BinaryOp op; Formula lhs, rhs; };
struct DynNode { UpdateOp op; Formula child; };

struct FormulaNode {
  std::variant<TrueNode, FalseNode, EdgeAtom, FeatureAtom, SimAtom,
               PressureAtom, PsiAtom, NotNode, BinaryNode, DynNode>
      v;
};

template <typename T>
const T* Formula::as() const {
  return std::get_if<T>(&node_->v);
}

/// Canonical concrete syntax; parse(print(f)) reproduces f node for node.
std::string print(const Formula& f);

/// Left-assoc fold over a range; an empty range gives the neutral
/// formula (true for conj_all, false for disj_all).
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

const char* dyn_token(UpdateOp op);  // "[diff]" | "[net]" | "[sync]"
std::string psi_token(PsiKind kind, int steps);

}  // namespace difnet
