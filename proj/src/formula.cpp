#include "difnet/formula.hpp"

#include <utility>

namespace difnet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Formula::Formula() : node_(std::make_shared<FormulaNode>(FormulaNode{TrueNode{}})) {}

Formula::Formula(FormulaNode node)
    : node_(std::make_shared<FormulaNode>(std::move(node))) {}

Formula Formula::truth(bool value) {
  return value ? Formula(FormulaNode{TrueNode{}}) : Formula(FormulaNode{FalseNode{}});
}
Formula Formula::edge(std::string from, std::string to) {
  return Formula(FormulaNode{EdgeAtom{std::move(from), std::move(to)}});
}
Formula Formula::has(std::string agent, std::string feature) {
  return Formula(FormulaNode{FeatureAtom{std::move(agent), std::move(feature)}});
}
Formula Formula::sim(std::string a, std::string b) {
  return Formula(FormulaNode{SimAtom{std::move(a), std::move(b)}});
}
Formula Formula::pressure(std::string agent, std::string feature) {
  return Formula(FormulaNode{PressureAtom{std::move(agent), std::move(feature)}});
}
Formula Formula::psi(PsiKind kind, int steps) {
  return Formula(FormulaNode{PsiAtom{kind, steps}});
}
Formula Formula::neg(Formula f) {
  return Formula(FormulaNode{NotNode{std::move(f)}});
}
Formula Formula::conj(Formula l, Formula r) {
  return Formula(FormulaNode{BinaryNode{BinaryOp::And, std::move(l), std::move(r)}});
}
Formula Formula::disj(Formula l, Formula r) {
  return Formula(FormulaNode{BinaryNode{BinaryOp::Or, std::move(l), std::move(r)}});
}
Formula Formula::implies(Formula l, Formula r) {
  return Formula(FormulaNode{BinaryNode{BinaryOp::Implies, std::move(l), std::move(r)}});
}
Formula Formula::iff(Formula l, Formula r) {
  return Formula(FormulaNode{BinaryNode{BinaryOp::Iff, std::move(l), std::move(r)}});
}
Formula Formula::after(UpdateOp op, Formula f) {
  return Formula(FormulaNode{DynNode{op, std::move(f)}});
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node_->v;
  const auto& vb = b.node_->v;
  if (va.index() != vb.index()) return false;
  return std::visit(
      overloaded{
          [&](const TrueNode&) { return true; },
          [&](const FalseNode&) { return true; },
          [&](const EdgeAtom& x) {
            const auto& y = std::get<EdgeAtom>(vb);
            return x.from == y.from && x.to == y.to;
          },
          [&](const FeatureAtom& x) {
            const auto& y = std::get<FeatureAtom>(vb);
            return x.agent == y.agent && x.feature == y.feature;
          },
          [&](const SimAtom& x) {
            const auto& y = std::get<SimAtom>(vb);
            return x.a == y.a && x.b == y.b;
          },
          [&](const PressureAtom& x) {
            const auto& y = std::get<PressureAtom>(vb);
            return x.agent == y.agent && x.feature == y.feature;
          },
          [&](const PsiAtom& x) {
            const auto& y = std::get<PsiAtom>(vb);
            if (x.kind != y.kind) return false;
            return x.kind != PsiKind::NetDiff || x.steps == y.steps;
          },
          [&](const NotNode& x) {
            return x.child == std::get<NotNode>(vb).child;
          },
          [&](const BinaryNode& x) {
            const auto& y = std::get<BinaryNode>(vb);
            return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
          },
          [&](const DynNode& x) {
            const auto& y = std::get<DynNode>(vb);
            return x.op == y.op && x.child == y.child;
          },
      },
      va);
}

const char* dyn_token(UpdateOp op) {
  switch (op) {
    case UpdateOp::Diffusion: return "[diff]";
    case UpdateOp::Network: return "[net]";
    case UpdateOp::Synchronous: return "[sync]";
  }
  return "[?]";
}

std::string psi_token(PsiKind kind, int steps) {
  switch (kind) {
    case PsiKind::Diff: return "psi_diff";
    case PsiKind::Net: return "psi_net";
    case PsiKind::DiffNet: return "psi_diffnet";
    case PsiKind::NetDiff: return "psi_netdiff(" + std::to_string(steps) + ")";
  }
  return "psi_?";
}

namespace {

// Binding strength; parenthesization reproduces the grammar's shape:
// <-> (left-assoc) < -> (right-assoc) < | < & < unary.
int precedence(const FormulaNode& n) {
  return std::visit(
      overloaded{
          [](const BinaryNode& b) {
            switch (b.op) {
              case BinaryOp::Iff: return 1;
              case BinaryOp::Implies: return 2;
              case BinaryOp::Or: return 3;
              case BinaryOp::And: return 4;
            }
            return 0;
          },
          [](const NotNode&) { return 5; },
          [](const DynNode&) { return 5; },
          [](const auto&) { return 6; },
      },
      n.v);
}

void print_rec(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f.node());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  std::visit(
      overloaded{
          [&](const TrueNode&) { out += "true"; },
          [&](const FalseNode&) { out += "false"; },
          [&](const EdgeAtom& a) { out += "N(" + a.from + "," + a.to + ")"; },
          [&](const FeatureAtom& a) {
            out += "has(" + a.agent + "," + a.feature + ")";
          },
          [&](const SimAtom& a) { out += "sim(" + a.a + "," + a.b + ")"; },
          [&](const PressureAtom& a) {
            out += "pressure(" + a.agent + "," + a.feature + ")";
          },
          [&](const PsiAtom& a) { out += psi_token(a.kind, a.steps); },
          [&](const NotNode& n) {
            out += '!';
            print_rec(n.child, 5, out);
          },
          [&](const DynNode& d) {
            out += dyn_token(d.op);
            out += ' ';
            print_rec(d.child, 5, out);
          },
          [&](const BinaryNode& b) {
            const char* tok = nullptr;
            int lhs_min = prec, rhs_min = prec + 1;  // left-assoc default
            switch (b.op) {
              case BinaryOp::And: tok = " & "; break;
              case BinaryOp::Or: tok = " | "; break;
              case BinaryOp::Implies:
                tok = " -> ";
                lhs_min = prec + 1;  // right-assoc
                rhs_min = prec;
                break;
              case BinaryOp::Iff: tok = " <-> "; break;
            }
            print_rec(b.lhs, lhs_min, out);
            out += tok;
            print_rec(b.rhs, rhs_min, out);
          },
      },
      f.node().v);
  if (parens) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::truth(true);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::truth(false);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disj(acc, fs[i]);
  return acc;
}

}  // namespace difnet
