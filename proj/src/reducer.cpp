#include "difnet/reducer.hpp"

#include "difnet/expand.hpp"

namespace difnet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate_names(const Formula& f, const Signature& sig) {
  std::visit(overloaded{
                 [&](const EdgeAtom& a) {
                   sig.agent_index(a.from);
                   sig.agent_index(a.to);
                 },
                 [&](const FeatureAtom& a) {
                   sig.agent_index(a.agent);
                   sig.feature_index(a.feature);
                 },
                 [&](const SimAtom& a) {
                   sig.agent_index(a.a);
                   sig.agent_index(a.b);
                 },
                 [&](const PressureAtom& a) {
                   sig.agent_index(a.agent);
                   sig.feature_index(a.feature);
                 },
                 [&](const NotNode& n) { validate_names(n.child, sig); },
                 [&](const BinaryNode& b) {
                   validate_names(b.lhs, sig);
                   validate_names(b.rhs, sig);
                 },
                 [&](const DynNode& d) { validate_names(d.child, sig); },
                 [&](const auto&) {},
             },
             f.node().v);
}

class Reducer {
 public:
  Reducer(const Signature& sig, const Rational& omega, const Rational& tau,
          UpdateMode mode, ReduceOptions options)
      : sig_(sig), omega_(omega), tau_(tau), mode_(mode), options_(options) {}

  Formula run(const Formula& f) { return reduce_node(f); }

  RewriteTrace take_trace() { return std::move(trace_); }

 private:
  Formula step(const char* rule, Formula before, Formula after) {
    trace_.steps.push_back({rule, path_, std::move(before), after});
    return after;
  }

  Formula expand_macro_atom(const Formula& f) {
    return std::visit(
        overloaded{
            [&](const SimAtom& a) {
              return step("expand-similarity", f,
                          expand_similarity(a.a, a.b, sig_, omega_));
            },
            [&](const PressureAtom& a) {
              return step("expand-pressure", f,
                          expand_pressure(a.agent, a.feature, sig_, tau_));
            },
            [&](const PsiAtom& a) {
              return step("expand-psi", f,
                          psi_formula(a.kind, a.steps, sig_, omega_, tau_, mode_));
            },
            [&](const auto&) { return f; },
        },
        f.node().v);
  }

  Formula reduce_node(const Formula& f) {
    return std::visit(
        overloaded{
            [&](const SimAtom&) {
              return options_.expand_macros ? expand_macro_atom(f) : f;
            },
            [&](const PressureAtom&) {
              return options_.expand_macros ? expand_macro_atom(f) : f;
            },
            [&](const PsiAtom& a) {
              const bool dynamic_inside =
                  a.kind == PsiKind::DiffNet || a.kind == PsiKind::NetDiff;
              if (!options_.expand_macros && !dynamic_inside) return f;
              // The expansion may itself contain dynamic operators.
              return reduce_node(expand_macro_atom(f));
            },
            [&](const NotNode& n) {
              path_.push_back(0);
              Formula child = reduce_node(n.child);
              path_.pop_back();
              return Formula::neg(std::move(child));
            },
            [&](const BinaryNode& b) {
              path_.push_back(0);
              Formula lhs = reduce_node(b.lhs);
              path_.pop_back();
              path_.push_back(1);
              Formula rhs = reduce_node(b.rhs);
              path_.pop_back();
              return Formula(FormulaNode{BinaryNode{b.op, std::move(lhs), std::move(rhs)}});
            },
            [&](const DynNode& d) {
              path_.push_back(0);
              Formula body = reduce_node(d.child);
              path_.pop_back();
              return push_dyn(d.op, std::move(body));
            },
            [&](const auto&) { return f; },
        },
        f.node().v);
  }

  // The tree currently holds Dyn(op, body) at path_, with body already
  // static; rewrites until the operator is gone.
  Formula push_dyn(UpdateOp op, Formula body) {
    const Formula redex = Formula::after(op, body);
    return std::visit(
        overloaded{
            [&](const TrueNode&) { return step(ruleName(op, "constant"), redex, body); },
            [&](const FalseNode&) { return step(ruleName(op, "constant"), redex, body); },
            [&](const EdgeAtom& a) {
              if (op == UpdateOp::Diffusion)
                return step("diff-edge", redex, body);
              const bool self_skipped =
                  mode_ == UpdateMode::Irreflexive && a.from == a.to;
              const char* rule = op == UpdateOp::Network ? "net-edge" : "sync-edge";
              if (self_skipped) return step(rule, redex, body);
              Formula after = Formula::disj(body, Formula::sim(a.from, a.to));
              after = step(rule, redex, after);
              return maybe_expand_rhs(std::move(after));
            },
            [&](const FeatureAtom& a) {
              if (op == UpdateOp::Network)
                return step("net-feature", redex, body);
              const char* rule =
                  op == UpdateOp::Diffusion ? "diff-feature" : "sync-feature";
              Formula after = Formula::disj(body, Formula::pressure(a.agent, a.feature));
              after = step(rule, redex, after);
              return maybe_expand_rhs(std::move(after));
            },
            [&](const NotNode& n) {
              Formula after = Formula::neg(Formula::after(op, n.child));
              step(ruleName(op, "commute-not"), redex, after);
              path_.push_back(0);
              Formula inner = push_dyn(op, n.child);
              path_.pop_back();
              return Formula::neg(std::move(inner));
            },
            [&](const BinaryNode& b) {
              if (b.op == BinaryOp::And) {
                Formula after = Formula::conj(Formula::after(op, b.lhs),
                                              Formula::after(op, b.rhs));
                step(ruleName(op, "distribute-and"), redex, after);
                path_.push_back(0);
                Formula lhs = push_dyn(op, b.lhs);
                path_.pop_back();
                path_.push_back(1);
                Formula rhs = push_dyn(op, b.rhs);
                path_.pop_back();
                return Formula::conj(std::move(lhs), std::move(rhs));
              }
              // Derived connective in dynamic scope: desugar, then continue.
              Formula desugared = desugar(b);
              path_.push_back(0);
              step(desugar_rule(b.op), body, desugared);
              path_.pop_back();
              return push_dyn(op, std::move(desugared));
            },
            [&](const SimAtom&) { return expand_then_push(op, body); },
            [&](const PressureAtom&) { return expand_then_push(op, body); },
            [&](const PsiAtom&) { return expand_then_push(op, body); },
            [&](const DynNode&) -> Formula {
              throw Error(ErrorCode::InvariantViolation,
                          "dynamic operator left in reduced body");
            },
        },
        body.node().v);
  }

  Formula expand_then_push(UpdateOp op, const Formula& macro) {
    path_.push_back(0);
    Formula expansion = expand_macro_atom(macro);
    path_.pop_back();
    return push_dyn(op, std::move(expansion));
  }

  // If full expansion was requested, the freshly introduced macro on the
  // right of the disjunction still has to go.
  Formula maybe_expand_rhs(Formula disjunction) {
    if (!options_.expand_macros) return disjunction;
    const auto* b = disjunction.as<BinaryNode>();
    path_.push_back(1);
    Formula rhs = expand_macro_atom(b->rhs);
    path_.pop_back();
    return Formula::disj(b->lhs, std::move(rhs));
  }

  static Formula desugar(const BinaryNode& b) {
    switch (b.op) {
      case BinaryOp::Or:
        return Formula::neg(
            Formula::conj(Formula::neg(b.lhs), Formula::neg(b.rhs)));
      case BinaryOp::Implies:
        return Formula::neg(Formula::conj(b.lhs, Formula::neg(b.rhs)));
      case BinaryOp::Iff:
        // (l & r) | (!l & !r), in negation-conjunction form.
        return Formula::neg(Formula::conj(
            Formula::neg(Formula::conj(b.lhs, b.rhs)),
            Formula::neg(Formula::conj(Formula::neg(b.lhs), Formula::neg(b.rhs)))));
      case BinaryOp::And:
        break;
    }
    throw Error(ErrorCode::InvariantViolation, "desugar called on a core connective");
  }

  static const char* desugar_rule(BinaryOp op) {
    switch (op) {
      case BinaryOp::Or: return "desugar-or";
      case BinaryOp::Implies: return "desugar-implies";
      case BinaryOp::Iff: return "desugar-iff";
      case BinaryOp::And: break;
    }
    return "desugar";
  }

  static const char* ruleName(UpdateOp op, const char* suffix) {
    // Static storage so trace rows can keep pointing at the names.
    static const std::string names[3][3] = {
        {"diff-constant", "diff-commute-not", "diff-distribute-and"},
        {"net-constant", "net-commute-not", "net-distribute-and"},
        {"sync-constant", "sync-commute-not", "sync-distribute-and"},
    };
    const int row = op == UpdateOp::Diffusion ? 0 : op == UpdateOp::Network ? 1 : 2;
    const int col = std::string_view(suffix) == "constant"     ? 0
                    : std::string_view(suffix) == "commute-not" ? 1
                                                                : 2;
    return names[row][col].c_str();
  }

  const Signature& sig_;
  Rational omega_;
  Rational tau_;
  UpdateMode mode_;
  ReduceOptions options_;
  RewriteTrace trace_;
  std::vector<int> path_;
};

bool is_static_node(const Formula& f) {
  return std::visit(
      overloaded{
          [&](const PsiAtom& a) {
            return a.kind == PsiKind::Diff || a.kind == PsiKind::Net;
          },
          [&](const NotNode& n) { return is_static_node(n.child); },
          [&](const BinaryNode& b) {
            return is_static_node(b.lhs) && is_static_node(b.rhs);
          },
          [&](const DynNode&) { return false; },
          [&](const auto&) { return true; },
      },
      f.node().v);
}

Formula replace_at(const Formula& f, const std::vector<int>& path,
                   std::size_t depth, const Formula& replacement) {
  if (depth == path.size()) return replacement;
  const int branch = path[depth];
  return std::visit(
      overloaded{
          [&](const NotNode& n) -> Formula {
            if (branch != 0)
              throw Error(ErrorCode::InvariantViolation, "bad trace path");
            return Formula::neg(replace_at(n.child, path, depth + 1, replacement));
          },
          [&](const BinaryNode& b) -> Formula {
            if (branch == 0)
              return Formula(FormulaNode{BinaryNode{
                  b.op, replace_at(b.lhs, path, depth + 1, replacement), b.rhs}});
            if (branch == 1)
              return Formula(FormulaNode{BinaryNode{
                  b.op, b.lhs, replace_at(b.rhs, path, depth + 1, replacement)}});
            throw Error(ErrorCode::InvariantViolation, "bad trace path");
          },
          [&](const DynNode& d) -> Formula {
            if (branch != 0)
              throw Error(ErrorCode::InvariantViolation, "bad trace path");
            return Formula::after(d.op,
                                  replace_at(d.child, path, depth + 1, replacement));
          },
          [&](const auto&) -> Formula {
            throw Error(ErrorCode::InvariantViolation, "trace path ends in a leaf");
          },
      },
      f.node().v);
}

const Formula& subformula_at(const Formula& f, const std::vector<int>& path,
                             std::size_t depth) {
  if (depth == path.size()) return f;
  const int branch = path[depth];
  const auto& v = f.node().v;
  if (const auto* n = std::get_if<NotNode>(&v); n && branch == 0)
    return subformula_at(n->child, path, depth + 1);
  if (const auto* b = std::get_if<BinaryNode>(&v)) {
    if (branch == 0) return subformula_at(b->lhs, path, depth + 1);
    if (branch == 1) return subformula_at(b->rhs, path, depth + 1);
  }
  if (const auto* d = std::get_if<DynNode>(&v); d && branch == 0)
    return subformula_at(d->child, path, depth + 1);
  throw Error(ErrorCode::InvariantViolation, "bad trace path");
}

}  // namespace

std::pair<Formula, RewriteTrace> reduce(const Formula& formula,
                                        const Signature& sig,
                                        const Rational& omega,
                                        const Rational& tau, UpdateMode mode,
                                        ReduceOptions options) {
  validate_names(formula, sig);
  Reducer reducer(sig, omega, tau, mode, options);
  Formula result = reducer.run(formula);
  return {std::move(result), reducer.take_trace()};
}

bool is_static(const Formula& formula) { return is_static_node(formula); }

Formula apply_trace(const Formula& formula, const RewriteTrace& trace) {
  Formula current = formula;
  for (const RewriteStep& s : trace.steps) {
    if (subformula_at(current, s.path, 0) != s.before)
      throw Error(ErrorCode::InvariantViolation,
                  "trace step does not match the evolving formula");
    current = replace_at(current, s.path, 0, s.after);
  }
  return current;
}

}  // namespace difnet
