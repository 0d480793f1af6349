#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "difnet/evaluator.hpp"
#include "difnet/expand.hpp"
#include "difnet/model_io.hpp"
#include "difnet/parser.hpp"
#include "difnet/reducer.hpp"
#include "difnet/replaceability.hpp"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct GlobalOptions {
  std::string mode;  // empty = keep the document's mode
  bool quiet = false;

  std::optional<difnet::UpdateMode> mode_override() const {
    if (mode.empty()) return std::nullopt;
    return difnet::parse_update_mode(mode);
  }
};

std::string failed_condition_list(
    const std::vector<std::pair<difnet::PsiKind, int>>& failed) {
  std::string out;
  for (std::size_t i = 0; i < failed.size(); ++i) {
    if (i > 0) out += ", ";
    out += difnet::psi_token(failed[i].first, failed[i].second);
  }
  return out;
}

void print_facts(const difnet::WitnessFacts& facts, std::ostream& os) {
  os << "facts:\n"
     << "  link added only by sync (vs diff):        " << (facts.edge_only_sync ? "yes" : "no") << "\n"
     << "  ...and missed by diff-then-net:           " << (facts.edge_not_diffnet ? "yes" : "no") << "\n"
     << "  feature adopted only by sync (vs net):    " << (facts.feature_only_sync ? "yes" : "no") << "\n"
     << "  diff-then-net result stable under both:   " << (facts.diffnet_stable ? "yes" : "no") << "\n"
     << "  net result stable under both:             " << (facts.net_stable ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for threshold diffusion and similarity-driven "
               "link formation on finite social networks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--mode", global.mode, "Override the document's update mode")
      ->check(CLI::IsMember({"literal", "irreflexive"}));
  app.add_flag("--quiet", global.quiet, "Suppress diagnostic output on stderr");

  std::string model_path, formula_text, seq_text, seq1_text, seq2_text, op_text;
  bool expand = false, trace = false;
  int multi_steps = 1;
  int max_len = 0;
  difnet::SearchConfig search_cfg;
  std::string omega_text = "1/2", tau_text = "1/2";

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula on a model");
  eval_cmd->add_option("model", model_path)->required();
  eval_cmd->add_option("formula", formula_text)->required();

  auto* update_cmd = app.add_subcommand("update", "Apply an update sequence");
  update_cmd->add_option("model", model_path)->required();
  update_cmd->add_option("--seq", seq_text, "Comma list of diff|net|sync")->required();

  auto* stabilize_cmd = app.add_subcommand("stabilize", "Iterate one update to its fixpoint");
  stabilize_cmd->add_option("model", model_path)->required();
  stabilize_cmd->add_option("--op", op_text)->required()
      ->check(CLI::IsMember({"diff", "net", "sync"}));

  auto* reduce_cmd = app.add_subcommand("reduce", "Translate a formula into the static fragment");
  reduce_cmd->add_option("--model", model_path, "Model supplying signature, thresholds and mode")
      ->required();
  reduce_cmd->add_option("formula", formula_text)->required();
  reduce_cmd->add_flag("--expand", expand, "Expand sim/pressure/psi macros everywhere");
  reduce_cmd->add_flag("--trace", trace, "Print each rewrite step on stderr");

  auto* equiv_cmd = app.add_subcommand("equiv", "Compare two update sequences on a model");
  equiv_cmd->add_option("model", model_path)->required();
  equiv_cmd->add_option("--seq1", seq1_text)->required();
  equiv_cmd->add_option("--seq2", seq2_text)->required();

  auto* replace_cmd = app.add_subcommand(
      "replace", "Find a diff/net sequence matching one synchronous update");
  replace_cmd->add_option("model", model_path)->required();

  auto* multi_cmd = app.add_subcommand(
      "replace-multi", "Stage-wise replacement of repeated synchronous updates");
  multi_cmd->add_option("model", model_path)->required();
  multi_cmd->add_option("--m", multi_steps, "Number of synchronous updates")->required();

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Brute-force search for a replacing sequence (cross-check for replace)");
  oracle_cmd->add_option("model", model_path)->required();
  oracle_cmd->add_option("--max-len", max_len, "Longest sequence tried (default agents+1)");

  auto* search_cmd = app.add_subcommand(
      "search-counterexample", "Find a model whose synchronous update no diff/net sequence matches");
  search_cmd->add_option("--agents", search_cfg.agent_count)->default_val(3);
  search_cmd->add_option("--features", search_cfg.feature_count)->default_val(3);
  search_cmd->add_option("--omega", omega_text, "Similarity threshold p/q")->default_val("1/2");
  search_cmd->add_option("--tau", tau_text, "Influenceability threshold p/q")->default_val("1/2");
  search_cmd->add_option("--seed", search_cfg.seed)->default_val(0);
  search_cmd->add_option("--budget", search_cfg.budget)->default_val(100000);
  search_cmd->add_flag("--exhaustive", search_cfg.exhaustive,
                       "Enumerate the whole model space instead of sampling");

  auto* dot_cmd = app.add_subcommand("export-dot", "Emit the influence graph as DOT text");
  dot_cmd->add_option("model", model_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitError;
  }

  try {
    const auto mode_override = global.mode_override();

    if (eval_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const bool truth = difnet::satisfies(model, difnet::parse(formula_text));
      std::cout << (truth ? "true" : "false") << "\n";
      return truth ? kExitTrue : kExitFalse;
    }

    if (update_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const difnet::Model result =
          difnet::apply_sequence(model, difnet::parse_update_sequence(seq_text));
      std::cout << difnet::model_to_json_text(result);
      return kExitTrue;
    }

    if (stabilize_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const auto [fixpoint, steps] =
          difnet::stabilize(model, difnet::parse_update_op(op_text));
      std::cout << difnet::model_to_json_text(fixpoint);
      if (!global.quiet) std::cerr << "steps: " << steps << "\n";
      return kExitTrue;
    }

    if (reduce_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const auto [reduced, rewrite_trace] = difnet::reduce(
          difnet::parse(formula_text), model.signature(), model.omega(),
          model.tau(), model.mode(), difnet::ReduceOptions{expand});
      if (trace && !global.quiet)
        for (const auto& step : rewrite_trace.steps)
          std::cerr << step.rule << ": " << difnet::print(step.before) << "  =>  "
                    << difnet::print(step.after) << "\n";
      std::cout << difnet::print(reduced) << "\n";
      return kExitTrue;
    }

    if (equiv_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const auto report = difnet::sequences_equivalent(
          model, difnet::parse_update_sequence(seq1_text),
          difnet::parse_update_sequence(seq2_text));
      if (report.equivalent) {
        std::cout << "equivalent\n";
        return kExitTrue;
      }
      std::cout << "differ at " << difnet::print(*report.witness) << "\n";
      return kExitFalse;
    }

    if (replace_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const auto verdict = difnet::find_replacement(model);
      if (verdict.replaceable) {
        std::cout << difnet::update_sequence_str(*verdict.sequence) << "\n";
        return kExitTrue;
      }
      std::cout << "irreplaceable: " << failed_condition_list(verdict.failed_conditions)
                << "\n";
      return kExitFalse;
    }

    if (multi_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const auto seq = difnet::find_replacement_multi(model, multi_steps);
      if (seq) {
        std::cout << difnet::update_sequence_str(*seq) << "\n";
        return kExitTrue;
      }
      std::cout << "none\n";
      if (!global.quiet)
        std::cerr << "some stage has no canonical replacement; a sequence for "
                     "the iterated update may still exist\n";
      return kExitFalse;
    }

    if (oracle_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      const int len = max_len > 0 ? max_len : model.agent_count() + 1;
      const auto seq = difnet::brute_force_replaceable(model, len);
      if (seq) {
        std::cout << difnet::update_sequence_str(*seq) << "\n";
        return kExitTrue;
      }
      std::cout << "none\n";
      return kExitFalse;
    }

    if (search_cmd->parsed()) {
      search_cfg.omega = difnet::Rational::parse(omega_text);
      search_cfg.tau = difnet::Rational::parse(tau_text);
      if (mode_override) search_cfg.mode = *mode_override;
      try {
        const auto result = difnet::search_irreplaceable(search_cfg);
        std::cout << difnet::model_to_json_text(result.witness);
        if (!global.quiet) {
          std::cerr << "candidates tested: " << result.candidates_tested << "\n";
          print_facts(result.facts, std::cerr);
        }
        return kExitTrue;
      } catch (const difnet::Error& e) {
        if (e.code() == difnet::ErrorCode::SearchExhausted) {
          if (!global.quiet) std::cerr << e.what() << "\n";
          return kExitFalse;
        }
        throw;
      }
    }

    if (dot_cmd->parsed()) {
      const difnet::Model model = difnet::load_model(model_path, mode_override);
      std::cout << difnet::export_dot(model);
      return kExitTrue;
    }
  } catch (const difnet::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
