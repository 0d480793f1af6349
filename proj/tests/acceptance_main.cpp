// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance and bound is pinned here; the suite is fully
// deterministic (fixed seeds).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "difnet/evaluator.hpp"
#include "difnet/expand.hpp"
#include "difnet/model_io.hpp"
#include "difnet/parser.hpp"
#include "difnet/reducer.hpp"
#include "difnet/replaceability.hpp"
#include "testutil.hpp"

using namespace difnet;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

std::vector<Rational> axiom_thresholds() {
  return {Rational(1, 3), Rational(1, 2), Rational(1, 1)};
}

// The twelve one-step rewrite laws as (lhs, rhs) biconditionals on a model.
// In irreflexive mode the edge laws range over a != b only; the sim-form
// right-hand side does not describe self pairs there.
bool axioms_hold(const Model& m, std::mt19937_64& rng, long long& failures) {
  const Signature& sig = m.signature();
  bool ok = true;
  auto check = [&](const Formula& l, const Formula& r) {
    if (satisfies(m, l) != satisfies(m, r)) {
      ok = false;
      ++failures;
    }
  };
  for (const auto& a : sig.agents) {
    for (const auto& b : sig.agents) {
      if (m.mode() == UpdateMode::Irreflexive && a == b) continue;
      const Formula edge = Formula::edge(a, b);
      const Formula linked = Formula::disj(edge, Formula::sim(a, b));
      check(Formula::after(UpdateOp::Network, edge), linked);
      check(Formula::after(UpdateOp::Diffusion, edge), edge);
      check(Formula::after(UpdateOp::Synchronous, edge), linked);
    }
    for (const auto& f : sig.features) {
      const Formula feat = Formula::has(a, f);
      const Formula pressed = Formula::disj(feat, Formula::pressure(a, f));
      check(Formula::after(UpdateOp::Network, feat), feat);
      check(Formula::after(UpdateOp::Diffusion, feat), pressed);
      check(Formula::after(UpdateOp::Synchronous, feat), pressed);
    }
  }
  testutil::FormulaGenOptions opt;
  opt.max_depth = 3;
  opt.max_dyn_depth = 2;
  for (int i = 0; i < 3; ++i) {
    const Formula x = testutil::random_formula(rng, sig, opt);
    const Formula y = testutil::random_formula(rng, sig, opt);
    for (const UpdateOp op :
         {UpdateOp::Diffusion, UpdateOp::Network, UpdateOp::Synchronous}) {
      check(Formula::after(op, Formula::conj(x, y)),
            Formula::conj(Formula::after(op, x), Formula::after(op, y)));
      check(Formula::after(op, Formula::neg(x)),
            Formula::neg(Formula::after(op, x)));
    }
  }
  return ok;
}

bool criterion_axioms(std::string& detail) {
  long long failures = 0;
  long long models = 0;
  std::mt19937_64 rng(101);
  for (const auto mode : {UpdateMode::Literal, UpdateMode::Irreflexive})
    for (const auto& omega : axiom_thresholds())
      for (const auto& tau : axiom_thresholds())
        testutil::for_all_models(2, 1, omega, tau, mode, [&](const Model& m) {
          ++models;
          axioms_hold(m, rng, failures);
        });
  const long long exhaustive_models = models;
  for (int i = 0; i < 1000; ++i) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const auto mode = i % 2 ? UpdateMode::Literal : UpdateMode::Irreflexive;
    const Model m = testutil::random_model(rng, 1 + static_cast<int>(testutil::rand_below(rng, 4)),
                                           1 + static_cast<int>(testutil::rand_below(rng, 3)),
                                           omega, tau, mode);
    ++models;
    axioms_hold(m, rng, failures);
  }
  detail = std::to_string(models) + " models (" + std::to_string(exhaustive_models) +
           " exhaustive), " + std::to_string(failures) + " axiom failures";
  return failures == 0;
}

bool criterion_translation(std::string& detail) {
  std::mt19937_64 rng(202);
  const Signature sig = testutil::small_signature(3, 2);
  testutil::FormulaGenOptions opt;
  opt.max_depth = 4;
  opt.max_dyn_depth = 4;
  opt.allow_psi = true;
  long long failures = 0;
  for (int i = 0; i < 500; ++i) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const auto mode = i % 2 ? UpdateMode::Literal : UpdateMode::Irreflexive;
    const Model m = testutil::random_model(rng, 3, 2, omega, tau, mode);
    const Formula f = testutil::random_formula(rng, sig, opt);
    const auto [reduced, trace] = reduce(f, sig, m.omega(), m.tau(), m.mode(), {});
    if (!is_static(reduced)) ++failures;
    if (satisfies(m, f) != satisfies(m, reduced)) ++failures;
    const auto [again, trace2] = reduce(reduced, sig, m.omega(), m.tau(), m.mode(), {});
    if (!(again == reduced) || !trace2.steps.empty()) ++failures;
  }
  detail = "500 model/formula pairs, " + std::to_string(failures) + " failures";
  return failures == 0;
}

// Shared corpus walk for the condition laws and the oracle agreement:
// every model with 1..3 agents and 1..2 features, thresholds from
// {1/3, 1/2, 2/3, 1}.
void walk_corpus(const std::function<void(const Model&)>& visit) {
  for (int agents = 1; agents <= 3; ++agents)
    for (int features = 1; features <= 2; ++features)
      for (const auto& omega : testutil::threshold_palette())
        for (const auto& tau : testutil::threshold_palette())
          testutil::for_all_models(agents, features, omega, tau,
                                   UpdateMode::Literal, visit);
}

bool criterion_conditions(std::string& detail) {
  long long failures = 0;
  long long models = 0;
  walk_corpus([&](const Model& m) {
    ++models;
    const Model target = m.synchronous_update();
    std::vector<std::pair<PsiKind, int>> kinds = {
        {PsiKind::Diff, 0}, {PsiKind::Net, 0}, {PsiKind::DiffNet, 0}};
    for (int n = 0; n < m.agent_count(); ++n) kinds.emplace_back(PsiKind::NetDiff, n);
    for (const auto& [kind, steps] : kinds)
      if (check_psi(m, kind, steps) !=
          (apply_sequence(m, canonical_sequence(kind, steps)) == target))
        ++failures;
  });
  detail = std::to_string(models) + " models x all condition shapes, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_characterization(std::string& detail) {
  long long failures = 0;
  long long models = 0;
  long long replaceable = 0;
  walk_corpus([&](const Model& m) {
    ++models;
    const auto verdict = find_replacement(m);
    const auto oracle = brute_force_replaceable(m, m.agent_count() + 1);
    if (verdict.replaceable != oracle.has_value()) ++failures;
    if (verdict.replaceable) {
      ++replaceable;
      if (!(apply_sequence(m, *verdict.sequence) == m.synchronous_update()))
        ++failures;
    }
    if (oracle &&
        !(apply_sequence(m, *oracle) == m.synchronous_update()))
      ++failures;
  });
  detail = std::to_string(models) + " models (" + std::to_string(replaceable) +
           " replaceable), " + std::to_string(failures) + " disagreements";
  return failures == 0;
}

bool criterion_classification(std::string& detail) {
  std::mt19937_64 rng(505);
  long long failures = 0;
  long long matches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const Model m = testutil::random_model(rng, 3, 2, omega, tau);
    const Model target = m.synchronous_update();
    for (int len = 1; len <= 5; ++len) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
        UpdateSequence s(len);
        for (int j = 0; j < len; ++j)
          s[j] = ((bits >> (len - 1 - j)) & 1u) ? UpdateOp::Network
                                                : UpdateOp::Diffusion;
        try {
          const auto kind = classify_sequence(m, s);
          if (!kind) {
            if (apply_sequence(m, s) == target) ++failures;
            continue;
          }
          ++matches;
          if (!(apply_sequence(m, canonical_sequence(kind->first, kind->second)) ==
                target))
            ++failures;
        } catch (const Error&) {
          ++failures;  // InvariantViolation must never fire here
        }
      }
    }
  }
  detail = "200 models x 62 sequences (" + std::to_string(matches) +
           " matches), " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool criterion_witness_search(std::string& detail) {
  SearchConfig cfg;  // 3 agents, 3 features, omega = tau = 1/2, literal
  cfg.seed = 0;
  cfg.budget = 100000;
  const auto result = search_irreplaceable(cfg);
  const auto verdict = find_replacement(result.witness);
  const bool no_sequence = !brute_force_replaceable(result.witness, 4).has_value();
  const bool ok = !verdict.replaceable &&
                  verdict.failed_conditions.size() == 5 && no_sequence &&
                  result.facts.all();
  detail = "witness after " + std::to_string(result.candidates_tested) +
           " candidates; all conditions fail: " +
           (verdict.replaceable ? "no" : "yes") + "; proof facts: " +
           (result.facts.all() ? "5/5" : "incomplete");
  return ok;
}

bool criterion_update_laws(std::string& detail) {
  std::mt19937_64 rng(707);
  long long failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const auto mode = i % 2 ? UpdateMode::Literal : UpdateMode::Irreflexive;
    const int agents = 1 + static_cast<int>(testutil::rand_below(rng, 4));
    const int features = 1 + static_cast<int>(testutil::rand_below(rng, 3));
    const Model m = testutil::random_model(rng, agents, features, omega, tau, mode);
    for (const auto& a : m.agents()) {
      for (const auto& f : m.features()) {
        const Formula atom = Formula::has(a, f);
        const bool sync = satisfies(m, Formula::after(UpdateOp::Synchronous, atom));
        if (sync != satisfies(m, Formula::after(UpdateOp::Diffusion, atom))) ++failures;
        if (satisfies(m, Formula::after(UpdateOp::Network, atom)) && !sync) ++failures;
      }
      for (const auto& b : m.agents()) {
        const Formula atom = Formula::edge(a, b);
        const bool sync = satisfies(m, Formula::after(UpdateOp::Synchronous, atom));
        if (sync != satisfies(m, Formula::after(UpdateOp::Network, atom))) ++failures;
        if (satisfies(m, Formula::after(UpdateOp::Diffusion, atom)) && !sync) ++failures;
      }
    }
    if (!(apply_sequence(m, {UpdateOp::Network, UpdateOp::Network}) ==
          apply_sequence(m, {UpdateOp::Network})))
      ++failures;
    const int n = m.agent_count();
    if (!(apply_sequence(m, UpdateSequence(n, UpdateOp::Diffusion)) ==
          apply_sequence(m, UpdateSequence(n + 1, UpdateOp::Diffusion))))
      ++failures;
  }
  detail = "1000 models, " + std::to_string(failures) + " law failures";
  return failures == 0;
}

bool criterion_multi_step(std::string& detail) {
  std::mt19937_64 rng(808);
  long long failures = 0;
  long long two_step = 0, three_step = 0;
  long long attempts = 0;
  while ((two_step < 200 || three_step < 200) && attempts < 100000) {
    ++attempts;
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const Model m = testutil::random_model(rng, 3, 2, omega, tau);
    for (const int steps : {2, 3}) {
      if ((steps == 2 ? two_step : three_step) >= 200) continue;
      const auto seq = find_replacement_multi(m, steps);
      if (!seq) continue;  // the stage-wise hypothesis does not hold
      ++(steps == 2 ? two_step : three_step);
      Model target = m;
      for (int i = 0; i < steps; ++i) target = target.synchronous_update();
      if (!(apply_sequence(m, *seq) == target)) ++failures;
    }
  }
  detail = std::to_string(two_step) + " two-step + " + std::to_string(three_step) +
           " three-step replacements verified, " + std::to_string(failures) +
           " failures";
  return failures == 0 && two_step >= 200 && three_step >= 200;
}

bool criterion_round_trips(std::string& detail) {
  std::mt19937_64 rng(909);
  const Signature sig = testutil::small_signature(3, 2);
  testutil::FormulaGenOptions opt;
  opt.allow_psi = true;
  long long failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = testutil::random_formula(rng, sig, opt);
    if (!(parse(print(f)) == f)) ++failures;
  }
  int documents = 0;
  for (const char* name :
       {"mt.json", "witness_3x3.json", "netdiff1.json", "stagefail.json"}) {
    ++documents;
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name, std::ios::binary);
    if (!in) {
      ++failures;
      continue;
    }
    const std::string text{std::istreambuf_iterator<char>(in),
                           std::istreambuf_iterator<char>()};
    if (model_to_json_text(model_from_json_text(text)) != text) ++failures;
  }
  detail = "1000 formulas + " + std::to_string(documents) + " documents, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"one-step rewrite laws sound (exhaustive 2x1 both modes + 1000 random)",
       criterion_axioms},
      {"dynamic-to-static translation correct, static, idempotent (500 pairs)",
       criterion_translation},
      {"condition formulas characterize one-step equivalence (exhaustive corpus)",
       criterion_conditions},
      {"replacement procedure agrees with brute-force oracle (exhaustive corpus)",
       criterion_characterization},
      {"matching sequences always classify into the canonical family",
       criterion_classification},
      {"search finds a confirmed irreplaceable witness at 3x3, 1/2 thresholds",
       criterion_witness_search},
      {"atomic update laws and stabilization bounds (1000 random models)",
       criterion_update_laws},
      {"staged multi-step replacements reproduce the iterated update",
       criterion_multi_step},
      {"formula and document round-trips are exact", criterion_round_trips},
  };

  int failed = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%zu/%zu] %-74s %s (%.1fs; %s)\n", i + 1, criteria.size(),
                criteria[i].name.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start)
          .count();
  std::printf("%d/%zu criteria passed in %.1fs\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
