#include <doctest.h>

#include "difnet/evaluator.hpp"
#include "difnet/expand.hpp"
#include "testutil.hpp"

using namespace difnet;
using testutil::mt_fixture;

namespace {

int disjunct_count(const Formula& f) {
  if (const auto* b = f.as<BinaryNode>(); b && b->op == BinaryOp::Or)
    return disjunct_count(b->lhs) + disjunct_count(b->rhs);
  return 1;
}

}  // namespace

TEST_CASE("pressure expansion evaluates like the model predicate") {
  const Signature sig = testutil::small_signature(2, 2);
  const Formula expansion =
      expand_pressure("b", "f", sig, Rational(1, 2));
  CHECK(satisfies(mt_fixture(), expansion));           // 1/1 >= 1/2
  CHECK(!satisfies(mt_fixture(), expand_pressure("a", "f", sig, Rational(1, 2))));

  // Unanimity: only exact-neighborhood disjuncts with G = N survive, one per
  // non-empty subset of agents.
  const Formula unanimous = expand_pressure("b", "f", sig, Rational(1, 1));
  CHECK(disjunct_count(unanimous) == 3);

  CHECK_THROWS_AS(expand_pressure("zz", "f", sig, Rational(1, 2)), Error);
  CHECK_THROWS_AS(expand_pressure("a", "zz", sig, Rational(1, 2)), Error);
}

TEST_CASE("similarity expansion evaluates like the model predicate") {
  const Signature sig = testutil::small_signature(2, 2);
  CHECK(satisfies(mt_fixture(), expand_similarity("a", "b", sig, Rational(1, 2))));
  CHECK(!satisfies(mt_fixture(), expand_similarity("a", "b", sig, Rational(1, 1))));

  // Zero threshold: the empty agreement set qualifies, making it a tautology.
  const Formula lax = expand_similarity("a", "b", sig, Rational(0, 1));
  testutil::for_all_models(2, 2, Rational(1, 2), Rational(1, 2),
                           UpdateMode::Literal,
                           [&](const Model& m) { CHECK(satisfies(m, lax)); });

  // Reflexive instance holds everywhere.
  const Formula self = expand_similarity("a", "a", sig, Rational(1, 1));
  testutil::for_all_models(2, 2, Rational(1, 2), Rational(1, 2),
                           UpdateMode::Literal,
                           [&](const Model& m) { CHECK(satisfies(m, self)); });
}

TEST_CASE("expansion sizes stay within the subset bounds") {
  for (int agents = 1; agents <= 3; ++agents) {
    const Signature sig = testutil::small_signature(agents, 2);
    for (const auto& tau : testutil::threshold_palette()) {
      const Formula f = expand_pressure(sig.agents[0], "f", sig, tau);
      CHECK(disjunct_count(f) <= 27);  // 3^3
    }
  }
  for (int features = 1; features <= 3; ++features) {
    const Signature sig = testutil::small_signature(2, features);
    for (const auto& omega : testutil::threshold_palette()) {
      const Formula f = expand_similarity("a", "b", sig, omega);
      CHECK(disjunct_count(f) <= (1 << features));
    }
  }
}

TEST_CASE("expansions agree with the predicates on every small model") {
  for (int agents = 1; agents <= 3; ++agents) {
    for (int features = 1; features <= 2; ++features) {
      const Signature sig = testutil::small_signature(agents, features);
      for (const auto& omega : testutil::threshold_palette()) {
        for (const auto& tau : testutil::threshold_palette()) {
          std::vector<Formula> pressure_forms, sim_forms;
          for (const auto& a : sig.agents) {
            pressure_forms.push_back(expand_pressure(a, sig.features[0], sig, tau));
            sim_forms.push_back(expand_similarity(sig.agents[0], a, sig, omega));
          }
          testutil::for_all_models(
              agents, features, omega, tau, UpdateMode::Literal,
              [&](const Model& m) {
                for (int i = 0; i < agents; ++i) {
                  CHECK(satisfies(m, pressure_forms[i]) ==
                        m.has_pressure(sig.agents[i], sig.features[0]));
                  CHECK(satisfies(m, sim_forms[i]) ==
                        m.are_similar(sig.agents[0], sig.agents[i]));
                }
              });
        }
      }
    }
  }
}

TEST_CASE("condition formulas print exactly as constructed") {
  const Signature sig = testutil::small_signature(2, 1);
  const Rational half(1, 2);

  CHECK(print(psi_formula(PsiKind::Diff, 0, sig, half, half)) ==
        "(N(a,a) | !sim(a,a)) & (N(a,b) | !sim(a,b)) & "
        "(N(b,a) | !sim(b,a)) & (N(b,b) | !sim(b,b))");
  CHECK(print(psi_formula(PsiKind::Net, 0, sig, half, half)) ==
        "(has(a,f) | !pressure(a,f)) & (has(b,f) | !pressure(b,f))");
  CHECK(print(psi_formula(PsiKind::DiffNet, 0, sig, half, half)) ==
        "(!N(a,a) -> (sim(a,a) <-> [diff] sim(a,a))) & "
        "(!N(a,b) -> (sim(a,b) <-> [diff] sim(a,b))) & "
        "(!N(b,a) -> (sim(b,a) <-> [diff] sim(b,a))) & "
        "(!N(b,b) -> (sim(b,b) <-> [diff] sim(b,b)))");
  CHECK(print(psi_formula(PsiKind::NetDiff, 1, sig, half, half)) ==
        "(!has(a,f) -> (pressure(a,f) <-> [net] pressure(a,f))) & "
        "(!has(b,f) -> (pressure(b,f) <-> [net] pressure(b,f)))");
  CHECK(print(psi_formula(PsiKind::NetDiff, 2, sig, half, half)) ==
        "(!has(a,f) -> (pressure(a,f) <-> [net] pressure(a,f) | "
        "[net] [diff] pressure(a,f))) & "
        "(!has(b,f) -> (pressure(b,f) <-> [net] pressure(b,f) | "
        "[net] [diff] pressure(b,f)))");
  // The zero-step member carries the empty disjunction.
  CHECK(print(psi_formula(PsiKind::NetDiff, 0, sig, half, half)) ==
        "(!has(a,f) -> (pressure(a,f) <-> false)) & "
        "(!has(b,f) -> (pressure(b,f) <-> false))");

  // In irreflexive mode the pair conjunctions skip a == b.
  CHECK(print(psi_formula(PsiKind::Diff, 0, sig, half, half,
                          UpdateMode::Irreflexive)) ==
        "(N(a,b) | !sim(a,b)) & (N(b,a) | !sim(b,a))");
}

TEST_CASE("the zero-step member is logically the net condition") {
  for (const auto& omega : testutil::threshold_palette())
    for (const auto& tau : testutil::threshold_palette())
      testutil::for_all_models(
          2, 2, omega, tau, UpdateMode::Literal, [&](const Model& m) {
            const Signature& sig = m.signature();
            CHECK(satisfies(m, psi_formula(PsiKind::NetDiff, 0, sig, omega, tau)) ==
                  satisfies(m, psi_formula(PsiKind::Net, 0, sig, omega, tau)));
          });
}

TEST_CASE("psi shape validation") {
  const Signature sig = testutil::small_signature(2, 1);
  CHECK_THROWS_AS(psi_formula(PsiKind::NetDiff, -1, sig, Rational(1, 2), Rational(1, 2)),
                  Error);
}
