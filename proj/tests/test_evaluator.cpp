#include <doctest.h>

#include <random>

#include "difnet/evaluator.hpp"
#include "difnet/parser.hpp"
#include "testutil.hpp"

using namespace difnet;
using testutil::mt_fixture;

TEST_CASE("dynamic operators evaluate on the updated model") {
  const Model mt = mt_fixture();
  CHECK(satisfies(mt, parse("[diff] has(b,f)")));
  CHECK(!satisfies(mt, parse("[diff] N(b,a)")));  // diffusion never adds links
  CHECK(satisfies(mt, parse("[net] N(b,a)")));
  CHECK(satisfies(mt, parse("[sync] N(a,a) & [sync] has(b,f)")));
  CHECK(!satisfies(mt, parse("has(b,f)")));
}

TEST_CASE("propositional connectives behave classically") {
  std::mt19937_64 rng(5150);
  const Signature sig = testutil::small_signature(3, 2);
  testutil::FormulaGenOptions opt;
  for (int trial = 0; trial < 200; ++trial) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const Model m = testutil::random_model(rng, 3, 2, omega, tau);
    const Formula x = testutil::random_formula(rng, sig, opt);
    const Formula y = testutil::random_formula(rng, sig, opt);
    const bool vx = satisfies(m, x);
    const bool vy = satisfies(m, y);
    CHECK(satisfies(m, Formula::neg(x)) == !vx);
    CHECK(satisfies(m, Formula::conj(x, y)) == (vx && vy));
    CHECK(satisfies(m, Formula::disj(x, y)) == (vx || vy));
    CHECK(satisfies(m, Formula::implies(x, y)) == (!vx || vy));
    CHECK(satisfies(m, Formula::iff(x, y)) == (vx == vy));
    CHECK(!satisfies(m, Formula::conj(x, Formula::neg(x))));
    CHECK(satisfies(m, Formula::after(UpdateOp::Diffusion, x)) ==
          satisfies(m.diffusion_update(), x));
  }
}

TEST_CASE("atomic relationships between the three updates") {
  std::mt19937_64 rng(6021);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const auto mode = trial % 2 ? UpdateMode::Literal : UpdateMode::Irreflexive;
    const Model m = testutil::random_model(rng, 1 + trial % 4, 1 + trial % 3,
                                           omega, tau, mode);
    for (const auto& a : m.agents()) {
      for (const auto& f : m.features()) {
        const Formula atom = Formula::has(a, f);
        const bool after_sync = satisfies(m, Formula::after(UpdateOp::Synchronous, atom));
        CHECK(after_sync == satisfies(m, Formula::after(UpdateOp::Diffusion, atom)));
        if (satisfies(m, Formula::after(UpdateOp::Network, atom))) CHECK(after_sync);
      }
      for (const auto& b : m.agents()) {
        const Formula atom = Formula::edge(a, b);
        const bool after_sync = satisfies(m, Formula::after(UpdateOp::Synchronous, atom));
        CHECK(after_sync == satisfies(m, Formula::after(UpdateOp::Network, atom)));
        if (satisfies(m, Formula::after(UpdateOp::Diffusion, atom))) CHECK(after_sync);
      }
    }
  }
}

TEST_CASE("atomic agreement coincides with structural equality") {
  const Model mt = mt_fixture();
  CHECK(atomic_agreement(mt, mt));

  const Model extra = Model::make({"a", "b"}, {"f", "g"}, {{"a", "b"}, {"b", "a"}},
                                  {{"a", {"f"}}}, Rational(1, 2), Rational(1, 2));
  CHECK(!atomic_agreement(mt, extra));

  std::mt19937_64 rng(733);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const Model m1 = testutil::random_model(rng, 2, 2, omega, tau);
    const Model m2 = testutil::random_model(rng, 2, 2, omega, tau);
    CHECK(atomic_agreement(m1, m2) == (m1 == m2));
  }

  const Model other_sig = Model::make({"a", "c"}, {"f", "g"}, {}, {},
                                      Rational(1, 2), Rational(1, 2));
  CHECK_THROWS_WITH_AS(atomic_agreement(mt, other_sig),
                       doctest::Contains("SignatureMismatch"), Error);
}

TEST_CASE("sequence comparison reports the first differing atom") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const Model m = testutil::random_model(rng, 3, 2, omega, tau);
    CHECK(sequences_equivalent(m, {UpdateOp::Network},
                               {UpdateOp::Network, UpdateOp::Network})
              .equivalent);
    const UpdateSequence s = {UpdateOp::Diffusion, UpdateOp::Synchronous};
    CHECK(sequences_equivalent(m, s, s).equivalent);
  }

  // A disconnected pair that is similar: sync links it, diffusion does not.
  const Model mt = mt_fixture();
  const auto report =
      sequences_equivalent(mt, {UpdateOp::Diffusion}, {UpdateOp::Synchronous});
  REQUIRE(!report.equivalent);
  REQUIRE(report.witness.has_value());
  CHECK(print(*report.witness) == "N(a,a)");  // first pair in atom order
  const Model lhs = apply_sequence(mt, {UpdateOp::Diffusion});
  const Model rhs = apply_sequence(mt, {UpdateOp::Synchronous});
  CHECK(satisfies(lhs, *report.witness) != satisfies(rhs, *report.witness));

  CHECK_THROWS_AS(sequences_equivalent(mt, {}, {UpdateOp::Diffusion}), Error);
}

TEST_CASE("witness selection is the lexicographically first difference") {
  std::mt19937_64 rng(991);
  int found = 0;
  for (int trial = 0; trial < 400 && found < 50; ++trial) {
    const auto [omega, tau] = testutil::random_thresholds(rng);
    const Model m = testutil::random_model(rng, 3, 2, omega, tau);
    const auto report = sequences_equivalent(m, {UpdateOp::Diffusion},
                                             {UpdateOp::Synchronous});
    if (report.equivalent) continue;
    ++found;
    const Model lhs = apply_sequence(m, {UpdateOp::Diffusion});
    const Model rhs = apply_sequence(m, {UpdateOp::Synchronous});
    bool seen_witness = false;
    for (const Formula& atom : all_atoms(m.signature())) {
      if (atom == *report.witness) {
        seen_witness = true;
        CHECK(satisfies(lhs, atom) != satisfies(rhs, atom));
        break;
      }
      CHECK(satisfies(lhs, atom) == satisfies(rhs, atom));
    }
    CHECK(seen_witness);
  }
  CHECK(found > 0);
}

TEST_CASE("macro atoms evaluate through the model predicates") {
  const Model mt = mt_fixture();
  CHECK(satisfies(mt, parse("sim(a,b)")));
  CHECK(satisfies(mt, parse("pressure(b,f)")));
  CHECK(!satisfies(mt, parse("pressure(a,f)")));
  CHECK_THROWS_WITH_AS(satisfies(mt, parse("has(zz,f)")),
                       doctest::Contains("UnknownAgent"), Error);
  CHECK_THROWS_WITH_AS(satisfies(mt, parse("has(a,zz)")),
                       doctest::Contains("UnknownFeature"), Error);
}
