#include "difnet/expand.hpp"

#include <bit>
#include <cstdint>

namespace difnet {

Formula expand_pressure(const std::string& agent, const std::string& feature,
                        const Signature& sig, const Rational& tau) {
  sig.agent_index(agent);
  sig.feature_index(feature);
  const int n = static_cast<int>(sig.agents.size());
  if (n > 16)
    throw Error(ErrorCode::BudgetExceeded, "pressure expansion over more than 16 agents");

  std::vector<Formula> disjuncts;
  const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t nbhd = 1; nbhd <= all; ++nbhd) {
    const int total = std::popcount(nbhd);
    for (std::uint32_t grp = 0; grp <= all; ++grp) {
      if ((grp & ~nbhd) != 0) continue;
      if (!fraction_at_least(std::popcount(grp), total, tau)) continue;
      std::vector<Formula> parts;
      for (int b = 0; b < n; ++b)
        if ((nbhd >> b) & 1u) parts.push_back(Formula::edge(sig.agents[b], agent));
      for (int b = 0; b < n; ++b)
        if (!((nbhd >> b) & 1u))
          parts.push_back(Formula::neg(Formula::edge(sig.agents[b], agent)));
      for (int b = 0; b < n; ++b)
        if ((grp >> b) & 1u) parts.push_back(Formula::has(sig.agents[b], feature));
      disjuncts.push_back(conj_all(parts));
    }
  }
  return disj_all(disjuncts);
}

Formula expand_similarity(const std::string& a, const std::string& b,
                          const Signature& sig, const Rational& omega) {
  sig.agent_index(a);
  sig.agent_index(b);
  const int k = static_cast<int>(sig.features.size());
  if (k > 16)
    throw Error(ErrorCode::BudgetExceeded, "similarity expansion over more than 16 features");

  std::vector<Formula> disjuncts;
  const std::uint32_t all = (1u << k) - 1;
  for (std::uint32_t set = 0; set <= all; ++set) {
    if (!fraction_at_least(std::popcount(set), k, omega)) continue;
    std::vector<Formula> parts;
    for (int f = 0; f < k; ++f)
      if ((set >> f) & 1u)
        parts.push_back(Formula::iff(Formula::has(a, sig.features[f]),
                                     Formula::has(b, sig.features[f])));
    disjuncts.push_back(conj_all(parts));
  }
  return disj_all(disjuncts);
}

namespace {

Formula psi_diff(const Signature& sig, UpdateMode mode) {
  std::vector<Formula> conjuncts;
  for (const auto& a : sig.agents)
    for (const auto& b : sig.agents) {
      if (mode == UpdateMode::Irreflexive && a == b) continue;
      conjuncts.push_back(
          Formula::disj(Formula::edge(a, b), Formula::neg(Formula::sim(a, b))));
    }
  return conj_all(conjuncts);
}

Formula psi_net(const Signature& sig) {
  std::vector<Formula> conjuncts;
  for (const auto& a : sig.agents)
    for (const auto& f : sig.features)
      conjuncts.push_back(
          Formula::disj(Formula::has(a, f), Formula::neg(Formula::pressure(a, f))));
  return conj_all(conjuncts);
}

Formula psi_diffnet(const Signature& sig, UpdateMode mode) {
  std::vector<Formula> conjuncts;
  for (const auto& a : sig.agents)
    for (const auto& b : sig.agents) {
      if (mode == UpdateMode::Irreflexive && a == b) continue;
      conjuncts.push_back(Formula::implies(
          Formula::neg(Formula::edge(a, b)),
          Formula::iff(Formula::sim(a, b),
                       Formula::after(UpdateOp::Diffusion, Formula::sim(a, b)))));
    }
  return conj_all(conjuncts);
}

Formula psi_netdiff(int steps, const Signature& sig) {
  std::vector<Formula> conjuncts;
  for (const auto& a : sig.agents)
    for (const auto& f : sig.features) {
      std::vector<Formula> stages;
      for (int i = 0; i < steps; ++i) {
        Formula chain = Formula::pressure(a, f);
        for (int d = 0; d < i; ++d) chain = Formula::after(UpdateOp::Diffusion, chain);
        stages.push_back(Formula::after(UpdateOp::Network, chain));
      }
      conjuncts.push_back(Formula::implies(
          Formula::neg(Formula::has(a, f)),
          Formula::iff(Formula::pressure(a, f), disj_all(stages))));
    }
  return conj_all(conjuncts);
}

}  // namespace

Formula psi_formula(PsiKind kind, int steps, const Signature& sig,
                    const Rational& /*omega*/, const Rational& /*tau*/,
                    UpdateMode mode) {
  switch (kind) {
    case PsiKind::Diff: return psi_diff(sig, mode);
    case PsiKind::Net: return psi_net(sig);
    case PsiKind::DiffNet: return psi_diffnet(sig, mode);
    case PsiKind::NetDiff:
      if (steps < 0) throw Error(ErrorCode::BadIndex, "negative step count");
      return psi_netdiff(steps, sig);
  }
  throw Error(ErrorCode::BadKind, "unknown condition-formula kind");
}

}  // namespace difnet
