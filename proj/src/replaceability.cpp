#include "difnet/replaceability.hpp"

#include <random>
#include <string>
#include <unordered_set>

#include "difnet/expand.hpp"

namespace difnet {

UpdateSequence canonical_sequence(PsiKind kind, int steps) {
  switch (kind) {
    case PsiKind::Diff: return {UpdateOp::Diffusion};
    case PsiKind::Net: return {UpdateOp::Network};
    case PsiKind::DiffNet: return {UpdateOp::Diffusion, UpdateOp::Network};
    case PsiKind::NetDiff: {
      UpdateSequence seq{UpdateOp::Network};
      for (int i = 0; i < steps; ++i) seq.push_back(UpdateOp::Diffusion);
      return seq;
    }
  }
  throw Error(ErrorCode::BadKind, "unknown canonical kind");
}

bool check_psi(const Model& model, PsiKind kind, int steps) {
  if (kind == PsiKind::NetDiff && (steps < 0 || steps >= model.agent_count()))
    throw Error(ErrorCode::BadIndex,
                "step count " + std::to_string(steps) + " outside [0, agent count)");
  return satisfies(model, psi_formula(kind, steps, model.signature(),
                                      model.omega(), model.tau(), model.mode()));
}

ReplaceabilityVerdict find_replacement(const Model& model) {
  std::vector<std::pair<PsiKind, int>> order = {
      {PsiKind::Diff, 0}, {PsiKind::Net, 0}, {PsiKind::DiffNet, 0}};
  for (int n = 1; n < model.agent_count(); ++n) order.emplace_back(PsiKind::NetDiff, n);

  const Model target = model.synchronous_update();
  ReplaceabilityVerdict verdict{false, std::nullopt, {}};
  for (const auto& [kind, steps] : order) {
    if (check_psi(model, kind, steps)) {
      UpdateSequence seq = canonical_sequence(kind, steps);
      if (apply_sequence(model, seq) != target)
        throw Error(ErrorCode::InvariantViolation,
                    "condition formula accepted a sequence that does not "
                    "reproduce the synchronous update");
      return {true, std::move(seq), {}};
    }
    verdict.failed_conditions.emplace_back(kind, steps);
  }
  return verdict;
}

std::optional<UpdateSequence> brute_force_replaceable(const Model& model,
                                                      int max_len,
                                                      std::int64_t candidate_cap) {
  if (max_len < 1) throw Error(ErrorCode::BadIndex, "max_len must be positive");
  if (max_len >= 62 || (std::int64_t{1} << (max_len + 1)) > candidate_cap)
    throw Error(ErrorCode::BudgetExceeded,
                "2^" + std::to_string(max_len + 1) + " candidate sequences exceed the cap");

  const Model target = model.synchronous_update();
  for (int len = 1; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      UpdateSequence seq(len);
      for (int i = 0; i < len; ++i)
        seq[i] = ((bits >> (len - 1 - i)) & 1u) ? UpdateOp::Network
                                                : UpdateOp::Diffusion;
      if (apply_sequence(model, seq) == target) return seq;
    }
  }
  return std::nullopt;
}

std::optional<std::pair<PsiKind, int>> classify_sequence(const Model& model,
                                                         const UpdateSequence& seq) {
  if (seq.empty()) throw Error(ErrorCode::EmptySequence, "empty update sequence");
  for (const UpdateOp op : seq)
    if (op == UpdateOp::Synchronous)
      throw Error(ErrorCode::BadKind, "sequence must contain only diff/net updates");

  const Model target = model.synchronous_update();
  if (apply_sequence(model, seq) != target) return std::nullopt;

  std::vector<std::pair<PsiKind, int>> candidates = {
      {PsiKind::Diff, 0}, {PsiKind::Net, 0}, {PsiKind::DiffNet, 0}};
  for (int n = 1; n <= model.agent_count(); ++n)
    candidates.emplace_back(PsiKind::NetDiff, n);
  for (const auto& candidate : candidates)
    if (apply_sequence(model, canonical_sequence(candidate.first, candidate.second)) ==
        target)
      return candidate;
  throw Error(ErrorCode::InvariantViolation,
              "sequence matches the synchronous update but no canonical shape does");
}

std::optional<UpdateSequence> find_replacement_multi(const Model& model, int steps) {
  if (steps < 1) throw Error(ErrorCode::BadIndex, "step count must be positive");
  UpdateSequence combined;
  Model stage = model;
  for (int i = 0; i < steps; ++i) {
    ReplaceabilityVerdict verdict = find_replacement(stage);
    if (!verdict.replaceable) return std::nullopt;
    combined.insert(combined.end(), verdict.sequence->begin(), verdict.sequence->end());
    stage = stage.synchronous_update();
  }
  if (apply_sequence(model, combined) != stage)
    throw Error(ErrorCode::InvariantViolation,
                "stage-wise replacement does not reproduce the iterated update");
  return combined;
}

WitnessFacts witness_facts(const Model& model) {
  const Model after_diff = model.diffusion_update();
  const Model after_net = model.network_update();
  const Model after_sync = model.synchronous_update();
  const Model after_diffnet = after_diff.network_update();

  WitnessFacts facts;
  const int n = model.agent_count();
  const int k = model.feature_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!after_sync.has_edge_at(a, b) || after_diff.has_edge_at(a, b)) continue;
      facts.edge_only_sync = true;
      if (!after_diffnet.has_edge_at(a, b)) facts.edge_not_diffnet = true;
    }
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < k; ++f)
      if (after_sync.agent_has_at(a, f) && !after_net.agent_has_at(a, f))
        facts.feature_only_sync = true;
  facts.diffnet_stable = after_diffnet.diffusion_update() == after_diffnet &&
                         after_diffnet.network_update() == after_diffnet;
  facts.net_stable = after_net.diffusion_update() == after_net &&
                     after_net.network_update() == after_net;
  return facts;
}

std::vector<std::string> default_agent_names(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    if (i < 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("a" + std::to_string(i));
  }
  return names;
}

std::vector<std::string> default_feature_names(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) {
    if (i < 20)
      names.push_back(std::string(1, static_cast<char>('f' + i)));
    else
      names.push_back("f" + std::to_string(i));
  }
  return names;
}

SearchResult search_irreplaceable(const SearchConfig& cfg) {
  if (cfg.agent_count < 1 || cfg.feature_count < 1)
    throw Error(ErrorCode::BadIndex, "agent and feature counts must be positive");
  if (cfg.budget < 1) throw Error(ErrorCode::BadIndex, "budget must be positive");

  const Signature sig = Signature::make(default_agent_names(cfg.agent_count),
                                        default_feature_names(cfg.feature_count));
  const int n = cfg.agent_count;
  const int k = cfg.feature_count;
  const int edge_bits = n * n;
  const int val_bits = n * k;
  const int total_bits = edge_bits + val_bits;
  if (edge_bits > 64 || val_bits > 64)
    throw Error(ErrorCode::BadIndex,
                "search supports at most 8 agents and 64 valuation bits");
  if (cfg.exhaustive && total_bits > 24)
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive search needs edge+valuation bits <= 24, got " +
                    std::to_string(total_bits));

  std::mt19937_64 rng(cfg.seed);
  std::unordered_set<std::uint64_t> seen;
  const bool dedup = !cfg.exhaustive && total_bits <= 48;

  std::optional<SearchResult> fallback;
  std::int64_t tested = 0;
  std::uint64_t counter = 0;
  const std::uint64_t space =
      cfg.exhaustive ? (std::uint64_t{1} << total_bits) : 0;
  std::int64_t draws = 0;
  const std::int64_t draw_cap = cfg.budget * 64;

  while (tested < cfg.budget) {
    std::uint64_t edge_mask, val_mask;
    if (cfg.exhaustive) {
      if (counter >= space) break;
      val_mask = counter & ((std::uint64_t{1} << val_bits) - 1);
      edge_mask = counter >> val_bits;
      ++counter;
    } else {
      if (++draws > draw_cap) break;  // tiny spaces: sampling has seen it all
      edge_mask = rng() & ((edge_bits == 64 ? ~std::uint64_t{0}
                                            : (std::uint64_t{1} << edge_bits) - 1));
      val_mask = rng() & ((val_bits == 64 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << val_bits) - 1));
      if (dedup && !seen.insert((edge_mask << val_bits) | val_mask).second) continue;
    }
    ++tested;

    std::vector<std::uint64_t> in_masks(n), val_masks(n);
    for (int b = 0; b < n; ++b)
      in_masks[b] = (edge_mask >> (b * n)) & ((std::uint64_t{1} << n) - 1);
    for (int a = 0; a < n; ++a)
      val_masks[a] = (val_mask >> (a * k)) & ((std::uint64_t{1} << k) - 1);
    const Model candidate = Model::from_bitmasks(sig, std::move(in_masks),
                                                 std::move(val_masks), cfg.omega,
                                                 cfg.tau, cfg.mode);

    if (find_replacement(candidate).replaceable) continue;
    if (brute_force_replaceable(candidate, n + 1))
      throw Error(ErrorCode::InvariantViolation,
                  "conditions report irreplaceable but the oracle found a sequence");
    SearchResult result{candidate, witness_facts(candidate), tested};
    if (result.facts.all()) return result;
    if (!fallback) fallback = std::move(result);
  }

  if (fallback) {
    fallback->candidates_tested = tested;
    return *fallback;
  }
  throw Error(ErrorCode::SearchExhausted,
              "no irreplaceable model within " + std::to_string(tested) + " candidates");
}

}  // namespace difnet
