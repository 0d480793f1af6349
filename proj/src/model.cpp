#include "difnet/model.hpp"

#include <bit>

namespace difnet {

const char* update_mode_token(UpdateMode mode) {
  return mode == UpdateMode::Literal ? "literal" : "irreflexive";
}

UpdateMode parse_update_mode(const std::string& token) {
  if (token == "literal") return UpdateMode::Literal;
  if (token == "irreflexive") return UpdateMode::Irreflexive;
  throw Error(ErrorCode::ParseError,
              "expected literal|irreflexive, got \"" + token + "\"");
}

Model Model::make(std::vector<std::string> agents,
                  std::vector<std::string> features,
                  std::vector<std::pair<std::string, std::string>> influence,
                  std::vector<std::pair<std::string, std::vector<std::string>>> valuation,
                  Rational omega, Rational tau, UpdateMode mode) {
  Model m;
  m.sig_ = Signature::make(std::move(agents), std::move(features));
  if (m.sig_.agents.size() > 64)
    throw Error(ErrorCode::TooManyAgents, "at most 64 agents supported");
  if (m.sig_.features.size() > 64)
    throw Error(ErrorCode::TooManyFeatures, "at most 64 features supported");

  const Rational zero(0, 1);
  const Rational one(1, 1);
  if (omega < zero || omega > one)
    throw Error(ErrorCode::ThresholdOutOfRange, "omega = " + omega.str() + ", need 0 <= omega <= 1");
  if (tau <= zero || tau > one)
    throw Error(ErrorCode::ThresholdOutOfRange, "tau = " + tau.str() + ", need 0 < tau <= 1");
  m.omega_ = omega;
  m.tau_ = tau;
  m.mode_ = mode;

  m.in_.assign(m.sig_.agents.size(), 0);
  m.val_.assign(m.sig_.agents.size(), 0);
  for (const auto& [from, to] : influence) {
    const int a = m.sig_.agent_index(from);
    const int b = m.sig_.agent_index(to);
    m.in_[b] |= std::uint64_t{1} << a;
  }
  for (const auto& [agent, feats] : valuation) {
    const int a = m.sig_.agent_index(agent);
    for (const auto& f : feats) m.val_[a] |= std::uint64_t{1} << m.sig_.feature_index(f);
  }
  return m;
}

Model Model::from_bitmasks(Signature sig, std::vector<std::uint64_t> in_masks,
                           std::vector<std::uint64_t> val_masks, Rational omega,
                           Rational tau, UpdateMode mode) {
  Model m = Model::make(sig.agents, sig.features, {}, {}, omega, tau, mode);
  const std::size_t n = sig.agents.size();
  const std::size_t k = sig.features.size();
  if (in_masks.size() != n || val_masks.size() != n)
    throw Error(ErrorCode::InvariantViolation, "bitmask vectors do not match the signature");
  const std::uint64_t agent_universe = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t feature_universe = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if ((in_masks[i] & ~agent_universe) != 0)
      throw Error(ErrorCode::UnknownAgent, "relation bit outside the agent universe");
    if ((val_masks[i] & ~feature_universe) != 0)
      throw Error(ErrorCode::UnknownFeature, "valuation bit outside the feature universe");
  }
  m.in_ = std::move(in_masks);
  m.val_ = std::move(val_masks);
  return m;
}

bool Model::has_edge(const std::string& from, const std::string& to) const {
  return has_edge_at(sig_.agent_index(from), sig_.agent_index(to));
}

bool Model::agent_has(const std::string& agent, const std::string& feature) const {
  return agent_has_at(sig_.agent_index(agent), sig_.feature_index(feature));
}

std::vector<std::string> Model::influencers(const std::string& agent) const {
  const int b = sig_.agent_index(agent);
  std::vector<std::string> out;
  for (int a = 0; a < agent_count(); ++a)
    if (has_edge_at(a, b)) out.push_back(sig_.agents[a]);
  return out;
}

bool Model::has_pressure_at(int agent, int feature) const {
  const std::uint64_t in = in_[agent];
  if (in == 0) return false;
  std::uint64_t adopters = 0;
  for (int a = 0; a < agent_count(); ++a)
    if ((val_[a] >> feature) & 1u) adopters |= std::uint64_t{1} << a;
  const int total = std::popcount(in);
  const int with_feature = std::popcount(in & adopters);
  return fraction_at_least(with_feature, total, tau_);
}

bool Model::has_pressure(const std::string& agent, const std::string& feature) const {
  return has_pressure_at(sig_.agent_index(agent), sig_.feature_index(feature));
}

Rational Model::similarity(const std::string& a, const std::string& b) const {
  const int i = sig_.agent_index(a);
  const int j = sig_.agent_index(b);
  const std::uint64_t universe =
      feature_count() == 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << feature_count()) - 1;
  const int agree = std::popcount(~(val_[i] ^ val_[j]) & universe);
  return Rational(agree, feature_count());
}

bool Model::are_similar_at(int a, int b) const {
  const std::uint64_t universe =
      feature_count() == 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << feature_count()) - 1;
  const int agree = std::popcount(~(val_[a] ^ val_[b]) & universe);
  return fraction_at_least(agree, feature_count(), omega_);
}

bool Model::are_similar(const std::string& a, const std::string& b) const {
  return are_similar_at(sig_.agent_index(a), sig_.agent_index(b));
}

Model Model::diffusion_update() const {
  Model next = *this;
  const int n = agent_count();
  const int k = feature_count();
  // Adopter masks per feature, read from the pre-update valuation.
  std::vector<std::uint64_t> adopters(k, 0);
  for (int a = 0; a < n; ++a)
    for (int f = 0; f < k; ++f)
      if ((val_[a] >> f) & 1u) adopters[f] |= std::uint64_t{1} << a;
  for (int a = 0; a < n; ++a) {
    const std::uint64_t in = in_[a];
    if (in == 0) continue;
    const int total = std::popcount(in);
    for (int f = 0; f < k; ++f) {
      if ((next.val_[a] >> f) & 1u) continue;
      const int with_feature = std::popcount(in & adopters[f]);
      if (fraction_at_least(with_feature, total, tau_))
        next.val_[a] |= std::uint64_t{1} << f;
    }
  }
  return next;
}

Model Model::network_update() const {
  Model next = *this;
  const int n = agent_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mode_ == UpdateMode::Irreflexive && a == b) continue;
      if (are_similar_at(a, b)) next.in_[b] |= std::uint64_t{1} << a;
    }
  }
  return next;
}

Model Model::synchronous_update() const {
  Model next = diffusion_update();
  const Model net = network_update();
  next.in_ = net.in_;
  return next;
}

Model Model::update(UpdateOp op) const {
  switch (op) {
    case UpdateOp::Diffusion: return diffusion_update();
    case UpdateOp::Network: return network_update();
    case UpdateOp::Synchronous: return synchronous_update();
  }
  throw Error(ErrorCode::BadKind, "unknown update operator");
}

Model Model::with_mode(UpdateMode mode) const {
  Model m = *this;
  m.mode_ = mode;
  return m;
}

std::vector<std::pair<std::string, std::string>> Model::influence_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int a = 0; a < agent_count(); ++a)
    for (int b = 0; b < agent_count(); ++b)
      if (has_edge_at(a, b)) out.emplace_back(sig_.agents[a], sig_.agents[b]);
  return out;
}

std::vector<std::string> Model::features_of(const std::string& agent) const {
  const int a = sig_.agent_index(agent);
  std::vector<std::string> out;
  for (int f = 0; f < feature_count(); ++f)
    if (agent_has_at(a, f)) out.push_back(sig_.features[f]);
  return out;
}

bool operator==(const Model& a, const Model& b) {
  return a.sig_ == b.sig_ && a.in_ == b.in_ && a.val_ == b.val_ &&
         a.omega_ == b.omega_ && a.tau_ == b.tau_;
}

Model apply_sequence(const Model& model, const UpdateSequence& seq) {
  if (seq.empty()) throw Error(ErrorCode::EmptySequence, "update sequence is empty");
  Model current = model;
  for (const UpdateOp op : seq) current = current.update(op);
  return current;
}

std::pair<Model, int> stabilize(const Model& model, UpdateOp op) {
  Model current = model;
  int changed_steps = 0;
  const int n = model.agent_count();
  const int cap = n * model.feature_count() + n * n + 1;
  for (int i = 0; i < cap; ++i) {
    Model next = current.update(op);
    if (next == current) return {current, changed_steps};
    current = std::move(next);
    ++changed_steps;
  }
  throw Error(ErrorCode::InvariantViolation,
              "update failed to reach a fixpoint within the monotonicity bound");
}

}  // namespace difnet
