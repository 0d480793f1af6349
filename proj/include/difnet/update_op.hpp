#pragma once

#include <string>
#include <vector>

#include "difnet/errors.hpp"

namespace difnet {

/// The three one-step model updates: feature diffusion, link formation,
/// and both applied at once from the same pre-state.
enum class UpdateOp { Diffusion, Network, Synchronous };

/// Non-empty finite sequence of updates, applied left to right.
using UpdateSequence = std::vector<UpdateOp>;

// CLI/serialization tokens: diff | net | sync.
const char* update_op_token(UpdateOp op);
UpdateOp parse_update_op(const std::string& token);

// "diff,net,sync" -> sequence; rejects empty input and unknown tokens.
UpdateSequence parse_update_sequence(const std::string& text);
std::string update_sequence_str(const UpdateSequence& seq);

}  // namespace difnet
