#include "difnet/update_op.hpp"

namespace difnet {

const char* update_op_token(UpdateOp op) {
  switch (op) {
    case UpdateOp::Diffusion: return "diff";
    case UpdateOp::Network: return "net";
    case UpdateOp::Synchronous: return "sync";
  }
  return "?";
}

UpdateOp parse_update_op(const std::string& token) {
  if (token == "diff") return UpdateOp::Diffusion;
  if (token == "net") return UpdateOp::Network;
  if (token == "sync") return UpdateOp::Synchronous;
  throw Error(ErrorCode::UnknownOperator,
              "expected diff|net|sync, got \"" + token + "\"");
}

UpdateSequence parse_update_sequence(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::EmptySequence, "empty update sequence");
  UpdateSequence seq;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    seq.push_back(parse_update_op(text.substr(start, comma - start)));
    if (comma == text.size()) break;
    start = comma + 1;
  }
  return seq;
}

std::string update_sequence_str(const UpdateSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ',';
    out += update_op_token(seq[i]);
  }
  return out;
}

}  // namespace difnet
