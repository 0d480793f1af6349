#pragma once

#include <string>

#include "difnet/formula.hpp"

namespace difnet {

/// Parses the concrete formula syntax:
///
///   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
///   or := and ("|" and)* ; and := unary ("&" unary)* ;
///   unary := ("!" | "[diff]" | "[net]" | "[sync]") unary | atom ;
///   atom := "N(" id "," id ")" | "has(" id "," id ")" | "sim(" id "," id ")"
///         | "pressure(" id "," id ")" | "psi_diff" | "psi_net" | "psi_diffnet"
///         | "psi_netdiff(" nat ")" | "true" | "false" | "(" formula ")"
///
/// "<->" chains associate to the left, "->" to the right. The unicode
/// aliases (two little triangles etc.) for the ASCII operators are accepted
/// on input; printing always emits ASCII.
///
/// Throws SyntaxError with the byte offset of the offending token, or
/// UnknownOperator for an unrecognized "[...]" operator.
Formula parse(const std::string& text);

}  // namespace difnet
