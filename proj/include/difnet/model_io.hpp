#pragma once

#include <optional>
#include <string>

#include "difnet/model.hpp"

namespace difnet {

/// Reads a model document:
///
///   {
///     "agents":   ["a", "b"],
///     "features": ["f", "g"],
///     "edges":    [["a", "b"]],
///     "valuation": {"a": ["f"], "b": []},
///     "omega": "1/2",
///     "tau":   "1/2",
///     "mode":  "literal"
///   }
///
/// Thresholds are "p/q" or "p" strings; "mode" is optional and defaults to
/// "literal". `mode_override` replaces whatever the document says.
/// Throws IoError on filesystem trouble, ParseError with line/column on
/// malformed JSON, plus the usual validation errors.
Model load_model(const std::string& path,
                 std::optional<UpdateMode> mode_override = std::nullopt);

Model model_from_json_text(const std::string& text,
                           std::optional<UpdateMode> mode_override = std::nullopt);

/// Canonical document bytes: fixed key order, lexicographically sorted
/// lists, every agent present in the valuation, two-space indentation and a
/// trailing newline. Structurally equal models serialize identically.
std::string model_to_json_text(const Model& model);

void save_model(const Model& model, const std::string& path);

/// Directed-graph text: one node per agent labeled with its feature set,
/// one arrow per influence pair (influencer -> influenced).
std::string export_dot(const Model& model);

}  // namespace difnet
