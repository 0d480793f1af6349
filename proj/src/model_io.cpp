#include "difnet/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace difnet {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& text, std::size_t byte,
                             const std::string& what) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw Error(ErrorCode::ParseError, what + " at line " + std::to_string(line) +
                                         ", column " + std::to_string(column));
}

std::vector<std::string> string_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a list of strings");
  std::vector<std::string> out;
  for (const auto& item : j[key]) {
    if (!item.is_string())
      throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a list of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string rational_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw Error(ErrorCode::ParseError,
                std::string("\"") + key + "\" must be a \"p/q\" or \"p\" string");
  return j[key].get<std::string>();
}

}  // namespace

Model model_from_json_text(const std::string& text,
                           std::optional<UpdateMode> mode_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON");
  }
  if (!doc.is_object())
    throw Error(ErrorCode::ParseError, "model document must be a JSON object");

  std::vector<std::pair<std::string, std::string>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array())
      throw Error(ErrorCode::ParseError, "\"edges\" must be a list of [from, to] pairs");
    for (const auto& pair : doc["edges"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
          !pair[1].is_string())
        throw Error(ErrorCode::ParseError, "\"edges\" must be a list of [from, to] pairs");
      edges.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
    }
  }

  std::vector<std::pair<std::string, std::vector<std::string>>> valuation;
  if (doc.contains("valuation")) {
    if (!doc["valuation"].is_object())
      throw Error(ErrorCode::ParseError, "\"valuation\" must map agents to feature lists");
    for (const auto& [agent, feats] : doc["valuation"].items()) {
      if (!feats.is_array())
        throw Error(ErrorCode::ParseError, "\"valuation\" must map agents to feature lists");
      std::vector<std::string> names;
      for (const auto& f : feats) {
        if (!f.is_string())
          throw Error(ErrorCode::ParseError, "\"valuation\" must map agents to feature lists");
        names.push_back(f.get<std::string>());
      }
      valuation.emplace_back(agent, std::move(names));
    }
  }

  UpdateMode mode = UpdateMode::Literal;
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string())
      throw Error(ErrorCode::ParseError, "\"mode\" must be \"literal\" or \"irreflexive\"");
    mode = parse_update_mode(doc["mode"].get<std::string>());
  }
  if (mode_override) mode = *mode_override;

  return Model::make(string_list(doc, "agents"), string_list(doc, "features"),
                     std::move(edges), std::move(valuation),
                     Rational::parse(rational_field(doc, "omega")),
                     Rational::parse(rational_field(doc, "tau")), mode);
}

Model load_model(const std::string& path, std::optional<UpdateMode> mode_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "failed reading \"" + path + "\"");
  return model_from_json_text(buffer.str(), mode_override);
}

std::string model_to_json_text(const Model& model) {
  json doc;
  doc["agents"] = model.agents();
  doc["features"] = model.features();
  json edges = json::array();
  for (const auto& [from, to] : model.influence_pairs())
    edges.push_back(json::array({from, to}));
  doc["edges"] = std::move(edges);
  json valuation = json::object();
  for (const auto& agent : model.agents()) valuation[agent] = model.features_of(agent);
  doc["valuation"] = std::move(valuation);
  doc["omega"] = model.omega().str();
  doc["tau"] = model.tau().str();
  doc["mode"] = update_mode_token(model.mode());
  return doc.dump(2) + "\n";
}

void save_model(const Model& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open \"" + path + "\" for writing");
  out << model_to_json_text(model);
  if (!out) throw Error(ErrorCode::IoError, "failed writing \"" + path + "\"");
}

std::string export_dot(const Model& model) {
  std::string out = "digraph model {\n";
  for (const auto& agent : model.agents()) {
    out += "  " + agent + " [label=\"" + agent + " {";
    const auto feats = model.features_of(agent);
    for (std::size_t i = 0; i < feats.size(); ++i) {
      if (i > 0) out += ',';
      out += feats[i];
    }
    out += "}\"];\n";
  }
  for (const auto& [from, to] : model.influence_pairs())
    out += "  " + from + " -> " + to + ";\n";
  out += "}\n";
  return out;
}

}  // namespace difnet
