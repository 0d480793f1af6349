#include "difnet/parser.hpp"

#include <cctype>
#include <vector>

#include "difnet/errors.hpp"

namespace difnet {

namespace {

enum class Tok {
  End, Not, And, Or, Implies, Iff, LParen, RParen, Comma,
  DynDiff, DynNet, DynSync, Identifier, Number,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

[[noreturn]] void fail(std::size_t offset, const std::string& message) {
  throw Error(ErrorCode::SyntaxError,
              message + " at offset " + std::to_string(offset));
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", at});
        return out;
      }
      const char c = text_[pos_];
      if (c == '!') { ++pos_; out.push_back({Tok::Not, "!", at}); continue; }
      if (c == '&') { ++pos_; out.push_back({Tok::And, "&", at}); continue; }
      if (c == '|') { ++pos_; out.push_back({Tok::Or, "|", at}); continue; }
      if (c == '(') { ++pos_; out.push_back({Tok::LParen, "(", at}); continue; }
      if (c == ')') { ++pos_; out.push_back({Tok::RParen, ")", at}); continue; }
      if (c == ',') { ++pos_; out.push_back({Tok::Comma, ",", at}); continue; }
      if (c == '-') {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          out.push_back({Tok::Implies, "->", at});
          continue;
        }
        fail(at, "expected \"->\"");
      }
      if (c == '<') {
        if (text_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          out.push_back({Tok::Iff, "<->", at});
          continue;
        }
        fail(at, "expected \"<->\"");
      }
      if (c == '[') { out.push_back(bracket_operator(at)); continue; }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
          ++end;
        out.push_back({Tok::Identifier, text_.substr(pos_, end - pos_), at});
        pos_ = end;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
          ++end;
        out.push_back({Tok::Number, text_.substr(pos_, end - pos_), at});
        pos_ = end;
        continue;
      }
      if (Token t; unicode_alias(at, t)) { out.push_back(t); continue; }
      fail(at, "unexpected character");
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Token bracket_operator(std::size_t at) {
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string::npos) fail(at, "unterminated \"[\" operator");
    const std::string name = text_.substr(pos_ + 1, close - pos_ - 1);
    pos_ = close + 1;
    if (name == "diff") return {Tok::DynDiff, "[diff]", at};
    if (name == "net") return {Tok::DynNet, "[net]", at};
    if (name == "sync") return {Tok::DynSync, "[sync]", at};
    throw Error(ErrorCode::UnknownOperator,
                "\"[" + name + "]\" at offset " + std::to_string(at));
  }

  bool unicode_alias(std::size_t at, Token& out) {
    struct Alias { const char* bytes; Tok kind; const char* text; };
    static const Alias aliases[] = {
        {"△", Tok::DynDiff, "[diff]"},   // white up-pointing triangle
        {"□", Tok::DynNet, "[net]"},     // white square
        {"○", Tok::DynSync, "[sync]"},   // white circle
        {"¬", Tok::Not, "!"},
        {"∧", Tok::And, "&"},
        {"∨", Tok::Or, "|"},
        {"→", Tok::Implies, "->"},
        {"↔", Tok::Iff, "<->"},
    };
    for (const auto& alias : aliases) {
      const std::size_t len = std::char_traits<char>::length(alias.bytes);
      if (text_.compare(pos_, len, alias.bytes) == 0) {
        pos_ += len;
        out = {alias.kind, alias.text, at};
        return true;
      }
    }
    return false;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) fail(peek().offset, "unexpected trailing input");
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek().offset, std::string("expected ") + what);
    return take();
  }

  Formula parse_iff() {
    Formula f = parse_implies();
    while (accept(Tok::Iff)) f = Formula::iff(f, parse_implies());
    return f;
  }

  Formula parse_implies() {
    Formula f = parse_or();
    if (accept(Tok::Implies)) return Formula::implies(f, parse_implies());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept(Tok::Or)) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept(Tok::And)) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return Formula::neg(parse_unary());
      case Tok::DynDiff: take(); return Formula::after(UpdateOp::Diffusion, parse_unary());
      case Tok::DynNet: take(); return Formula::after(UpdateOp::Network, parse_unary());
      case Tok::DynSync: take(); return Formula::after(UpdateOp::Synchronous, parse_unary());
      default: return parse_atom();
    }
  }

  std::pair<std::string, std::string> parse_name_pair() {
    expect(Tok::LParen, "\"(\"");
    std::string first = expect(Tok::Identifier, "an identifier").text;
    expect(Tok::Comma, "\",\"");
    std::string second = expect(Tok::Identifier, "an identifier").text;
    expect(Tok::RParen, "\")\"");
    return {std::move(first), std::move(second)};
  }

  Formula parse_atom() {
    if (accept(Tok::LParen)) {
      Formula f = parse_iff();
      expect(Tok::RParen, "\")\"");
      return f;
    }
    const Token tok = expect(Tok::Identifier, "a formula");
    if (tok.text == "true") return Formula::truth(true);
    if (tok.text == "false") return Formula::truth(false);
    if (tok.text == "psi_diff") return Formula::psi(PsiKind::Diff);
    if (tok.text == "psi_net") return Formula::psi(PsiKind::Net);
    if (tok.text == "psi_diffnet") return Formula::psi(PsiKind::DiffNet);
    if (tok.text == "psi_netdiff") {
      expect(Tok::LParen, "\"(\"");
      const Token n = expect(Tok::Number, "a step count");
      expect(Tok::RParen, "\")\"");
      if (n.text.size() > 6) fail(n.offset, "step count out of range");
      return Formula::psi(PsiKind::NetDiff, std::stoi(n.text));
    }
    if (tok.text == "N") {
      auto [from, to] = parse_name_pair();
      return Formula::edge(std::move(from), std::move(to));
    }
    if (tok.text == "has") {
      auto [agent, feature] = parse_name_pair();
      return Formula::has(std::move(agent), std::move(feature));
    }
    if (tok.text == "sim") {
      auto [a, b] = parse_name_pair();
      return Formula::sim(std::move(a), std::move(b));
    }
    if (tok.text == "pressure") {
      auto [agent, feature] = parse_name_pair();
      return Formula::pressure(std::move(agent), std::move(feature));
    }
    fail(tok.offset, "expected a formula, got \"" + tok.text + "\"");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(const std::string& text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace difnet
