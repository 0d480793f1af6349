#include "difnet/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace difnet {

namespace {

bool parse_int(const std::string& text, std::size_t begin, std::size_t end,
               std::int64_t& out) {
  if (begin >= end) return false;
  std::size_t i = begin;
  bool negative = false;
  if (text[i] == '-') {
    negative = true;
    ++i;
    if (i >= end) return false;
  }
  std::int64_t value = 0;
  for (; i < end; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    value = value * 10 + (text[i] - '0');
    if (value < 0) return false;  // overflow
  }
  out = negative ? -value : value;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const std::size_t slash = text.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (slash == std::string::npos) {
    if (!parse_int(text, 0, text.size(), num))
      throw Error(ErrorCode::BadRational, "expected \"p\" or \"p/q\", got \"" + text + "\"");
  } else {
    if (!parse_int(text, 0, slash, num) ||
        !parse_int(text, slash + 1, text.size(), den))
      throw Error(ErrorCode::BadRational, "expected \"p\" or \"p/q\", got \"" + text + "\"");
    if (den == 0) throw Error(ErrorCode::BadRational, "zero denominator in \"" + text + "\"");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace difnet
