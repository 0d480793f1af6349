#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "difnet/errors.hpp"

namespace difnet {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Comparisons use cross-multiplication, never floating point;
/// threshold checks like |G|/|N| >= tau stay exact at the boundary.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}

  Rational(std::int64_t numerator, std::int64_t denominator)
      : num_(numerator), den_(denominator) {
    if (den_ == 0) throw Error(ErrorCode::BadRational, "zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational from_int(std::int64_t value) { return Rational(value, 1); }

  // Accepts "p" or "p/q", with an optional leading '-'.
  static Rational parse(const std::string& text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <= b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// count/total >= threshold, compared exactly. total must be positive.
inline bool fraction_at_least(std::int64_t count, std::int64_t total,
                              const Rational& threshold) {
  return count * threshold.denominator() >= threshold.numerator() * total;
}

}  // namespace difnet
