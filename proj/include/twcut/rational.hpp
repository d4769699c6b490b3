#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace twcut {

// All weights and objective values are exact rationals; the solver never
// touches floating point.
using Rational = mpq_class;

// Accepts "p", "-p" and "p/q" (q > 0). Throws std::invalid_argument on
// anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical lossless form: "p" when the denominator is 1, else "p/q".
std::string to_string(const Rational& value);

// A rational extended with +inf/-inf. Only ordering, equality and negation
// are provided; there is no arithmetic involving the infinities.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  explicit ExtendedRational(Rational value) : value_(std::move(value)) {}

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.sign_ = 1;
    return r;
  }
  static ExtendedRational neg_infinity() {
    ExtendedRational r;
    r.sign_ = -1;
    return r;
  }

  bool is_finite() const { return sign_ == 0; }
  bool is_infinity() const { return sign_ > 0; }
  bool is_neg_infinity() const { return sign_ < 0; }

  // Valid only when is_finite().
  const Rational& value() const;

  ExtendedRational operator-() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator!=(const ExtendedRational& a, const ExtendedRational& b) {
    return !(a == b);
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return a < b || a == b;
  }
  friend bool operator>(const ExtendedRational& a, const ExtendedRational& b) {
    return b < a;
  }
  friend bool operator>=(const ExtendedRational& a, const ExtendedRational& b) {
    return b <= a;
  }

 private:
  int sign_ = 0;      // -1 / 0 / +1: below, within, above the rationals
  Rational value_{};  // meaningful only when sign_ == 0
};

// "p", "p/q", "inf" or "-inf".
std::string to_string(const ExtendedRational& value);

}  // namespace twcut
