#include "twcut/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace twcut {

Rational parse_rational(const std::string& text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) fail();
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    std::size_t den_digits = 0;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size()) fail();
    if (text.compare(den_start, den_digits, std::string(den_digits, '0')) == 0) fail();
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0) fail();
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

const Rational& ExtendedRational::value() const {
  if (!is_finite()) throw std::logic_error("value() on an infinite ExtendedRational");
  return value_;
}

ExtendedRational ExtendedRational::operator-() const {
  if (sign_ > 0) return neg_infinity();
  if (sign_ < 0) return infinity();
  return ExtendedRational(-value_);
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.sign_ != b.sign_) return false;
  return a.sign_ != 0 || a.value_ == b.value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  return a.sign_ == 0 && a.value_ < b.value_;
}

std::string to_string(const ExtendedRational& value) {
  if (value.is_infinity()) return "inf";
  if (value.is_neg_infinity()) return "-inf";
  return to_string(value.value());
}

}  // namespace twcut
