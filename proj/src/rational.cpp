#include "degindex/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace degindex {

std::string rational_to_string(const Rational& value) {
  std::string num = numerator(value).str();
  if (denominator(value) == 1) return num;
  return num + "/" + denominator(value).str();
}

double rational_to_double(const Rational& value) {
  return value.convert_to<double>();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = trim(s.substr(slash + 1));
    if (!valid_integer(num) || !valid_integer(den))
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    BigInt d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return Rational(BigInt{std::string(num)}, d);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = negative ? "-0" : "0";
    if (!valid_integer(whole) || frac.empty() || !valid_integer(frac) ||
        frac.front() == '+' || frac.front() == '-')
      throw std::invalid_argument("malformed decimal literal: " + std::string(text));
    BigInt scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt digits{std::string(frac)};
    Rational value{BigInt{std::string(whole)}};
    Rational part{digits, scale};
    return negative ? value - part : value + part;
  }

  if (!valid_integer(s))
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  return Rational(BigInt{std::string(s)});
}

}  // namespace degindex
