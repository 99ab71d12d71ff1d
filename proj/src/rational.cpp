#include "coincider/rational.hpp"

#include <cctype>

#include "coincider/errors.hpp"

namespace coincider {

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

/// Decimal conversion that tolerates leading zeros (the cpp_int string
/// constructor would read "08" as bad octal).
BigInt big_from_literal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  while (i + 1 < s.size() && s[i] == '0') ++i;
  BigInt v(s.substr(i));
  return negative ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto bad = [&] { return InvalidInputError("cannot parse rational from \"" + text + "\""); };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw bad();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) throw bad();
    const BigInt d = big_from_literal(den);
    if (d == 0) throw bad();
    return Rational(big_from_literal(num), d);
  }

  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.empty() || !is_integer_literal(whole.empty() ? "0" : whole)) throw bad();
    for (char c : frac) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    std::string digits = whole;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
    if (digits.empty()) digits = "0";
    digits += frac;
    BigInt num = big_from_literal(digits);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (negative) num = -num;
    return Rational(num, den);
  }

  if (!is_integer_literal(s)) throw bad();
  return Rational(big_from_literal(s));
}

}  // namespace coincider
