#include "pdbep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pdbep {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) {
    throw std::invalid_argument("empty rational literal");
  }
  std::string s = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }

  const auto bad = [&] {
    return std::invalid_argument("bad rational literal: '" + text + "'");
  };

  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    BigInt q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    value = Rational(BigInt(num), q);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad();
    if (!whole.empty() && !all_digits(whole)) throw bad();
    if (!frac.empty() && !all_digits(frac)) throw bad();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt num = whole.empty() ? BigInt(0) : BigInt(whole);
    num *= scale;
    if (!frac.empty()) num += BigInt(frac);
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) throw bad();
    value = Rational(BigInt(s));
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace pdbep
