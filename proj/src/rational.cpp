#include "boxkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace boxkit {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = (s[0] == '-');
    s.erase(0, 1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal: '" + text + "'");

  Rat value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    value = Rat(BigInt(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed rational literal: '" + text + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rat(BigInt(whole) * scale + (frac.empty() ? BigInt(0) : BigInt(frac)), scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed rational literal: '" + text + "'");
    value = Rat(BigInt(s));
  }
  return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& value) { return value.str(); }

double to_double(const Rat& value) { return value.convert_to<double>(); }

Rat rational_pow(const Rat& base, unsigned exponent) {
  Rat result = 1;
  Rat b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Rat falling_factorial(const Rat& x, unsigned r) {
  Rat result = 1;
  for (unsigned i = 0; i < r; ++i) result *= x - i;
  return result;
}

}  // namespace boxkit
