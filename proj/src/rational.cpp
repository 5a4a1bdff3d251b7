#include "pcg/rational.hpp"

#include <stdexcept>

namespace pcg {

Rational parse_rational(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  auto digits = [&](BigInt& out) {
    size_t start = i;
    out = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      out = out * 10 + (s[i] - '0');
      ++i;
    }
    return i > start;
  };
  BigInt ip = 0;
  bool have_int = digits(ip);
  Rational value;
  if (i < s.size() && s[i] == '.') {
    ++i;
    BigInt fp = 0;
    size_t fstart = i;
    if (!digits(fp)) throw std::invalid_argument("not a rational: '" + s + "'");
    size_t fdigits = i - fstart;
    BigInt scale = 1;
    for (size_t k = 0; k < fdigits; ++k) scale *= 10;
    value = Rational(ip * scale + fp, scale);
  } else if (i < s.size() && s[i] == '/') {
    if (!have_int) throw std::invalid_argument("not a rational: '" + s + "'");
    ++i;
    BigInt den = 0;
    if (!digits(den) || den == 0)
      throw std::invalid_argument("not a rational: '" + s + "'");
    value = Rational(ip, den);
  } else {
    if (!have_int) throw std::invalid_argument("not a rational: '" + s + "'");
    value = Rational(ip);
  }
  if (i != s.size()) throw std::invalid_argument("not a rational: '" + s + "'");
  return neg ? Rational(-value) : value;
}

std::string decimal_string(const Rational& r) {
  BigInt num = numerator(r), den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  // Strip factors of 2 and 5; anything left means no finite decimal exists.
  BigInt d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1)
    throw std::logic_error("no finite decimal for " + rational_string(r));
  int shift = std::max(twos, fives);
  BigInt pow10 = 1;
  for (int k = 0; k < shift; ++k) pow10 *= 10;
  BigInt scaled = num * (pow10 / den);  // integer because den | 10^shift
  std::string s = scaled.str();
  while ((int)s.size() <= shift) s.insert(s.begin(), '0');
  std::string out = s.substr(0, s.size() - shift);
  if (shift > 0) {
    std::string frac = s.substr(s.size() - shift);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  return neg ? "-" + out : out;
}

std::string rational_string(const Rational& r) {
  BigInt den = denominator(r);
  BigInt d = den;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (d == 1) return decimal_string(r);
  return numerator(r).str() + "/" + den.str();
}

}  // namespace pcg
