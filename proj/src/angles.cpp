#include "aqw/angles.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace aqw {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void reduce(long long& num, long long& den) {
  if (den < 0) {
    den = -den;
    num = -num;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
}

}  // namespace

Angle Angle::of(double v) {
  Angle a;
  a.value = v;
  return a;
}

Angle Angle::pi_ratio(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("angle: zero denominator");
  reduce(num, den);
  Angle a;
  a.rational = true;
  a.num = num;
  a.den = den;
  a.value = static_cast<double>(num) * M_PI / static_cast<double>(den);
  return a;
}

Angle parse_angle(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("bad angle literal: '" + std::string(text) + "'"); };
  if (text.empty()) fail();

  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos >= text.size()) fail();

  // leading integer or decimal
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  bool has_int = pos > digits_start;
  bool has_dot = pos < text.size() && text[pos] == '.';

  if (has_dot) {
    // plain decimal radians; no pi suffix allowed after a fraction point
    ++pos;
    std::size_t frac_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (!has_int && pos == frac_start) fail();
    if (pos != text.size()) fail();
    double v = std::strtod(std::string(text.substr(negative ? 1 : 0)).c_str(), nullptr);
    return Angle::of(negative ? -v : v);
  }

  long long num = 1;
  if (has_int) num = std::stoll(std::string(text.substr(digits_start, pos - digits_start)));

  bool has_pi = text.compare(pos, 2, "pi") == 0;
  if (has_pi) pos += 2;

  if (!has_pi) {
    // bare integer: decimal radians
    if (!has_int || pos != text.size()) fail();
    double v = static_cast<double>(num);
    return Angle::of(negative ? -v : v);
  }

  long long den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    ++pos;
    std::size_t den_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_start) fail();
    den = std::stoll(std::string(text.substr(den_start, pos - den_start)));
    if (den == 0) fail();
  }
  if (pos != text.size()) fail();
  return Angle::pi_ratio(negative ? -num : num, den);
}

std::string format_angle(const Angle& a) {
  if (!a.rational) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a.value);
    return buf;
  }
  if (a.num == 0) return "0";
  std::string s;
  if (a.num < 0) s += "-";
  long long n = a.num < 0 ? -a.num : a.num;
  if (n != 1) s += std::to_string(n);
  s += "pi";
  if (a.den != 1) s += "/" + std::to_string(a.den);
  return s;
}

double canonical_two_pi(double v) {
  double r = std::fmod(v, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

}  // namespace aqw
