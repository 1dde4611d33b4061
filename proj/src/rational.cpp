#include "pgg/rational.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace pgg {

namespace {

long long checked_pow10(int k) {
  if (k < 0 || k > 18) throw std::overflow_error("rational: exponent out of range");
  long long v = 1;
  for (int i = 0; i < k; ++i) v *= 10;
  return v;
}

// Parses a decimal literal (optional fraction part and exponent) exactly.
Rat parse_decimal(const std::string& s) {
  bool neg = false;
  size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  long long mantissa = 0;
  int frac_digits = 0;
  bool seen_digit = false, seen_dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      if (mantissa > (INT64_MAX - 9) / 10) throw std::overflow_error("rational: literal too long");
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("rational: bad literal '" + s + "'");
  int exp10 = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    int esign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') esign = -1;
      ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("rational: bad exponent in '" + s + "'");
    int e = 0;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("rational: bad exponent in '" + s + "'");
      if (e > 100) throw std::overflow_error("rational: exponent too large");
      e = e * 10 + (s[pos] - '0');
    }
    exp10 = esign * e;
  }
  if (pos != s.size()) throw std::invalid_argument("rational: trailing characters in '" + s + "'");

  int shift = exp10 - frac_digits;
  Rat r;
  if (shift >= 0) {
    long long scale = checked_pow10(shift);
    if (mantissa != 0 && mantissa > INT64_MAX / scale) throw std::overflow_error("rational: value too large");
    r = Rat(mantissa * scale, 1);
  } else {
    r = Rat(mantissa, checked_pow10(-shift));
  }
  return neg ? -r : r;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    long long num = 0, den = 0;
    auto r1 = std::from_chars(text.data(), text.data() + slash, num);
    auto r2 = std::from_chars(text.data() + slash + 1, text.data() + text.size(), den);
    if (r1.ec != std::errc() || r2.ec != std::errc() || r1.ptr != text.data() + slash ||
        r2.ptr != text.data() + text.size())
      throw std::invalid_argument("rational: bad fraction '" + text + "'");
    if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    return Rat(num, den);
  }
  return parse_decimal(text);
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational: non-finite value");
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return parse_decimal(std::string(buf, res.ptr));
}

std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double rat_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace pgg
