#include "chlab/rational.hpp"

#include <cctype>

namespace chlab {
namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

void Rational::normalize() {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_decimal(const std::string& text) {
  if (text.empty()) throw DomainError("empty decimal literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = (text[i] == '-');
    ++i;
  }
  Int num = 0;
  Int den = 1;
  bool seen_digit = false;
  bool seen_dot = false;
  for (; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '.') {
      if (seen_dot) throw DomainError("bad decimal literal: " + text);
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw DomainError("bad decimal literal: " + text);
    num = num * 10 + (ch - '0');
    if (seen_dot) den *= 10;
    seen_digit = true;
  }
  if (!seen_digit) throw DomainError("bad decimal literal: " + text);
  Rational r;
  r.num_ = negative ? -num : num;
  r.den_ = den;
  r.normalize();
  return r;
}

std::string Rational::str() const {
  auto print128 = [](Int v) {
    if (v == 0) return std::string("0");
    bool neg = v < 0;
    if (neg) v = -v;
    std::string s;
    while (v > 0) {
      s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
  };
  if (den_ == 1) return print128(num_);
  return print128(num_) + "/" + print128(den_);
}

}  // namespace chlab
