#include "weylcs/numeric.hpp"

#include <cstdio>

namespace weylcs {

void numeric_overflow(const char* where) {
  throw std::overflow_error(std::string("exact arithmetic failure: ") + where);
}

std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  char buf[48];
  int i = 48;
  while (u > 0) {
    buf[--i] = char('0' + (int)(u % 10));
    u /= 10;
  }
  std::string s(buf + i, 48 - i);
  return neg ? "-" + s : s;
}

i128 i128_from_string(const std::string& s) {
  i128 v = 0;
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("empty integer literal");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
    v = add_checked(mul_checked(v, 10), s[i] - '0');
  }
  return neg ? -v : v;
}

std::string Rat::str() const {
  if (den == 1) return i128_to_string(num);
  return i128_to_string(num) + "/" + i128_to_string(den);
}

Rat rat_from_string(const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) return Rat(i128_from_string(s));
  return Rat(i128_from_string(s.substr(0, pos)), i128_from_string(s.substr(pos + 1)));
}

i64 to_i64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) numeric_overflow("i64 narrowing");
  return (i64)v;
}

}  // namespace weylcs
