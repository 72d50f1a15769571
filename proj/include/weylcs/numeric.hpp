#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylcs {

using i64 = std::int64_t;
using i128 = __int128;

// Exact arithmetic throughout: sums of |class| * chi * psi over groups up to
// |W(E8)| = 696729600 with induced-character values in the 1e6 range stay
// well inside the i128 range, but every multiply is checked anyway.

[[noreturn]] void numeric_overflow(const char* where);

inline i128 mul_checked(i128 a, i128 b) {
  if (a == 0 || b == 0) return 0;
  i128 r = a * b;
  if (r / b != a) numeric_overflow("mul");
  return r;
}

inline i128 add_checked(i128 a, i128 b) {
  i128 r = a + b;
  if ((b > 0 && r < a) || (b < 0 && r > a)) numeric_overflow("add");
  return r;
}

std::string i128_to_string(i128 v);
i128 i128_from_string(const std::string& s);

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Exact rational with i128 numerator/denominator, always reduced, den > 0.
struct Rat {
  i128 num = 0;
  i128 den = 1;

  Rat() = default;
  Rat(i128 n) : num(n), den(1) {}
  Rat(i128 n, i128 d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) numeric_overflow("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    i128 g = gcd128(a.den, b.den);
    i128 bd = b.den / g;
    return Rat(add_checked(mul_checked(a.num, bd), mul_checked(b.num, a.den / g)),
               mul_checked(a.den, bd));
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    Rat x(a.num, b.den), y(b.num, a.den);
    return Rat(mul_checked(x.num, y.num), mul_checked(x.den, y.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) numeric_overflow("division by zero");
    return a * Rat(b.den, b.num);
  }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return mul_checked(a.num, b.den) < mul_checked(b.num, a.den);
  }

  /// Value reduced mod 1 into [0,1).
  Rat mod1() const {
    i128 n = num % den;
    if (n < 0) n += den;
    return Rat(n, den);
  }

  std::string str() const;
};

/// Parses "a/b" or "a".
Rat rat_from_string(const std::string& s);

i64 to_i64(i128 v);

}  // namespace weylcs
