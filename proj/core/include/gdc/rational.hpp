#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gdc {

// Exact rational scalars. Always normalized: den > 0, gcd(num, den) = 1.
// Intermediate products run through __int128 and overflow of the reduced
// result is an error rather than silent wraparound.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit from integers is wanted
  Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    norm_assign(n, d);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  using i128 = __int128;
  long long num_ = 0;
  long long den_ = 1;

  static Rational make(i128 n, i128 d) {
    if (d < 0) { n = -n; d = -d; }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    n /= g; d /= g;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = (long long)n;
    r.den_ = (long long)d;
    return r;
  }
  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  void norm_assign(long long n, long long d) { *this = make(n, d); }
};

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (unsigned long long)(n - k + i) / i;
  return r;
}

// Number of multisets of size k over an n-element set: C(n+k-1, k).
inline unsigned long long multichoose(int n, int k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  return binomial(n + k - 1, k);
}

inline unsigned long long factorial(int n) {
  unsigned long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace gdc
