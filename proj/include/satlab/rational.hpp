#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace satlab {

namespace detail {

using int128 = __int128;

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("rational: + overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("rational: * overflow");
  return r;
}

inline int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::string int128_str(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u != 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace detail

// Exact rational over 128-bit integers, always normalized (den > 0, gcd 1).
// Bound evaluators use this type so comparisons in tests are exact.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(detail::int128 num, detail::int128 den) : num_(num), den_(den) {
    normalize();
  }

  static Rational from_int(detail::int128 v) { return Rational(v, 1); }

  detail::int128 num() const { return num_; }
  detail::int128 den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    using namespace detail;
    int128 g = gcd128(a.den_, b.den_);
    int128 dl = a.den_ / g;
    int128 dr = b.den_ / g;
    int128 num = checked_add(checked_mul(a.num_, dr), checked_mul(b.num_, dl));
    return Rational(num, checked_mul(checked_mul(dl, dr), g));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    using namespace detail;
    int128 g1 = gcd128(a.num_, b.den_);
    int128 g2 = gcd128(b.num_, a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational: divide by zero");
    return a * Rational(b.den_, b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    using namespace detail;
    int128 l = checked_mul(a.num_, b.den_);
    int128 r = checked_mul(b.num_, a.den_);
    return l < r    ? std::strong_ordering::less
           : l > r  ? std::strong_ordering::greater
                    : std::strong_ordering::equal;
  }

  // "p/q", or just "p" for integers.
  std::string str() const {
    if (den_ == 1) return detail::int128_str(num_);
    return detail::int128_str(num_) + "/" + detail::int128_str(den_);
  }
  double approx() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    detail::int128 g = detail::gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  detail::int128 num_;
  detail::int128 den_;
};

}  // namespace satlab
