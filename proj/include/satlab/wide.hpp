#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace satlab {

// Exact unsigned counter backed by 128 bits.  Arithmetic throws on overflow
// instead of wrapping, so a count that comes back is always exact.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t v) : v_(v) {}

  static constexpr Count from_raw(unsigned __int128 v) {
    Count c;
    c.v_ = v;
    return c;
  }
  constexpr unsigned __int128 raw() const { return v_; }

  Count& operator+=(Count o) {
    unsigned __int128 r = v_ + o.v_;
    if (r < v_) throw std::overflow_error("Count: + overflow");
    v_ = r;
    return *this;
  }
  Count& operator*=(Count o) {
    if (v_ != 0 && o.v_ != 0 && v_ > kMax / o.v_)
      throw std::overflow_error("Count: * overflow");
    v_ *= o.v_;
    return *this;
  }
  Count& operator-=(Count o) {
    if (o.v_ > v_) throw std::underflow_error("Count: - underflow");
    v_ -= o.v_;
    return *this;
  }

  Count& operator/=(Count o) {
    if (o.v_ == 0) throw std::domain_error("Count: divide by zero");
    v_ /= o.v_;
    return *this;
  }
  Count& operator%=(Count o) {
    if (o.v_ == 0) throw std::domain_error("Count: divide by zero");
    v_ %= o.v_;
    return *this;
  }

  friend Count operator+(Count a, Count b) { return a += b; }
  friend Count operator*(Count a, Count b) { return a *= b; }
  friend Count operator-(Count a, Count b) { return a -= b; }
  friend Count operator/(Count a, Count b) { return a /= b; }
  friend Count operator%(Count a, Count b) { return a %= b; }
  friend bool operator==(Count a, Count b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Count a, Count b) {
    return a.v_ < b.v_   ? std::strong_ordering::less
           : a.v_ > b.v_ ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

  std::uint64_t to_u64() const {
    if (v_ > ~std::uint64_t{0}) throw std::overflow_error("Count: > 64 bits");
    return static_cast<std::uint64_t>(v_);
  }
  double approx() const { return static_cast<double>(v_); }

  std::string str() const {
    if (v_ == 0) return "0";
    std::string s;
    unsigned __int128 v = v_;
    while (v != 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  }

 private:
  static constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
  unsigned __int128 v_ = 0;
};

}  // namespace satlab
