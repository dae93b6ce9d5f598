#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace magicsq {

using int128 = __int128;

namespace detail {

inline constexpr int128 int128_max() {
  return static_cast<int128>((static_cast<unsigned __int128>(1) << 127) - 1);
}
inline constexpr int128 int128_min() { return -int128_max() - 1; }

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("scalar addition overflow");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("scalar subtraction overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("scalar multiplication overflow");
  return r;
}

inline int128 checked_shl(int128 a, int sh) {
  if (sh < 0 || sh > 126) throw std::overflow_error("scalar shift out of range");
  if (a == 0) return 0;
  if (a > 0 ? a > (int128_max() >> sh) : a < (int128_min() >> sh))
    throw std::overflow_error("scalar shift overflow");
  return a << sh;
}

std::string int128_to_string(int128 v);
int128 int128_from_string(const std::string& s);

}  // namespace detail

/// Exact dyadic rational num/2^k. Canonical form: num odd or k == 0.
/// All arithmetic is checked 128-bit; overflow throws std::overflow_error.
class Dyadic {
 public:
  static constexpr int kMaxLog2Den = 96;

  constexpr Dyadic() : num_(0), k_(0) {}
  Dyadic(long long n) : num_(n), k_(0) {}  // NOLINT: implicit by design
  Dyadic(int128 num, int log2_den) : num_(num), k_(log2_den) {
    if (k_ < 0 || k_ > kMaxLog2Den) throw std::overflow_error("dyadic denominator out of range");
    canonicalize();
  }

  /// n/2, the half-integer constructor.
  static Dyadic half(int128 n) { return Dyadic(n, 1); }

  int128 numerator() const { return num_; }
  int log2_den() const { return k_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return k_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Dyadic operator-() const {
    Dyadic r;
    r.num_ = detail::checked_sub(0, num_);
    r.k_ = k_;
    return r;
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int k = a.k_ > b.k_ ? a.k_ : b.k_;
    int128 an = detail::checked_shl(a.num_, k - a.k_);
    int128 bn = detail::checked_shl(b.num_, k - b.k_);
    return Dyadic(detail::checked_add(an, bn), k);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.k_ + b.k_ > kMaxLog2Den) throw std::overflow_error("dyadic denominator overflow");
    return Dyadic(detail::checked_mul(a.num_, b.num_), a.k_ + b.k_);
  }

  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  Dyadic square() const { return *this * *this; }
  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.k_ == b.k_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    int k = a.k_ > b.k_ ? a.k_ : b.k_;
    return detail::checked_shl(a.num_, k - a.k_) < detail::checked_shl(b.num_, k - b.k_);
  }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  /// "n" for integers, otherwise "n/d" with d = 2^k (e.g. "5/2").
  std::string to_string() const;
  /// Parses the to_string() format; the denominator must be a power of two.
  static Dyadic from_string(const std::string& s);

 private:
  void canonicalize() {
    if (num_ == 0) {
      k_ = 0;
      return;
    }
    while (k_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --k_;
    }
  }

  int128 num_;
  int k_;
};

}  // namespace magicsq
