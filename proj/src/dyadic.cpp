#include "magicsq/dyadic.hpp"

namespace magicsq {
namespace detail {

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string out;
  if (neg) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

int128 int128_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  int128 v = 0;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal: " + s);
    v = checked_add(checked_mul(v, 10), c - '0');
  }
  return neg ? checked_sub(0, v) : v;
}

}  // namespace detail

std::string Dyadic::to_string() const {
  if (k_ == 0) return detail::int128_to_string(num_);
  int128 den = static_cast<int128>(1) << k_;
  return detail::int128_to_string(num_) + "/" + detail::int128_to_string(den);
}

Dyadic Dyadic::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Dyadic(detail::int128_from_string(s), 0);
  int128 num = detail::int128_from_string(s.substr(0, slash));
  int128 den = detail::int128_from_string(s.substr(slash + 1));
  if (den <= 0) throw std::invalid_argument("dyadic denominator must be positive: " + s);
  int k = 0;
  while ((den & 1) == 0) {
    den >>= 1;
    ++k;
  }
  if (den != 1) throw std::invalid_argument("dyadic denominator must be a power of two: " + s);
  return Dyadic(num, k);
}

}  // namespace magicsq
