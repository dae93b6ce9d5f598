#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "magicsq/dyadic.hpp"

namespace magicsq {

/// Fixed variable universe: indices 0..15 are the left-factor coordinates
/// (printed a..h, a8..a15), 16..31 the right-factor coordinates (p..w,
/// p8..p15). Smaller dimensions use a prefix of each block.
inline constexpr int kVarCount = 32;
inline constexpr int kMaxTotalDegree = 8;

inline int a_var(int k) { return k; }
inline int p_var(int l) { return 16 + l; }
std::string var_name(int v);

/// Sparse exponent list, sorted by variable index, no zero exponents.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int v, int exp = 1);

  int total_degree() const;
  bool is_one() const { return factors_.empty(); }
  Monomial times(const Monomial& o) const;  // throws on degree bound

  const std::vector<std::pair<std::uint8_t, std::uint8_t>>& factors() const { return factors_; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors_ == b.factors_;
  }
  /// Graded lexicographic: by total degree, then exponent vector, earliest
  /// variable index first.
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<std::pair<std::uint8_t, std::uint8_t>> factors_;
};

/// Sparse multivariate polynomial over checked 64-bit integers, canonical:
/// no zero coefficients stored.
class Poly {
 public:
  Poly() = default;

  static Poly constant(std::int64_t c);
  static Poly variable(int v);

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Substitutes values[v] for variable v.
  Dyadic evaluate(std::span<const Dyadic> values) const;

  /// Terms in decreasing graded-lex order joined by " + " / " - ".
  std::string to_string() const;

  void add_term(const Monomial& m, std::int64_t coeff);

 private:
  std::map<Monomial, std::int64_t> terms_;
};

}  // namespace magicsq
