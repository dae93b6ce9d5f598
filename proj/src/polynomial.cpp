#include "magicsq/polynomial.hpp"

#include <stdexcept>

namespace magicsq {

namespace {

std::int64_t checked_add64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

std::int64_t checked_mul64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

std::int64_t checked_neg64(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw std::overflow_error("coefficient overflow");
  return r;
}

}  // namespace

std::string var_name(int v) {
  if (v < 0 || v >= kVarCount) throw std::invalid_argument("variable index out of range");
  if (v < 8) return std::string(1, static_cast<char>('a' + v));
  if (v < 16) return "a" + std::to_string(v);
  if (v < 24) return std::string(1, static_cast<char>('p' + v - 16));
  return "p" + std::to_string(v - 16);
}

Monomial Monomial::variable(int v, int exp) {
  if (v < 0 || v >= kVarCount) throw std::invalid_argument("variable index out of range");
  if (exp <= 0 || exp > kMaxTotalDegree) throw std::invalid_argument("bad exponent");
  Monomial m;
  m.factors_.emplace_back(static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(exp));
  return m;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto [v, e] : factors_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      r.factors_.emplace_back(a->first, static_cast<std::uint8_t>(a->second + b->second));
      ++a;
      ++b;
    }
  }
  if (r.total_degree() > kMaxTotalDegree)
    throw std::domain_error("polynomial degree bound exceeded");
  return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // lexicographic on the dense exponent vector, earliest variable dominant
  auto ia = a.factors_.begin();
  auto ib = b.factors_.begin();
  while (ia != a.factors_.end() && ib != b.factors_.end()) {
    if (ia->first != ib->first) {
      // the one holding the earlier variable has the larger monomial
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == a.factors_.end() && ib != b.factors_.end();
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (auto [v, e] : factors_) {
    s += var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

Poly Poly::constant(std::int64_t c) {
  Poly p;
  if (c != 0) p.terms_.emplace(Monomial{}, c);
  return p;
}

Poly Poly::variable(int v) {
  Poly p;
  p.terms_.emplace(Monomial::variable(v), 1);
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Poly::add_term(const Monomial& m, std::int64_t coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
    return;
  }
  it->second = checked_add64(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, checked_neg64(c));
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, checked_neg64(c));
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), checked_mul64(ca, cb));
  return r;
}

Dyadic Poly::evaluate(std::span<const Dyadic> values) const {
  Dyadic sum;
  for (const auto& [m, c] : terms_) {
    Dyadic term(c);
    for (auto [v, e] : m.factors()) {
      if (v >= values.size()) throw std::invalid_argument("evaluation point too short");
      for (int i = 0; i < e; ++i) term *= values[v];
    }
    sum += term;
  }
  return sum;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::int64_t coeff = c;
    if (s.empty()) {
      if (coeff < 0) {
        s += "-";
        coeff = -coeff;
      }
    } else {
      s += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    if (coeff != 1 || m.is_one()) s += std::to_string(coeff);
    if (!m.is_one()) s += m.to_string();
  }
  return s;
}

}  // namespace magicsq
