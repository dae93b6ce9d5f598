#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "magicsq/polynomial.hpp"

using namespace magicsq;

namespace {

Poly random_poly(std::mt19937_64& rng, int terms) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int nvars = static_cast<int>(rng() % 3);
    for (int v = 0; v < nvars; ++v)
      m = m.times(Monomial::variable(static_cast<int>(rng() % kVarCount)));
    p.add_term(m, static_cast<std::int64_t>(rng() % 9) - 4);
  }
  return p;
}

std::vector<Dyadic> random_point(std::mt19937_64& rng) {
  std::vector<Dyadic> values(kVarCount);
  for (auto& v : values) v = Dyadic(static_cast<long long>(rng() % 11) - 5);
  return values;
}

}  // namespace

TEST_CASE("addition cancels and collects") {
  Poly a = Poly::variable(a_var(0));
  CHECK((a + (-a)).is_zero());

  Poly ap = Poly::variable(a_var(0)) * Poly::variable(p_var(0));
  Poly bq = Poly::variable(a_var(1)) * Poly::variable(p_var(1));
  Poly sum = ap + bq;
  CHECK(sum.terms().size() == 2);
  CHECK(sum + ap == ap + ap + bq);
  CHECK((sum + ap).to_string() == "2ap + bq");
}

TEST_CASE("multiplication distributes") {
  Poly a = Poly::variable(a_var(0)), b = Poly::variable(a_var(1));
  Poly p = Poly::variable(p_var(0)), q = Poly::variable(p_var(1));
  CHECK((a + b) * (a - b) == a * a - b * b);
  Poly lhs = (a * p + b * q) * (a * p + b * q);
  Poly rhs = a * a * p * p + Poly::constant(2) * a * b * p * q + b * b * q * q;
  CHECK(lhs == rhs);
  CHECK((Poly{} * p).is_zero());
}

TEST_CASE("equality is canonical") {
  Poly ap = Poly::variable(a_var(0)) * Poly::variable(p_var(0));
  Poly bq = Poly::variable(a_var(1)) * Poly::variable(p_var(1));
  CHECK(ap + bq == bq + ap);
  CHECK(ap - bq != ap + bq);
  CHECK(Poly{} == Poly::constant(0));
}

TEST_CASE("degree bound is enforced") {
  Poly x = Poly::variable(0);
  Poly big = x;
  for (int i = 0; i < 3; ++i) big *= big;  // degree 8
  CHECK(big.total_degree() == kMaxTotalDegree);
  CHECK_THROWS_AS(big * x, std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(rng, 4), b = random_poly(rng, 4);
    std::vector<Dyadic> point = random_point(rng);
    CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
    CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
  }
}

TEST_CASE("debug form uses the published variable names") {
  CHECK(var_name(a_var(0)) == "a");
  CHECK(var_name(a_var(7)) == "h");
  CHECK(var_name(p_var(0)) == "p");
  CHECK(var_name(p_var(7)) == "w");
  CHECK(var_name(a_var(8)) == "a8");
  CHECK(var_name(p_var(15)) == "p15");

  Poly p = Poly::variable(a_var(0)) * Poly::variable(p_var(0)) -
           Poly::variable(a_var(1)) * Poly::variable(p_var(1));
  CHECK(p.to_string() == "ap - bq");
  Poly sq = Poly::variable(a_var(0)) * Poly::variable(a_var(0)) - Poly::constant(3);
  CHECK(sq.to_string() == "a^2 - 3");
}
