#include <random>
#include <stdexcept>

#include "doctest.h"
#include "magicsq/euler.hpp"
#include "magicsq/polynomial.hpp"

using namespace magicsq;

namespace {

EulerParams params_from_ints(int a, int b, int c, int d, int p, int q, int r, int s) {
  return EulerParams{Dyadic(a), Dyadic(b), Dyadic(c), Dyadic(d),
                     Dyadic(p), Dyadic(q), Dyadic(r), Dyadic(s)};
}

// (p,q,r,s) = (ef, eg, gh, -fh) satisfies pr + qs = 0 for any e,f,g,h.
struct PqrsGen {
  std::mt19937_64 rng{71};
  std::array<std::int64_t, 4> next() {
    while (true) {
      auto draw = [&] { return static_cast<std::int64_t>(rng() % 9) - 4; };
      std::int64_t e = draw(), f = draw(), g = draw(), h = draw();
      std::array<std::int64_t, 4> pqrs{e * f, e * g, g * h, -f * h};
      if (pqrs[0] == 0 && pqrs[1] == 0 && pqrs[2] == 0 && pqrs[3] == 0) continue;
      return pqrs;
    }
  }
};

}  // namespace

TEST_CASE("unit parameters give a signed permutation matrix") {
  SquareMatrix m = euler4_build(params_from_ints(1, 0, 0, 0, 1, 0, 0, 0));
  const int expected[4][4] = {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, -1, 0, 0}, {0, 0, -1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m.at(i, j) == Dyadic(expected[i][j]));
}

TEST_CASE("published cells are wired up exactly") {
  const auto& pats = euler4_patterns();
  CHECK(pattern_to_poly(pats[0][0]).to_string() == "ap + bq + cr + ds");
  CHECK(pattern_to_poly(pats[0][1]).to_string() == "ar - bs - cp + dq");
  CHECK(pattern_to_poly(pats[3][3]).to_string() == "ar + bs + cp + dq");
}

TEST_CASE("worked example is fully magic with constant 40") {
  EulerParams params = params_from_ints(1, 1, 1, -1, 2, 1, 1, -2);
  SquareMatrix m = euler4_build(params);
  const int expected[4][4] = {{6, 0, 0, -2}, {0, -2, 6, 0}, {-2, 0, 0, -6}, {0, -6, -2, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(m.at(i, j) == Dyadic(expected[i][j]));
  ClassifyResult cls = classify(m);
  CHECK(cls.cls == Classification::fully_magic);
  CHECK(cls.constant == Dyadic(40));

  EulerConditions conds = euler4_conditions(params);
  CHECK(conds.first);
  CHECK(conds.second);
  CHECK_FALSE(conds.degenerate);
}

TEST_CASE("side conditions") {
  EulerConditions c1 = euler4_conditions(params_from_ints(1, 2, 3, 4, 2, 1, 1, -2));
  CHECK(c1.first);  // 2*1 + 1*(-2) = 0

  EulerConditions c2 = euler4_conditions(params_from_ints(1, 1, 1, -1, 2, 1, 1, -2));
  CHECK(c2.second);

  EulerConditions c3 = euler4_conditions(params_from_ints(5, 3, 2, 7, 1, 1, 1, -1));
  CHECK(c3.degenerate);  // pq + rs = ps + qr = 0
  CHECK(c3.second);      // vacuously true
}

TEST_CASE("solving the ratio condition") {
  EulerSolution sol =
      euler4_solve(Dyadic(2), Dyadic(1), Dyadic(1), Dyadic(-2), Dyadic(1), Dyadic(-1));
  REQUIRE(sol.ac.has_value());
  CHECK(sol.ac->first == 1);
  CHECK(sol.ac->second == 1);
  CHECK_FALSE(sol.degenerate);

  EulerSolution degen =
      euler4_solve(Dyadic(1), Dyadic(1), Dyadic(1), Dyadic(-1), Dyadic(3), Dyadic(5));
  CHECK(degen.degenerate);
  CHECK_FALSE(degen.ac.has_value());

  CHECK_THROWS_AS(euler4_solve(Dyadic(1), Dyadic(1), Dyadic(1), Dyadic(1), Dyadic(1), Dyadic(1)),
                  std::invalid_argument);
}

TEST_CASE("solved parameters are fully magic, violations are not") {
  PqrsGen gen;
  std::mt19937_64 rng(73);
  int solved = 0;
  while (solved < 100) {
    auto [p, q, r, s] = gen.next();
    std::int64_t b = static_cast<std::int64_t>(rng() % 9) - 4;
    std::int64_t d = static_cast<std::int64_t>(rng() % 9) - 4;
    EulerSolution sol = euler4_solve(Dyadic(p), Dyadic(q), Dyadic(r), Dyadic(s), Dyadic(b), Dyadic(d));
    if (sol.degenerate || !sol.ac) continue;
    auto [a, c] = *sol.ac;
    EulerParams params{Dyadic(a), Dyadic(b), Dyadic(c), Dyadic(d),
                       Dyadic(p), Dyadic(q), Dyadic(r), Dyadic(s)};
    EulerConditions conds = euler4_conditions(params);
    CHECK(conds.first);
    CHECK(conds.second);
    if ((Dyadic(a).square() + Dyadic(b).square() + Dyadic(c).square() + Dyadic(d).square())
            .is_zero())
      continue;
    ClassifyResult cls = classify(euler4_build(params));
    CHECK(cls.cls == Classification::fully_magic);
    ++solved;
  }

  int violations = 0;
  while (violations < 100) {
    auto draw = [&] { return static_cast<std::int64_t>(rng() % 19) - 9; };
    EulerParams params{Dyadic(draw()), Dyadic(draw()), Dyadic(draw()), Dyadic(draw()),
                       Dyadic(draw()), Dyadic(draw()), Dyadic(draw()), Dyadic(draw())};
    if (euler4_conditions(params).first) continue;  // need pr + qs != 0
    if ((norm(Hyper({params.a, params.b, params.c, params.d})) *
         norm(Hyper({params.p, params.q, params.r, params.s})))
            .is_zero())
      continue;
    ClassifyResult cls = classify(euler4_build(params));
    CHECK(cls.cls == Classification::semimagic);
    ++violations;
  }
}

TEST_CASE("the parametrised table is symbolically semimagic") {
  const auto& pats = euler4_patterns();
  std::array<std::array<Poly, 4>, 4> cell;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pattern_to_poly(pats[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

  Poly na, np;
  for (int k = 0; k < 4; ++k) {
    na += Poly::variable(a_var(k)) * Poly::variable(a_var(k));
    np += Poly::variable(p_var(k)) * Poly::variable(p_var(k));
  }
  Poly constant = na * np;

  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      // row and column Gram identities hold with no side conditions
      Poly row_g, col_g;
      for (int k = 0; k < 4; ++k) {
        row_g += cell[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 cell[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        col_g += cell[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                 cell[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      if (i == j) {
        CHECK(row_g == constant);
        CHECK(col_g == constant);
      } else {
        CHECK(row_g.is_zero());
        CHECK(col_g.is_zero());
      }
    }
  }
}

TEST_CASE("reconciliation with the quaternionic construction") {
  BasisTable q = BasisTable::create(4);

  // row/column transformations alone provably cannot match
  CHECK_FALSE(euler4_match_quaternion(q, false).has_value());

  auto match = euler4_match_quaternion(q);
  REQUIRE(match.has_value());
  CHECK(match->uses_variable_signs);

  auto transformed = apply_euler_match(*match, build_symbolic(4, q));
  const auto& target = euler4_patterns();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(pattern_to_poly(transformed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ==
            pattern_to_poly(target[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));

  // the raw construction is not the published table
  auto raw = build_symbolic(4, q);
  bool identical = true;
  for (int i = 0; i < 4 && identical; ++i)
    for (int j = 0; j < 4; ++j)
      if (pattern_to_poly(raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) !=
          pattern_to_poly(target[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
        identical = false;
        break;
      }
  CHECK_FALSE(identical);
}
