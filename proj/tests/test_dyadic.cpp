#include <random>
#include <stdexcept>

#include "doctest.h"
#include "magicsq/dyadic.hpp"

using namespace magicsq;

TEST_CASE("canonical form keeps the numerator odd or the exponent zero") {
  Dyadic a(6, 1);  // 6/2 = 3
  CHECK(a == Dyadic(3));
  CHECK(a.log2_den() == 0);
  Dyadic b(6, 2);  // 6/4 = 3/2
  CHECK(b.numerator() == 3);
  CHECK(b.log2_den() == 1);
  Dyadic z(0, 5);
  CHECK(z.is_zero());
  CHECK(z.log2_den() == 0);
}

TEST_CASE("arithmetic stays exact") {
  Dyadic h = Dyadic::half(5);  // 5/2
  CHECK(h + h == Dyadic(5));
  CHECK(h * Dyadic(2) == Dyadic(5));
  CHECK(h - Dyadic::half(1) == Dyadic(2));
  CHECK((h * h).to_string() == "25/4");
  CHECK(-h == Dyadic::half(-5));
  CHECK(h.abs() == h);
  CHECK((-h).abs() == h);
}

TEST_CASE("ordering is the rational order") {
  CHECK(Dyadic::half(5) < Dyadic(3));
  CHECK(Dyadic(2) < Dyadic::half(5));
  CHECK(Dyadic::half(-1) < Dyadic(0));
  CHECK(Dyadic(4, 2) == Dyadic(1));
}

TEST_CASE("string round trip") {
  CHECK(Dyadic::half(5).to_string() == "5/2");
  CHECK(Dyadic(-7).to_string() == "-7");
  CHECK(Dyadic(3, 2).to_string() == "3/4");
  CHECK(Dyadic::from_string("5/2") == Dyadic::half(5));
  CHECK(Dyadic::from_string("-12") == Dyadic(-12));
  CHECK(Dyadic::from_string("6/4") == Dyadic(3, 1));
  CHECK_THROWS_AS(Dyadic::from_string("1/3"), std::invalid_argument);
  CHECK_THROWS_AS(Dyadic::from_string("x"), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Dyadic d(static_cast<long long>(rng() % 20001) - 10000, static_cast<int>(rng() % 4));
    CHECK(Dyadic::from_string(d.to_string()) == d);
  }
}

TEST_CASE("overflow raises instead of wrapping") {
  Dyadic big(detail::int128_max(), 0);
  CHECK_THROWS_AS(big * Dyadic(2), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(Dyadic(1, 200), std::overflow_error);
}

TEST_CASE("random add and mul agree with integer cross checks") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    long long x = static_cast<long long>(rng() % 2001) - 1000;
    long long y = static_cast<long long>(rng() % 2001) - 1000;
    // compare n/2 arithmetic against integers scaled by 2
    Dyadic hx = Dyadic::half(x), hy = Dyadic::half(y);
    CHECK(hx + hy == Dyadic::half(x + y));
    CHECK(hx * hy == Dyadic(static_cast<int128>(x) * y, 2));
  }
}
