#pragma once

#include <array>
#include <vector>

#include "magicsq/hyper.hpp"
#include "magicsq/magic.hpp"

namespace magicsq::testdata {

// The published 9476 parameters: integral A, half-integral P.
inline Hyper witness_A0() {
  return Hyper({Dyadic(8), Dyadic(-2), Dyadic(-4), Dyadic(8), Dyadic(-4), Dyadic(-1), Dyadic(-5),
                Dyadic(-4)});
}
inline Hyper witness_P0() {
  return Hyper({Dyadic::half(5), Dyadic::half(7), Dyadic::half(-1), Dyadic::half(-3),
                Dyadic::half(-7), Dyadic::half(1), Dyadic::half(7), Dyadic::half(1)});
}

// The published 43617 parameters, all integral.
inline Hyper witness_A1() {
  return Hyper({Dyadic(-2), Dyadic(-3), Dyadic(7), Dyadic(-1), Dyadic(2), Dyadic(-11), Dyadic(2),
                Dyadic(-5)});
}
inline Hyper witness_P1() {
  return Hyper({Dyadic(-7), Dyadic(4), Dyadic(-4), Dyadic(-9), Dyadic(1), Dyadic(2), Dyadic(-5),
                Dyadic(3)});
}

// The published matrix of constant 9476.
inline constexpr std::array<std::array<int, 8>, 8> kPrinted9476 = {{
    {43, 16, -19, 8, -22, 47, 38, -53},
    {-30, 11, 30, 5, 25, -32, 75, -16},
    {9, -4, -7, -52, -46, -57, -6, -35},
    {-8, -67, 48, 21, -5, 10, -17, -42},
    {54, -11, 14, 49, -31, -36, 17, 36},
    {44, 41, 60, -21, 33, -2, -25, -10},
    {7, -26, 29, -54, -24, 37, 32, 45},
    {-41, 46, 35, 22, -60, 15, -12, 1},
}};

// The published 4x4 fully magic square of squares, constant 8515.
inline constexpr std::array<std::array<int, 4>, 4> kPrintedEuler = {{
    {68, -29, 41, -37},
    {-17, 31, 79, 32},
    {59, 28, -23, 61},
    {-11, -77, 8, 49},
}};

template <std::size_t N>
SquareMatrix matrix_from_ints(const std::array<std::array<int, N>, N>& rows) {
  std::vector<Dyadic> entries;
  entries.reserve(N * N);
  for (const auto& row : rows)
    for (int v : row) entries.push_back(Dyadic(v));
  return SquareMatrix(static_cast<int>(N), std::move(entries));
}

}  // namespace magicsq::testdata
