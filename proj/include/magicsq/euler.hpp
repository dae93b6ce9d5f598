#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "magicsq/magic.hpp"

namespace magicsq {

struct EulerParams {
  Dyadic a, b, c, d;
  Dyadic p, q, r, s;
};

/// The published parametrised 4x4 table as term patterns (row, column).
const std::array<std::array<TermPattern, 4>, 4>& euler4_patterns();

/// Evaluates the parametrised table at concrete values.
SquareMatrix euler4_build(const EulerParams& params);

struct EulerConditions {
  bool first = false;       // pr + qs = 0
  bool second = false;      // a[b(pq+rs) + d(ps+qr)] + c[d(pq+rs) + b(ps+qr)] = 0
  bool degenerate = false;  // both bracketed factors vanish: second holds vacuously
};

EulerConditions euler4_conditions(const EulerParams& params);

struct EulerSolution {
  bool degenerate = false;  // any (a, c) works
  std::optional<std::pair<std::int64_t, std::int64_t>> ac;
};

/// Solves the ratio condition for (a, c) in lowest terms given the remaining
/// parameters. Requires pr + qs = 0.
EulerSolution euler4_solve(const Dyadic& p, const Dyadic& q, const Dyadic& r, const Dyadic& s,
                           const Dyadic& b, const Dyadic& d);

/// Transformation reconciling the quaternionic symbolic matrix with the
/// published table: column/row signed permutations plus per-parameter sign
/// flips. Pure row/column transformations cannot suffice: every entry of the
/// A(e_i P) matrix carries an odd number of negative terms (e_i^2 = -1 forces
/// this already in the first row) while every published cell carries an even
/// number, and row/column sign flips preserve that parity.
struct EulerMatch {
  std::array<int, 4> col_perm;   // quaternionic column feeding table column j
  std::array<int, 4> col_sign;
  std::array<int, 4> row_perm;   // quaternionic row feeding table row i
  std::array<int, 4> row_sign;
  std::array<int, 4> a_sign;     // sign flip per a..d
  std::array<int, 4> p_sign;     // sign flip per p..s
  bool uses_variable_signs = false;
};

std::optional<EulerMatch> euler4_match_quaternion(const BasisTable& table,
                                                  bool allow_variable_signs = true);

/// Applies a match to the quaternionic symbolic matrix.
std::array<std::array<TermPattern, 4>, 4> apply_euler_match(
    const EulerMatch& match, const std::vector<std::vector<TermPattern>>& quaternionic);

}  // namespace magicsq
