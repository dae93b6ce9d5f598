#include "magicsq/euler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace magicsq {

namespace {

// Transcribed from the publication; cell text lists four signed products,
// first factor a..d, second factor p..s.
constexpr std::array<std::array<const char*, 4>, 4> kEulerCells = {{
    {"+ap+bq+cr+ds", "+ar-bs-cp+dq", "-as-br+cq+dp", "+aq-bp+cs-dr"},
    {"-aq+bp+cs-dr", "+as+br+cq+dp", "+ar-bs+cp-dq", "+ap+bq-cr-ds"},
    {"+ar+bs-cp-dq", "-ap+bq-cr+ds", "+aq+bp+cs+dr", "+as-br-cq+dp"},
    {"-as+br-cq+dp", "-aq-bp+cs+dr", "-ap+bq+cr-ds", "+ar+bs+cp+dq"},
}};

TermPattern parse_cell(const char* text) {
  TermPattern pat(4);
  std::array<bool, 4> filled{};
  for (int t = 0; t < 4; ++t) {
    const char* term = text + 3 * t;
    int sign = term[0] == '-' ? -1 : 1;
    int a_index = term[1] - 'a';
    int p_index = term[2] - 'p';
    if (term[0] != '+' && term[0] != '-') throw std::logic_error("bad cell term");
    if (a_index < 0 || a_index > 3 || p_index < 0 || p_index > 3 || filled[p_index])
      throw std::logic_error("bad cell term");
    filled[static_cast<std::size_t>(p_index)] = true;
    pat[static_cast<std::size_t>(p_index)] = {static_cast<std::uint8_t>(a_index),
                                              static_cast<std::int8_t>(sign)};
  }
  return pat;
}

}  // namespace

const std::array<std::array<TermPattern, 4>, 4>& euler4_patterns() {
  static const auto patterns = [] {
    std::array<std::array<TermPattern, 4>, 4> out;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            parse_cell(kEulerCells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return out;
  }();
  return patterns;
}

SquareMatrix euler4_build(const EulerParams& params) {
  Hyper A(std::vector<Dyadic>{params.a, params.b, params.c, params.d});
  Hyper P(std::vector<Dyadic>{params.p, params.q, params.r, params.s});
  const auto& patterns = euler4_patterns();
  std::vector<Dyadic> entries;
  entries.reserve(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      entries.push_back(evaluate_pattern(
          patterns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], A, P));
  return SquareMatrix(4, std::move(entries));
}

EulerConditions euler4_conditions(const EulerParams& params) {
  const auto& [a, b, c, d, p, q, r, s] = params;
  EulerConditions res;
  res.first = (p * r + q * s).is_zero();
  Dyadic u = p * q + r * s;
  Dyadic v = p * s + q * r;
  Dyadic left = b * u + d * v;   // bracket multiplying a
  Dyadic right = d * u + b * v;  // bracket multiplying c
  res.degenerate = left.is_zero() && right.is_zero();
  res.second = (a * left + c * right).is_zero();
  return res;
}

EulerSolution euler4_solve(const Dyadic& p, const Dyadic& q, const Dyadic& r, const Dyadic& s,
                           const Dyadic& b, const Dyadic& d) {
  if (!(p * r + q * s).is_zero())
    throw std::invalid_argument("euler4_solve requires pr + qs = 0");
  Dyadic u = p * q + r * s;
  Dyadic v = p * s + q * r;
  Dyadic num = -(d * u + b * v);
  Dyadic den = b * u + d * v;
  EulerSolution res;
  if (num.is_zero() && den.is_zero()) {
    res.degenerate = true;
    return res;
  }
  // scale both to a common integer grid, then reduce
  int k = std::max(num.log2_den(), den.log2_den());
  int128 ni = detail::checked_shl(num.numerator(), k - num.log2_den());
  int128 di = detail::checked_shl(den.numerator(), k - den.log2_den());
  auto abs128 = [](int128 x) { return x < 0 ? -x : x; };
  int128 g = abs128(ni);
  int128 h = abs128(di);
  while (h != 0) {
    int128 t = g % h;
    g = h;
    h = t;
  }
  ni /= g;
  di /= g;
  if (di < 0 || (di == 0 && ni < 0)) {
    ni = -ni;
    di = -di;
  }
  auto narrow = [](int128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("solution does not fit 64 bits");
    return static_cast<std::int64_t>(x);
  };
  res.ac = {narrow(ni), narrow(di)};
  return res;
}

namespace {

using PatternGrid = std::array<std::array<TermPattern, 4>, 4>;

std::array<std::uint8_t, 4> bijection_of(const TermPattern& pat) {
  std::array<std::uint8_t, 4> b{};
  for (int l = 0; l < 4; ++l) b[static_cast<std::size_t>(l)] = pat[static_cast<std::size_t>(l)].a_index;
  return b;
}

std::vector<std::array<int, 4>> all_permutations() {
  std::array<int, 4> p{0, 1, 2, 3};
  std::vector<std::array<int, 4>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

std::optional<EulerMatch> euler4_match_quaternion(const BasisTable& table,
                                                  bool allow_variable_signs) {
  if (table.dim() != 4) throw std::invalid_argument("quaternion table required");
  auto quat = build_symbolic(4, table);
  const auto& target = euler4_patterns();

  const auto perms = all_permutations();

  // Stage 1: match the sign-free bijection grids; stage 2: solve the signs.
  for (const auto& row_perm : perms) {
    for (const auto& col_perm : perms) {
      bool grid_ok = true;
      for (int i = 0; i < 4 && grid_ok; ++i)
        for (int j = 0; j < 4; ++j)
          if (bijection_of(quat[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(i)])]
                               [static_cast<std::size_t>(col_perm[static_cast<std::size_t>(j)])]) !=
              bijection_of(target[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
            grid_ok = false;
            break;
          }
      if (!grid_ok) continue;

      int var_mask_limit = allow_variable_signs ? 256 : 1;
      for (int mask = 0; mask < var_mask_limit; ++mask) {
        std::array<int, 4> a_sign, p_sign;
        for (int k = 0; k < 4; ++k) {
          a_sign[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? -1 : 1;
          p_sign[static_cast<std::size_t>(k)] = (mask >> (4 + k)) & 1 ? -1 : 1;
        }
        // required cell flip factors must be constant within a cell
        std::array<std::array<int, 4>, 4> flip{};
        bool consistent = true;
        for (int i = 0; i < 4 && consistent; ++i) {
          for (int j = 0; j < 4 && consistent; ++j) {
            const TermPattern& src =
                quat[static_cast<std::size_t>(row_perm[static_cast<std::size_t>(i)])]
                    [static_cast<std::size_t>(col_perm[static_cast<std::size_t>(j)])];
            const TermPattern& dst = target[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            int cell_flip = 0;
            for (int l = 0; l < 4; ++l) {
              int src_sign = src[static_cast<std::size_t>(l)].sign *
                             a_sign[src[static_cast<std::size_t>(l)].a_index] *
                             p_sign[static_cast<std::size_t>(l)];
              int f = dst[static_cast<std::size_t>(l)].sign * src_sign;
              if (cell_flip == 0)
                cell_flip = f;
              else if (cell_flip != f)
                consistent = false;
            }
            flip[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cell_flip;
          }
        }
        if (!consistent) continue;
        // flip must factor as row_sign[i] * col_sign[j]
        std::array<int, 4> row_sign{}, col_sign{};
        for (int i = 0; i < 4; ++i) row_sign[static_cast<std::size_t>(i)] = flip[static_cast<std::size_t>(i)][0];
        for (int j = 0; j < 4; ++j)
          col_sign[static_cast<std::size_t>(j)] =
              flip[0][static_cast<std::size_t>(j)] * row_sign[0];
        bool rank_one = true;
        for (int i = 0; i < 4 && rank_one; ++i)
          for (int j = 0; j < 4; ++j)
            if (flip[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
                row_sign[static_cast<std::size_t>(i)] * col_sign[static_cast<std::size_t>(j)]) {
              rank_one = false;
              break;
            }
        if (!rank_one) continue;

        EulerMatch m;
        m.row_perm = row_perm;
        m.col_perm = col_perm;
        m.row_sign = row_sign;
        m.col_sign = col_sign;
        m.a_sign = a_sign;
        m.p_sign = p_sign;
        m.uses_variable_signs = mask != 0;
        return m;
      }
    }
  }
  return std::nullopt;
}

std::array<std::array<TermPattern, 4>, 4> apply_euler_match(
    const EulerMatch& match, const std::vector<std::vector<TermPattern>>& quaternionic) {
  std::array<std::array<TermPattern, 4>, 4> out;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      TermPattern pat =
          quaternionic[static_cast<std::size_t>(match.row_perm[static_cast<std::size_t>(i)])]
                      [static_cast<std::size_t>(match.col_perm[static_cast<std::size_t>(j)])];
      for (int l = 0; l < 4; ++l) {
        TermRef& t = pat[static_cast<std::size_t>(l)];
        int s = t.sign;
        s *= match.a_sign[t.a_index];
        s *= match.p_sign[static_cast<std::size_t>(l)];
        s *= match.row_sign[static_cast<std::size_t>(i)];
        s *= match.col_sign[static_cast<std::size_t>(j)];
        t.sign = static_cast<std::int8_t>(s);
      }
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(pat);
    }
  }
  return out;
}

}  // namespace magicsq
