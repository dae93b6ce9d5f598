#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "magicsq/hyper.hpp"
#include "magicsq/polynomial.hpp"

namespace magicsq {

struct Provenance {
  Hyper A;
  Hyper P;
  Convention convention;
};

/// n x n exact matrix, optionally remembering the (A, P, convention) it was
/// built from.
class SquareMatrix {
 public:
  SquareMatrix(int n, std::vector<Dyadic> entries,
               std::optional<Provenance> prov = std::nullopt);

  static SquareMatrix from_rows(const std::vector<std::vector<Dyadic>>& rows);

  int n() const { return n_; }
  const Dyadic& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<Dyadic>& entries() const { return entries_; }
  const std::optional<Provenance>& provenance() const { return prov_; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  std::vector<Dyadic> entries_;
  std::optional<Provenance> prov_;
};

struct GramReport {
  Dyadic constant;
  Dyadic off_diagonal_max_abs;
  bool is_orthogonal = false;
  std::vector<Dyadic> row_sums_of_squares;
};

enum class Classification { not_semimagic, semimagic, fully_magic };

std::string classification_name(Classification c);

struct ClassifyResult {
  Classification cls = Classification::not_semimagic;
  bool entries_distinct = false;
  bool squares_distinct = false;
  bool entries_integral = false;
  Dyadic constant;
};

/// One symbolic entry of the construction: for each right-factor coordinate
/// index l, the left-factor coordinate it multiplies and the sign. The map
/// l -> a_index is a bijection.
struct TermRef {
  std::uint8_t a_index;
  std::int8_t sign;
};
using TermPattern = std::vector<TermRef>;

struct ProofObligation {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ProofReport {
  int dim = 0;
  Convention convention = Convention::standard;
  std::vector<ProofObligation> obligations;
  bool all_pass = false;
};

/// Row i is the coordinate vector of A * (e_i * P).
SquareMatrix build_matrix(const Hyper& A, const Hyper& P, const BasisTable& table);

/// Symbolic form of build_matrix; dims 4 and 8.
std::vector<std::vector<TermPattern>> build_symbolic(int dim, const BasisTable& table);

GramReport gram_report(const SquareMatrix& m);

/// (main diagonal sum of squares, anti-diagonal sum of squares).
std::pair<Dyadic, Dyadic> diagonal_sums(const SquareMatrix& m);

ClassifyResult classify(const SquareMatrix& m);

/// Symbolic proof at dims 4, 8 and 16: off-diagonal Gram entries vanish, the
/// diagonal equals (sum a_i^2)(sum p_j^2), and all entries are pairwise
/// distinct polynomials. Dimension 16 fails the first obligation.
ProofReport prove_theorem(int dim, const BasisTable& table);

Poly pattern_to_poly(const TermPattern& pattern);
Dyadic evaluate_pattern(const TermPattern& pattern, const Hyper& A, const Hyper& P);
bool pattern_is_bijection(const TermPattern& pattern);

namespace detail {
/// Unrestricted version of build_symbolic, any table dimension.
std::vector<std::vector<TermPattern>> symbolic_patterns(const BasisTable& table);
}  // namespace detail

}  // namespace magicsq
