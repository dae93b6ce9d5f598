#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "magicsq/magic.hpp"

namespace magicsq {

struct Predicates {
  bool entries_distinct = false;
  bool squares_distinct = false;
  bool entries_integral = false;
  bool fully_magic = false;
};

struct SearchConfig {
  int dim = 8;
  Convention convention = Convention::standard;
  // coordinate range, in units of 1/2 when half_integer_mode is on
  std::int64_t lo = -4;
  std::int64_t hi = 4;
  bool half_integer_mode = false;
  // optional per-coordinate bounds (A coords then P coords, size 2*dim);
  // overrides [lo, hi] when non-empty
  std::vector<std::pair<std::int64_t, std::int64_t>> box;
  Predicates predicates;
  std::uint64_t max_iterations = 100000;
  std::int64_t wall_limit_ms = 0;  // 0 = unlimited
  std::uint64_t seed = 1;
  int workers = 1;
  bool quotient_symmetries = true;       // exhaustive search only
  std::uint64_t exhaustive_cap = 100000000;
  bool log_timestamps = false;

  void validate() const;
  std::pair<std::int64_t, std::int64_t> bounds(int coord) const;
};

struct Candidate {
  Hyper A;
  Hyper P;
  Dyadic constant;
  ClassifyResult flags;
  std::int64_t timestamp = 0;  // unix seconds at discovery
  std::uint64_t seed = 0;
  int worker = 0;
  std::uint64_t iteration = 0;
};

using CandidateSink = std::function<void(const Candidate&)>;

struct ProgressInfo {
  std::uint64_t iterations = 0;
  std::uint64_t candidates = 0;
  std::optional<Dyadic> best_constant;
};
using ProgressSink = std::function<void(const ProgressInfo&)>;

struct SearchStats {
  std::uint64_t iterations = 0;
  std::uint64_t candidates = 0;
  std::optional<Dyadic> best_constant;  // non-increasing over the run
};

/// Pairs with N(A)N(P) = 0 are never candidates (the zero matrix is
/// degenerate); every emitted candidate satisfies all configured predicates.
SearchStats run_random_search(const SearchConfig& cfg, const CandidateSink& sink,
                              const ProgressSink& progress = nullptr);

/// Deterministic stream of one worker; a multi-worker run emits exactly the
/// union of its workers' streams.
SearchStats run_search_worker(const SearchConfig& cfg, int worker, const CandidateSink& sink,
                              const ProgressSink& progress = nullptr);

/// Visits every lattice point once, minus the configured symmetry quotient:
/// (A,P) ~ (-A,-P), and (A,P) ~ (A/g, gP) for integer g >= 2 whenever the
/// scaled pair stays on the lattice and in the box.
SearchStats run_exhaustive_search(const SearchConfig& cfg, const CandidateSink& sink,
                                  const ProgressSink& progress = nullptr);

/// Builds the candidate record for one concrete pair, applying the zero-norm
/// rule and predicate filter. Exposed for re-verification of logs.
std::optional<Candidate> evaluate_pair(const Hyper& A, const Hyper& P, const BasisTable& table,
                                       const Predicates& predicates);

/// Exhaustive search over all n! row permutations for one giving both
/// diagonal square sums equal to the constant; n <= 8.
std::optional<std::vector<int>> diagonalize_rows(const SquareMatrix& m);

SquareMatrix permute_rows(const SquareMatrix& m, const std::vector<int>& perm);

Predicates predicates_from_csv(const std::string& csv);
std::string predicates_to_csv(const Predicates& p);

}  // namespace magicsq
