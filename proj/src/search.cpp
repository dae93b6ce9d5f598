#include "magicsq/search.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace magicsq {

namespace {

std::int64_t unix_seconds() {
  return std::chrono::duration_cast<std::chrono::seconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t worker_seed(std::uint64_t seed, int worker) {
  return splitmix64(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(worker + 1));
}

// unbiased bounded draw; the engine is fully specified by the standard, so
// runs are reproducible across platforms
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t span) {
  std::uint64_t rem = (UINT64_MAX % span + 1) % span;  // 2^64 mod span
  std::uint64_t limit = UINT64_MAX - rem;
  std::uint64_t r = rng();
  while (rem != 0 && r > limit) r = rng();
  return r % span;
}

Dyadic coord_value(std::int64_t units, bool half_mode) {
  return half_mode ? Dyadic(units, 1) : Dyadic(units);
}

struct FastTable {
  int dim;
  // left_factor(m, j) = (k, s): e_k e_m = s e_j
  std::array<std::array<std::uint8_t, 16>, 16> inv_k{};
  std::array<std::array<std::int8_t, 16>, 16> inv_s{};
  std::array<std::array<std::uint8_t, 16>, 16> target{};
  std::array<std::array<std::int8_t, 16>, 16> sign{};

  explicit FastTable(const BasisTable& t) : dim(t.dim()) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        BasisEntry e = t.at(i, j);
        target[i][j] = e.target;
        sign[i][j] = e.sign;
        BasisEntry f = t.left_factor(i, j);
        inv_k[i][j] = f.target;
        inv_s[i][j] = f.sign;
      }
  }
};

// Exact fully-magic pre-check on integer unit coordinates: entry (i, j)
// scaled by 4 (half mode) or 1 (integer mode) is sum_l +- u_k v_l, so the
// diagonal sums can be compared against N(A)N(P) without building the
// matrix. Coordinates are small, so int64 cannot overflow here.
bool diagonals_match(const FastTable& t, const std::int64_t* u, const std::int64_t* v) {
  int n = t.dim;
  std::int64_t nu = 0, nv = 0;
  for (int i = 0; i < n; ++i) nu += u[i] * u[i];
  for (int i = 0; i < n; ++i) nv += v[i] * v[i];
  std::int64_t want = nu * nv;
  std::int64_t main_sum = 0, anti_sum = 0;
  std::array<std::int64_t, 16> x{};
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      int m = t.target[i][l];
      x[m] = t.sign[i][l] > 0 ? v[l] : -v[l];
    }
    for (int pass = 0; pass < 2; ++pass) {
      int j = pass == 0 ? i : n - 1 - i;
      std::int64_t entry = 0;
      for (int m = 0; m < n; ++m) {
        int k = t.inv_k[m][j];
        entry += t.inv_s[m][j] > 0 ? u[k] * x[m] : -u[k] * x[m];
      }
      (pass == 0 ? main_sum : anti_sum) += entry * entry;
    }
  }
  return main_sum == want && anti_sum == want;
}

}  // namespace

void SearchConfig::validate() const {
  if (!dim_supported(dim) || dim < 2) throw std::invalid_argument("unsupported dimension");
  if (!box.empty() && box.size() != static_cast<std::size_t>(2 * dim))
    throw std::invalid_argument("box must list bounds for all 2*dim coordinates");
  if (max_iterations == 0 && wall_limit_ms == 0)
    throw std::invalid_argument("budget required");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
}

std::pair<std::int64_t, std::int64_t> SearchConfig::bounds(int coord) const {
  if (!box.empty()) return box[static_cast<std::size_t>(coord)];
  return {lo, hi};
}

std::optional<Candidate> evaluate_pair(const Hyper& A, const Hyper& P, const BasisTable& table,
                                       const Predicates& predicates) {
  if ((norm(A) * norm(P)).is_zero()) return std::nullopt;
  SquareMatrix m = build_matrix(A, P, table);
  ClassifyResult flags = classify(m);
  if (predicates.entries_distinct && !flags.entries_distinct) return std::nullopt;
  if (predicates.squares_distinct && !flags.squares_distinct) return std::nullopt;
  if (predicates.entries_integral && !flags.entries_integral) return std::nullopt;
  if (predicates.fully_magic && flags.cls != Classification::fully_magic) return std::nullopt;
  Candidate c{A, P, flags.constant, flags, unix_seconds(), 0, 0, 0};
  return c;
}

SearchStats run_search_worker(const SearchConfig& cfg, int worker, const CandidateSink& sink,
                              const ProgressSink& progress) {
  cfg.validate();
  BasisTable table = BasisTable::create(cfg.dim, cfg.convention);
  FastTable fast(table);
  std::mt19937_64 rng(worker_seed(cfg.seed, worker));

  int ncoords = 2 * cfg.dim;
  std::vector<std::int64_t> spans(static_cast<std::size_t>(ncoords));
  std::vector<std::int64_t> los(static_cast<std::size_t>(ncoords));
  bool empty_range = false;
  for (int c = 0; c < ncoords; ++c) {
    auto [l, h] = cfg.bounds(c);
    if (l > h) empty_range = true;
    los[static_cast<std::size_t>(c)] = l;
    spans[static_cast<std::size_t>(c)] = h - l + 1;
  }

  std::uint64_t iters = cfg.max_iterations;
  if (cfg.workers > 1) {
    std::uint64_t base = cfg.max_iterations / static_cast<std::uint64_t>(cfg.workers);
    std::uint64_t extra = cfg.max_iterations % static_cast<std::uint64_t>(cfg.workers);
    iters = base + (static_cast<std::uint64_t>(worker) < extra ? 1 : 0);
  }

  auto start = std::chrono::steady_clock::now();
  SearchStats stats;
  if (empty_range) return stats;

  std::vector<std::int64_t> units(static_cast<std::size_t>(ncoords));
  // the int64 diagonal pre-check is exact only for small coordinates
  bool fast_diag_ok = true;
  for (int c = 0; c < ncoords; ++c) {
    auto [l, h] = cfg.bounds(c);
    if (l < -20000 || h > 20000) fast_diag_ok = false;
  }
  std::uint64_t report_every = std::max<std::uint64_t>(iters / 10, 100000);
  for (std::uint64_t t = 0; t < iters; ++t) {
    if (cfg.wall_limit_ms > 0 && (t & 1023) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      if (ms >= cfg.wall_limit_ms) break;
    }
    for (int c = 0; c < ncoords; ++c)
      units[static_cast<std::size_t>(c)] =
          los[static_cast<std::size_t>(c)] +
          static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(spans[static_cast<std::size_t>(c)])));
    ++stats.iterations;

    if (cfg.predicates.fully_magic && fast_diag_ok &&
        !diagonals_match(fast, units.data(), units.data() + cfg.dim))
      continue;

    Hyper A = Hyper::zero(cfg.dim);
    Hyper P = Hyper::zero(cfg.dim);
    for (int c = 0; c < cfg.dim; ++c) {
      A[c] = coord_value(units[static_cast<std::size_t>(c)], cfg.half_integer_mode);
      P[c] = coord_value(units[static_cast<std::size_t>(cfg.dim + c)], cfg.half_integer_mode);
    }
    auto cand = evaluate_pair(A, P, table, cfg.predicates);
    if (cand) {
      cand->seed = cfg.seed;
      cand->worker = worker;
      cand->iteration = t;
      ++stats.candidates;
      if (!stats.best_constant || cand->constant < *stats.best_constant)
        stats.best_constant = cand->constant;
      sink(*cand);
    }
    if (progress && ((t + 1) % report_every == 0 || (cand && stats.candidates > 0)))
      progress({stats.iterations, stats.candidates, stats.best_constant});
  }
  return stats;
}

SearchStats run_random_search(const SearchConfig& cfg, const CandidateSink& sink,
                              const ProgressSink& progress) {
  cfg.validate();
  if (cfg.workers <= 1) return run_search_worker(cfg, 0, sink, progress);

  std::mutex mu;
  SearchStats total;
  auto locked_sink = [&](const Candidate& c) {
    std::scoped_lock lock(mu);
    if (!total.best_constant || c.constant < *total.best_constant)
      total.best_constant = c.constant;
    sink(c);
  };
  std::vector<std::thread> threads;
  std::vector<SearchStats> stats(static_cast<std::size_t>(cfg.workers));
  for (int w = 0; w < cfg.workers; ++w) {
    threads.emplace_back([&, w] {
      ProgressSink worker_progress = nullptr;
      if (progress)
        worker_progress = [&](const ProgressInfo& info) {
          std::scoped_lock lock(mu);
          progress(info);
        };
      stats[static_cast<std::size_t>(w)] = run_search_worker(cfg, w, locked_sink, worker_progress);
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& s : stats) {
    total.iterations += s.iterations;
    total.candidates += s.candidates;
  }
  return total;
}

namespace {

// gcd of the numerators on the common unit grid (units of 1 or 1/2)
std::int64_t units_gcd(const std::vector<std::int64_t>& units, int from, int count) {
  std::int64_t g = 0;
  for (int c = from; c < from + count; ++c)
    g = std::gcd(g, units[static_cast<std::size_t>(c)] < 0 ? -units[static_cast<std::size_t>(c)]
                                                           : units[static_cast<std::size_t>(c)]);
  return g;
}

}  // namespace

SearchStats run_exhaustive_search(const SearchConfig& cfg, const CandidateSink& sink,
                                  const ProgressSink& progress) {
  cfg.validate();
  BasisTable table = BasisTable::create(cfg.dim, cfg.convention);
  int ncoords = 2 * cfg.dim;

  unsigned __int128 size = 1;
  bool empty = false;
  for (int c = 0; c < ncoords; ++c) {
    auto [l, h] = cfg.bounds(c);
    if (l > h) {
      empty = true;
      break;
    }
    size *= static_cast<unsigned __int128>(h - l + 1);
    if (size > cfg.exhaustive_cap) throw std::invalid_argument("lattice exceeds exhaustive cap");
  }
  SearchStats stats;
  if (empty) return stats;

  std::vector<std::int64_t> units(static_cast<std::size_t>(ncoords));
  for (int c = 0; c < ncoords; ++c) units[static_cast<std::size_t>(c)] = cfg.bounds(c).first;

  auto in_box = [&](int c, std::int64_t v) {
    auto [l, h] = cfg.bounds(c);
    return l <= v && v <= h;
  };

  std::uint64_t visited = 0;
  bool done = false;
  while (!done) {
    ++visited;
    bool emit = true;
    if (cfg.quotient_symmetries) {
      // sign: first nonzero coordinate of (A || P) must be positive
      for (int c = 0; c < ncoords; ++c) {
        std::int64_t v = units[static_cast<std::size_t>(c)];
        if (v != 0) {
          emit = v > 0;
          break;
        }
      }
      // scale: skip when (A/f, fP) is on the lattice and inside the box
      if (emit) {
        std::int64_t g = units_gcd(units, 0, cfg.dim);
        if (g > 1) {
          for (std::int64_t f = 2; f <= g && emit; ++f) {
            if (g % f != 0) continue;
            bool fits = true;
            for (int c = 0; c < cfg.dim && fits; ++c)
              fits = in_box(c, units[static_cast<std::size_t>(c)] / f);
            for (int c = cfg.dim; c < ncoords && fits; ++c)
              fits = in_box(c, units[static_cast<std::size_t>(c)] * f);
            if (fits) emit = false;
          }
        }
      }
    }
    if (emit) {
      Hyper A = Hyper::zero(cfg.dim);
      Hyper P = Hyper::zero(cfg.dim);
      for (int c = 0; c < cfg.dim; ++c) {
        A[c] = coord_value(units[static_cast<std::size_t>(c)], cfg.half_integer_mode);
        P[c] = coord_value(units[static_cast<std::size_t>(cfg.dim + c)], cfg.half_integer_mode);
      }
      auto cand = evaluate_pair(A, P, table, cfg.predicates);
      if (cand) {
        cand->seed = cfg.seed;
        cand->iteration = visited - 1;
        ++stats.candidates;
        if (!stats.best_constant || cand->constant < *stats.best_constant)
          stats.best_constant = cand->constant;
        sink(*cand);
      }
    }
    ++stats.iterations;
    if (progress && stats.iterations % 100000 == 0)
      progress({stats.iterations, stats.candidates, stats.best_constant});
    // odometer
    done = true;
    for (int c = ncoords - 1; c >= 0; --c) {
      auto [l, h] = cfg.bounds(c);
      if (units[static_cast<std::size_t>(c)] < h) {
        ++units[static_cast<std::size_t>(c)];
        for (int c2 = c + 1; c2 < ncoords; ++c2)
          units[static_cast<std::size_t>(c2)] = cfg.bounds(c2).first;
        done = false;
        break;
      }
    }
  }
  return stats;
}

std::optional<std::vector<int>> diagonalize_rows(const SquareMatrix& m) {
  ClassifyResult flags = classify(m);
  if (flags.cls == Classification::not_semimagic)
    throw std::invalid_argument("diagonalize_rows requires a semimagic matrix");
  int n = m.n();
  if (n > 8) throw std::invalid_argument("row permutation search supported up to n = 8");
  Dyadic c = flags.constant;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Dyadic main, anti;
    for (int i = 0; i < n; ++i) {
      main += m.at(perm[static_cast<std::size_t>(i)], i).square();
      anti += m.at(perm[static_cast<std::size_t>(i)], n - 1 - i).square();
    }
    if (main == c && anti == c) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

SquareMatrix permute_rows(const SquareMatrix& m, const std::vector<int>& perm) {
  int n = m.n();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<Dyadic> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) entries.push_back(m.at(perm[static_cast<std::size_t>(i)], j));
  return SquareMatrix(n, std::move(entries));
}

Predicates predicates_from_csv(const std::string& csv) {
  Predicates p;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "entries_distinct")
      p.entries_distinct = true;
    else if (item == "squares_distinct")
      p.squares_distinct = true;
    else if (item == "entries_integral")
      p.entries_integral = true;
    else if (item == "fully_magic")
      p.fully_magic = true;
    else
      throw std::invalid_argument("unknown predicate: " + item);
  }
  return p;
}

std::string predicates_to_csv(const Predicates& p) {
  std::string s;
  auto add = [&](const char* name, bool on) {
    if (!on) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add("entries_distinct", p.entries_distinct);
  add("squares_distinct", p.squares_distinct);
  add("entries_integral", p.entries_integral);
  add("fully_magic", p.fully_magic);
  return s;
}

}  // namespace magicsq
