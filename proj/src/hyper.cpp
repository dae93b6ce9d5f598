#include "magicsq/hyper.hpp"

#include <random>
#include <stdexcept>

namespace magicsq {

std::string convention_tag(Convention c) {
  switch (c) {
    case Convention::standard:
      return "standard";
    case Convention::alternative:
      return "alternative";
  }
  throw std::invalid_argument("unknown convention");
}

Convention convention_from_tag(const std::string& tag) {
  if (tag == "standard") return Convention::standard;
  if (tag == "alternative") return Convention::alternative;
  throw std::invalid_argument("unknown convention tag: " + tag);
}

bool dim_supported(int dim) {
  return dim == 1 || dim == 2 || dim == 4 || dim == 8 || dim == 16;
}

namespace {

// One doubling step: basis products of dimension 2d from those of dimension d.
// Pairs (u, 0) occupy indices [0, d), pairs (0, u) indices [d, 2d).
std::vector<BasisEntry> double_table(const std::vector<BasisEntry>& parent, int d,
                                     Convention conv) {
  int n = 2 * d;
  std::vector<BasisEntry> child(static_cast<std::size_t>(n) * n);
  auto p = [&](int i, int j) { return parent[static_cast<std::size_t>(i) * d + j]; };
  auto conj_sign = [](int i) { return static_cast<std::int8_t>(i == 0 ? 1 : -1); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      BasisEntry e{};
      if (i < d && j < d) {
        e = p(i, j);
      } else if (conv == Convention::standard) {
        if (i < d) {  // (u_i, 0)(0, u_j') -> (0, u_j' u_i)
          BasisEntry b = p(j - d, i);
          e = {static_cast<std::uint8_t>(b.target + d), b.sign};
        } else if (j < d) {  // (0, u_i')(u_j, 0) -> (0, u_i' conj(u_j))
          BasisEntry b = p(i - d, j);
          e = {static_cast<std::uint8_t>(b.target + d),
               static_cast<std::int8_t>(b.sign * conj_sign(j))};
        } else {  // (0, u_i')(0, u_j') -> (-conj(u_j') u_i', 0)
          BasisEntry b = p(j - d, i - d);
          e = {b.target, static_cast<std::int8_t>(-b.sign * conj_sign(j - d))};
        }
      } else {
        if (i < d) {  // (u_i, 0)(0, u_j') -> (0, conj(u_i) u_j')
          BasisEntry b = p(i, j - d);
          e = {static_cast<std::uint8_t>(b.target + d),
               static_cast<std::int8_t>(b.sign * conj_sign(i))};
        } else if (j < d) {  // (0, u_i')(u_j, 0) -> (0, u_j u_i')
          BasisEntry b = p(j, i - d);
          e = {static_cast<std::uint8_t>(b.target + d), b.sign};
        } else {  // (0, u_i')(0, u_j') -> (-u_j' conj(u_i'), 0)
          BasisEntry b = p(j - d, i - d);
          e = {b.target, static_cast<std::int8_t>(-b.sign * conj_sign(i - d))};
        }
      }
      child[static_cast<std::size_t>(i) * n + j] = e;
    }
  }
  return child;
}

}  // namespace

BasisTable BasisTable::create(int dim, Convention conv) {
  if (!dim_supported(dim)) throw std::invalid_argument("unsupported dimension");
  BasisTable t(dim, conv);
  std::vector<BasisEntry> table{{0, 1}};
  for (int d = 1; d < dim; d *= 2) table = double_table(table, d, conv);
  t.table_ = std::move(table);
  t.left_factor_.assign(static_cast<std::size_t>(dim) * dim, BasisEntry{});
  for (int k = 0; k < dim; ++k) {
    for (int m = 0; m < dim; ++m) {
      BasisEntry e = t.at(k, m);
      t.left_factor_[static_cast<std::size_t>(m) * dim + e.target] = {
          static_cast<std::uint8_t>(k), e.sign};
    }
  }
  return t;
}

Hyper::Hyper(std::vector<Dyadic> coords) : coords_(std::move(coords)) {
  if (!dim_supported(dim())) throw std::invalid_argument("unsupported dimension");
}

Hyper Hyper::zero(int dim) { return Hyper(std::vector<Dyadic>(static_cast<std::size_t>(dim))); }

Hyper Hyper::basis(int dim, int index) {
  if (index < 0 || index >= dim) throw std::invalid_argument("basis index out of range");
  Hyper h = zero(dim);
  h[index] = Dyadic(1);
  return h;
}

Hyper multiply(const Hyper& x, const Hyper& y, const BasisTable& table) {
  int n = table.dim();
  if (x.dim() != n || y.dim() != n) throw std::invalid_argument("dimension mismatch");
  Hyper r = Hyper::zero(n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      BasisEntry e = table.at(i, j);
      Dyadic term = x[i] * y[j];
      r[e.target] += e.sign > 0 ? term : -term;
    }
  }
  return r;
}

Hyper conjugate(const Hyper& x) {
  Hyper r = x;
  for (int i = 1; i < r.dim(); ++i) r[i] = -r[i];
  return r;
}

Dyadic norm(const Hyper& x) {
  Dyadic s;
  for (int i = 0; i < x.dim(); ++i) s += x[i].square();
  return s;
}

Dyadic dot(const Hyper& x, const Hyper& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  Dyadic s;
  for (int i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

Hyper scale(const Dyadic& s, const Hyper& x) {
  Hyper r = x;
  for (int i = 0; i < r.dim(); ++i) r[i] = s * r[i];
  return r;
}

std::optional<HyperPair> find_norm_multiplicativity_counterexample(const BasisTable& table,
                                                                   std::uint64_t seed,
                                                                   std::uint64_t budget) {
  std::mt19937_64 rng(seed);
  int n = table.dim();
  auto sample = [&]() {
    Hyper h = Hyper::zero(n);
    for (int i = 0; i < n; ++i)
      h[i] = Dyadic(static_cast<long long>(rng() % 7) - 3);  // small integers in [-3, 3]
    return h;
  };
  for (std::uint64_t t = 0; t < budget; ++t) {
    Hyper x = sample();
    Hyper y = sample();
    if (norm(x) * norm(y) != norm(multiply(x, y, table))) {
      // re-verify from scratch before returning
      if (norm(x) * norm(y) != norm(multiply(x, y, table))) return HyperPair{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace magicsq
