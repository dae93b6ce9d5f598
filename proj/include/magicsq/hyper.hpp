#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "magicsq/dyadic.hpp"

namespace magicsq {

/// Cayley-Dickson doubling rule applied recursively from the reals.
/// standard:    (a,b)(c,d) = (ac - conj(d)b, da + b conj(c))
/// alternative: (a,b)(c,d) = (ac - d conj(b), conj(a)d + cb)
/// The standard rule reproduces Hamilton quaternions at dimension 4.
enum class Convention { standard, alternative };

std::string convention_tag(Convention c);
Convention convention_from_tag(const std::string& tag);

struct BasisEntry {
  std::uint8_t target;
  std::int8_t sign;
};

/// Structure constants e_i e_j = sign * e_target for one algebra dimension.
class BasisTable {
 public:
  static BasisTable create(int dim, Convention conv = Convention::standard);

  int dim() const { return dim_; }
  Convention convention() const { return conv_; }

  BasisEntry at(int i, int j) const { return table_[static_cast<std::size_t>(i) * dim_ + j]; }

  /// The unique (k, s) with e_k e_m = s * e_j, for fixed m and j.
  BasisEntry left_factor(int m, int j) const {
    return left_factor_[static_cast<std::size_t>(m) * dim_ + j];
  }

 private:
  BasisTable(int dim, Convention conv) : dim_(dim), conv_(conv) {}

  int dim_;
  Convention conv_;
  std::vector<BasisEntry> table_;
  std::vector<BasisEntry> left_factor_;
};

/// Element of a 2^k-dimensional Cayley-Dickson algebra, coordinates over
/// exact dyadic rationals. Index 0 is the real unit.
class Hyper {
 public:
  explicit Hyper(std::vector<Dyadic> coords);

  static Hyper zero(int dim);
  static Hyper basis(int dim, int index);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Dyadic& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  Dyadic& operator[](int i) { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Dyadic>& coords() const { return coords_; }

  friend bool operator==(const Hyper& a, const Hyper& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Hyper& a, const Hyper& b) { return !(a == b); }

 private:
  std::vector<Dyadic> coords_;
};

bool dim_supported(int dim);

Hyper multiply(const Hyper& x, const Hyper& y, const BasisTable& table);
Hyper conjugate(const Hyper& x);
Dyadic norm(const Hyper& x);
Dyadic dot(const Hyper& x, const Hyper& y);
Hyper scale(const Dyadic& s, const Hyper& x);

struct HyperPair {
  Hyper x;
  Hyper y;
};

/// Randomized search for x, y with N(x)N(y) != N(xy). Finds one quickly for
/// the sedenions; returns nullopt within budget for dimensions <= 8.
std::optional<HyperPair> find_norm_multiplicativity_counterexample(const BasisTable& table,
                                                                   std::uint64_t seed,
                                                                   std::uint64_t budget);

}  // namespace magicsq
