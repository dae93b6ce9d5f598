#include "magicsq/magic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace magicsq {

SquareMatrix::SquareMatrix(int n, std::vector<Dyadic> entries, std::optional<Provenance> prov)
    : n_(n), entries_(std::move(entries)), prov_(std::move(prov)) {
  if (n_ <= 0 || entries_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::invalid_argument("matrix shape mismatch");
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<Dyadic>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<Dyadic> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix shape mismatch");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return SquareMatrix(n, std::move(entries));
}

std::string classification_name(Classification c) {
  switch (c) {
    case Classification::not_semimagic:
      return "not_semimagic";
    case Classification::semimagic:
      return "semimagic";
    case Classification::fully_magic:
      return "fully_magic";
  }
  throw std::invalid_argument("unknown classification");
}

SquareMatrix build_matrix(const Hyper& A, const Hyper& P, const BasisTable& table) {
  int n = table.dim();
  if (A.dim() != n || P.dim() != n) throw std::invalid_argument("dimension mismatch");
  std::vector<Dyadic> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    // e_i * P is a signed permutation of P's coordinates
    Hyper x = Hyper::zero(n);
    for (int l = 0; l < n; ++l) {
      BasisEntry e = table.at(i, l);
      x[e.target] = e.sign > 0 ? P[l] : -P[l];
    }
    Hyper row = multiply(A, x, table);
    for (int j = 0; j < n; ++j) entries.push_back(row[j]);
  }
  return SquareMatrix(n, std::move(entries), Provenance{A, P, table.convention()});
}

namespace detail {

std::vector<std::vector<TermPattern>> symbolic_patterns(const BasisTable& table) {
  int n = table.dim();
  std::vector<std::vector<TermPattern>> out(
      static_cast<std::size_t>(n), std::vector<TermPattern>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      TermPattern pat(static_cast<std::size_t>(n));
      for (int l = 0; l < n; ++l) {
        BasisEntry em = table.at(i, l);          // e_i e_l = s1 e_m
        BasisEntry ek = table.left_factor(em.target, j);  // e_k e_m = s2 e_j
        pat[static_cast<std::size_t>(l)] = {ek.target,
                                            static_cast<std::int8_t>(em.sign * ek.sign)};
      }
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(pat);
    }
  }
  return out;
}

}  // namespace detail

std::vector<std::vector<TermPattern>> build_symbolic(int dim, const BasisTable& table) {
  if (dim != 4 && dim != 8) throw std::invalid_argument("unsupported dimension");
  if (table.dim() != dim) throw std::invalid_argument("dimension mismatch");
  return detail::symbolic_patterns(table);
}

bool pattern_is_bijection(const TermPattern& pattern) {
  std::vector<bool> seen(pattern.size(), false);
  for (const TermRef& t : pattern) {
    if (t.a_index >= pattern.size() || seen[t.a_index]) return false;
    seen[t.a_index] = true;
  }
  return true;
}

Poly pattern_to_poly(const TermPattern& pattern) {
  Poly p;
  for (std::size_t l = 0; l < pattern.size(); ++l) {
    Monomial m = Monomial::variable(a_var(pattern[l].a_index))
                     .times(Monomial::variable(p_var(static_cast<int>(l))));
    p.add_term(m, pattern[l].sign);
  }
  return p;
}

Dyadic evaluate_pattern(const TermPattern& pattern, const Hyper& A, const Hyper& P) {
  if (pattern.size() != static_cast<std::size_t>(A.dim()) || A.dim() != P.dim())
    throw std::invalid_argument("dimension mismatch");
  Dyadic sum;
  for (std::size_t l = 0; l < pattern.size(); ++l) {
    Dyadic term = A[pattern[l].a_index] * P[static_cast<int>(l)];
    sum += pattern[l].sign > 0 ? term : -term;
  }
  return sum;
}

GramReport gram_report(const SquareMatrix& m) {
  int n = m.n();
  GramReport rep;
  rep.row_sums_of_squares.reserve(static_cast<std::size_t>(n));
  auto gram = [&](int i, int j) {
    Dyadic s;
    for (int k = 0; k < n; ++k) s += m.at(i, k) * m.at(j, k);
    return s;
  };
  rep.constant = gram(0, 0);
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Dyadic g = gram(i, j);
      if (i == j) {
        rep.row_sums_of_squares.push_back(g);
        if (g != rep.constant) ok = false;
      } else {
        if (!g.is_zero()) ok = false;
        if (g.abs() > rep.off_diagonal_max_abs) rep.off_diagonal_max_abs = g.abs();
      }
    }
  }
  rep.is_orthogonal = ok;
  return rep;
}

std::pair<Dyadic, Dyadic> diagonal_sums(const SquareMatrix& m) {
  int n = m.n();
  Dyadic main, anti;
  for (int i = 0; i < n; ++i) {
    main += m.at(i, i).square();
    anti += m.at(i, n - 1 - i).square();
  }
  return {main, anti};
}

ClassifyResult classify(const SquareMatrix& m) {
  int n = m.n();
  ClassifyResult res;
  GramReport gram = gram_report(m);
  res.constant = gram.constant;

  bool columns_ok = true;
  for (int j = 0; j < n; ++j) {
    Dyadic s;
    for (int i = 0; i < n; ++i) s += m.at(i, j).square();
    if (s != gram.constant) columns_ok = false;
  }

  bool semimagic = gram.is_orthogonal && columns_ok;
  if (semimagic) {
    auto [main, anti] = diagonal_sums(m);
    res.cls = (main == gram.constant && anti == gram.constant) ? Classification::fully_magic
                                                               : Classification::semimagic;
  } else {
    res.cls = Classification::not_semimagic;
  }

  std::vector<Dyadic> sorted = m.entries();
  std::sort(sorted.begin(), sorted.end());
  res.entries_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  for (Dyadic& d : sorted) d = d.abs();
  std::sort(sorted.begin(), sorted.end());
  res.squares_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  res.entries_integral =
      std::all_of(m.entries().begin(), m.entries().end(), [](const Dyadic& d) { return d.is_integer(); });
  return res;
}

ProofReport prove_theorem(int dim, const BasisTable& table) {
  if (dim != 4 && dim != 8 && dim != 16) throw std::invalid_argument("unsupported dimension");
  if (table.dim() != dim) throw std::invalid_argument("dimension mismatch");

  ProofReport rep;
  rep.dim = dim;
  rep.convention = table.convention();

  auto patterns = detail::symbolic_patterns(table);
  std::vector<std::vector<Poly>> entry(static_cast<std::size_t>(dim),
                                       std::vector<Poly>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pattern_to_poly(patterns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);

  auto gram_poly = [&](int i, int j) {
    Poly g;
    for (int k = 0; k < dim; ++k)
      g += entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
           entry[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    return g;
  };

  // (1) off-diagonal Gram polynomials vanish
  {
    ProofObligation ob{"off-diagonal-gram-zero", true, ""};
    int pairs = 0;
    for (int i = 0; i < dim && ob.pass; ++i) {
      for (int j = i + 1; j < dim; ++j) {
        ++pairs;
        Poly g = gram_poly(i, j);
        if (!g.is_zero()) {
          ob.pass = false;
          std::string s = g.to_string();
          if (s.size() > 160) s = s.substr(0, 160) + "...";
          ob.detail = "rows (" + std::to_string(i) + "," + std::to_string(j) +
                      ") have Gram polynomial " + s;
          break;
        }
      }
    }
    if (ob.pass)
      ob.detail = "all " + std::to_string(dim * (dim - 1) / 2) + " row pairs orthogonal";
    rep.obligations.push_back(std::move(ob));
  }

  // (2) diagonal Gram polynomials equal (sum a_k^2)(sum p_l^2)
  {
    ProofObligation ob{"diagonal-equals-norm-product", true, ""};
    Poly na, np;
    for (int k = 0; k < dim; ++k) {
      na += Poly::variable(a_var(k)) * Poly::variable(a_var(k));
      np += Poly::variable(p_var(k)) * Poly::variable(p_var(k));
    }
    Poly expected = na * np;
    for (int i = 0; i < dim; ++i) {
      if (gram_poly(i, i) != expected) {
        ob.pass = false;
        ob.detail = "row " + std::to_string(i) + " norm differs from N(A)N(P)";
        break;
      }
    }
    if (ob.pass) ob.detail = "all " + std::to_string(dim) + " row norms equal N(A)N(P)";
    rep.obligations.push_back(std::move(ob));
  }

  // (3) all n^2 entries pairwise distinct
  {
    ProofObligation ob{"entries-pairwise-distinct", true, ""};
    std::set<std::string> seen;
    for (int i = 0; i < dim && ob.pass; ++i) {
      for (int j = 0; j < dim; ++j) {
        auto [it, inserted] =
            seen.insert(entry[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].to_string());
        if (!inserted) {
          ob.pass = false;
          ob.detail = "duplicate entry polynomial at (" + std::to_string(i) + "," +
                      std::to_string(j) + "): " + *it;
          break;
        }
      }
    }
    if (ob.pass) ob.detail = "all " + std::to_string(dim * dim) + " entries distinct";
    rep.obligations.push_back(std::move(ob));
  }

  rep.all_pass = std::all_of(rep.obligations.begin(), rep.obligations.end(),
                             [](const ProofObligation& o) { return o.pass; });
  return rep;
}

}  // namespace magicsq
