#pragma once

// Independent brute-force reference computations used by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm compose(Perm const& a, Perm const& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Perm identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm invert(Perm const& a) {
  Perm b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[a[i]] = static_cast<std::uint32_t>(i);
  return b;
}

// Closure of the generators under right multiplication; stops past `cap`.
inline std::set<Perm> closure(std::size_t n, std::vector<Perm> const& gens, std::size_t cap = 100000) {
  std::set<Perm> seen{identity(n)};
  std::vector<Perm> frontier{identity(n)};
  while (!frontier.empty() && seen.size() <= cap) {
    std::vector<Perm> next;
    for (Perm const& x : frontier) {
      for (Perm const& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Every subgroup of a small group, as sorted element sets. Uses that each
// subgroup of the groups tested is generated by at most two elements.
inline std::set<std::set<Perm>> subgroups(std::size_t n, std::set<Perm> const& group) {
  std::vector<Perm> elems(group.begin(), group.end());
  std::set<std::set<Perm>> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i; j < elems.size(); ++j) out.insert(closure(n, {elems[i], elems[j]}));
  }
  return out;
}

struct ClassSummary {
  std::size_t index;
  std::size_t class_size;
  friend bool operator<(ClassSummary const& a, ClassSummary const& b) {
    return a.index != b.index ? a.index < b.index : a.class_size < b.class_size;
  }
  friend bool operator==(ClassSummary const& a, ClassSummary const& b) {
    return a.index == b.index && a.class_size == b.class_size;
  }
};

// Conjugacy classes of subgroups: (index, class size), sorted.
inline std::vector<ClassSummary> subgroup_classes(std::size_t n, std::set<Perm> const& group) {
  auto all = subgroups(n, group);
  std::set<std::set<Perm>> done;
  std::vector<ClassSummary> out;
  for (auto const& h : all) {
    if (done.count(h)) continue;
    std::set<std::set<Perm>> cls;
    for (Perm const& g : group) {
      std::set<Perm> conj;
      Perm gi = invert(g);
      for (Perm const& x : h) conj.insert(compose(compose(gi, x), g));
      cls.insert(conj);
    }
    for (auto const& c : cls) done.insert(c);
    out.push_back({group.size() / h.size(), cls.size()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Determinant by cofactor expansion along the first row.
inline mpz_class laplace_det(std::vector<std::vector<mpz_class>> const& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    mpz_class term = m[0][j] * laplace_det(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

// Invariant factors from determinantal divisors: d_k = gcd of all k x k minors.
inline std::vector<mpz_class> invariant_factors(std::vector<std::vector<mpz_class>> const& m) {
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = std::min(rows, cols);
  std::vector<mpz_class> d{1};
  for (std::size_t k = 1; k <= r; ++k) {
    mpz_class g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
      if (at == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t i = from; i < rows; ++i) {
        ri[at] = i;
        pick_rows(at + 1, i + 1);
      }
    };
    pick_cols = [&](std::size_t at, std::size_t from) {
      if (at == k) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(laplace_det(sub)).get_mpz_t());
        return;
      }
      for (std::size_t j = from; j < cols; ++j) {
        ci[at] = j;
        pick_cols(at + 1, j + 1);
      }
    };
    pick_rows(0, 0);
    d.push_back(g);
  }
  std::vector<mpz_class> out;
  for (std::size_t k = 1; k <= r; ++k) {
    if (d[k] == 0) {
      out.push_back(0);
    } else {
      out.push_back(d[k] / d[k - 1]);
    }
  }
  return out;
}

// Remainder of f (highest degree first) divided by g, coefficients mod p.
inline std::vector<long> poly_mod(std::vector<long> f, std::vector<long> const& g, long p) {
  auto norm = [p](long v) { return ((v % p) + p) % p; };
  for (long& c : f) c = norm(c);
  long lead_inv = 1;
  while ((lead_inv * norm(g[0])) % p != 1) ++lead_inv;
  while (f.size() >= g.size()) {
    long q = (f[0] * lead_inv) % p;
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = norm(f[i] - q * g[i]);
    f.erase(f.begin());
  }
  while (!f.empty() && f[0] == 0) f.erase(f.begin());
  return f;
}

}  // namespace oracle
