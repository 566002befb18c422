#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's linear algebra or cone code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;
using Gens = std::vector<Vec>;

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Q_0..Q_D by repeated sumsets.
inline std::vector<std::set<Vec>> monoid_slices(const Gens& g, int D) {
  std::vector<std::set<Vec>> out(static_cast<std::size_t>(D + 1));
  out[0].insert(Vec(g[0].size(), 0));
  for (int n = 1; n <= D; ++n)
    for (const auto& x : out[static_cast<std::size_t>(n - 1)])
      for (const auto& y : g) out[static_cast<std::size_t>(n)].insert(add(x, y));
  return out;
}

// Rational solution of sum_i l_i g_{s_i} = x for the chosen rows, if any.
inline std::optional<std::vector<mpq_class>> solve(const Gens& g, const std::vector<std::size_t>& rows, const Vec& x) {
  const std::size_t m = x.size(), k = rows.size();
  std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = g[rows[j]][i];
    a[i][k] = x[i];
  }
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (a[i][k] != 0) return std::nullopt;
  if (piv.size() != k) return std::nullopt;  // dependent rows; a smaller subset will cover it
  std::vector<mpq_class> l(k);
  for (std::size_t i = 0; i < r; ++i) l[piv[i]] = a[i][k] / a[i][piv[i]];
  return l;
}

// Coefficient sum of a nonnegative representation of x (its degree when all
// generators have degree 1), if x lies in the real cone.
inline std::optional<mpq_class> cone_degree(const Gens& g, const Vec& x) {
  const std::size_t n = g.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) rows.push_back(i);
    if (rows.size() > x.size()) continue;
    auto l = solve(g, rows, x);
    if (!l) continue;
    if (std::all_of(l->begin(), l->end(), [](const mpq_class& v) { return v >= 0; }))
      return std::accumulate(l->begin(), l->end(), mpq_class(0));
  }
  return std::nullopt;
}

// Membership in the group generated by g: integer row echelon by gcd steps.
class Group {
 public:
  explicit Group(Gens g) : rows_(std::move(g)) {
    const std::size_t m = rows_.empty() ? 0 : rows_[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < rows_.size(); ++c) {
      for (;;) {
        std::size_t best = rows_.size();
        for (std::size_t i = r; i < rows_.size(); ++i)
          if (rows_[i][c] != 0 && (best == rows_.size() || std::llabs(rows_[i][c]) < std::llabs(rows_[best][c])))
            best = i;
        if (best == rows_.size()) break;
        std::swap(rows_[r], rows_[best]);
        bool clean = true;
        for (std::size_t i = r + 1; i < rows_.size(); ++i) {
          const std::int64_t q = rows_[i][c] / rows_[r][c];
          for (std::size_t j = 0; j < m; ++j) rows_[i][j] -= q * rows_[r][j];
          if (rows_[i][c] != 0) clean = false;
        }
        if (clean) {
          pivots_.push_back(c);
          ++r;
          break;
        }
      }
    }
    rows_.resize(r);
  }

  bool contains(Vec x) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t c = pivots_[i];
      if (x[c] % rows_[i][c] != 0) return false;
      const std::int64_t q = x[c] / rows_[i][c];
      for (std::size_t j = 0; j < x.size(); ++j) x[j] -= q * rows_[i][j];
    }
    return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
  }

 private:
  Gens rows_;
  std::vector<std::size_t> pivots_;
};

// Normalization slices for generators that all have degree 1: box search
// over the coordinate range of n * conv(g).
inline std::vector<std::set<Vec>> normalization_slices(const Gens& g, int D) {
  const std::size_t m = g[0].size();
  Group group(g);
  std::vector<std::set<Vec>> out(static_cast<std::size_t>(D + 1));
  for (int n = 0; n <= D; ++n) {
    Vec lo(m), hi(m);
    for (std::size_t j = 0; j < m; ++j) {
      lo[j] = hi[j] = g[0][j];
      for (const auto& v : g) {
        lo[j] = std::min(lo[j], v[j]);
        hi[j] = std::max(hi[j], v[j]);
      }
      lo[j] *= n;
      hi[j] *= n;
    }
    Vec x = lo;
    for (;;) {
      if (group.contains(x)) {
        auto deg = cone_degree(g, x);
        if (deg && *deg == n) out[static_cast<std::size_t>(n)].insert(x);
      }
      std::size_t j = 0;
      while (j < m && x[j] == hi[j]) {
        x[j] = lo[j];
        ++j;
      }
      if (j == m) break;
      ++x[j];
    }
  }
  return out;
}

}  // namespace oracle
