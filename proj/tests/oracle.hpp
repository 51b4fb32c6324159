#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond plain containers, so agreement is evidence, not tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

struct Raw {
  int n = 0;
  int zero = 0;
  int unit = 0;
  Table imp;

  int star(int x) const { return imp[x][zero]; }
  int join(int x, int y) const { return imp[imp[x][y]][y]; }
  int meet(int x, int y) const { return star(imp[imp[star(x)][star(y)]][star(y)]); }
};

inline bool is_involutive_be(const Raw& a) {
  const int n = a.n;
  for (int x = 0; x < n; ++x) {
    if (a.imp[x][x] != a.unit) return false;
    if (a.imp[x][a.unit] != a.unit) return false;
    if (a.imp[a.unit][x] != x) return false;
    if (a.imp[a.zero][x] != a.unit) return false;
    if (a.star(a.star(x)) != x) return false;
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (a.imp[x][a.imp[y][z]] != a.imp[y][a.imp[x][z]]) return false;
      }
    }
  }
  return true;
}

/// Bijection fixing zero and unit mapping table a onto table b.
inline bool isomorphic(const Raw& a, const Raw& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[a.zero] != b.zero || perm[a.unit] != b.unit) continue;
    bool ok = true;
    for (int x = 0; x < a.n && ok; ++x) {
      for (int y = 0; y < a.n && ok; ++y) ok = perm[a.imp[x][y]] == b.imp[perm[x]][perm[y]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every involutive BE table on {0..n-1} with zero 0 and unit n-1. For
/// n <= 3 all n^(n*n) tables are tried; above that the cells fixed by the
/// unit laws and boundedness are pinned and the rest are tried exhaustively.
inline std::vector<Raw> all_models(int n) {
  std::vector<Raw> out;
  const int unit = n - 1;
  const bool pin = n > 3;
  std::vector<std::pair<int, int>> cells;
  Raw a{n, 0, unit, Table(n, std::vector<int>(n, 0))};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const bool fixed = x == 0 || y == unit || x == y || x == unit;
      if (pin && fixed) {
        a.imp[x][y] = x == unit ? y : unit;
      } else {
        cells.push_back({x, y});
      }
    }
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      if (is_involutive_be(a)) out.push_back(a);
      return;
    }
    for (int v = 0; v < n; ++v) {
      a.imp[cells[k].first][cells[k].second] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

/// One representative per isomorphism class, by pairwise comparison.
inline std::vector<Raw> iso_classes(const std::vector<Raw>& models) {
  std::vector<Raw> reps;
  for (const auto& m : models) {
    const bool seen = std::any_of(reps.begin(), reps.end(),
                                  [&](const Raw& r) { return isomorphic(m, r); });
    if (!seen) reps.push_back(m);
  }
  return reps;
}

}  // namespace oracle
