#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "transhull/degeneracy.hpp"
#include "transhull/hull.hpp"
#include "transhull/semigroup.hpp"

namespace transhull {

constexpr int kMaxCensusOrder = 4;

namespace detail {

// Partial-table associativity test: a triple (x,y,z) passes when any value
// it needs is still unassigned.
inline bool partial_associative(const std::vector<int>& tab, int n) {
  auto at = [&](int x, int y) { return tab[static_cast<size_t>(x) * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = at(x, y);
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        int yz = at(y, z);
        if (yz < 0) continue;
        int l = at(xy, z);
        int r = at(x, yz);
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

inline bool lex_minimal_under_relabeling(const FiniteSemigroup& s) {
  std::vector<int> perm(s.n);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    SelfMap sigma{perm};
    FiniteSemigroup t = relabel(s, sigma);
    if (t.tab < s.tab) return false;
  }
  return true;
}

}  // namespace detail

// Streams every associative n x n table in row-major generation order.
// Cells are filled row by row with values tried in ascending order and the
// partial associativity test pruning each assignment.  With reduce_iso only
// lexicographically minimal representatives under relabeling are emitted.
// The visitor returns false to stop early.
inline void enumerate_semigroups(int n, bool reduce_iso,
                                 const std::function<bool(const FiniteSemigroup&)>& visit) {
  if (n < 0 || n > kMaxCensusOrder)
    throw ValidationError("OrderTooLarge: census supports orders 0.." +
                          std::to_string(kMaxCensusOrder));
  int cells = n * n;
  std::vector<int> tab(cells, -1);
  if (cells == 0) {
    FiniteSemigroup s;
    s.n = n;
    visit(s);
    return;
  }
  int pos = 0;
  int value = 0;
  bool stop = false;
  while (!stop) {
    if (value == n) {
      if (pos == 0) break;
      --pos;
      value = tab[pos] + 1;
      tab[pos] = -1;
      continue;
    }
    tab[pos] = value;
    if (detail::partial_associative(tab, n)) {
      if (pos == cells - 1) {
        FiniteSemigroup s;
        s.n = n;
        s.tab = tab;
        if (!reduce_iso || detail::lex_minimal_under_relabeling(s)) stop = !visit(s);
        tab[pos] = -1;
        ++value;
      } else {
        ++pos;
        value = 0;
      }
    } else {
      tab[pos] = -1;
      ++value;
    }
  }
}

// Independent cross-check generator: fills cells column by column instead,
// with its own recursive search and a triple test written separately from
// the row-major path.  Counts only.
inline long long count_semigroups_column_order(int n) {
  if (n < 0 || n > kMaxCensusOrder) throw ValidationError("OrderTooLarge");
  if (n == 0) return 1;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  long long count = 0;
  // Cell sequence: (0,0), (1,0), ..., (n-1,0), (0,1), ...
  std::function<void(int)> rec = [&](int k) {
    if (k == n * n) {
      ++count;
      return;
    }
    int col = k / n;
    int row = k % n;
    for (int v = 0; v < n; ++v) {
      t[row][col] = v;
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) {
          if (t[x][y] < 0) continue;
          for (int z = 0; z < n && ok; ++z) {
            if (t[y][z] < 0) continue;
            int a = t[t[x][y]][z];
            int b = t[x][t[y][z]];
            if (a >= 0 && b >= 0 && a != b) ok = false;
          }
        }
      if (ok) rec(k + 1);
    }
    t[row][col] = -1;
  };
  rec(0);
  return count;
}

inline uint64_t fnv1a64(const void* data, size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = 1469598103934665603ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline uint64_t table_hash(const FiniteSemigroup& s) {
  std::vector<int32_t> bytes(s.tab.begin(), s.tab.end());
  bytes.push_back(s.n);
  return fnv1a64(bytes.data(), bytes.size() * sizeof(int32_t));
}

struct CensusRecord {
  FiniteSemigroup semigroup;
  DegeneracyReport degeneracy;
  int hull_size = 0;
  int inner_count = 0;
  int outer_count = 0;
  bool is_monoid = false;
  bool commutative = false;
};

struct CensusSummary {
  int order = 0;
  long long total = 0;
  long long monoids = 0;
  long long globally_idempotent = 0;
  long long nondegenerate = 0;
  long long with_outer_multipliers = 0;
  long long commutative = 0;
};

inline CensusRecord census_record(const FiniteSemigroup& s) {
  CensusRecord r;
  r.semigroup = s;
  r.degeneracy = degeneracy_report(s);
  std::vector<Multiplier> ms = multipliers(s);
  r.hull_size = static_cast<int>(ms.size());
  for (const Multiplier& m : ms) r.inner_count += m.inner() ? 1 : 0;
  r.outer_count = r.hull_size - r.inner_count;
  r.is_monoid = find_identity(s).has_value();
  r.commutative = is_commutative(s);
  return r;
}

// Full census with per-record hull statistics.  Records stream through the
// visitor in generation order; the summary aggregates all of them.
inline CensusSummary run_census(int n, const std::function<void(long long, const CensusRecord&)>& visit) {
  CensusSummary sum;
  sum.order = n;
  enumerate_semigroups(n, false, [&](const FiniteSemigroup& s) {
    CensusRecord r = census_record(s);
    sum.total++;
    sum.monoids += r.is_monoid;
    sum.globally_idempotent += r.degeneracy.globally_idempotent;
    sum.nondegenerate += r.degeneracy.nondegenerate();
    sum.with_outer_multipliers += r.outer_count > 0;
    sum.commutative += r.commutative;
    if (visit) visit(sum.total - 1, r);
    return true;
  });
  return sum;
}

inline std::string census_csv_header() {
  return "index,order,table_hash,is_monoid,commutative,globally_idempotent,"
         "left_nondeg,right_nondeg,hull_size,inner,outer";
}

inline std::string census_csv_row(long long index, const CensusRecord& r) {
  char hex[32];
  std::snprintf(hex, sizeof(hex), "%016llx",
                static_cast<unsigned long long>(table_hash(r.semigroup)));
  std::string row = std::to_string(index) + "," + std::to_string(r.semigroup.n) + "," + hex +
                    "," + std::to_string(r.is_monoid) + "," + std::to_string(r.commutative) +
                    "," + std::to_string(r.degeneracy.globally_idempotent) + "," +
                    std::to_string(r.degeneracy.left_nondeg) + "," +
                    std::to_string(r.degeneracy.right_nondeg) + "," +
                    std::to_string(r.hull_size) + "," + std::to_string(r.inner_count) + "," +
                    std::to_string(r.outer_count);
  return row;
}

// Deterministic order-4 sampling: records whose generation index is
// congruent to seed modulo every_k.
inline bool in_sample(long long index, int every_k, int seed) {
  if (every_k <= 1) return true;
  return index % every_k == seed % every_k;
}

}  // namespace transhull
