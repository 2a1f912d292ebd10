#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "transhull/semigroup.hpp"

namespace transhull {

namespace detail {

// Backtracking enumeration of all self-maps satisfying law(partial) checks.
// Images are fixed in index order; every constraint whose operands are
// already assigned prunes immediately.  Emits in lexicographic order.
template <typename CheckNewest>
void enumerate_maps(int n, CheckNewest&& ok_with_prefix, std::vector<SelfMap>& out) {
  std::vector<int> img(n, -1);
  if (n == 0) {
    out.push_back(SelfMap{});
    return;
  }
  int pos = 0;
  int value = 0;
  while (true) {
    if (value == n) {
      if (pos == 0) return;
      --pos;
      value = img[pos] + 1;
      img[pos] = -1;
      continue;
    }
    img[pos] = value;
    if (ok_with_prefix(img, pos)) {
      if (pos == n - 1) {
        out.push_back(SelfMap{img});
        img[pos] = -1;
        ++value;
      } else {
        ++pos;
        value = 0;
      }
    } else {
      img[pos] = -1;
      ++value;
    }
  }
}

}  // namespace detail

// All maps L with L(x*y) = L(x)*y, lexicographic on image arrays.
inline std::vector<SelfMap> left_translations(const FiniteSemigroup& s) {
  std::vector<SelfMap> out;
  // Constraint L(x*y) = L(x)*y is checkable once both L(x*y) and L(x) are
  // assigned, i.e. once max(x*y, x) <= newest assigned index.
  detail::enumerate_maps(
      s.n,
      [&](const std::vector<int>& img, int newest) {
        for (int x = 0; x <= newest; ++x)
          for (int y = 0; y < s.n; ++y) {
            int xy = s.at(x, y);
            if (xy > newest) continue;
            if (x != newest && xy != newest) continue;  // already checked earlier
            if (img[xy] != s.at(img[x], y)) return false;
          }
        return true;
      },
      out);
  return out;
}

// All maps R with R(x*y) = x*R(y).
inline std::vector<SelfMap> right_translations(const FiniteSemigroup& s) {
  std::vector<SelfMap> out;
  detail::enumerate_maps(
      s.n,
      [&](const std::vector<int>& img, int newest) {
        for (int y = 0; y <= newest; ++y)
          for (int x = 0; x < s.n; ++x) {
            int xy = s.at(x, y);
            if (xy > newest) continue;
            if (y != newest && xy != newest) continue;
            if (img[xy] != s.at(x, img[y])) return false;
          }
        return true;
      },
      out);
  return out;
}

// The multiplier set as the pullback of g along d: key each left translation
// by the full table g(L)[x][z] = x*L(z), each right translation by
// d(R)[y][z] = R(y)*z, and join on equal keys.  Emitted in lexicographic
// (L.img, R.img) order with inner witnesses attached.
inline std::vector<Multiplier> multipliers(const FiniteSemigroup& s) {
  std::vector<SelfMap> ls = left_translations(s);
  std::vector<SelfMap> rs = right_translations(s);

  auto g_key = [&](const SelfMap& L) {
    std::vector<int> key(static_cast<size_t>(s.n) * s.n);
    for (int x = 0; x < s.n; ++x)
      for (int z = 0; z < s.n; ++z) key[static_cast<size_t>(x) * s.n + z] = s.at(x, L(z));
    return key;
  };
  auto d_key = [&](const SelfMap& R) {
    std::vector<int> key(static_cast<size_t>(s.n) * s.n);
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) key[static_cast<size_t>(y) * s.n + z] = s.at(R(y), z);
    return key;
  };

  std::map<std::vector<int>, std::vector<int>> right_by_key;
  for (size_t j = 0; j < rs.size(); ++j) right_by_key[d_key(rs[j])].push_back(static_cast<int>(j));

  std::vector<Multiplier> out;
  for (const SelfMap& L : ls) {
    auto it = right_by_key.find(g_key(L));
    if (it == right_by_key.end()) continue;
    for (int j : it->second) {
      Multiplier m;
      m.L = L;
      m.R = rs[j];
      out.push_back(std::move(m));
    }
  }
  // ls is lexicographic and right indices ascend within a key, so out is
  // already sorted on (L.img, R.img); keep a sort for safety on ties.
  std::sort(out.begin(), out.end());

  for (int x = 0; x < s.n; ++x) {
    SelfMap lx = inner_left_translation(s, x);
    SelfMap rx = inner_right_translation(s, x);
    for (Multiplier& m : out)
      if (m.L == lx && m.R == rx) {
        m.inner_witnesses.push_back(x);
        break;
      }
  }
  return out;
}

// The hull monoid: canonical element list, star composition table,
// identity position.
struct TranslationalHull {
  FiniteSemigroup base;
  std::vector<Multiplier> elements;
  std::vector<int> star_table;  // flattened size() x size()
  int identity_index = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int star_at(int i, int j) const { return star_table[static_cast<size_t>(i) * size() + j]; }

  int find(const SelfMap& L, const SelfMap& R) const {
    Multiplier probe;
    probe.L = L;
    probe.R = R;
    auto it = std::lower_bound(elements.begin(), elements.end(), probe);
    if (it == elements.end() || !(*it == probe)) return -1;
    return static_cast<int>(it - elements.begin());
  }

  int inner_count() const {
    int c = 0;
    for (const Multiplier& m : elements) c += m.inner() ? 1 : 0;
    return c;
  }
  int outer_count() const { return size() - inner_count(); }

  FiniteMonoid monoid() const {
    FiniteSemigroup s;
    s.n = size();
    s.tab = star_table;
    return FiniteMonoid{std::move(s), identity_index};
  }
};

inline TranslationalHull hull(const FiniteSemigroup& s) {
  TranslationalHull h;
  h.base = s;
  h.elements = multipliers(s);
  int m = h.size();

  // Star products factor through the two components, so compose the distinct
  // translations once and look elements up by component-id pair.
  std::map<std::vector<int>, int> lid, rid;
  std::vector<std::vector<int>> lmaps, rmaps;
  std::vector<int> elem_l(m), elem_r(m);
  for (int i = 0; i < m; ++i) {
    auto [itl, newl] = lid.try_emplace(h.elements[i].L.img, static_cast<int>(lmaps.size()));
    if (newl) lmaps.push_back(h.elements[i].L.img);
    elem_l[i] = itl->second;
    auto [itr, newr] = rid.try_emplace(h.elements[i].R.img, static_cast<int>(rmaps.size()));
    if (newr) rmaps.push_back(h.elements[i].R.img);
    elem_r[i] = itr->second;
  }
  int nl = static_cast<int>(lmaps.size());
  int nr = static_cast<int>(rmaps.size());
  std::vector<int> pair_idx(static_cast<size_t>(nl) * nr, -1);
  for (int i = 0; i < m; ++i) pair_idx[static_cast<size_t>(elem_l[i]) * nr + elem_r[i]] = i;

  auto compose_ids = [](const std::vector<std::vector<int>>& maps,
                        const std::map<std::vector<int>, int>& ids) {
    int n = static_cast<int>(maps.size());
    std::vector<int> comp(static_cast<size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<int> c(maps[b].size());
        for (size_t x = 0; x < maps[b].size(); ++x) c[x] = maps[a][maps[b][x]];
        auto it = ids.find(c);
        if (it != ids.end()) comp[static_cast<size_t>(a) * n + b] = it->second;
      }
    return comp;
  };
  std::vector<int> lcomp = compose_ids(lmaps, lid);
  std::vector<int> rcomp = compose_ids(rmaps, rid);

  h.star_table.assign(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int lc = lcomp[static_cast<size_t>(elem_l[i]) * nl + elem_l[j]];
      int rc = rcomp[static_cast<size_t>(elem_r[j]) * nr + elem_r[i]];
      int k = lc < 0 || rc < 0 ? -1 : pair_idx[static_cast<size_t>(lc) * nr + rc];
      if (k < 0)
        throw InternalCheckError("HullClosureViolation: star product escapes the multiplier set");
      h.star_table[static_cast<size_t>(i) * m + j] = k;
    }
  h.identity_index = h.find(SelfMap::identity(s.n), SelfMap::identity(s.n));
  if (h.identity_index < 0)
    throw InternalCheckError("identity pair missing from multiplier set");
  // The star table is a monoid table by construction; revalidate while small.
  semigroup_from_construction(m, h.star_table, 300);
  return h;
}

// Image of a multiplier under a carrier bijection sigma: the conjugated pair
// acting on relabel(s, sigma).  Identity bijection returns h unchanged.
inline Multiplier push_forward(const FiniteSemigroup& s, const Multiplier& h, const SelfMap& sigma) {
  if (sigma.n() != s.n || !sigma.is_permutation())
    throw ValidationError("IncompatibleCarrier: expected a permutation of size " +
                          std::to_string(s.n));
  SelfMap inv = inverse_of_permutation(sigma);
  Multiplier out;
  out.L = compose(sigma, compose(h.L, inv));
  out.R = compose(sigma, compose(h.R, inv));
  FiniteSemigroup t = relabel(s, sigma);
  if (!is_multiplier(t, out.L, out.R))
    throw InternalCheckError("push_forward image is not a multiplier of the relabeled semigroup");
  for (int w : h.inner_witnesses) out.inner_witnesses.push_back(sigma(w));
  std::sort(out.inner_witnesses.begin(), out.inner_witnesses.end());
  return out;
}

}  // namespace transhull
