#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "transhull/errors.hpp"

namespace transhull {

// A self-map of {0,...,n-1}, stored as its image array.
struct SelfMap {
  std::vector<int> img;

  SelfMap() = default;
  explicit SelfMap(std::vector<int> images) : img(std::move(images)) {}

  int n() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }

  static SelfMap identity(int n) {
    SelfMap m;
    m.img.resize(n);
    for (int i = 0; i < n; ++i) m.img[i] = i;
    return m;
  }

  static SelfMap constant(int n, int value) {
    SelfMap m;
    m.img.assign(n, value);
    return m;
  }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  bool is_permutation() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 0 || v >= n() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool operator==(const SelfMap& o) const { return img == o.img; }
  bool operator<(const SelfMap& o) const { return img < o.img; }
};

// compose(f, g) = f after g.
inline SelfMap compose(const SelfMap& f, const SelfMap& g) {
  SelfMap r;
  r.img.resize(g.img.size());
  for (size_t x = 0; x < g.img.size(); ++x) r.img[x] = f.img[g.img[x]];
  return r;
}

inline SelfMap inverse_of_permutation(const SelfMap& s) {
  SelfMap r;
  r.img.resize(s.img.size());
  for (int x = 0; x < s.n(); ++x) r.img[s.img[x]] = x;
  return r;
}

// A finite semigroup on elements 0..n-1 given by its Cayley table,
// tab(x,y) = x*y.  Construct through validate_semigroup so that
// associativity has been checked.
struct FiniteSemigroup {
  int n = 0;
  std::vector<int> tab;  // row-major, n*n entries

  int at(int x, int y) const { return tab[static_cast<size_t>(x) * n + y]; }
  int& at(int x, int y) { return tab[static_cast<size_t>(x) * n + y]; }

  bool operator==(const FiniteSemigroup& o) const { return n == o.n && tab == o.tab; }
  bool operator<(const FiniteSemigroup& o) const {
    return n != o.n ? n < o.n : tab < o.tab;
  }
};

inline FiniteSemigroup validate_semigroup(int n, const std::vector<int>& flat) {
  if (n < 0) throw ValidationError("negative element count");
  if (flat.size() != static_cast<size_t>(n) * n)
    throw ValidationError("table is not " + std::to_string(n) + "x" + std::to_string(n));
  FiniteSemigroup s;
  s.n = n;
  s.tab = flat;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = s.at(x, y);
      if (v < 0 || v >= n)
        throw ValidationError("OutOfRangeEntry at (" + std::to_string(x) + "," +
                              std::to_string(y) + "): " + std::to_string(v));
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.at(s.at(x, y), z) != s.at(x, s.at(y, z)))
          throw ValidationError("NotAssociative at (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ")");
  return s;
}

inline FiniteSemigroup validate_semigroup(int n, const std::vector<std::vector<int>>& rows) {
  if (rows.size() != static_cast<size_t>(n))
    throw ValidationError("expected " + std::to_string(n) + " rows");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (row.size() != static_cast<size_t>(n))
      throw ValidationError("row of length " + std::to_string(row.size()) +
                            ", expected " + std::to_string(n));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return validate_semigroup(n, flat);
}

// For tables whose associativity is guaranteed by construction (composition
// monoids, convolution semigroups of validated algebras).  Full revalidation
// is still run below the given size threshold.
inline FiniteSemigroup semigroup_from_construction(int n, std::vector<int> flat,
                                                   int revalidate_limit = 300) {
  if (n <= revalidate_limit) return validate_semigroup(n, flat);
  FiniteSemigroup s;
  s.n = n;
  s.tab = std::move(flat);
  // Deterministic sampled associativity probe.
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  for (int t = 0; t < 200000; ++t) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    int x = static_cast<int>((state >> 33) % n);
    int y = static_cast<int>((state >> 13) % n);
    int z = static_cast<int>(state % n);
    if (s.at(s.at(x, y), z) != s.at(x, s.at(y, z)))
      throw InternalCheckError("constructed table fails associativity probe");
  }
  return s;
}

inline bool is_commutative(const FiniteSemigroup& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = x + 1; y < s.n; ++y)
      if (s.at(x, y) != s.at(y, x)) return false;
  return true;
}

// The unique two-sided identity, if one exists.
inline std::optional<int> find_identity(const FiniteSemigroup& s) {
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x)
      if (s.at(e, x) != x || s.at(x, e) != x) ok = false;
    if (ok) return e;
  }
  return std::nullopt;
}

struct FiniteMonoid {
  FiniteSemigroup sg;
  int e = 0;

  int n() const { return sg.n; }
  int at(int x, int y) const { return sg.at(x, y); }
};

inline FiniteMonoid make_monoid(const FiniteSemigroup& s) {
  auto e = find_identity(s);
  if (!e) throw ValidationError("no two-sided identity");
  return FiniteMonoid{s, *e};
}

// x *op y := y * x.
inline FiniteSemigroup opposite(const FiniteSemigroup& s) {
  FiniteSemigroup t;
  t.n = s.n;
  t.tab.resize(s.tab.size());
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) t.at(x, y) = s.at(y, x);
  return t;
}

// Component-wise product; pairs (s,t) packed row-major as s*|T| + t.
inline FiniteSemigroup direct_product(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  FiniteSemigroup p;
  p.n = s.n * t.n;
  p.tab.resize(static_cast<size_t>(p.n) * p.n);
  for (int a = 0; a < s.n; ++a)
    for (int b = 0; b < t.n; ++b)
      for (int c = 0; c < s.n; ++c)
        for (int d = 0; d < t.n; ++d)
          p.at(a * t.n + b, c * t.n + d) = s.at(a, c) * t.n + t.at(b, d);
  return p;
}

// Transport of structure along a carrier permutation sigma:
// new_tab(sigma x, sigma y) = sigma(x*y).
inline FiniteSemigroup relabel(const FiniteSemigroup& s, const SelfMap& sigma) {
  if (sigma.n() != s.n || !sigma.is_permutation())
    throw ValidationError("IncompatibleCarrier: relabeling must be a permutation of size " +
                          std::to_string(s.n));
  FiniteSemigroup t;
  t.n = s.n;
  t.tab.resize(s.tab.size());
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) t.at(sigma(x), sigma(y)) = sigma(s.at(x, y));
  return t;
}

inline SelfMap inner_left_translation(const FiniteSemigroup& s, int x) {
  if (x < 0 || x >= s.n) throw ValidationError("element index out of range");
  SelfMap m;
  m.img.resize(s.n);
  for (int y = 0; y < s.n; ++y) m.img[y] = s.at(x, y);
  return m;
}

inline SelfMap inner_right_translation(const FiniteSemigroup& s, int x) {
  if (x < 0 || x >= s.n) throw ValidationError("element index out of range");
  SelfMap m;
  m.img.resize(s.n);
  for (int y = 0; y < s.n; ++y) m.img[y] = s.at(y, x);
  return m;
}

inline bool is_left_translation(const FiniteSemigroup& s, const SelfMap& L) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (L(s.at(x, y)) != s.at(L(x), y)) return false;
  return true;
}

inline bool is_right_translation(const FiniteSemigroup& s, const SelfMap& R) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (R(s.at(x, y)) != s.at(x, R(y))) return false;
  return true;
}

// The linking relation R(y)*z = y*L(z).
inline bool is_linked_pair(const FiniteSemigroup& s, const SelfMap& L, const SelfMap& R) {
  for (int y = 0; y < s.n; ++y)
    for (int z = 0; z < s.n; ++z)
      if (s.at(R(y), z) != s.at(y, L(z))) return false;
  return true;
}

// A linked pair of translations.  inner_witnesses lists every element x
// whose inner pair equals (L,R); empty for an outer multiplier.
struct Multiplier {
  SelfMap L;
  SelfMap R;
  std::vector<int> inner_witnesses;

  bool inner() const { return !inner_witnesses.empty(); }
  bool operator==(const Multiplier& o) const { return L == o.L && R == o.R; }
  bool operator<(const Multiplier& o) const {
    return L.img != o.L.img ? L.img < o.L.img : R.img < o.R.img;
  }
};

inline bool is_multiplier(const FiniteSemigroup& s, const SelfMap& L, const SelfMap& R) {
  return is_left_translation(s, L) && is_right_translation(s, R) && is_linked_pair(s, L, R);
}

// (L',R') star (L,R) = (L' o L, R o R').
inline Multiplier star(const Multiplier& lhs, const Multiplier& rhs) {
  Multiplier m;
  m.L = compose(lhs.L, rhs.L);
  m.R = compose(rhs.R, lhs.R);
  return m;
}

// x |-> (inner left translation, inner right translation).  The linking
// relation holds by associativity.
inline Multiplier canonical_multiplier(const FiniteSemigroup& s, int x) {
  Multiplier m;
  m.L = inner_left_translation(s, x);
  m.R = inner_right_translation(s, x);
  m.inner_witnesses = {x};
  return m;
}

// The full map x |-> (L_x, R_x); witnesses list every element producing the
// same pair, so repeated values are detectable.
inline std::vector<Multiplier> canonical_homomorphism(const FiniteSemigroup& s) {
  std::vector<Multiplier> out(s.n);
  for (int x = 0; x < s.n; ++x) {
    out[x].L = inner_left_translation(s, x);
    out[x].R = inner_right_translation(s, x);
  }
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (out[x].L == out[y].L && out[x].R == out[y].R) out[x].inner_witnesses.push_back(y);
  return out;
}

// A verified structure-preserving map between semigroups.
struct SemigroupHom {
  FiniteSemigroup src;
  FiniteSemigroup dst;
  std::vector<int> map;
};

inline bool is_semigroup_hom(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                             const std::vector<int>& map) {
  if (map.size() != static_cast<size_t>(src.n)) return false;
  for (int v : map)
    if (v < 0 || v >= dst.n) return false;
  for (int x = 0; x < src.n; ++x)
    for (int y = 0; y < src.n; ++y)
      if (map[src.at(x, y)] != dst.at(map[x], map[y])) return false;
  return true;
}

inline SemigroupHom make_hom(const FiniteSemigroup& src, const FiniteSemigroup& dst,
                             std::vector<int> map) {
  if (!is_semigroup_hom(src, dst, map)) throw ValidationError("not a semigroup homomorphism");
  return SemigroupHom{src, dst, std::move(map)};
}

}  // namespace transhull
