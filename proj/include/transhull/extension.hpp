#pragma once

#include <string>
#include <vector>

#include "transhull/degeneracy.hpp"
#include "transhull/homsearch.hpp"
#include "transhull/hull.hpp"

namespace transhull {

// Position of each canonical multiplier (L_x, R_x) in the hull element list.
inline std::vector<int> canonical_indices(const TranslationalHull& h) {
  std::vector<int> out(h.base.n);
  for (int x = 0; x < h.base.n; ++x) {
    out[x] = h.find(inner_left_translation(h.base, x), inner_right_translation(h.base, x));
    if (out[x] < 0)
      throw InternalCheckError("canonical multiplier missing from the hull element list");
  }
  return out;
}

inline void require_semigroup_hom_into_hull(const FiniteSemigroup& s, const TranslationalHull& ht,
                                            const std::vector<int>& f, const char* who) {
  if (f.size() != static_cast<size_t>(s.n))
    throw PreconditionError(std::string(who) + ": image list has wrong length");
  for (int v : f)
    if (v < 0 || v >= ht.size())
      throw PreconditionError(std::string(who) + ": image index out of range");
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      if (f[s.at(x, y)] != ht.star_at(f[x], f[y]))
        throw PreconditionError(std::string(who) + ": not a homomorphism into the hull at (" +
                                std::to_string(x) + "," + std::to_string(y) + ")");
}

inline void require_nondegenerate(const FiniteSemigroup& t, const char* who) {
  DegeneracyReport d = degeneracy_report(t);
  if (!d.left_nondeg)
    throw PreconditionError(std::string(who) + ": target is left-degenerate, witness (" +
                            std::to_string(d.left_witness->first) + "," +
                            std::to_string(d.left_witness->second) + ")");
  if (!d.right_nondeg)
    throw PreconditionError(std::string(who) + ": target is right-degenerate, witness (" +
                            std::to_string(d.right_witness->first) + "," +
                            std::to_string(d.right_witness->second) + ")");
}

inline void require_translation_nondegenerate(const std::vector<int>& f,
                                              const TranslationalHull& ht, const char* who) {
  TranslationNondegReport tr = is_translation_nondegenerate(f, ht);
  if (!tr.nondegenerate)
    throw PreconditionError(
        std::string(who) + ": map is not translation non-degenerate, uncovered element " +
        std::to_string(tr.left_orbit_gap ? *tr.left_orbit_gap : *tr.right_orbit_gap));
}

struct ExtensionOptions {
  bool verify_all_decompositions = true;
  bool uniqueness_search = true;
  int uniqueness_bound = 64;  // exhaustive search only when |hull(S)| is at most this
  long long node_budget = 50'000'000;
};

struct ExtensionResult {
  std::vector<int> map;  // hull(S) index -> hull(T) index
  bool decomposition_independent = true;
  bool restriction_holds = true;
  bool monoid_hom = true;
  bool translation_nondegenerate = true;
  bool uniqueness_searched = false;
  long long solutions_found = -1;  // -1 when no search ran

  bool all_verified() const {
    return decomposition_independent && restriction_holds && monoid_hom &&
           translation_nondegenerate && (!uniqueness_searched || solutions_found == 1);
  }
};

// Unique extension of a translation non-degenerate homomorphism
// f: S -> |hull(T)| to a monoid homomorphism hull(S) -> hull(T), for
// non-degenerate T.  Decompositions of each u in T are chosen as the
// lexicographically least (s,t); independence of that choice is then
// verified against every decomposition.
inline ExtensionResult extend_sharp(const TranslationalHull& hs, const TranslationalHull& ht,
                                    const std::vector<int>& f, const ExtensionOptions& opt = {}) {
  const FiniteSemigroup& s = hs.base;
  const FiniteSemigroup& t = ht.base;
  require_nondegenerate(t, "extend_sharp");
  require_semigroup_hom_into_hull(s, ht, f, "extend_sharp");
  require_translation_nondegenerate(f, ht, "extend_sharp");

  auto fl = [&](int x) -> const SelfMap& { return ht.elements[f[x]].L; };
  auto fr = [&](int x) -> const SelfMap& { return ht.elements[f[x]].R; };

  // decomp_l[u] = least (s0, t0) with f_L(s0)(t0) = u, ditto decomp_r.
  std::vector<std::pair<int, int>> decomp_l(t.n, {-1, -1}), decomp_r(t.n, {-1, -1});
  for (int s0 = 0; s0 < s.n; ++s0)
    for (int t0 = 0; t0 < t.n; ++t0) {
      int ul = fl(s0)(t0);
      if (decomp_l[ul].first < 0) decomp_l[ul] = {s0, t0};
      int ur = fr(s0)(t0);
      if (decomp_r[ur].first < 0) decomp_r[ur] = {s0, t0};
    }

  ExtensionResult res;
  res.map.assign(hs.size(), -1);
  for (int i = 0; i < hs.size(); ++i) {
    const SelfMap& L = hs.elements[i].L;
    const SelfMap& R = hs.elements[i].R;
    SelfMap big_l, big_r;
    big_l.img.resize(t.n);
    big_r.img.resize(t.n);
    for (int u = 0; u < t.n; ++u) {
      auto [sl, tl] = decomp_l[u];
      big_l.img[u] = fl(L(sl))(tl);
      auto [sr, tr] = decomp_r[u];
      big_r.img[u] = fr(R(sr))(tr);
    }
    int k = ht.find(big_l, big_r);
    if (k < 0)
      throw InternalCheckError("extend_sharp: image pair is not a multiplier of the target");
    res.map[i] = k;

    if (opt.verify_all_decompositions) {
      for (int s0 = 0; s0 < s.n; ++s0)
        for (int t0 = 0; t0 < t.n; ++t0) {
          if (big_l.img[fl(s0)(t0)] != fl(L(s0))(t0)) res.decomposition_independent = false;
          if (big_r.img[fr(s0)(t0)] != fr(R(s0))(t0)) res.decomposition_independent = false;
        }
      if (!res.decomposition_independent)
        throw InternalCheckError("extend_sharp: decomposition choice leaked into the result");
    }
  }

  std::vector<int> can = canonical_indices(hs);
  for (int x = 0; x < s.n; ++x)
    if (res.map[can[x]] != f[x]) res.restriction_holds = false;
  if (!res.restriction_holds)
    throw InternalCheckError("extend_sharp: restriction along the canonical map failed");

  for (int i = 0; i < hs.size() && res.monoid_hom; ++i)
    for (int j = 0; j < hs.size(); ++j)
      if (res.map[hs.star_at(i, j)] != ht.star_at(res.map[i], res.map[j])) {
        res.monoid_hom = false;
        break;
      }
  if (res.map[hs.identity_index] != ht.identity_index) res.monoid_hom = false;
  if (!res.monoid_hom) throw InternalCheckError("extend_sharp: result is not a monoid hom");

  res.translation_nondegenerate =
      is_translation_nondegenerate(res.map, ht).nondegenerate;
  if (!res.translation_nondegenerate)
    throw InternalCheckError("extend_sharp: extension lost translation non-degeneracy");

  if (opt.uniqueness_search && hs.size() <= opt.uniqueness_bound) {
    res.uniqueness_searched = true;
    std::vector<int> fixed(hs.size(), -1);
    fixed[hs.identity_index] = ht.identity_index;
    for (int x = 0; x < s.n; ++x) fixed[can[x]] = f[x];
    FiniteSemigroup hs_sg{hs.size(), hs.star_table};
    FiniteSemigroup ht_sg{ht.size(), ht.star_table};
    HomSearch search(hs_sg, ht_sg);
    res.solutions_found = search.run(
        fixed, [](const std::vector<int>&) { return true; }, opt.node_budget);
    if (res.solutions_found != 1)
      throw InternalCheckError("extend_sharp: expected exactly one extension, found " +
                               std::to_string(res.solutions_found));
  }
  return res;
}

inline void require_sem_nd_object(const FiniteSemigroup& s, const char* who) {
  DegeneracyReport d = degeneracy_report(s);
  if (!d.globally_idempotent)
    throw PreconditionError(std::string(who) + ": semigroup is not globally idempotent, element " +
                            std::to_string(*d.missing_product) + " is not a product");
  if (!d.nondegenerate()) require_nondegenerate(s, who);
}

// TrHull on a non-degenerate homomorphism between globally idempotent,
// non-degenerate semigroups: the extension of the composite with the
// canonical map of the target.  The commuting square is rechecked.
inline ExtensionResult trhull_on_morphism(const TranslationalHull& hs,
                                          const TranslationalHull& ht,
                                          const std::vector<int>& f,
                                          const ExtensionOptions& opt = {}) {
  const FiniteSemigroup& s = hs.base;
  const FiniteSemigroup& t = ht.base;
  require_sem_nd_object(s, "trhull_on_morphism");
  require_sem_nd_object(t, "trhull_on_morphism");
  if (!is_semigroup_hom(s, t, f))
    throw PreconditionError("trhull_on_morphism: not a semigroup homomorphism");
  MapNondegReport nd = is_nondegenerate_map(f, t);
  if (!nd.nondegenerate)
    throw PreconditionError("trhull_on_morphism: homomorphism is degenerate, uncovered element " +
                            std::to_string(nd.left_span_gap ? *nd.left_span_gap
                                                            : *nd.right_span_gap));
  std::vector<int> can_t = canonical_indices(ht);
  std::vector<int> mf(s.n);
  for (int x = 0; x < s.n; ++x) mf[x] = can_t[f[x]];
  ExtensionResult res = extend_sharp(hs, ht, mf, opt);
  // Square: |TrHull(f)|o M_S = M_T o f, which is the restriction equation.
  std::vector<int> can_s = canonical_indices(hs);
  for (int x = 0; x < s.n; ++x)
    if (res.map[can_s[x]] != can_t[f[x]])
      throw InternalCheckError("trhull_on_morphism: naturality square failed");
  return res;
}

struct FlatResult {
  std::vector<int> map;  // hull(S) index -> M element
  bool restriction_holds = true;
  bool monoid_hom = true;
  bool uniqueness_searched = false;
  long long solutions_found = -1;
};

// Extension of a non-degenerate homomorphism f: S -> |M| to a monoid
// homomorphism hull(S) -> M, through the isomorphism of M with its own hull.
inline FlatResult extend_flat(const TranslationalHull& hs, const FiniteMonoid& m,
                              const std::vector<int>& f, const ExtensionOptions& opt = {}) {
  const FiniteSemigroup& s = hs.base;
  require_sem_nd_object(s, "extend_flat");
  if (!is_semigroup_hom(s, m.sg, f))
    throw PreconditionError("extend_flat: not a semigroup homomorphism into |M|");
  MapNondegReport nd = is_nondegenerate_map(f, m.sg);
  if (!nd.nondegenerate)
    throw PreconditionError("extend_flat: map is degenerate, uncovered element " +
                            std::to_string(nd.left_span_gap ? *nd.left_span_gap
                                                            : *nd.right_span_gap));

  TranslationalHull hm = hull(m.sg);
  std::vector<int> m_to_hull = canonical_indices(hm);
  if (hm.size() != m.n())
    throw InternalCheckError("extend_flat: monoid is not isomorphic to its hull");
  std::vector<int> hull_to_m(hm.size(), -1);
  for (int x = 0; x < m.n(); ++x) hull_to_m[m_to_hull[x]] = x;

  std::vector<int> mf(s.n);
  for (int x = 0; x < s.n; ++x) mf[x] = m_to_hull[f[x]];
  ExtensionOptions inner = opt;
  inner.uniqueness_search = false;
  ExtensionResult sharp = extend_sharp(hs, hm, mf, inner);

  FlatResult res;
  res.map.resize(hs.size());
  for (int i = 0; i < hs.size(); ++i) res.map[i] = hull_to_m[sharp.map[i]];

  std::vector<int> can = canonical_indices(hs);
  for (int x = 0; x < s.n; ++x)
    if (res.map[can[x]] != f[x]) res.restriction_holds = false;
  if (!res.restriction_holds)
    throw InternalCheckError("extend_flat: restriction equation failed");
  for (int i = 0; i < hs.size() && res.monoid_hom; ++i)
    for (int j = 0; j < hs.size(); ++j)
      if (res.map[hs.star_at(i, j)] != m.at(res.map[i], res.map[j])) {
        res.monoid_hom = false;
        break;
      }
  if (res.map[hs.identity_index] != m.e) res.monoid_hom = false;
  if (!res.monoid_hom) throw InternalCheckError("extend_flat: result is not a monoid hom");

  if (opt.uniqueness_search && hs.size() <= opt.uniqueness_bound) {
    res.uniqueness_searched = true;
    std::vector<int> fixed(hs.size(), -1);
    fixed[hs.identity_index] = m.e;
    for (int x = 0; x < s.n; ++x) fixed[can[x]] = f[x];
    FiniteSemigroup hs_sg{hs.size(), hs.star_table};
    HomSearch search(hs_sg, m.sg);
    res.solutions_found = search.run(
        fixed, [](const std::vector<int>&) { return true; }, opt.node_budget);
    if (res.solutions_found != 1)
      throw InternalCheckError("extend_flat: expected exactly one extension, found " +
                               std::to_string(res.solutions_found));
  }
  return res;
}

// g bullet f := |g#| o f, the composition of the category whose
// morphisms S -> T are translation non-degenerate homs S -> |hull(T)|.
inline std::vector<int> bullet_compose(const FiniteSemigroup& s, const TranslationalHull& ht,
                                       const TranslationalHull& hu, const std::vector<int>& g,
                                       const std::vector<int>& f,
                                       const ExtensionOptions& opt = {}) {
  require_semigroup_hom_into_hull(s, ht, f, "bullet_compose(f)");
  require_translation_nondegenerate(f, ht, "bullet_compose(f)");
  ExtensionOptions inner = opt;
  inner.uniqueness_search = false;
  ExtensionResult gs = extend_sharp(ht, hu, g, inner);  // validates g's side
  std::vector<int> out(s.n);
  for (int x = 0; x < s.n; ++x) out[x] = gs.map[f[x]];
  require_semigroup_hom_into_hull(s, hu, out, "bullet_compose(result)");
  TranslationNondegReport tr = is_translation_nondegenerate(out, hu);
  if (!tr.nondegenerate)
    throw InternalCheckError("bullet_compose: composite lost translation non-degeneracy");
  return out;
}

struct AdjunctionReport {
  long long monoid_homs = 0;       // |Mon(M, hull(S))|
  long long admissible_maps = 0;   // translation non-degenerate homs |M| -> |hull(S)|
  bool each_hom_has_unique_mate = true;
  bool bijection = false;
};

// Hom-set bijection Mon(M, hull(S)) <-> {translation non-degenerate
// semigroup homs |M| -> |hull(S)|}, mediated by extension along the
// canonical isomorphism of M with hull(|M|).  Verified exhaustively.
inline AdjunctionReport check_adjunction(const FiniteMonoid& m, const TranslationalHull& hs,
                                         const ExtensionOptions& opt = {}) {
  require_sem_nd_object(hs.base, "check_adjunction");
  TranslationalHull hm = hull(m.sg);
  std::vector<int> m_to_hull = canonical_indices(hm);
  if (hm.size() != m.n())
    throw InternalCheckError("check_adjunction: monoid not isomorphic to its hull");

  FiniteSemigroup star_sg{hs.size(), hs.star_table};
  FiniteMonoid star_monoid{star_sg, hs.identity_index};
  std::vector<std::vector<int>> homs = all_monoid_homs(m, star_monoid);

  AdjunctionReport rep;
  rep.monoid_homs = static_cast<long long>(homs.size());
  std::vector<long long> mates(homs.size(), 0);

  HomSearch candidates(m.sg, star_sg);
  ExtensionOptions inner = opt;
  inner.uniqueness_search = false;
  candidates.run(std::vector<int>(m.n(), -1), [&](const std::vector<int>& phi) {
    if (!is_translation_nondegenerate(phi, hs).nondegenerate) return true;
    ++rep.admissible_maps;
    ExtensionResult sharp = extend_sharp(hm, hs, phi, inner);
    // The mate of phi: hull(|M|) --phi#--> hull(S) precomposed with M's iso.
    std::vector<int> mate(m.n());
    for (int x = 0; x < m.n(); ++x) mate[x] = sharp.map[m_to_hull[x]];
    for (size_t i = 0; i < homs.size(); ++i)
      if (homs[i] == mate) {
        ++mates[i];
        break;
      }
    return true;
  });

  for (long long c : mates)
    if (c != 1) rep.each_hom_has_unique_mate = false;
  rep.bijection = rep.each_hom_has_unique_mate && rep.admissible_maps == rep.monoid_homs;
  return rep;
}

}  // namespace transhull
