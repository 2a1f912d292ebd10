#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "transhull/hull.hpp"
#include "transhull/semigroup.hpp"

namespace transhull {

// Witnesses are always the lexicographically first counterexample, so
// reports are deterministic.  The empty semigroup is globally idempotent
// and non-degenerate under the set-theoretic reading.
struct DegeneracyReport {
  bool globally_idempotent = true;
  bool left_nondeg = true;
  bool right_nondeg = true;
  std::optional<int> missing_product;              // element not of the form x*y
  std::optional<std::pair<int, int>> left_witness;   // y!=z with y*x = z*x for all x
  std::optional<std::pair<int, int>> right_witness;  // y!=z with x*y = x*z for all x

  bool nondegenerate() const { return left_nondeg && right_nondeg; }
};

inline DegeneracyReport degeneracy_report(const FiniteSemigroup& s) {
  DegeneracyReport r;
  std::vector<bool> hit(s.n, false);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) hit[s.at(x, y)] = true;
  for (int u = 0; u < s.n; ++u)
    if (!hit[u]) {
      r.globally_idempotent = false;
      r.missing_product = u;
      break;
    }
  for (int y = 0; y < s.n && r.left_nondeg; ++y)
    for (int z = y + 1; z < s.n && r.left_nondeg; ++z) {
      bool all_equal = true;
      for (int x = 0; x < s.n; ++x)
        if (s.at(y, x) != s.at(z, x)) {
          all_equal = false;
          break;
        }
      if (all_equal) {
        r.left_nondeg = false;
        r.left_witness = {y, z};
      }
    }
  for (int y = 0; y < s.n && r.right_nondeg; ++y)
    for (int z = y + 1; z < s.n && r.right_nondeg; ++z) {
      bool all_equal = true;
      for (int x = 0; x < s.n; ++x)
        if (s.at(x, y) != s.at(x, z)) {
          all_equal = false;
          break;
        }
      if (all_equal) {
        r.right_nondeg = false;
        r.right_witness = {y, z};
      }
    }
  return r;
}

struct MapNondegReport {
  bool nondegenerate = true;
  std::optional<int> left_span_gap;   // element of T not of the form f(s)*t
  std::optional<int> right_span_gap;  // element of T not of the form t*f(s)
};

// f is a carrier map X -> T given by its image list; non-degenerate when
// both {f(s)*t} and {t*f(s)} cover T.
inline MapNondegReport is_nondegenerate_map(const std::vector<int>& f_images,
                                            const FiniteSemigroup& t) {
  for (int v : f_images)
    if (v < 0 || v >= t.n) throw ValidationError("map image out of range");
  MapNondegReport r;
  std::vector<bool> left_hit(t.n, false), right_hit(t.n, false);
  for (int fv : f_images)
    for (int u = 0; u < t.n; ++u) {
      left_hit[t.at(fv, u)] = true;
      right_hit[t.at(u, fv)] = true;
    }
  for (int u = 0; u < t.n; ++u)
    if (!left_hit[u]) {
      r.nondegenerate = false;
      r.left_span_gap = u;
      break;
    }
  for (int u = 0; u < t.n; ++u)
    if (!right_hit[u]) {
      r.nondegenerate = false;
      r.right_span_gap = u;
      break;
    }
  return r;
}

struct TranslationNondegReport {
  bool nondegenerate = true;
  std::optional<int> left_orbit_gap;   // element of T not of the form f_L(s)(t)
  std::optional<int> right_orbit_gap;  // element of T not of the form f_R(s)(t)
};

// f maps some set into multipliers of T; non-degenerate when the orbits of
// the projections f_L, f_R cover T.
inline TranslationNondegReport is_translation_nondegenerate(
    const std::vector<Multiplier>& f_values, const FiniteSemigroup& t) {
  for (const Multiplier& m : f_values)
    if (!is_multiplier(t, m.L, m.R))
      throw PreconditionError("codomain value is not a multiplier of T");
  TranslationNondegReport r;
  std::vector<bool> left_hit(t.n, false), right_hit(t.n, false);
  for (const Multiplier& m : f_values)
    for (int u = 0; u < t.n; ++u) {
      left_hit[m.L(u)] = true;
      right_hit[m.R(u)] = true;
    }
  for (int u = 0; u < t.n; ++u)
    if (!left_hit[u]) {
      r.nondegenerate = false;
      r.left_orbit_gap = u;
      break;
    }
  for (int u = 0; u < t.n; ++u)
    if (!right_hit[u]) {
      r.nondegenerate = false;
      r.right_orbit_gap = u;
      break;
    }
  return r;
}

inline TranslationNondegReport is_translation_nondegenerate(const std::vector<int>& f_indices,
                                                            const TranslationalHull& h) {
  std::vector<Multiplier> vals;
  vals.reserve(f_indices.size());
  for (int i : f_indices) {
    if (i < 0 || i >= h.size()) throw ValidationError("hull index out of range");
    vals.push_back(h.elements[i]);
  }
  return is_translation_nondegenerate(vals, h.base);
}

// Both equivalences between the definitional predicates and injectivity of
// the inner-translation maps: left non-degeneracy pairs with x |-> L_x and
// right non-degeneracy with x |-> R_x.  Also records that a non-degenerate
// semigroup has an injective canonical map into its hull.
struct InjectivityReport {
  bool left_nondeg = true;
  bool right_nondeg = true;
  bool left_map_injective = true;   // x |-> L_x
  bool right_map_injective = true;  // x |-> R_x
  bool canonical_injective = true;  // x |-> (L_x, R_x)

  bool left_iff() const { return left_nondeg == left_map_injective; }
  bool right_iff() const { return right_nondeg == right_map_injective; }
  bool nondeg_implies_canonical_injective() const {
    return !(left_nondeg && right_nondeg) || canonical_injective;
  }
};

inline InjectivityReport injectivity_checks(const FiniteSemigroup& s) {
  InjectivityReport r;
  DegeneracyReport d = degeneracy_report(s);
  r.left_nondeg = d.left_nondeg;
  r.right_nondeg = d.right_nondeg;
  std::set<std::vector<int>> ls, rs;
  std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (int x = 0; x < s.n; ++x) {
    ls.insert(inner_left_translation(s, x).img);
    rs.insert(inner_right_translation(s, x).img);
    pairs.insert({inner_left_translation(s, x).img, inner_right_translation(s, x).img});
  }
  r.left_map_injective = static_cast<int>(ls.size()) == s.n;
  r.right_map_injective = static_cast<int>(rs.size()) == s.n;
  r.canonical_injective = static_cast<int>(pairs.size()) == s.n;
  return r;
}

}  // namespace transhull
