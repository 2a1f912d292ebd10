#pragma once

// Named law suites behind the CLI `check` command.  Every statement the
// library relies on is executed here against independent oracles: naive
// enumeration for the combinatorial side, brute-force matrix filters for the
// linear side.  The oracles are deliberately written without reusing the
// optimized code paths they certify.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "transhull/census.hpp"
#include "transhull/degeneracy.hpp"
#include "transhull/extension.hpp"
#include "transhull/homsearch.hpp"
#include "transhull/hull.hpp"
#include "transhull/io.hpp"
#include "transhull/multiplier_extension.hpp"

namespace transhull {

struct CheckOptions {
  int max_order = 4;     // census depth, <= 4
  int sample_every = 25; // order-4 sampling stride for the heavy suites
  int seed = 0;
  int uniqueness_bound = 64;
};

namespace oracle {

// All self-maps of {0..n-1}, plain n^n enumeration.
inline std::vector<SelfMap> all_self_maps(int n) {
  std::vector<SelfMap> out;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    std::vector<int> img(n);
    long long c = code;
    for (int i = n - 1; i >= 0; --i) {
      img[i] = static_cast<int>(c % n);
      c /= n;
    }
    out.push_back(SelfMap{img});
  }
  return out;
}

// Brute-force multiplier set: filter all n^n x n^n map pairs by the three laws.
inline std::vector<std::pair<SelfMap, SelfMap>> multipliers(const FiniteSemigroup& s) {
  std::vector<std::pair<SelfMap, SelfMap>> out;
  std::vector<SelfMap> maps = all_self_maps(s.n);
  for (const SelfMap& l : maps) {
    if (!is_left_translation(s, l)) continue;
    for (const SelfMap& r : maps) {
      if (!is_right_translation(s, r)) continue;
      if (is_linked_pair(s, l, r)) out.push_back({l, r});
    }
  }
  return out;
}

inline long long count_semigroups(int n) {
  if (n == 0) return 1;
  int cells = n * n;
  long long total = 1;
  for (int i = 0; i < cells; ++i) total *= n;
  long long count = 0;
  std::vector<int> tab(cells);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < cells; ++i) {
      tab[i] = static_cast<int>(c % n);
      c /= n;
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        for (int z = 0; z < n && ok; ++z)
          if (tab[tab[x * n + y] * n + z] != tab[x * n + tab[y * n + z]]) ok = false;
    if (ok) ++count;
  }
  return count;
}

// Brute-force linear multipliers: all p^(2d^2) matrix pairs.
inline std::vector<LinearMultiplierPair> linear_multipliers(const FpAlgebra& a) {
  const Fp& F = a.field;
  int d = a.dim;
  long long total = 1;
  for (int i = 0; i < 2 * d * d; ++i) total *= F.p;
  std::vector<LinearMultiplierPair> out;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    LinearMultiplierPair m{FpMat(d), FpMat(d)};
    for (int i = 0; i < d * d; ++i) {
      m.L.a[i] = static_cast<int>(c % F.p);
      c /= F.p;
    }
    for (int i = 0; i < d * d; ++i) {
      m.R.a[i] = static_cast<int>(c % F.p);
      c /= F.p;
    }
    if (is_linear_multiplier(a, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

class CheckRunner {
 public:
  explicit CheckRunner(const CheckOptions& opt) : opt_(opt) {}

  std::vector<CheckItem> items;

  void add(const std::string& id, bool pass, const std::string& witness = "") {
    items.push_back({id, pass, pass ? "" : witness});
  }

  // ---- set-level suites -----------------------------------------------------

  void run_set_checks() {
    load_census();
    check_census_counts();
    check_hull_oracle();
    check_hull_monoid_laws();
    check_canonical_star_hom();
    check_monoid_hull_iso();
    check_inner_closed();
    check_commutative_diagonal();
    check_swap_symmetry();
    check_opposite_involution();
    check_injectivity_equivalences();
    check_monoid_nondegeneracy();
    check_identity_map_nondegeneracy();
    check_map_vs_translation_nondegeneracy();
    check_canonical_translation_nondegeneracy();
    check_composition_nondegeneracy();
    check_sharp_extension_sweep();
    check_trhull_functor_laws();
    check_flat_extension_sweep();
    check_bullet_laws();
    check_adjunction_sweep();
    check_canonical_map_not_unit();
  }

  // ---- linear suites ----------------------------------------------------------

  void run_linear_checks(const std::vector<AlgFile>& fleet) {
    std::vector<FpAlgebra> algebras;
    std::vector<FpCoalgebra> coalgebras;
    for (const AlgFile& f : fleet) {
      if (f.algebra) algebras.push_back(*f.algebra);
      if (f.coalgebra) coalgebras.push_back(*f.coalgebra);
    }
    check_linear_nullspace_oracle(algebras);
    check_linear_identity_closure(algebras);
    check_inner_multiplier_hom(algebras);
    check_monoid_object_inner(algebras);
    check_convolution_valid(algebras);
    check_concreteness(algebras);
    check_faithful_concrete(algebras);
    check_commutative_diagonal_linear(algebras);
    check_canonical_identities_linear(algebras);
    check_dual_route(coalgebras);
    check_duality_tables(coalgebras);
    check_inner_comultiplier_hom(coalgebras);
    check_multiplier_extension_sweep(algebras);
  }

 private:
  CheckOptions opt_;
  std::vector<FiniteSemigroup> census_;         // everything of order 1..3
  std::vector<TranslationalHull> hulls_;        // aligned with census_
  std::vector<int> semnd_;                      // indices of Sem_nd members
  std::vector<int> monoid_idx_;                 // indices of monoids

  void load_census() {
    for (int n = 1; n <= 3; ++n)
      enumerate_semigroups(n, false, [&](const FiniteSemigroup& s) {
        census_.push_back(s);
        return true;
      });
    hulls_.reserve(census_.size());
    for (const auto& s : census_) hulls_.push_back(hull(s));
    for (size_t i = 0; i < census_.size(); ++i) {
      DegeneracyReport d = degeneracy_report(census_[i]);
      if (d.globally_idempotent && d.nondegenerate()) semnd_.push_back(static_cast<int>(i));
      if (find_identity(census_[i])) monoid_idx_.push_back(static_cast<int>(i));
    }
  }

  bool sampled(long long index) const { return in_sample(index, opt_.sample_every, opt_.seed); }

  template <typename Fn>
  void for_order4_sample(Fn&& fn) {
    if (opt_.max_order < 4) return;
    long long index = 0;
    enumerate_semigroups(4, false, [&](const FiniteSemigroup& s) {
      if (sampled(index)) fn(s);
      ++index;
      return true;
    });
  }

  void check_census_counts() {
    bool pass = true;
    std::string witness;
    const long long expected[] = {1, 1, 8, 113};
    for (int n = 1; n <= 3; ++n) {
      long long got = 0;
      enumerate_semigroups(n, false, [&](const FiniteSemigroup&) {
        ++got;
        return true;
      });
      long long want = oracle::count_semigroups(n);
      if (got != want || got != expected[n]) {
        pass = false;
        witness = "order " + std::to_string(n) + ": generated " + std::to_string(got) +
                  ", oracle " + std::to_string(want);
      }
    }
    if (opt_.max_order >= 4) {
      long long rm = 0;
      enumerate_semigroups(4, false, [&](const FiniteSemigroup&) {
        ++rm;
        return true;
      });
      long long cm = count_semigroups_column_order(4);
      if (rm != cm) {
        pass = false;
        witness = "order 4: row-major " + std::to_string(rm) + " vs column order " +
                  std::to_string(cm);
      }
    }
    add("census-counts", pass, witness);
  }

  void check_hull_oracle() {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < census_.size() && pass; ++i) {
      auto got = hulls_[i].elements;
      auto want = oracle::multipliers(census_[i]);
      std::sort(want.begin(), want.end());
      if (got.size() != want.size()) {
        pass = false;
      } else {
        for (size_t k = 0; k < got.size(); ++k)
          if (!(got[k].L == want[k].first) || !(got[k].R == want[k].second)) pass = false;
      }
      if (!pass) witness = "census member " + std::to_string(i);
    }
    add("hull-brute-force-agreement", pass, witness);
  }

  void check_hull_monoid_laws() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const TranslationalHull& h, const std::string& tag) {
      try {
        if (h.size() <= 300) validate_semigroup(h.size(), h.star_table);
      } catch (const ValidationError& e) {
        pass = false;
        witness = tag + ": " + e.what();
        return;
      }
      for (int i = 0; i < h.size(); ++i)
        if (h.star_at(h.identity_index, i) != i || h.star_at(i, h.identity_index) != i) {
          pass = false;
          witness = tag + ": identity law fails at " + std::to_string(i);
        }
    };
    for (size_t i = 0; i < census_.size(); ++i)
      verify(hulls_[i], "census member " + std::to_string(i));
    for_order4_sample([&](const FiniteSemigroup& s) { verify(hull(s), "order-4 sample"); });
    add("hull-monoid-laws", pass, witness);
  }

  void check_canonical_star_hom() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const FiniteSemigroup& s, const TranslationalHull& h,
                      const std::string& tag) {
      std::vector<int> can = canonical_indices(h);
      for (int x = 0; x < s.n; ++x) {
        if (!is_linked_pair(s, h.elements[can[x]].L, h.elements[can[x]].R)) {
          pass = false;
          witness = tag + ": linking fails at " + std::to_string(x);
        }
        for (int y = 0; y < s.n; ++y)
          if (h.star_at(can[x], can[y]) != can[s.at(x, y)]) {
            pass = false;
            witness = tag + ": star law fails at (" + std::to_string(x) + "," +
                      std::to_string(y) + ")";
          }
      }
    };
    for (size_t i = 0; i < census_.size(); ++i)
      verify(census_[i], hulls_[i], "census member " + std::to_string(i));
    for_order4_sample([&](const FiniteSemigroup& s) { verify(s, hull(s), "order-4 sample"); });
    add("canonical-map-star-homomorphism", pass, witness);
  }

  void check_monoid_hull_iso() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const FiniteSemigroup& s, const TranslationalHull& h,
                      const std::string& tag) {
      if (h.size() != s.n) {
        pass = false;
        witness = tag + ": hull size " + std::to_string(h.size());
        return;
      }
      std::vector<int> can = canonical_indices(h);
      std::set<int> image(can.begin(), can.end());
      if (static_cast<int>(image.size()) != s.n) {
        pass = false;
        witness = tag + ": canonical map not injective";
      }
    };
    for (int i : monoid_idx_) verify(census_[i], hulls_[i], "census member " + std::to_string(i));
    if (opt_.max_order >= 4) {
      // Every order-4 monoid, not just the sampled ones: the check is cheap.
      enumerate_semigroups(4, false, [&](const FiniteSemigroup& s) {
        if (find_identity(s)) verify(s, hull(s), "order-4 monoid");
        return pass;
      });
    }
    add("monoid-hull-isomorphism", pass, witness);
  }

  void check_inner_closed() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const TranslationalHull& h, const std::string& tag) {
      for (int i = 0; i < h.size(); ++i)
        for (int j = 0; j < h.size(); ++j)
          if (h.elements[i].inner() && h.elements[j].inner() &&
              !h.elements[h.star_at(i, j)].inner()) {
            pass = false;
            witness = tag;
          }
    };
    for (size_t i = 0; i < census_.size(); ++i)
      verify(hulls_[i], "census member " + std::to_string(i));
    for_order4_sample([&](const FiniteSemigroup& s) { verify(hull(s), "order-4 sample"); });
    add("inner-multipliers-closed", pass, witness);
  }

  void check_commutative_diagonal() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const FiniteSemigroup& s, const TranslationalHull& h,
                      const std::string& tag) {
      if (!is_commutative(s) || !degeneracy_report(s).globally_idempotent) return;
      std::vector<SelfMap> lt = left_translations(s);
      if (h.size() != static_cast<int>(lt.size())) {
        pass = false;
        witness = tag + ": hull size vs endomorphism count";
        return;
      }
      for (int i = 0; i < h.size(); ++i) {
        if (!(h.elements[i].L == h.elements[i].R) || !(h.elements[i].L == lt[i])) {
          pass = false;
          witness = tag + ": non-diagonal multiplier";
        }
        for (int j = 0; j < h.size(); ++j)
          if (!(h.elements[h.star_at(i, j)].L == compose(h.elements[i].L, h.elements[j].L))) {
            pass = false;
            witness = tag + ": star does not match composition";
          }
      }
    };
    for (size_t i = 0; i < census_.size(); ++i)
      verify(census_[i], hulls_[i], "census member " + std::to_string(i));
    for_order4_sample([&](const FiniteSemigroup& s) { verify(s, hull(s), "order-4 sample"); });
    add("commutative-epi-diagonal-hull", pass, witness);
  }

  void check_swap_symmetry() {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < census_.size() && pass; ++i) {
      const TranslationalHull& h = hulls_[i];
      TranslationalHull ho = hull(opposite(census_[i]));
      if (h.size() != ho.size()) {
        pass = false;
        witness = "census member " + std::to_string(i);
        break;
      }
      std::vector<int> sw(h.size());
      for (int k = 0; k < h.size(); ++k) {
        sw[k] = ho.find(h.elements[k].R, h.elements[k].L);
        if (sw[k] < 0) pass = false;
      }
      for (int a = 0; a < h.size() && pass; ++a)
        for (int b = 0; b < h.size(); ++b)
          if (sw[h.star_at(a, b)] != ho.star_at(sw[b], sw[a])) {
            pass = false;
            break;
          }
      if (!pass) witness = "census member " + std::to_string(i);
    }
    add("swap-antiisomorphism-to-opposite-hull", pass, witness);
  }

  void check_opposite_involution() {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < census_.size(); ++i) {
      if (!(opposite(opposite(census_[i])) == census_[i]) ||
          find_identity(opposite(census_[i])) != find_identity(census_[i])) {
        pass = false;
        witness = "census member " + std::to_string(i);
      }
    }
    add("opposite-involution", pass, witness);
  }

  void check_injectivity_equivalences() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const FiniteSemigroup& s, const std::string& tag) {
      InjectivityReport r = injectivity_checks(s);
      if (!r.left_iff() || !r.right_iff() || !r.nondeg_implies_canonical_injective()) {
        pass = false;
        witness = tag;
      }
    };
    for (size_t i = 0; i < census_.size(); ++i) verify(census_[i], "census " + std::to_string(i));
    if (opt_.max_order >= 4)
      enumerate_semigroups(4, false, [&](const FiniteSemigroup& s) {
        verify(s, "order-4");
        return pass;
      });
    add("nondegeneracy-injectivity-equivalence", pass, witness);
  }

  void check_monoid_nondegeneracy() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const FiniteSemigroup& s, const std::string& tag) {
      if (!find_identity(s)) return;
      DegeneracyReport d = degeneracy_report(s);
      if (!d.globally_idempotent || !d.nondegenerate()) {
        pass = false;
        witness = tag;
      }
    };
    for (size_t i = 0; i < census_.size(); ++i) verify(census_[i], "census " + std::to_string(i));
    if (opt_.max_order >= 4)
      enumerate_semigroups(4, false, [&](const FiniteSemigroup& s) {
        verify(s, "order-4");
        return pass;
      });
    add("monoids-globally-idempotent-nondegenerate", pass, witness);
  }

  void check_identity_map_nondegeneracy() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const FiniteSemigroup& s, const std::string& tag) {
      std::vector<int> id(s.n);
      for (int i = 0; i < s.n; ++i) id[i] = i;
      if (is_nondegenerate_map(id, s).nondegenerate !=
          degeneracy_report(s).globally_idempotent) {
        pass = false;
        witness = tag;
      }
    };
    for (size_t i = 0; i < census_.size(); ++i) verify(census_[i], "census " + std::to_string(i));
    if (opt_.max_order >= 4)
      enumerate_semigroups(4, false, [&](const FiniteSemigroup& s) {
        verify(s, "order-4");
        return pass;
      });
    add("global-idempotency-iff-identity-map-nondegenerate", pass, witness);
  }

  void check_map_vs_translation_nondegeneracy() {
    bool pass = true;
    std::string witness;
    for (size_t si = 0; si < census_.size() && pass; ++si)
      for (size_t ti = 0; ti < census_.size() && pass; ++ti) {
        const FiniteSemigroup& src = census_[si];
        const FiniteSemigroup& dst = census_[ti];
        auto can = canonical_homomorphism(dst);
        long long total = 1;
        for (int i = 0; i < src.n; ++i) total *= dst.n;
        for (long long code = 0; code < total; ++code) {
          long long c = code;
          std::vector<int> f(src.n);
          std::vector<Multiplier> mf(src.n);
          for (int i = 0; i < src.n; ++i) {
            f[i] = static_cast<int>(c % dst.n);
            mf[i] = can[f[i]];
            c /= dst.n;
          }
          if (is_nondegenerate_map(f, dst).nondegenerate !=
              is_translation_nondegenerate(mf, dst).nondegenerate) {
            pass = false;
            witness = "pair (" + std::to_string(si) + "," + std::to_string(ti) + ")";
            break;
          }
        }
      }
    add("map-vs-translation-nondegeneracy", pass, witness);
  }

  void check_canonical_translation_nondegeneracy() {
    bool pass = true;
    std::string witness;
    auto verify = [&](const FiniteSemigroup& s, const std::string& tag) {
      auto can = canonical_homomorphism(s);
      if (is_translation_nondegenerate(can, s).nondegenerate !=
          degeneracy_report(s).globally_idempotent) {
        pass = false;
        witness = tag;
      }
    };
    for (size_t i = 0; i < census_.size(); ++i) verify(census_[i], "census " + std::to_string(i));
    if (opt_.max_order >= 4)
      enumerate_semigroups(4, false, [&](const FiniteSemigroup& s) {
        verify(s, "order-4");
        return pass;
      });
    add("canonical-translation-nondegeneracy-iff-global-idempotency", pass, witness);
  }

  void check_composition_nondegeneracy() {
    bool pass = true;
    std::string witness;
    for (size_t a = 0; a < census_.size() && pass; a += 7)
      for (size_t b = 0; b < census_.size() && pass; b += 7)
        for (size_t c = 0; c < census_.size() && pass; c += 7) {
          const auto &s = census_[a], &t = census_[b], &u = census_[c];
          for (const auto& f : all_homs(s, t)) {
            if (!is_nondegenerate_map(f, t).nondegenerate) continue;
            for (const auto& g : all_homs(t, u)) {
              if (!is_nondegenerate_map(g, u).nondegenerate) continue;
              std::vector<int> gf(s.n);
              for (int i = 0; i < s.n; ++i) gf[i] = g[f[i]];
              if (!is_nondegenerate_map(gf, u).nondegenerate) {
                pass = false;
                witness = "triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                          std::to_string(c) + ")";
              }
            }
          }
        }
    add("nondegenerate-composition-closed", pass, witness);
  }

  void check_sharp_extension_sweep() {
    bool pass = true;
    std::string witness;
    long long instances = 0;
    ExtensionOptions opt;
    opt.uniqueness_bound = opt_.uniqueness_bound;
    for (size_t ti = 0; ti < census_.size() && pass; ++ti) {
      if (!degeneracy_report(census_[ti]).nondegenerate()) continue;
      FiniteSemigroup star{hulls_[ti].size(), hulls_[ti].star_table};
      for (size_t si = 0; si < census_.size() && pass; ++si) {
        for (const auto& f : all_homs(census_[si], star)) {
          if (!is_translation_nondegenerate(f, hulls_[ti]).nondegenerate) continue;
          ++instances;
          try {
            ExtensionResult r = extend_sharp(hulls_[si], hulls_[ti], f, opt);
            if (!r.all_verified()) {
              pass = false;
              witness = "pair (" + std::to_string(si) + "," + std::to_string(ti) + ")";
            }
          } catch (const std::exception& e) {
            pass = false;
            witness = "pair (" + std::to_string(si) + "," + std::to_string(ti) + "): " + e.what();
          }
        }
      }
    }
    add("sharp-extension-existence-uniqueness", pass && instances > 0,
        witness.empty() ? "no admissible instances" : witness);
  }

  void check_trhull_functor_laws() {
    bool pass = true;
    std::string witness;
    ExtensionOptions quick;
    quick.uniqueness_search = false;
    // Identity law on every Sem_nd member.
    for (int i : semnd_) {
      std::vector<int> id(census_[i].n);
      for (int x = 0; x < census_[i].n; ++x) id[x] = x;
      ExtensionResult r = trhull_on_morphism(hulls_[i], hulls_[i], id, quick);
      for (int k = 0; k < hulls_[i].size(); ++k)
        if (r.map[k] != k) {
          pass = false;
          witness = "identity law, census member " + std::to_string(i);
        }
    }
    // Composition law on every composable pair: cache all non-degenerate homs
    // between Sem_nd members together with their extensions, then compare the
    // extension of each composite against the composite of the extensions.
    std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, std::vector<int>>>>
        cache;
    for (int a : semnd_)
      for (int b : semnd_) {
        auto& slot = cache[{a, b}];
        for (const auto& f : all_homs(census_[a], census_[b])) {
          if (!is_nondegenerate_map(f, census_[b]).nondegenerate) continue;
          slot.push_back({f, trhull_on_morphism(hulls_[a], hulls_[b], f, quick).map});
        }
      }
    long long composites = 0;
    for (int a : semnd_)
      for (int b : semnd_)
        for (int c : semnd_) {
          const auto& ab = cache[{a, b}];
          const auto& bc = cache[{b, c}];
          if (ab.empty() || bc.empty()) continue;
          std::map<std::vector<int>, const std::vector<int>*> lookup;
          for (const auto& e : cache[{a, c}]) lookup[e.first] = &e.second;
          for (const auto& [f, extf] : ab)
            for (const auto& [g, extg] : bc) {
              std::vector<int> gf(census_[a].n);
              for (int x = 0; x < census_[a].n; ++x) gf[x] = g[f[x]];
              auto it = lookup.find(gf);
              if (it == lookup.end()) {
                pass = false;
                witness = "composite hom missing from the cache";
                continue;
              }
              ++composites;
              for (size_t k = 0; k < extf.size(); ++k)
                if ((*it->second)[k] != extg[extf[k]]) {
                  pass = false;
                  witness = "composition law at triple (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")";
                }
            }
        }
    add("trhull-functor-laws", pass && composites > 0, witness);
  }

  void check_flat_extension_sweep() {
    bool pass = true;
    std::string witness;
    long long instances = 0;
    ExtensionOptions opt;
    opt.uniqueness_bound = opt_.uniqueness_bound;
    for (int si : semnd_) {
      for (int mi : monoid_idx_) {
        FiniteMonoid m = make_monoid(census_[mi]);
        for (const auto& f : all_homs(census_[si], census_[mi])) {
          if (!is_nondegenerate_map(f, census_[mi]).nondegenerate) continue;
          ++instances;
          try {
            FlatResult r = extend_flat(hulls_[si], m, f, opt);
            if (!r.restriction_holds || !r.monoid_hom ||
                (r.uniqueness_searched && r.solutions_found != 1)) {
              pass = false;
              witness = "pair (" + std::to_string(si) + "," + std::to_string(mi) + ")";
            }
          } catch (const std::exception& e) {
            pass = false;
            witness = std::string("exception: ") + e.what();
          }
        }
      }
    }
    add("flat-extension-existence-uniqueness", pass && instances > 0,
        witness.empty() ? "no admissible instances" : witness);
  }

  void check_bullet_laws() {
    bool pass = true;
    std::string witness;
    // Identity laws over a sampled set of admissible maps.
    for (size_t ia = 0; ia < semnd_.size() && pass; ia += 3)
      for (size_t ib = 0; ib < semnd_.size() && pass; ib += 3) {
        int a = semnd_[ia], b = semnd_[ib];
        FiniteSemigroup star_b{hulls_[b].size(), hulls_[b].star_table};
        std::vector<int> can_a = canonical_indices(hulls_[a]);
        std::vector<int> can_b = canonical_indices(hulls_[b]);
        for (const auto& f : all_homs(census_[a], star_b)) {
          if (!is_translation_nondegenerate(f, hulls_[b]).nondegenerate) continue;
          std::vector<int> left = bullet_compose(census_[a], hulls_[b], hulls_[b], can_b, f);
          if (left != f) {
            pass = false;
            witness = "left identity law";
          }
          std::vector<int> right = bullet_compose(census_[a], hulls_[a], hulls_[b], f, can_a);
          if (right != f) {
            pass = false;
            witness = "right identity law";
          }
        }
      }
    // Associativity h bullet (g bullet f) = (h bullet g) bullet f on sampled
    // quadruples of objects, up to three admissible morphisms per hom-set.
    for (size_t ia = 0; ia < semnd_.size() && pass; ia += 6)
      for (size_t ib = 0; ib < semnd_.size() && pass; ib += 6)
        for (size_t ic = 0; ic < semnd_.size() && pass; ic += 6)
          for (size_t id = 0; id < semnd_.size() && pass; id += 6) {
            int a = semnd_[ia], b = semnd_[ib], c = semnd_[ic], d = semnd_[id];
            auto admissible = [&](int src, int dst_idx) {
              FiniteSemigroup star{hulls_[dst_idx].size(), hulls_[dst_idx].star_table};
              std::vector<std::vector<int>> out;
              for (const auto& f : all_homs(census_[src], star)) {
                if (!is_translation_nondegenerate(f, hulls_[dst_idx]).nondegenerate) continue;
                out.push_back(f);
                if (out.size() == 3) break;
              }
              return out;
            };
            for (const auto& f : admissible(a, b))
              for (const auto& g : admissible(b, c))
                for (const auto& h : admissible(c, d)) {
                  std::vector<int> gf = bullet_compose(census_[a], hulls_[b], hulls_[c], g, f);
                  std::vector<int> hg = bullet_compose(census_[b], hulls_[c], hulls_[d], h, g);
                  std::vector<int> lhs =
                      bullet_compose(census_[a], hulls_[c], hulls_[d], h, gf);
                  std::vector<int> rhs =
                      bullet_compose(census_[a], hulls_[b], hulls_[d], hg, f);
                  if (lhs != rhs) {
                    pass = false;
                    witness = "associativity";
                  }
                }
          }
    add("bullet-category-laws", pass, witness);
  }

  void check_adjunction_sweep() {
    bool pass = true;
    std::string witness;
    long long pairs = 0;
    for (int mi : monoid_idx_)
      for (int si : semnd_) {
        FiniteMonoid m = make_monoid(census_[mi]);
        AdjunctionReport rep = check_adjunction(m, hulls_[si]);
        ++pairs;
        if (!rep.bijection) {
          pass = false;
          witness = "pair (" + std::to_string(mi) + "," + std::to_string(si) + ")";
        }
      }
    add("hull-adjunction-homset-bijection", pass && pairs > 0, witness);
  }

  void check_canonical_map_not_unit() {
    // A globally idempotent non-degenerate semigroup whose hull has outer
    // multipliers: its canonical map is translation non-degenerate yet fails
    // to be a non-degenerate map into the hull carrier.
    bool found = false;
    bool pass = true;
    std::string witness;
    for (int i : semnd_) {
      const TranslationalHull& h = hulls_[i];
      if (h.outer_count() == 0) continue;
      found = true;
      std::vector<int> can = canonical_indices(h);
      FiniteSemigroup star{h.size(), h.star_table};
      if (!is_translation_nondegenerate(can, h).nondegenerate ||
          is_nondegenerate_map(can, star).nondegenerate) {
        pass = false;
        witness = "census member " + std::to_string(i);
      }
    }
    add("canonical-map-not-a-unit-witness", pass && found,
        found ? witness : "no witness with outer multipliers found");
  }

  // ---- linear ----------------------------------------------------------------

  void check_linear_nullspace_oracle(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    long long covered = 0;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpAlgebra& a = fleet[i];
      if (a.field.p > 3 || a.dim > 2) continue;
      ++covered;
      MultiplierSpace s = multiplier_space(a);
      std::vector<LinearMultiplierPair> want = oracle::linear_multipliers(a);
      bool same = s.size() == static_cast<int>(want.size());
      for (int k = 0; same && k < s.size(); ++k) same = s.pairs[k] == want[k];
      if (!same) {
        pass = false;
        witness = "fleet algebra " + std::to_string(i);
      }
    }
    add("linear-multiplier-nullspace-oracle", pass && covered > 0,
        covered ? witness : "no fleet algebra with p<=3, dim<=2");
  }

  void check_linear_identity_closure(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpAlgebra& a = fleet[i];
      MultiplierSpace s = multiplier_space(a);
      if (s.identity_index < 0) pass = false;
      FiniteMonoid m = multiplier_monoid(a, s);
      std::vector<int> inner = inner_multiplier_indices(a, s);
      std::set<int> inner_set(inner.begin(), inner.end());
      for (int x : inner_set)
        for (int y : inner_set)
          if (!inner_set.count(m.at(x, y))) {
            pass = false;
            witness = "inner pairs not closed, fleet algebra " + std::to_string(i);
          }
    }
    add("linear-identity-pair-and-inner-closure", pass, witness);
  }

  void check_inner_multiplier_hom(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpAlgebra& a = fleet[i];
      const Fp& F = a.field;
      for (int x = 0; x < a.carrier_size(); ++x)
        for (int y = 0; y < a.carrier_size(); ++y) {
          FpVec vx = index_vec(F, x, a.dim), vy = index_vec(F, y, a.dim);
          LinearMultiplierPair mx = inner_multiplier(a, vx);
          LinearMultiplierPair my = inner_multiplier(a, vy);
          LinearMultiplierPair mxy = inner_multiplier(a, a.product(vx, vy));
          if (!(mxy.L == mat_mul(F, mx.L, my.L)) || !(mxy.R == mat_mul(F, my.R, mx.R))) {
            pass = false;
            witness = "fleet algebra " + std::to_string(i);
          }
        }
    }
    add("inner-multiplier-homomorphism", pass, witness);
  }

  void check_monoid_object_inner(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    long long unital = 0;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpAlgebra& a = fleet[i];
      if (!find_unit(a)) continue;
      ++unital;
      MultiplierSpace s = multiplier_space(a);
      std::vector<int> inner = inner_multiplier_indices(a, s);
      std::set<int> image(inner.begin(), inner.end());
      if (static_cast<int>(image.size()) != s.size() || s.size() != a.carrier_size()) {
        pass = false;
        witness = "fleet algebra " + std::to_string(i);
      }
    }
    add("monoid-object-multipliers-all-inner", pass && unital > 0,
        unital ? witness : "no unital fleet algebra");
  }

  void check_convolution_valid(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      try {
        FiniteSemigroup conv = convolution_semigroup(fleet[i]);
        if (conv.n <= 300) validate_semigroup(conv.n, conv.tab);
      } catch (const std::exception& e) {
        pass = false;
        witness = "fleet algebra " + std::to_string(i) + ": " + e.what();
      }
    }
    add("convolution-semigroup-valid", pass, witness);
  }

  void check_concreteness(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    bool saw_gf2_zero = false, saw_gf3_zero = false;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpAlgebra& a = fleet[i];
      MultiplierSpace s = multiplier_space(a);
      TranslationalHull h = hull(convolution_semigroup(a));
      ConcretizationResult c = concretization(a, s, h);
      bool zero_tensor =
          std::all_of(a.mul.begin(), a.mul.end(), [](int v) { return v == 0; });
      if (a.field.p == 2 && a.dim == 1 && zero_tensor) {
        saw_gf2_zero = true;
        if (!(s.size() == 4 && h.size() == 4 && c.injective && c.surjective)) {
          pass = false;
          witness = "zero algebra over GF(2): expected a 4-to-4 bijection";
        }
      }
      if (a.field.p == 3 && a.dim == 1 && zero_tensor) {
        saw_gf3_zero = true;
        if (!(s.size() == 9 && h.size() == 81 && c.injective && !c.surjective)) {
          pass = false;
          witness = "zero algebra over GF(3): expected 9 into 81, not onto";
        }
      }
      if (find_unit(a) && !c.concrete()) {
        pass = false;
        witness = "unital fleet algebra " + std::to_string(i) + " not concrete";
      }
      // The hom functor out of the unit is faithful here, so concretization
      // embeds the multiplier monoid for every fleet algebra.
      if (!c.injective) {
        pass = false;
        witness = "concretization not injective, fleet algebra " + std::to_string(i);
      }
    }
    add("concreteness-census", pass && saw_gf2_zero && saw_gf3_zero,
        pass ? "fleet lacks the pinned zero algebras" : witness);
  }

  void check_faithful_concrete(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    long long faithful = 0;
    for (size_t i = 0; i < fleet.size(); ++i) {
      if (!is_faithful(fleet[i])) continue;
      ++faithful;
      if (!is_concrete(fleet[i])) {
        pass = false;
        witness = "fleet algebra " + std::to_string(i);
      }
    }
    add("faithful-implies-concrete", pass && faithful > 0,
        faithful ? witness : "no faithful fleet algebra");
  }

  void check_commutative_diagonal_linear(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpAlgebra& a = fleet[i];
      if (!is_algebra_commutative(a) || !is_multiplication_surjective(a)) continue;
      MultiplierSpace s = multiplier_space(a);
      for (const auto& m : s.pairs)
        if (!(m.L == m.R)) {
          pass = false;
          witness = "fleet algebra " + std::to_string(i);
        }
    }
    add("commutative-epi-diagonal-linear", pass, witness);
  }

  void check_canonical_identities_linear(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      CanonicalMapReport rep = canonical_map_injectivity(fleet[i]);
      if (!rep.composition_identities ||
          (rep.conv_nondegenerate && !rep.canonical_injective)) {
        pass = false;
        witness = "fleet algebra " + std::to_string(i);
      }
    }
    add("canonical-map-composition-identities", pass, witness);
  }

  void check_dual_route(const std::vector<FpCoalgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      try {
        MultiplierSpace co = comultiplier_space(fleet[i]);  // cross-checks internally
        MultiplierSpace mu = multiplier_space(dual_algebra(fleet[i]));
        if (co.size() != mu.size()) pass = false;
        for (int k = 0; k < co.size(); ++k)
          if (mu.find({co.pairs[k].L.transpose(), co.pairs[k].R.transpose()}) < 0) pass = false;
        if (!pass) witness = "fleet coalgebra " + std::to_string(i);
      } catch (const std::exception& e) {
        pass = false;
        witness = std::string("exception: ") + e.what();
      }
    }
    add("comultiplier-dual-route-agreement", pass, witness);
  }

  void check_duality_tables(const std::vector<FpCoalgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpCoalgebra& c = fleet[i];
      MultiplierSpace co = comultiplier_space(c);
      FpAlgebra da = dual_algebra(c);
      MultiplierSpace mu = multiplier_space(da);
      FiniteMonoid com = comultiplier_monoid(c, co);
      FiniteMonoid mum = multiplier_monoid(da, mu);
      std::vector<int> t(co.size());
      for (int k = 0; k < co.size(); ++k) {
        t[k] = mu.find({co.pairs[k].L.transpose(), co.pairs[k].R.transpose()});
        if (t[k] < 0) pass = false;
      }
      for (int a = 0; a < co.size() && pass; ++a)
        for (int b = 0; b < co.size(); ++b)
          if (t[com.at(a, b)] != mum.at(t[a], t[b])) {
            pass = false;
            break;
          }
      if (pass && t[com.e] != mum.e) pass = false;
      if (pass && !(dual_convolution(c).tab == convolution_semigroup(da).tab)) pass = false;
      if (!pass) {
        witness = "fleet coalgebra " + std::to_string(i);
        break;
      }
    }
    add("duality-transpose-table-exact", pass, witness);
  }

  void check_inner_comultiplier_hom(const std::vector<FpCoalgebra>& fleet) {
    bool pass = true;
    std::string witness;
    for (size_t i = 0; i < fleet.size(); ++i) {
      const FpCoalgebra& c = fleet[i];
      const Fp& F = c.field;
      FiniteSemigroup conv = dual_convolution(c);
      for (int x = 0; x < conv.n; ++x)
        for (int y = 0; y < conv.n; ++y) {
          ComultiplierPair mx = inner_comultiplier(c, index_vec(F, x, c.dim));
          ComultiplierPair my = inner_comultiplier(c, index_vec(F, y, c.dim));
          ComultiplierPair mxy = inner_comultiplier(c, index_vec(F, conv.at(x, y), c.dim));
          if (!(mxy.L == mat_mul(F, my.L, mx.L)) || !(mxy.R == mat_mul(F, mx.R, my.R))) {
            pass = false;
            witness = "fleet coalgebra " + std::to_string(i);
          }
        }
      // Injectivity lemma on the dual convolution.
      if (degeneracy_report(conv).nondegenerate()) {
        MultiplierSpace co = comultiplier_space(c);
        std::vector<int> idx = inner_comultiplier_indices(c, co);
        std::set<int> distinct(idx.begin(), idx.end());
        if (distinct.size() != idx.size()) {
          pass = false;
          witness = "fleet coalgebra " + std::to_string(i) + ": canonical map not injective";
        }
      }
    }
    add("inner-comultiplier-homomorphism", pass, witness);
  }

  void check_multiplier_extension_sweep(const std::vector<FpAlgebra>& fleet) {
    bool pass = true;
    std::string witness;
    long long instances = 0;
    std::vector<AlgebraContext> sources;
    for (const FpAlgebra& a : fleet)
      if (a.field.p == 2 && a.dim <= 2) sources.push_back(make_context(a));
    ExtensionOptions opt;
    opt.uniqueness_bound = opt_.uniqueness_bound;
    for (const AlgebraContext& a : sources)
      for (const AlgebraContext& b : sources) {
        if (!degeneracy_report(b.conv).nondegenerate() || !b.conc.concrete()) continue;
        for (const auto& f : all_homs(a.conv, b.mult_monoid.sg)) {
          if (!is_multiplier_nondegenerate(a, b, f)) continue;
          ++instances;
          try {
            MultiplierExtensionResult r = extend_multiplier(a, b, f, opt);
            if (!r.all_verified()) {
              pass = false;
              witness = "fleet pair";
            }
          } catch (const std::exception& e) {
            pass = false;
            witness = std::string("exception: ") + e.what();
          }
        }
      }
    add("multiplier-extension-existence-uniqueness", pass && instances > 0,
        instances ? witness : "no admissible instances");
  }
};

inline std::vector<CheckItem> run_set_checks(const CheckOptions& opt) {
  CheckRunner r(opt);
  r.run_set_checks();
  return r.items;
}

inline std::vector<CheckItem> run_linear_checks(const std::vector<AlgFile>& fleet,
                                                const CheckOptions& opt) {
  CheckRunner r(opt);
  r.run_linear_checks(fleet);
  return r.items;
}

}  // namespace transhull
