// Acceptance suite: end-to-end verification of the library's headline
// guarantees, one line per criterion.  Each criterion recomputes its expected
// values through an independent oracle (naive enumeration or brute-force
// matrix filters) before trusting the optimized paths.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "transhull/census.hpp"
#include "transhull/checks.hpp"
#include "transhull/extension.hpp"
#include "transhull/io.hpp"
#include "transhull/multiplier_extension.hpp"

using namespace transhull;

namespace {

int g_failures = 0;
int g_index = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& what, bool pass, const std::string& detail = "") {
  ++g_index;
  if (!pass) ++g_failures;
  std::printf("[%2d/12] %s: %s%s%s\n", g_index, pass ? "PASS" : "FAIL", what.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

std::vector<FiniteSemigroup> census_upto3() {
  std::vector<FiniteSemigroup> out;
  for (int n = 1; n <= 3; ++n)
    enumerate_semigroups(n, false, [&](const FiniteSemigroup& s) {
      out.push_back(s);
      return true;
    });
  return out;
}

std::vector<AlgFile> load_fleet() {
  namespace fs = std::filesystem;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(TRANSHULL_DATA_DIR))
    if (entry.path().extension() == ".alg") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<AlgFile> fleet;
  for (const auto& p : paths) fleet.push_back(parse_alg(read_file(p.string())));
  return fleet;
}

// 1. Backtracking hull equals the naive brute-force hull on every labeled
//    semigroup of order <= 3, within 60 seconds total.
void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  long long checked = 0, order3 = 0;
  bool pass = true;
  for (const FiniteSemigroup& s : census_upto3()) {
    auto fast = multipliers(s);
    auto slow = oracle::multipliers(s);
    std::sort(slow.begin(), slow.end());
    if (fast.size() != slow.size()) pass = false;
    for (size_t i = 0; pass && i < fast.size(); ++i)
      if (!(fast[i].L == slow[i].first) || !(fast[i].R == slow[i].second)) pass = false;
    ++checked;
    order3 += s.n == 3;
  }
  double dt = seconds_since(t0);
  pass = pass && checked == 122 && order3 == 113 && dt < 60.0;
  char detail[128];
  std::snprintf(detail, sizeof(detail), "%lld semigroups (%lld of order 3), %.2fs", checked,
                order3, dt);
  report("hull agrees with the brute-force oracle on all orders <= 3", pass, detail);
}

// 2. Every monoid of order <= 4 is isomorphic to its hull via the canonical map.
void criterion_2() {
  bool pass = true;
  long long monoids = 0;
  auto verify = [&](const FiniteSemigroup& s) {
    if (!find_identity(s)) return;
    ++monoids;
    TranslationalHull h = hull(s);
    if (h.size() != s.n) {
      pass = false;
      return;
    }
    std::vector<int> can = canonical_indices(h);
    std::set<int> image(can.begin(), can.end());
    if (static_cast<int>(image.size()) != s.n) pass = false;
    for (int x = 0; x < s.n && pass; ++x)
      for (int y = 0; y < s.n; ++y)
        if (h.star_at(can[x], can[y]) != can[s.at(x, y)]) pass = false;
    if (can[*find_identity(s)] != h.identity_index) pass = false;
  };
  for (int n = 1; n <= 4; ++n)
    enumerate_semigroups(n, false, [&](const FiniteSemigroup& s) {
      verify(s);
      return true;
    });
  report("canonical map is a monoid isomorphism for every monoid of order <= 4",
         pass && monoids > 600, std::to_string(monoids) + " monoids");
}

// 3. Hull star tables are associative and unital, and the canonical map is a
//    star-homomorphism, on the full order <= 3 census.
void criterion_3() {
  bool pass = true;
  for (const FiniteSemigroup& s : census_upto3()) {
    TranslationalHull h = hull(s);
    try {
      validate_semigroup(h.size(), h.star_table);
    } catch (const ValidationError&) {
      pass = false;
    }
    for (int i = 0; i < h.size(); ++i)
      if (h.star_at(h.identity_index, i) != i || h.star_at(i, h.identity_index) != i) pass = false;
    std::vector<int> can = canonical_indices(h);
    for (int x = 0; x < s.n && pass; ++x)
      for (int y = 0; y < s.n; ++y)
        if (h.star_at(can[x], can[y]) != can[s.at(x, y)]) pass = false;
    if (!pass) break;
  }
  report("hull monoid laws and canonical star-homomorphism on the full census", pass);
}

// 4. Commutative globally idempotent members have diagonal hulls isomorphic
//    to the translation composition monoid; order 4 sampled every 25.
void criterion_4() {
  bool pass = true;
  long long covered = 0;
  auto verify = [&](const FiniteSemigroup& s) {
    if (!is_commutative(s) || !degeneracy_report(s).globally_idempotent) return;
    ++covered;
    TranslationalHull h = hull(s);
    std::vector<SelfMap> lt = left_translations(s);
    if (h.size() != static_cast<int>(lt.size())) {
      pass = false;
      return;
    }
    for (int i = 0; i < h.size() && pass; ++i) {
      if (!(h.elements[i].L == h.elements[i].R) || !(h.elements[i].L == lt[i])) pass = false;
      for (int j = 0; j < h.size(); ++j)
        if (!(h.elements[h.star_at(i, j)].L == compose(h.elements[i].L, h.elements[j].L)))
          pass = false;
    }
  };
  for (const FiniteSemigroup& s : census_upto3()) verify(s);
  long long index = 0;
  enumerate_semigroups(4, false, [&](const FiniteSemigroup& s) {
    if (in_sample(index++, 25, 0)) verify(s);
    return true;
  });
  report("commutative globally idempotent semigroups have diagonal hulls", pass && covered > 50,
         std::to_string(covered) + " instances");
}

// 5. Sharp extension: existence, restriction, decomposition independence and
//    exhaustive uniqueness on every admissible (S, T, f) of order <= 3,
//    within 5 minutes.
void criterion_5() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  long long instances = 0, searched = 0;
  std::vector<FiniteSemigroup> census = census_upto3();
  std::vector<TranslationalHull> hulls;
  hulls.reserve(census.size());
  for (const auto& s : census) hulls.push_back(hull(s));
  for (size_t ti = 0; ti < census.size() && pass; ++ti) {
    if (!degeneracy_report(census[ti]).nondegenerate()) continue;
    FiniteSemigroup star{hulls[ti].size(), hulls[ti].star_table};
    for (size_t si = 0; si < census.size() && pass; ++si)
      for (const auto& f : all_homs(census[si], star)) {
        if (!is_translation_nondegenerate(f, hulls[ti]).nondegenerate) continue;
        ++instances;
        try {
          ExtensionResult r = extend_sharp(hulls[si], hulls[ti], f);
          if (!r.all_verified()) pass = false;
          searched += r.uniqueness_searched ? 1 : 0;
        } catch (const std::exception&) {
          pass = false;
        }
      }
  }
  double dt = seconds_since(t0);
  pass = pass && instances > 9000 && dt < 300.0;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "%lld admissible instances, %lld uniqueness searches, %.2fs", instances,
                searched, dt);
  report("sharp extension exists uniquely on all admissible order <= 3 inputs", pass, detail);
}

// 6. The hom-set bijection behind the hull adjunction, exhaustively for all
//    monoids and objects of order <= 3.
void criterion_6() {
  bool pass = true;
  long long pairs = 0;
  std::vector<FiniteMonoid> monoids;
  std::vector<FiniteSemigroup> objects;
  for (const FiniteSemigroup& s : census_upto3()) {
    if (find_identity(s)) monoids.push_back(make_monoid(s));
    DegeneracyReport d = degeneracy_report(s);
    if (d.globally_idempotent && d.nondegenerate()) objects.push_back(s);
  }
  for (const auto& m : monoids)
    for (const auto& s : objects) {
      AdjunctionReport rep = check_adjunction(m, hull(s));
      ++pairs;
      if (!rep.bijection) pass = false;
    }
  report("adjunction hom-set bijection verified exhaustively at order <= 3",
         pass && pairs == static_cast<long long>(monoids.size() * objects.size()),
         std::to_string(pairs) + " (M,S) pairs");
}

// 7. Nullspace multiplier spaces equal brute force over all matrix pairs for
//    p = 2, d <= 2.
void criterion_7(const std::vector<AlgFile>& fleet) {
  bool pass = true;
  long long covered = 0;
  for (const AlgFile& f : fleet) {
    if (!f.algebra) continue;
    const FpAlgebra& a = *f.algebra;
    if (a.field.p != 2 || a.dim > 2) continue;
    ++covered;
    MultiplierSpace s = multiplier_space(a);
    std::vector<LinearMultiplierPair> want = oracle::linear_multipliers(a);
    if (s.size() != static_cast<int>(want.size())) pass = false;
    for (int i = 0; pass && i < s.size(); ++i)
      if (!(s.pairs[i] == want[i])) pass = false;
  }
  report("nullspace multiplier spaces equal brute force for p=2, d<=2", pass && covered >= 5,
         std::to_string(covered) + " algebras");
}

// 8. Concreteness: the pinned zero-algebra counts and every unital algebra.
void criterion_8(const std::vector<AlgFile>& fleet) {
  bool pass = true, saw2 = false, saw3 = false;
  long long unital = 0;
  for (const AlgFile& f : fleet) {
    if (!f.algebra) continue;
    const FpAlgebra& a = *f.algebra;
    MultiplierSpace s = multiplier_space(a);
    TranslationalHull h = hull(convolution_semigroup(a));
    ConcretizationResult c = concretization(a, s, h);
    bool zero = std::all_of(a.mul.begin(), a.mul.end(), [](int v) { return v == 0; });
    if (zero && a.field.p == 2 && a.dim == 1) {
      saw2 = true;
      if (!(s.size() == 4 && h.size() == 4 && c.injective && c.surjective)) pass = false;
    }
    if (zero && a.field.p == 3 && a.dim == 1) {
      saw3 = true;
      if (!(s.size() == 9 && h.size() == 81 && c.injective && !c.surjective)) pass = false;
    }
    if (find_unit(a)) {
      ++unital;
      if (!c.concrete()) pass = false;
    }
  }
  report("concreteness: GF(2) zero 4<->4, GF(3) zero 9 into 81, unital all concrete",
         pass && saw2 && saw3 && unital >= 4, std::to_string(unital) + " unital algebras");
}

// 9. Duality bridge, table-exact: transposition maps each fleet coalgebra's
//    comultiplier monoid onto the multiplier monoid of its dual algebra.
//    With the reversed comultiplier composition this correspondence preserves
//    products (an anti-isomorphism onto the opposite monoid).
void criterion_9(const std::vector<AlgFile>& fleet) {
  bool pass = true;
  long long covered = 0;
  for (const AlgFile& f : fleet) {
    if (!f.coalgebra) continue;
    ++covered;
    const FpCoalgebra& c = *f.coalgebra;
    MultiplierSpace co = comultiplier_space(c);
    FpAlgebra da = dual_algebra(c);
    MultiplierSpace mu = multiplier_space(da);
    if (co.size() != mu.size()) {
      pass = false;
      continue;
    }
    FiniteMonoid com = comultiplier_monoid(c, co);
    FiniteMonoid mum = multiplier_monoid(da, mu);
    std::vector<int> t(co.size());
    for (int i = 0; i < co.size(); ++i) {
      t[i] = mu.find({co.pairs[i].L.transpose(), co.pairs[i].R.transpose()});
      if (t[i] < 0) pass = false;
    }
    std::set<int> bij(t.begin(), t.end());
    if (static_cast<int>(bij.size()) != co.size()) pass = false;
    for (int i = 0; i < co.size() && pass; ++i)
      for (int j = 0; j < co.size(); ++j)
        if (t[com.at(i, j)] != mum.at(t[i], t[j])) pass = false;
    if (t[com.e] != mum.e) pass = false;
    if (!(dual_convolution(c).tab == convolution_semigroup(da).tab)) pass = false;
  }
  report("transpose duality with the dual algebra is table-exact on the fleet",
         pass && covered >= 5, std::to_string(covered) + " coalgebras");
}

// 10. Census counts against the naive filter, and the order-4 count through
//     two independent cell orders.
void criterion_10() {
  bool pass = true;
  const long long expected[] = {1, 1, 8, 113};
  for (int n = 1; n <= 3; ++n) {
    long long got = 0;
    enumerate_semigroups(n, false, [&](const FiniteSemigroup&) {
      ++got;
      return true;
    });
    if (got != expected[n] || got != oracle::count_semigroups(n)) pass = false;
  }
  long long rm = 0;
  enumerate_semigroups(4, false, [&](const FiniteSemigroup&) {
    ++rm;
    return true;
  });
  long long cm = count_semigroups_column_order(4);
  pass = pass && rm == cm;
  report("census counts 1, 8, 113 match the oracle; order-4 counts agree across cell orders",
         pass, "order 4: " + std::to_string(rm) + " both ways");
}

// 11. Multiplier extension for p=2, d<=2: existence, uniqueness where
//     searched, and the concretization naturality square.
void criterion_11(const std::vector<AlgFile>& fleet) {
  bool pass = true;
  long long instances = 0;
  std::vector<AlgebraContext> sources;
  for (const AlgFile& f : fleet)
    if (f.algebra && f.algebra->field.p == 2 && f.algebra->dim <= 2)
      sources.push_back(make_context(*f.algebra));
  for (const AlgebraContext& a : sources)
    for (const AlgebraContext& b : sources) {
      if (!degeneracy_report(b.conv).nondegenerate() || !b.conc.concrete()) continue;
      for (const auto& f : all_homs(a.conv, b.mult_monoid.sg)) {
        if (!is_multiplier_nondegenerate(a, b, f)) continue;
        ++instances;
        try {
          MultiplierExtensionResult r = extend_multiplier(a, b, f);
          if (!r.all_verified()) pass = false;
        } catch (const std::exception&) {
          pass = false;
        }
      }
    }
  report("multiplier extension with naturality square for p=2, d<=2", pass && instances >= 6,
         std::to_string(instances) + " admissible instances");
}

// 12. The CLI verification command exits 0 on the shipped fleet in under ten
//     minutes.
void criterion_12() {
  auto t0 = std::chrono::steady_clock::now();
  std::string cmd = std::string(TRANSHULL_CLI_PATH) + " check --scope all --fleet " +
                    TRANSHULL_DATA_DIR + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  double dt = seconds_since(t0);
  char detail[96];
  std::snprintf(detail, sizeof(detail), "exit %d, %.2fs", code, dt);
  report("full verification command exits 0 within the time budget",
         code == 0 && dt < 600.0, detail);
}

}  // namespace

int main() {
  std::vector<AlgFile> fleet = load_fleet();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7(fleet);
  criterion_8(fleet);
  criterion_9(fleet);
  criterion_10();
  criterion_11(fleet);
  criterion_12();
  std::printf("%d/12 criteria passed\n", 12 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
