#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "transhull/census.hpp"
#include "transhull/hull.hpp"

using namespace transhull;

namespace {

FiniteSemigroup sg(std::vector<std::vector<int>> rows) {
  return validate_semigroup(static_cast<int>(rows.size()), rows);
}

const FiniteSemigroup kTrivial = sg({{0}});
const FiniteSemigroup kLeftZero2 = sg({{0, 0}, {1, 1}});
const FiniteSemigroup kNull2 = sg({{0, 0}, {0, 0}});
const FiniteSemigroup kZ2 = sg({{0, 1}, {1, 0}});
// {0,a,b} with a^b = 0: indices 0,1,2.
const FiniteSemigroup kVee = sg({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});

// Naive oracle: filter all n^n self-maps by the stated law.
std::vector<SelfMap> naive_maps(const FiniteSemigroup& s,
                                bool (*law)(const FiniteSemigroup&, const SelfMap&)) {
  std::vector<SelfMap> out;
  int total = 1;
  for (int i = 0; i < s.n; ++i) total *= s.n;
  for (int code = 0; code < total; ++code) {
    std::vector<int> img(s.n);
    int c = code;
    for (int i = s.n - 1; i >= 0; --i) {
      img[i] = c % s.n;
      c /= s.n;
    }
    SelfMap m{img};
    if (law(s, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Naive oracle: all pairs of self-maps satisfying the three multiplier laws.
std::vector<std::pair<SelfMap, SelfMap>> naive_multipliers(const FiniteSemigroup& s) {
  auto ls = naive_maps(s, is_left_translation);
  auto rs = naive_maps(s, is_right_translation);
  std::vector<std::pair<SelfMap, SelfMap>> out;
  for (const auto& l : ls)
    for (const auto& r : rs)
      if (is_linked_pair(s, l, r)) out.push_back({l, r});
  return out;
}

}  // namespace

TEST_CASE("left translations of left-zero: all 4 maps") {
  auto got = left_translations(kLeftZero2);
  CHECK(got.size() == 4);
  CHECK(got == naive_maps(kLeftZero2, is_left_translation));
}

TEST_CASE("right translations of left-zero: only the identity") {
  auto got = right_translations(kLeftZero2);
  REQUIRE(got.size() == 1);
  CHECK(got[0].is_identity());
}

TEST_CASE("translations of Z/2: identity and swap") {
  auto l = left_translations(kZ2);
  REQUIRE(l.size() == 2);
  CHECK(l[0].img == std::vector<int>{0, 1});
  CHECK(l[1].img == std::vector<int>{1, 0});
  CHECK(right_translations(kZ2) == l);
}

TEST_CASE("null semigroup: the two maps fixing 0") {
  auto l = left_translations(kNull2);
  REQUIRE(l.size() == 2);
  CHECK(l[0].img == std::vector<int>{0, 0});
  CHECK(l[1].img == std::vector<int>{0, 1});
}

TEST_CASE("translation enumeration matches the naive filter on the whole census, n <= 3")
{
  for (int n = 0; n <= 3; ++n) {
    enumerate_semigroups(n, false, [&](const FiniteSemigroup& s) {
      CHECK(left_translations(s) == naive_maps(s, is_left_translation));
      CHECK(right_translations(s) == naive_maps(s, is_right_translation));
      // Mirror law: right translations are the left translations of the opposite.
      CHECK(right_translations(s) == left_translations(opposite(s)));
      return true;
    });
  }
}

TEST_CASE("multipliers of left-zero: 4 pairs (L, id), 2 inner") {
  auto ms = multipliers(kLeftZero2);
  REQUIRE(ms.size() == 4);
  int inner = 0;
  for (const auto& m : ms) {
    CHECK(m.R.is_identity());
    inner += m.inner() ? 1 : 0;
  }
  CHECK(inner == 2);
}

TEST_CASE("multipliers of the null semigroup: 4 pairs, exactly one inner") {
  auto ms = multipliers(kNull2);
  REQUIRE(ms.size() == 4);
  int inner = 0;
  for (const auto& m : ms) {
    CHECK(m.L(0) == 0);
    CHECK(m.R(0) == 0);
    if (m.inner()) {
      ++inner;
      CHECK(m.L.img == std::vector<int>{0, 0});
      CHECK(m.R.img == std::vector<int>{0, 0});
      CHECK(m.inner_witnesses == std::vector<int>{0, 1});
    }
  }
  CHECK(inner == 1);
}

TEST_CASE("multipliers of the V-semilattice: 4 diagonal pairs, identity outer") {
  auto ms = multipliers(kVee);
  REQUIRE(ms.size() == 4);
  int inner = 0;
  for (const auto& m : ms) {
    CHECK(m.L == m.R);
    inner += m.inner() ? 1 : 0;
    if (m.L.is_identity()) CHECK(!m.inner());
  }
  CHECK(inner == 3);

  // Brute force over all 27 x 27 map pairs.
  auto oracle = naive_multipliers(kVee);
  REQUIRE(oracle.size() == 4);
  for (size_t i = 0; i < oracle.size(); ++i) {
    CHECK(ms[i].L == oracle[i].first);
    CHECK(ms[i].R == oracle[i].second);
  }
}

TEST_CASE("pullback join equals the brute-force filter on the census, n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    enumerate_semigroups(n, false, [&](const FiniteSemigroup& s) {
      auto got = multipliers(s);
      auto want = naive_multipliers(s);
      REQUIRE(got.size() == want.size());
      for (size_t i = 0; i < want.size(); ++i) {
        CHECK(got[i].L == want[i].first);
        CHECK(got[i].R == want[i].second);
      }
      return true;
    });
  }
}

TEST_CASE("hull of the trivial semigroup is the trivial monoid") {
  TranslationalHull h = hull(kTrivial);
  CHECK(h.size() == 1);
  CHECK(h.identity_index == 0);
}

TEST_CASE("hull of the empty semigroup is the one-element monoid on the empty pair") {
  TranslationalHull h = hull(validate_semigroup(0, std::vector<int>{}));
  CHECK(h.size() == 1);
  CHECK(h.elements[0].L.img.empty());
  CHECK(h.star_table == std::vector<int>{0});
}

TEST_CASE("hull of left-zero is the full transformation monoid on 2 points") {
  TranslationalHull h = hull(kLeftZero2);
  REQUIRE(h.size() == 4);
  // Star table must match composition of the L parts.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      SelfMap expect = compose(h.elements[i].L, h.elements[j].L);
      CHECK(h.elements[h.star_at(i, j)].L == expect);
    }
  // Brute-force comparison against T_2 built directly from all self-maps.
  std::vector<SelfMap> t2 = {SelfMap{{0, 0}}, SelfMap{{0, 1}}, SelfMap{{1, 0}}, SelfMap{{1, 1}}};
  for (int i = 0; i < 4; ++i) CHECK(h.elements[i].L == t2[i]);
}

TEST_CASE("monoids of order <= 3 are isomorphic to their hulls via the canonical map") {
  for (int n = 1; n <= 3; ++n) {
    enumerate_semigroups(n, false, [&](const FiniteSemigroup& s) {
      auto e = find_identity(s);
      if (!e) return true;
      TranslationalHull h = hull(s);
      REQUIRE(h.size() == s.n);
      // Canonical map is a bijection matching products.
      std::vector<int> image(s.n);
      std::set<int> distinct;
      for (int x = 0; x < s.n; ++x) {
        int ix = h.find(inner_left_translation(s, x), inner_right_translation(s, x));
        REQUIRE(ix >= 0);
        image[x] = ix;
        distinct.insert(ix);
      }
      CHECK(static_cast<int>(distinct.size()) == s.n);
      CHECK(image[*e] == h.identity_index);
      for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
          CHECK(image[s.at(x, y)] == h.star_at(image[x], image[y]));
      return true;
    });
  }
}

TEST_CASE("hull star tables are associative and unital across the order-3 census") {
  enumerate_semigroups(3, false, [&](const FiniteSemigroup& s) {
    TranslationalHull h = hull(s);
    CHECK_NOTHROW(validate_semigroup(h.size(), h.star_table));
    for (int i = 0; i < h.size(); ++i) {
      CHECK(h.star_at(h.identity_index, i) == i);
      CHECK(h.star_at(i, h.identity_index) == i);
    }
    return true;
  });
}

TEST_CASE("inner multipliers form a sub-semigroup (order <= 3 census)") {
  enumerate_semigroups(3, false, [&](const FiniteSemigroup& s) {
    TranslationalHull h = hull(s);
    for (int i = 0; i < h.size(); ++i)
      for (int j = 0; j < h.size(); ++j)
        if (h.elements[i].inner() && h.elements[j].inner())
          CHECK(h.elements[h.star_at(i, j)].inner());
    return true;
  });
}

TEST_CASE("swap is a star-reversing bijection onto the opposite hull (order <= 3)") {
  enumerate_semigroups(3, false, [&](const FiniteSemigroup& s) {
    TranslationalHull h = hull(s);
    TranslationalHull ho = hull(opposite(s));
    REQUIRE(h.size() == ho.size());
    std::vector<int> swap_idx(h.size());
    for (int i = 0; i < h.size(); ++i) {
      int j = ho.find(h.elements[i].R, h.elements[i].L);
      REQUIRE(j >= 0);
      swap_idx[i] = j;
    }
    for (int i = 0; i < h.size(); ++i)
      for (int j = 0; j < h.size(); ++j)
        CHECK(swap_idx[h.star_at(i, j)] == ho.star_at(swap_idx[j], swap_idx[i]));
    return true;
  });
}

TEST_CASE("commutative globally idempotent semigroups have diagonal hulls (order <= 3)") {
  enumerate_semigroups(3, false, [&](const FiniteSemigroup& s) {
    if (!is_commutative(s)) return true;
    std::vector<bool> hit(s.n, false);
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y) hit[s.at(x, y)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return true;

    TranslationalHull h = hull(s);
    auto lt = left_translations(s);
    REQUIRE(h.size() == static_cast<int>(lt.size()));
    for (int i = 0; i < h.size(); ++i) {
      CHECK(h.elements[i].L == h.elements[i].R);
      CHECK(h.elements[i].L == lt[i]);
    }
    // (L,L) -> L is a monoid isomorphism onto the composition monoid.
    for (int i = 0; i < h.size(); ++i)
      for (int j = 0; j < h.size(); ++j) {
        SelfMap c = compose(h.elements[i].L, h.elements[j].L);
        CHECK(h.elements[h.star_at(i, j)].L == c);
      }
    return true;
  });
}

TEST_CASE("push_forward: identity, conjugation, composition") {
  TranslationalHull h = hull(kVee);
  SelfMap id3 = SelfMap::identity(3);
  for (const Multiplier& m : h.elements) {
    Multiplier same = push_forward(kVee, m, id3);
    CHECK(same.L == m.L);
    CHECK(same.R == m.R);
    CHECK(same.inner_witnesses == m.inner_witnesses);
  }

  SelfMap sigma{{0, 2, 1}};  // swap the two atoms
  for (const Multiplier& m : h.elements) {
    Multiplier moved = push_forward(kVee, m, sigma);
    SelfMap inv = inverse_of_permutation(sigma);
    CHECK(moved.L == compose(sigma, compose(m.L, inv)));
    CHECK(is_multiplier(relabel(kVee, sigma), moved.L, moved.R));
  }

  // Composite of two bijections equals the composite push-forward.
  SelfMap tau{{1, 0, 2}};
  FiniteSemigroup mid = relabel(kVee, sigma);
  for (const Multiplier& m : h.elements) {
    Multiplier once = push_forward(mid, push_forward(kVee, m, sigma), tau);
    Multiplier direct = push_forward(kVee, m, compose(tau, sigma));
    CHECK(once.L == direct.L);
    CHECK(once.R == direct.R);
  }

  CHECK_THROWS_AS(push_forward(kVee, h.elements[0], SelfMap{{0, 0, 1}}), ValidationError);
}
