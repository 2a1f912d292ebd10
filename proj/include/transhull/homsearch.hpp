#pragma once

#include <algorithm>
#include <functional>
#include <utility>
#include <vector>

#include "transhull/errors.hpp"
#include "transhull/semigroup.hpp"

namespace transhull {

// Exhaustive enumeration of maps f: src -> dst with f(x*y) = f(x)*f(y),
// optionally with some images fixed in advance.
//
// Positions are visited in a generated-first order: once the images of x and
// y are known the image of x*y is forced, so only elements that are not
// products of earlier ones branch.  This keeps the search shallow on the
// composition-table monoids the extension theorems produce.
class HomSearch {
 public:
  HomSearch(const FiniteSemigroup& src, const FiniteSemigroup& dst)
      : src_(src), dst_(dst) {}

  // fixed[i] = -1 for a free image.  visit returns false to stop the search.
  // Returns the number of homomorphisms found (up to early stop).
  long long run(const std::vector<int>& fixed,
                const std::function<bool(const std::vector<int>&)>& visit,
                long long node_budget = 50'000'000) const {
    if (fixed.size() != static_cast<size_t>(src_.n))
      throw ValidationError("fixed-image list has wrong length");
    if (src_.n == 0) {
      std::vector<int> empty;
      visit(empty);
      return 1;
    }
    if (dst_.n == 0) return 0;  // no maps into the empty semigroup

    build_order(fixed);
    img_.assign(src_.n, -1);
    count_ = 0;
    budget_ = node_budget;
    stop_ = false;
    dfs(0, fixed, visit);
    return count_;
  }

  long long count(const std::vector<int>& fixed) const {
    return run(fixed, [](const std::vector<int>&) { return true; });
  }

 private:
  // order_[k] = element filled at depth k; forced_by_[k] = (x,y) with
  // x*y = order_[k] and x,y earlier in the order, or (-1,-1) if branching.
  void build_order(const std::vector<int>& fixed) const {
    int n = src_.n;
    order_.clear();
    forced_by_.clear();
    constraints_.assign(n, {});
    std::vector<int> rank(n, -1);
    auto place = [&](int e, int fx, int fy) {
      rank[e] = static_cast<int>(order_.size());
      order_.push_back(e);
      forced_by_.push_back({fx, fy});
    };
    for (int e = 0; e < n; ++e)
      if (fixed[e] >= 0) place(e, -1, -1);
    while (static_cast<int>(order_.size()) < n) {
      int pick = -1, px = -1, py = -1;
      for (int x = 0; x < n && pick < 0; ++x) {
        if (rank[x] < 0) continue;
        for (int y = 0; y < n; ++y) {
          if (rank[y] < 0) continue;
          int xy = src_.at(x, y);
          if (rank[xy] < 0) {
            pick = xy;
            px = x;
            py = y;
            break;
          }
        }
      }
      if (pick >= 0) {
        place(pick, px, py);
      } else {
        for (int e = 0; e < n; ++e)
          if (rank[e] < 0) {
            place(e, -1, -1);
            break;
          }
      }
    }
    // constraints_[k]: product equations fully determined exactly at depth k.
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = src_.at(x, y);
        int depth = std::max(rank[x], std::max(rank[y], rank[xy]));
        constraints_[depth].push_back({x, y, xy});
      }
  }

  struct Triple {
    int x, y, xy;
  };

  bool consistent_at(int depth) const {
    for (const Triple& t : constraints_[depth])
      if (img_[t.xy] != dst_.at(img_[t.x], img_[t.y])) return false;
    return true;
  }

  void dfs(int depth, const std::vector<int>& fixed,
           const std::function<bool(const std::vector<int>&)>& visit) const {
    if (stop_) return;
    if (depth == src_.n) {
      ++count_;
      if (!visit(img_)) stop_ = true;
      return;
    }
    if (--budget_ < 0) throw InternalCheckError("hom search exceeded its node budget");
    int e = order_[depth];
    auto [fx, fy] = forced_by_[depth];
    if (fixed[e] >= 0) {
      img_[e] = fixed[e];
      if (consistent_at(depth)) dfs(depth + 1, fixed, visit);
      img_[e] = -1;
    } else if (fx >= 0) {
      img_[e] = dst_.at(img_[fx], img_[fy]);
      if (consistent_at(depth)) dfs(depth + 1, fixed, visit);
      img_[e] = -1;
    } else {
      for (int v = 0; v < dst_.n && !stop_; ++v) {
        img_[e] = v;
        if (consistent_at(depth)) dfs(depth + 1, fixed, visit);
      }
      img_[e] = -1;
    }
  }

  const FiniteSemigroup& src_;
  const FiniteSemigroup& dst_;
  mutable std::vector<int> order_;
  mutable std::vector<std::pair<int, int>> forced_by_;
  mutable std::vector<std::vector<Triple>> constraints_;
  mutable std::vector<int> img_;
  mutable long long count_ = 0;
  mutable long long budget_ = 0;
  mutable bool stop_ = false;
};

// All semigroup homomorphisms src -> dst, in search order.
inline std::vector<std::vector<int>> all_homs(const FiniteSemigroup& src,
                                              const FiniteSemigroup& dst) {
  std::vector<std::vector<int>> out;
  HomSearch hs(src, dst);
  hs.run(std::vector<int>(src.n, -1), [&](const std::vector<int>& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// All monoid homomorphisms: identity image pinned, star law enforced.
inline std::vector<std::vector<int>> all_monoid_homs(const FiniteMonoid& src,
                                                     const FiniteMonoid& dst) {
  std::vector<int> fixed(src.n(), -1);
  fixed[src.e] = dst.e;
  std::vector<std::vector<int>> out;
  HomSearch hs(src.sg, dst.sg);
  hs.run(fixed, [&](const std::vector<int>& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace transhull
