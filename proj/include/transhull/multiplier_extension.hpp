#pragma once

#include <string>
#include <vector>

#include "transhull/algebra.hpp"
#include "transhull/extension.hpp"

namespace transhull {

// Everything extend_multiplier needs about one side of the problem, built
// once so sweeps across many homomorphisms can share it.
struct AlgebraContext {
  FpAlgebra algebra;
  MultiplierSpace space;
  FiniteMonoid mult_monoid;          // star monoid over the pair list
  FiniteSemigroup conv;              // convolution semigroup on carrier vectors
  TranslationalHull conv_hull;       // its translational hull
  ConcretizationResult conc;         // pair index -> hull index
  std::vector<int> inner_index;      // carrier vector index -> pair index
};

inline AlgebraContext make_context(const FpAlgebra& a, int conv_bound = 4096) {
  AlgebraContext ctx{a, multiplier_space(a), {}, {}, {}, {}, {}};
  ctx.mult_monoid = multiplier_monoid(a, ctx.space);
  ctx.conv = convolution_semigroup(a, conv_bound);
  ctx.conv_hull = hull(ctx.conv);
  ctx.conc = concretization(a, ctx.space, ctx.conv_hull);
  ctx.inner_index = inner_multiplier_indices(a, ctx.space);
  return ctx;
}

struct MultiplierExtensionResult {
  std::vector<int> map;  // Mult(A) pair index -> Mult(B) pair index
  bool decomposition_independent = true;
  bool restriction_holds = true;
  bool monoid_hom = true;
  bool naturality_square = true;
  bool uniqueness_searched = false;
  long long solutions_found = -1;

  bool all_verified() const {
    return decomposition_independent && restriction_holds && monoid_hom && naturality_square &&
           (!uniqueness_searched || solutions_found == 1);
  }
};

// Is f: Conv(A) -> Mult(B) multiplier non-degenerate: do the orbits of the
// component matrices cover every generalized element of B?
inline bool is_multiplier_nondegenerate(const AlgebraContext& a, const AlgebraContext& b,
                                        const std::vector<int>& f) {
  const Fp& F = b.algebra.field;
  int nb = b.algebra.carrier_size();
  std::vector<bool> left_hit(nb, false), right_hit(nb, false);
  for (int x = 0; x < a.algebra.carrier_size(); ++x) {
    const LinearMultiplierPair& m = b.space.pairs[f[x]];
    for (int s = 0; s < nb; ++s) {
      FpVec v = index_vec(F, s, b.algebra.dim);
      left_hit[vec_index(F, mat_apply(F, m.L, v))] = true;
      right_hit[vec_index(F, mat_apply(F, m.R, v))] = true;
    }
  }
  for (int u = 0; u < nb; ++u)
    if (!left_hit[u] || !right_hit[u]) return false;
  return true;
}

// Unique extension of a multiplier non-degenerate homomorphism
// f: Conv(A) -> Mult(B) to a monoid homomorphism Mult(A) -> Mult(B),
// for B concrete with non-degenerate convolution semigroup.  All linear-map
// composites are finite matrix computations over GF(p).
inline MultiplierExtensionResult extend_multiplier(const AlgebraContext& a,
                                                   const AlgebraContext& b,
                                                   const std::vector<int>& f,
                                                   const ExtensionOptions& opt = {}) {
  const Fp& FB = b.algebra.field;
  int na = a.algebra.carrier_size();
  int nb = b.algebra.carrier_size();
  int db = b.algebra.dim;

  if (!degeneracy_report(b.conv).nondegenerate())
    throw PreconditionError("extend_multiplier: convolution semigroup of B is degenerate");
  if (!b.conc.concrete())
    throw PreconditionError("extend_multiplier: B is not concrete");
  if (f.size() != static_cast<size_t>(na))
    throw PreconditionError("extend_multiplier: image list has wrong length");
  for (int v : f)
    if (v < 0 || v >= b.space.size())
      throw PreconditionError("extend_multiplier: image index out of range");
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      if (f[a.conv.at(x, y)] != b.mult_monoid.at(f[x], f[y]))
        throw PreconditionError("extend_multiplier: not a homomorphism into Mult(B)");
  if (!is_multiplier_nondegenerate(a, b, f))
    throw PreconditionError("extend_multiplier: map is not multiplier non-degenerate");

  auto fl = [&](int x) -> const FpMat& { return b.space.pairs[f[x]].L; };
  auto fr = [&](int x) -> const FpMat& { return b.space.pairs[f[x]].R; };

  // Least decompositions u = f_L(s) t and u = f_R(s) t over vector indices.
  std::vector<std::pair<int, int>> decomp_l(nb, {-1, -1}), decomp_r(nb, {-1, -1});
  for (int s = 0; s < na; ++s)
    for (int t = 0; t < nb; ++t) {
      FpVec vt = index_vec(FB, t, db);
      int ul = vec_index(FB, mat_apply(FB, fl(s), vt));
      if (decomp_l[ul].first < 0) decomp_l[ul] = {s, t};
      int ur = vec_index(FB, mat_apply(FB, fr(s), vt));
      if (decomp_r[ur].first < 0) decomp_r[ur] = {s, t};
    }

  MultiplierExtensionResult res;
  res.map.assign(a.space.size(), -1);
  const Fp& FA = a.algebra.field;
  for (int h = 0; h < a.space.size(); ++h) {
    const FpMat& L = a.space.pairs[h].L;
    const FpMat& R = a.space.pairs[h].R;
    // Column i of the image pair comes from the decomposition of e_i.
    FpMat big_l(db), big_r(db);
    for (int i = 0; i < db; ++i) {
      FpVec ei(db, 0);
      ei[i] = 1;
      auto [sl, tl] = decomp_l[vec_index(FB, ei)];
      FpVec ls = mat_apply(FA, L, index_vec(FA, sl, a.algebra.dim));
      FpVec col = mat_apply(FB, fl(vec_index(FA, ls)), index_vec(FB, tl, db));
      for (int k = 0; k < db; ++k) big_l.at(k, i) = col[k];
      auto [sr, tr] = decomp_r[vec_index(FB, ei)];
      FpVec rs = mat_apply(FA, R, index_vec(FA, sr, a.algebra.dim));
      FpVec col_r = mat_apply(FB, fr(vec_index(FA, rs)), index_vec(FB, tr, db));
      for (int k = 0; k < db; ++k) big_r.at(k, i) = col_r[k];
    }
    int k = b.space.find({big_l, big_r});
    if (k < 0)
      throw InternalCheckError("extend_multiplier: image pair is not a multiplier of B");
    res.map[h] = k;

    if (opt.verify_all_decompositions) {
      // Every decomposition of every u must agree with the matrix action.
      for (int s = 0; s < na; ++s) {
        FpVec ls = mat_apply(FA, L, index_vec(FA, s, a.algebra.dim));
        FpVec rs = mat_apply(FA, R, index_vec(FA, s, a.algebra.dim));
        const FpMat& f_ls = fl(vec_index(FA, ls));
        const FpMat& f_rs = fr(vec_index(FA, rs));
        for (int t = 0; t < nb; ++t) {
          FpVec vt = index_vec(FB, t, db);
          FpVec u_l = mat_apply(FB, fl(s), vt);
          if (mat_apply(FB, big_l, u_l) != mat_apply(FB, f_ls, vt))
            res.decomposition_independent = false;
          FpVec u_r = mat_apply(FB, fr(s), vt);
          if (mat_apply(FB, big_r, u_r) != mat_apply(FB, f_rs, vt))
            res.decomposition_independent = false;
        }
      }
      if (!res.decomposition_independent)
        throw InternalCheckError("extend_multiplier: decomposition choice leaked into the result");
    }
  }

  for (int x = 0; x < na; ++x)
    if (res.map[a.inner_index[x]] != f[x]) res.restriction_holds = false;
  if (!res.restriction_holds)
    throw InternalCheckError("extend_multiplier: restriction along the canonical map failed");

  for (int i = 0; i < a.space.size() && res.monoid_hom; ++i)
    for (int j = 0; j < a.space.size(); ++j)
      if (res.map[a.mult_monoid.at(i, j)] != b.mult_monoid.at(res.map[i], res.map[j])) {
        res.monoid_hom = false;
        break;
      }
  if (res.map[a.space.identity_index] != b.space.identity_index) res.monoid_hom = false;
  if (!res.monoid_hom)
    throw InternalCheckError("extend_multiplier: result is not a monoid homomorphism");

  // Naturality square: extending the concretized map through the set-level
  // theorem commutes with concretization.
  {
    std::vector<int> phi(na);
    for (int x = 0; x < na; ++x) phi[x] = b.conc.map[f[x]];
    ExtensionOptions inner = opt;
    inner.uniqueness_search = false;
    ExtensionResult sharp = extend_sharp(a.conv_hull, b.conv_hull, phi, inner);
    for (int h = 0; h < a.space.size(); ++h)
      if (sharp.map[a.conc.map[h]] != b.conc.map[res.map[h]]) res.naturality_square = false;
    if (!res.naturality_square)
      throw InternalCheckError("extend_multiplier: concretization naturality square failed");
  }

  if (opt.uniqueness_search && a.space.size() <= opt.uniqueness_bound) {
    res.uniqueness_searched = true;
    std::vector<int> fixed(a.space.size(), -1);
    fixed[a.space.identity_index] = b.space.identity_index;
    for (int x = 0; x < na; ++x) fixed[a.inner_index[x]] = f[x];
    HomSearch search(a.mult_monoid.sg, b.mult_monoid.sg);
    res.solutions_found = search.run(
        fixed, [](const std::vector<int>&) { return true; }, opt.node_budget);
    if (res.solutions_found != 1)
      throw InternalCheckError("extend_multiplier: expected exactly one extension, found " +
                               std::to_string(res.solutions_found));
  }
  return res;
}

}  // namespace transhull
