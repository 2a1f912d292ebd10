#pragma once

// Semigroup objects in the category of GF(p)-modules, presented by structure
// constants on a chosen basis.  The tensor product is strictified: bases are
// fixed once and for all, and the coherence isomorphisms (associator and the
// two unitors) are treated as identity matrices throughout.  Generalized
// elements I -> A are therefore plain coordinate vectors and composition with
// a linear endomorphism is matrix application.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "transhull/degeneracy.hpp"
#include "transhull/fp.hpp"
#include "transhull/hull.hpp"
#include "transhull/semigroup.hpp"

namespace transhull {

struct FpAlgebra {
  Fp field;
  int dim = 0;
  std::vector<int> mul;  // c[i][j][k]: coefficient of e_k in e_i * e_j
  std::optional<FpVec> unit;

  int c(int i, int j, int k) const {
    return mul[(static_cast<size_t>(i) * dim + j) * dim + k];
  }

  FpVec basis_product(int i, int j) const {
    FpVec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = c(i, j, k);
    return v;
  }

  FpVec product(const FpVec& x, const FpVec& y) const {
    FpVec r(dim, 0);
    for (int i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        int xy = x[i] * y[j] % field.p;
        for (int k = 0; k < dim; ++k) r[k] = (r[k] + xy * c(i, j, k)) % field.p;
      }
    }
    return r;
  }

  int carrier_size() const { return pow_int(field.p, dim); }
};

inline FpAlgebra validate_algebra(int p, int dim, const std::vector<int>& tensor,
                                  std::optional<FpVec> unit = std::nullopt) {
  FpAlgebra a;
  a.field = Fp(p);
  if (dim < 0) throw ValidationError("negative dimension");
  a.dim = dim;
  if (tensor.size() != static_cast<size_t>(dim) * dim * dim)
    throw ValidationError("structure tensor is not dim^3");
  for (int v : tensor)
    if (v < 0 || v >= p) throw ValidationError("structure constant out of range [0,p)");
  a.mul = tensor;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        FpVec lhs = a.product(a.basis_product(i, j), [&] {
          FpVec ek(dim, 0);
          ek[k] = 1;
          return ek;
        }());
        FpVec rhs = a.product(
            [&] {
              FpVec ei(dim, 0);
              ei[i] = 1;
              return ei;
            }(),
            a.basis_product(j, k));
        if (lhs != rhs)
          throw ValidationError("NotAssociative at basis triple (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
      }
  if (unit) {
    if (static_cast<int>(unit->size()) != dim) throw ValidationError("unit vector has wrong length");
    for (int v : *unit)
      if (v < 0 || v >= p) throw ValidationError("unit coordinate out of range");
    for (int i = 0; i < dim; ++i) {
      FpVec ei(dim, 0);
      ei[i] = 1;
      if (a.product(*unit, ei) != ei || a.product(ei, *unit) != ei)
        throw ValidationError("claimed unit is not a two-sided unit");
    }
    a.unit = unit;
  }
  return a;
}

// Solve the two-sided unit equations; unique when a unit exists.
inline std::optional<FpVec> find_unit(const FpAlgebra& a) {
  const Fp& F = a.field;
  int d = a.dim;
  std::vector<std::vector<int>> rows;
  std::vector<int> rhs;
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      std::vector<int> row(d, 0);
      for (int i = 0; i < d; ++i) row[i] = a.c(i, j, k);
      rows.push_back(row);
      rhs.push_back(j == k ? 1 : 0);
    }
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      std::vector<int> row(d, 0);
      for (int j = 0; j < d; ++j) row[j] = a.c(i, j, k);
      rows.push_back(row);
      rhs.push_back(i == k ? 1 : 0);
    }
  auto sol = solve_linear(F, rows, rhs, d);
  if (!sol) return std::nullopt;
  // Double-check: solve_linear ignores nothing, but revalidate by direct use.
  for (int i = 0; i < d; ++i) {
    FpVec ei(d, 0);
    ei[i] = 1;
    if (a.product(*sol, ei) != ei || a.product(ei, *sol) != ei) return std::nullopt;
  }
  return sol;
}

struct LinearMultiplierPair {
  FpMat L;
  FpMat R;

  bool operator==(const LinearMultiplierPair& o) const { return L == o.L && R == o.R; }
  bool operator<(const LinearMultiplierPair& o) const {
    return L.a != o.L.a ? L.a < o.L.a : R.a < o.R.a;
  }
};

inline bool is_left_multiplier_law(const FpAlgebra& a, const FpMat& L) {
  // L(e_i e_j) = L(e_i) e_j on all basis pairs.
  const Fp& F = a.field;
  for (int i = 0; i < a.dim; ++i) {
    FpVec lei(a.dim);
    for (int k = 0; k < a.dim; ++k) lei[k] = L.at(k, i);
    for (int j = 0; j < a.dim; ++j) {
      FpVec ej(a.dim, 0);
      ej[j] = 1;
      if (mat_apply(F, L, a.basis_product(i, j)) != a.product(lei, ej)) return false;
    }
  }
  return true;
}

inline bool is_right_multiplier_law(const FpAlgebra& a, const FpMat& R) {
  const Fp& F = a.field;
  for (int j = 0; j < a.dim; ++j) {
    FpVec rej(a.dim);
    for (int k = 0; k < a.dim; ++k) rej[k] = R.at(k, j);
    for (int i = 0; i < a.dim; ++i) {
      FpVec ei(a.dim, 0);
      ei[i] = 1;
      if (mat_apply(F, R, a.basis_product(i, j)) != a.product(ei, rej)) return false;
    }
  }
  return true;
}

inline bool is_linked_linear_pair(const FpAlgebra& a, const FpMat& L, const FpMat& R) {
  // R(e_i) e_j = e_i L(e_j).
  for (int i = 0; i < a.dim; ++i) {
    FpVec rei(a.dim);
    for (int k = 0; k < a.dim; ++k) rei[k] = R.at(k, i);
    for (int j = 0; j < a.dim; ++j) {
      FpVec lej(a.dim);
      for (int k = 0; k < a.dim; ++k) lej[k] = L.at(k, j);
      FpVec ei(a.dim, 0), ej(a.dim, 0);
      ei[i] = 1;
      ej[j] = 1;
      if (a.product(rei, ej) != a.product(ei, lej)) return false;
    }
  }
  return true;
}

inline bool is_linear_multiplier(const FpAlgebra& a, const LinearMultiplierPair& m) {
  return is_left_multiplier_law(a, m.L) && is_right_multiplier_law(a, m.R) &&
         is_linked_linear_pair(a, m.L, m.R);
}

struct MultiplierSpace {
  std::vector<LinearMultiplierPair> pairs;       // full solution set, lexicographic
  std::vector<std::vector<int>> nullspace;       // basis vectors in the 2d^2 unknowns
  int identity_index = -1;

  int size() const { return static_cast<int>(pairs.size()); }
  int find(const LinearMultiplierPair& m) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), m);
    if (it == pairs.end() || !(*it == m)) return -1;
    return static_cast<int>(it - pairs.begin());
  }
};

// All multiplier pairs of A, solved as one homogeneous GF(p) system in the
// 2d^2 entries of (L, R): left-translation law, right-translation law and the
// linking law instantiated on basis pairs.  Unknown x[r*d+c] = L(r,c),
// x[d^2 + r*d+c] = R(r,c).
inline MultiplierSpace multiplier_space(const FpAlgebra& a) {
  const Fp& F = a.field;
  int d = a.dim;
  int dd = d * d;
  std::vector<std::vector<int>> rows;
  auto Lvar = [&](int r, int c) { return r * d + c; };
  auto Rvar = [&](int r, int c) { return dd + r * d + c; };

  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        // L(e_i e_j)_k - (L(e_i) e_j)_k = 0
        std::vector<int> row(2 * dd, 0);
        for (int m = 0; m < d; ++m) row[Lvar(k, m)] = (row[Lvar(k, m)] + a.c(i, j, m)) % F.p;
        for (int t = 0; t < d; ++t)
          row[Lvar(t, i)] = (row[Lvar(t, i)] + F.neg(a.c(t, j, k))) % F.p;
        rows.push_back(std::move(row));

        // R(e_i e_j)_k - (e_i R(e_j))_k = 0
        row.assign(2 * dd, 0);
        for (int m = 0; m < d; ++m) row[Rvar(k, m)] = (row[Rvar(k, m)] + a.c(i, j, m)) % F.p;
        for (int t = 0; t < d; ++t)
          row[Rvar(t, j)] = (row[Rvar(t, j)] + F.neg(a.c(i, t, k))) % F.p;
        rows.push_back(std::move(row));

        // (R(e_i) e_j)_k - (e_i L(e_j))_k = 0
        row.assign(2 * dd, 0);
        for (int t = 0; t < d; ++t) row[Rvar(t, i)] = (row[Rvar(t, i)] + a.c(t, j, k)) % F.p;
        for (int t = 0; t < d; ++t)
          row[Lvar(t, j)] = (row[Lvar(t, j)] + F.neg(a.c(i, t, k))) % F.p;
        rows.push_back(std::move(row));
      }

  MultiplierSpace space;
  space.nullspace = nullspace_basis(F, rows, 2 * dd);
  // Re-verify every emitted basis vector by substitution into the laws.
  for (const auto& v : space.nullspace) {
    LinearMultiplierPair m;
    m.L = FpMat(d);
    m.R = FpMat(d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        m.L.at(r, c) = v[Lvar(r, c)];
        m.R.at(r, c) = v[Rvar(r, c)];
      }
    if (!is_linear_multiplier(a, m))
      throw InternalCheckError("nullspace vector fails the multiplier laws");
  }
  for (const auto& v : span_of(F, space.nullspace, 2 * dd)) {
    LinearMultiplierPair m;
    m.L = FpMat(d);
    m.R = FpMat(d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        m.L.at(r, c) = v[Lvar(r, c)];
        m.R.at(r, c) = v[Rvar(r, c)];
      }
    space.pairs.push_back(std::move(m));
  }
  std::sort(space.pairs.begin(), space.pairs.end());
  LinearMultiplierPair id{FpMat::identity(d), FpMat::identity(d)};
  space.identity_index = space.find(id);
  if (space.identity_index < 0)
    throw InternalCheckError("(id,id) missing from the multiplier space");
  return space;
}

// (L',R') star (L,R) = (L'L, RR') as a finite monoid over the pair list.
inline FiniteMonoid multiplier_monoid(const FpAlgebra& a, const MultiplierSpace& space) {
  const Fp& F = a.field;
  int n = space.size();
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LinearMultiplierPair prod;
      prod.L = mat_mul(F, space.pairs[i].L, space.pairs[j].L);
      prod.R = mat_mul(F, space.pairs[j].R, space.pairs[i].R);
      int k = space.find(prod);
      if (k < 0) throw InternalCheckError("multiplier star product escapes the space");
      tab[static_cast<size_t>(i) * n + j] = k;
    }
  FiniteSemigroup sg = semigroup_from_construction(n, std::move(tab));
  return FiniteMonoid{std::move(sg), space.identity_index};
}

// Left and right multiplication matrices by a generalized element.
inline LinearMultiplierPair inner_multiplier(const FpAlgebra& a, const FpVec& f) {
  const Fp& F = a.field;
  int d = a.dim;
  LinearMultiplierPair m;
  m.L = FpMat(d);
  m.R = FpMat(d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      int acc = 0;
      for (int i = 0; i < d; ++i) acc += f[i] * a.c(i, j, k);
      m.L.at(k, j) = acc % F.p;
    }
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) {
      int acc = 0;
      for (int j = 0; j < d; ++j) acc += f[j] * a.c(i, j, k);
      m.R.at(k, i) = acc % F.p;
    }
  if (!is_linear_multiplier(a, m))
    throw InternalCheckError("inner multiplier fails the laws");
  return m;
}

// The underlying multiplicative semigroup on all p^dim coordinate vectors,
// ordered lexicographically.  Associativity transfers from the validated
// structure tensor by bilinearity.
inline FiniteSemigroup convolution_semigroup(const FpAlgebra& a, int bound = 4096) {
  int n = a.carrier_size();
  if (n > bound)
    throw ValidationError("convolution semigroup of size " + std::to_string(n) +
                          " exceeds the bound " + std::to_string(bound));
  const Fp& F = a.field;
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    FpVec vx = index_vec(F, x, a.dim);
    for (int y = 0; y < n; ++y) {
      FpVec vy = index_vec(F, y, a.dim);
      tab[static_cast<size_t>(x) * n + y] = vec_index(F, a.product(vx, vy));
    }
  }
  return semigroup_from_construction(n, std::move(tab));
}

// The canonical homomorphism from generalized elements into the multiplier
// monoid: vector index -> pair index.
inline std::vector<int> inner_multiplier_indices(const FpAlgebra& a,
                                                 const MultiplierSpace& space) {
  std::vector<int> out(a.carrier_size());
  for (int x = 0; x < a.carrier_size(); ++x) {
    LinearMultiplierPair m = inner_multiplier(a, index_vec(a.field, x, a.dim));
    int k = space.find(m);
    if (k < 0) throw InternalCheckError("inner multiplier missing from the space");
    out[x] = k;
  }
  return out;
}

struct ConcretizationResult {
  std::vector<int> map;  // multiplier pair index -> hull element index
  bool monoid_hom = true;
  bool injective = true;
  bool surjective = true;

  bool concrete() const { return surjective; }
};

// (L,R) |-> the pair of set maps induced on generalized elements, landing in
// the translational hull of the convolution semigroup.
inline ConcretizationResult concretization(const FpAlgebra& a, const MultiplierSpace& space,
                                           const TranslationalHull& conv_hull) {
  const Fp& F = a.field;
  int n = a.carrier_size();
  ConcretizationResult res;
  res.map.resize(space.size());
  std::vector<bool> hit(conv_hull.size(), false);
  for (int i = 0; i < space.size(); ++i) {
    SelfMap cl, cr;
    cl.img.resize(n);
    cr.img.resize(n);
    for (int v = 0; v < n; ++v) {
      FpVec vec = index_vec(F, v, a.dim);
      cl.img[v] = vec_index(F, mat_apply(F, space.pairs[i].L, vec));
      cr.img[v] = vec_index(F, mat_apply(F, space.pairs[i].R, vec));
    }
    int k = conv_hull.find(cl, cr);
    if (k < 0)
      throw InternalCheckError("concretization image is not a multiplier of the convolution");
    res.map[i] = k;
    if (hit[k]) res.injective = false;
    hit[k] = true;
  }
  for (int k = 0; k < conv_hull.size(); ++k)
    if (!hit[k]) res.surjective = false;
  if (res.map[space.identity_index] != conv_hull.identity_index) res.monoid_hom = false;
  for (int i = 0; i < space.size() && res.monoid_hom; ++i)
    for (int j = 0; j < space.size(); ++j) {
      LinearMultiplierPair prod;
      prod.L = mat_mul(F, space.pairs[i].L, space.pairs[j].L);
      prod.R = mat_mul(F, space.pairs[j].R, space.pairs[i].R);
      int k = space.find(prod);
      if (res.map[k] != conv_hull.star_at(res.map[i], res.map[j])) {
        res.monoid_hom = false;
        break;
      }
    }
  if (!res.monoid_hom)
    throw InternalCheckError("concretization is not a monoid homomorphism");
  return res;
}

inline bool is_concrete(const FpAlgebra& a, int conv_bound = 4096) {
  MultiplierSpace space = multiplier_space(a);
  TranslationalHull h = hull(convolution_semigroup(a, conv_bound));
  return concretization(a, space, h).concrete();
}

struct CanonicalMapReport {
  bool composition_identities = true;  // L_f g = f*g and R_f g = g*f, all pairs
  bool conv_nondegenerate = false;
  bool canonical_injective = true;
  std::vector<std::pair<int, int>> collisions;  // vector indices with equal image
};

inline CanonicalMapReport canonical_map_injectivity(const FpAlgebra& a, int conv_bound = 4096) {
  const Fp& F = a.field;
  int n = a.carrier_size();
  CanonicalMapReport rep;
  std::vector<LinearMultiplierPair> inner(n);
  for (int x = 0; x < n; ++x) inner[x] = inner_multiplier(a, index_vec(F, x, a.dim));
  for (int x = 0; x < n; ++x) {
    FpVec vx = index_vec(F, x, a.dim);
    for (int y = 0; y < n; ++y) {
      FpVec vy = index_vec(F, y, a.dim);
      if (mat_apply(F, inner[x].L, vy) != a.product(vx, vy)) rep.composition_identities = false;
      if (mat_apply(F, inner[x].R, vy) != a.product(vy, vx)) rep.composition_identities = false;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (inner[x] == inner[y]) {
        rep.canonical_injective = false;
        rep.collisions.push_back({x, y});
      }
  FiniteSemigroup conv = convolution_semigroup(a, conv_bound);
  DegeneracyReport d = degeneracy_report(conv);
  rep.conv_nondegenerate = d.nondegenerate();
  return rep;
}

// mu is an epimorphism of GF(p)-modules iff the basis products span A.
inline bool is_multiplication_surjective(const FpAlgebra& a) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) rows.push_back(a.basis_product(i, j));
  return matrix_rank(a.field, rows, a.dim) == a.dim;
}

// Zero left and right annihilators.
inline bool is_faithful(const FpAlgebra& a) {
  int d = a.dim;
  std::vector<std::vector<int>> left_rows, right_rows;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      std::vector<int> row(d);
      for (int j = 0; j < d; ++j) row[j] = a.c(i, j, k);  // e_i * u = 0
      left_rows.push_back(row);
      std::vector<int> row2(d);
      for (int j = 0; j < d; ++j) row2[j] = a.c(j, i, k);  // u * e_i = 0
      right_rows.push_back(row2);
    }
  return nullspace_basis(a.field, left_rows, d).empty() &&
         nullspace_basis(a.field, right_rows, d).empty();
}

inline bool is_algebra_commutative(const FpAlgebra& a) {
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i)) return false;
  return true;
}

}  // namespace transhull
