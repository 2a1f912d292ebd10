#pragma once

// Cosemigroup objects in GF(p)-modules: coassociative delta: C -> C (x) C,
// presented by the tensor delta[k][i][j] = coefficient of e_i (x) e_j in
// delta(e_k).  Comultipliers are computed two ways: directly from the tensor
// identities, and through the linear dual algebra; both routes must agree.

#include <algorithm>
#include <string>
#include <vector>

#include "transhull/algebra.hpp"
#include "transhull/fp.hpp"

namespace transhull {

struct FpCoalgebra {
  Fp field;
  int dim = 0;
  std::vector<int> delta;  // D[k][i][j]

  int d(int k, int i, int j) const {
    return delta[(static_cast<size_t>(k) * dim + i) * dim + j];
  }

  int carrier_size() const { return pow_int(field.p, dim); }
};

inline FpCoalgebra validate_coalgebra(int p, int dim, const std::vector<int>& tensor) {
  FpCoalgebra c;
  c.field = Fp(p);
  if (dim < 0) throw ValidationError("negative dimension");
  c.dim = dim;
  if (tensor.size() != static_cast<size_t>(dim) * dim * dim)
    throw ValidationError("comultiplication tensor is not dim^3");
  for (int v : tensor)
    if (v < 0 || v >= p) throw ValidationError("tensor entry out of range [0,p)");
  c.delta = tensor;
  // (delta (x) id) delta = (id (x) delta) delta on each basis vector:
  // sum_a D[k][a][l] D[a][i][j] = sum_b D[k][i][b] D[b][j][l].
  for (int k = 0; k < dim; ++k) {
    bool ok = true;
    for (int i = 0; i < dim && ok; ++i)
      for (int j = 0; j < dim && ok; ++j)
        for (int l = 0; l < dim && ok; ++l) {
          int lhs = 0, rhs = 0;
          for (int a = 0; a < dim; ++a) lhs += c.d(k, a, l) * c.d(a, i, j);
          for (int b = 0; b < dim; ++b) rhs += c.d(k, i, b) * c.d(b, j, l);
          if (lhs % p != rhs % p) ok = false;
        }
    if (!ok) throw ValidationError("NotCoassociative at basis vector " + std::to_string(k));
  }
  return c;
}

// Linear dual: multiplication of functionals is precomposition with delta.
inline FpAlgebra dual_algebra(const FpCoalgebra& c) {
  FpAlgebra a;
  a.field = c.field;
  a.dim = c.dim;
  a.mul.resize(c.delta.size());
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j)
      for (int k = 0; k < c.dim; ++k)
        a.mul[(static_cast<size_t>(i) * c.dim + j) * c.dim + k] = c.d(k, i, j);
  return a;
}

inline FpCoalgebra dual_coalgebra(const FpAlgebra& a) {
  FpCoalgebra c;
  c.field = a.field;
  c.dim = a.dim;
  c.delta.resize(a.mul.size());
  for (int k = 0; k < a.dim; ++k)
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        c.delta[(static_cast<size_t>(k) * a.dim + i) * a.dim + j] = a.c(i, j, k);
  return c;
}

using ComultiplierPair = LinearMultiplierPair;

inline bool is_left_comultiplier_law(const FpCoalgebra& c, const FpMat& L) {
  // delta o L = (L (x) id) o delta:
  // sum_m D[m][i][j] L[m][k] = sum_a D[k][a][j] L[i][a].
  const Fp& F = c.field;
  for (int k = 0; k < c.dim; ++k)
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < c.dim; ++j) {
        int lhs = 0, rhs = 0;
        for (int m = 0; m < c.dim; ++m) lhs += c.d(m, i, j) * L.at(m, k);
        for (int a = 0; a < c.dim; ++a) rhs += c.d(k, a, j) * L.at(i, a);
        if (lhs % F.p != rhs % F.p) return false;
      }
  return true;
}

inline bool is_right_comultiplier_law(const FpCoalgebra& c, const FpMat& R) {
  // delta o R = (id (x) R) o delta:
  // sum_m D[m][i][j] R[m][k] = sum_b D[k][i][b] R[j][b].
  const Fp& F = c.field;
  for (int k = 0; k < c.dim; ++k)
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < c.dim; ++j) {
        int lhs = 0, rhs = 0;
        for (int m = 0; m < c.dim; ++m) lhs += c.d(m, i, j) * R.at(m, k);
        for (int b = 0; b < c.dim; ++b) rhs += c.d(k, i, b) * R.at(j, b);
        if (lhs % F.p != rhs % F.p) return false;
      }
  return true;
}

inline bool is_linked_comultiplier_pair(const FpCoalgebra& c, const FpMat& L, const FpMat& R) {
  // (R (x) id) o delta = (id (x) L) o delta:
  // sum_a D[k][a][j] R[i][a] = sum_b D[k][i][b] L[j][b].
  const Fp& F = c.field;
  for (int k = 0; k < c.dim; ++k)
    for (int i = 0; i < c.dim; ++i)
      for (int j = 0; j < c.dim; ++j) {
        int lhs = 0, rhs = 0;
        for (int a = 0; a < c.dim; ++a) lhs += c.d(k, a, j) * R.at(i, a);
        for (int b = 0; b < c.dim; ++b) rhs += c.d(k, i, b) * L.at(j, b);
        if (lhs % F.p != rhs % F.p) return false;
      }
  return true;
}

inline bool is_comultiplier(const FpCoalgebra& c, const ComultiplierPair& m) {
  return is_left_comultiplier_law(c, m.L) && is_right_comultiplier_law(c, m.R) &&
         is_linked_comultiplier_pair(c, m.L, m.R);
}

// Solved directly as a homogeneous system from the three tensor identities,
// then cross-checked against the dual-algebra route: the comultiplier pairs
// of C are exactly the transposed multiplier pairs of C*.
inline MultiplierSpace comultiplier_space(const FpCoalgebra& c) {
  const Fp& F = c.field;
  int d = c.dim;
  int dd = d * d;
  std::vector<std::vector<int>> rows;
  auto Lvar = [&](int r, int cc) { return r * d + cc; };
  auto Rvar = [&](int r, int cc) { return dd + r * d + cc; };

  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<int> row(2 * dd, 0);
        for (int m = 0; m < d; ++m) row[Lvar(m, k)] = (row[Lvar(m, k)] + c.d(m, i, j)) % F.p;
        for (int a = 0; a < d; ++a)
          row[Lvar(i, a)] = (row[Lvar(i, a)] + F.neg(c.d(k, a, j))) % F.p;
        rows.push_back(std::move(row));

        row.assign(2 * dd, 0);
        for (int m = 0; m < d; ++m) row[Rvar(m, k)] = (row[Rvar(m, k)] + c.d(m, i, j)) % F.p;
        for (int b = 0; b < d; ++b)
          row[Rvar(j, b)] = (row[Rvar(j, b)] + F.neg(c.d(k, i, b))) % F.p;
        rows.push_back(std::move(row));

        row.assign(2 * dd, 0);
        for (int a = 0; a < d; ++a) row[Rvar(i, a)] = (row[Rvar(i, a)] + c.d(k, a, j)) % F.p;
        for (int b = 0; b < d; ++b)
          row[Lvar(j, b)] = (row[Lvar(j, b)] + F.neg(c.d(k, i, b))) % F.p;
        rows.push_back(std::move(row));
      }

  MultiplierSpace space;
  space.nullspace = nullspace_basis(F, rows, 2 * dd);
  for (const auto& v : span_of(F, space.nullspace, 2 * dd)) {
    ComultiplierPair m;
    m.L = FpMat(d);
    m.R = FpMat(d);
    for (int r = 0; r < d; ++r)
      for (int cc = 0; cc < d; ++cc) {
        m.L.at(r, cc) = v[Lvar(r, cc)];
        m.R.at(r, cc) = v[Rvar(r, cc)];
      }
    if (!is_comultiplier(c, m))
      throw InternalCheckError("solved pair fails the comultiplier laws");
    space.pairs.push_back(std::move(m));
  }
  std::sort(space.pairs.begin(), space.pairs.end());
  space.identity_index = space.find({FpMat::identity(d), FpMat::identity(d)});
  if (space.identity_index < 0)
    throw InternalCheckError("(id,id) missing from the comultiplier space");

  // Dual route: transpose the multiplier pairs of the dual algebra.
  MultiplierSpace dual = multiplier_space(dual_algebra(c));
  if (dual.size() != space.size())
    throw InternalCheckError("comultiplier space disagrees with the dual-algebra route");
  std::vector<ComultiplierPair> transposed;
  transposed.reserve(dual.pairs.size());
  for (const auto& m : dual.pairs) transposed.push_back({m.L.transpose(), m.R.transpose()});
  std::sort(transposed.begin(), transposed.end());
  for (int i = 0; i < space.size(); ++i)
    if (!(space.pairs[i] == transposed[i]))
      throw InternalCheckError("comultiplier space disagrees with the dual-algebra route");
  return space;
}

// (L',R') star (L,R) = (L o L', R' o R): composition is reversed relative to
// the multiplier monoid.
inline FiniteMonoid comultiplier_monoid(const FpCoalgebra& c, const MultiplierSpace& space) {
  const Fp& F = c.field;
  int n = space.size();
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ComultiplierPair prod;
      prod.L = mat_mul(F, space.pairs[j].L, space.pairs[i].L);
      prod.R = mat_mul(F, space.pairs[i].R, space.pairs[j].R);
      int k = space.find(prod);
      if (k < 0) throw InternalCheckError("comultiplier star product escapes the space");
      tab[static_cast<size_t>(i) * n + j] = k;
    }
  FiniteSemigroup sg = semigroup_from_construction(n, std::move(tab));
  return FiniteMonoid{std::move(sg), space.identity_index};
}

// Inner comultiplier induced by a functional f (a coordinate covector):
// L_f = lambda o (f (x) id) o delta and R_f = rho o (id (x) f) o delta.
inline ComultiplierPair inner_comultiplier(const FpCoalgebra& c, const FpVec& f) {
  const Fp& F = c.field;
  int d = c.dim;
  ComultiplierPair m;
  m.L = FpMat(d);
  m.R = FpMat(d);
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j) {
      int acc = 0;
      for (int i = 0; i < d; ++i) acc += c.d(k, i, j) * f[i];
      m.L.at(j, k) = acc % F.p;
    }
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) {
      int acc = 0;
      for (int j = 0; j < d; ++j) acc += c.d(k, i, j) * f[j];
      m.R.at(i, k) = acc % F.p;
    }
  if (!is_comultiplier(c, m)) throw InternalCheckError("inner comultiplier fails the laws");
  return m;
}

// Convolution on functionals: (g *_delta f)(e_k) = sum D[k][i][j] g_i f_j,
// as a Cayley table over the p^dim covectors in lexicographic order.
inline FiniteSemigroup dual_convolution(const FpCoalgebra& c, int bound = 4096) {
  int n = c.carrier_size();
  if (n > bound)
    throw ValidationError("dual convolution of size " + std::to_string(n) +
                          " exceeds the bound " + std::to_string(bound));
  const Fp& F = c.field;
  std::vector<int> tab(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    FpVec g = index_vec(F, x, c.dim);
    for (int y = 0; y < n; ++y) {
      FpVec f = index_vec(F, y, c.dim);
      FpVec prod(c.dim, 0);
      for (int k = 0; k < c.dim; ++k) {
        int acc = 0;
        for (int i = 0; i < c.dim; ++i)
          for (int j = 0; j < c.dim; ++j) acc += c.d(k, i, j) * g[i] * f[j];
        prod[k] = acc % F.p;
      }
      tab[static_cast<size_t>(x) * n + y] = vec_index(F, prod);
    }
  }
  return semigroup_from_construction(n, std::move(tab));
}

inline std::vector<int> inner_comultiplier_indices(const FpCoalgebra& c,
                                                   const MultiplierSpace& space) {
  std::vector<int> out(c.carrier_size());
  for (int x = 0; x < c.carrier_size(); ++x) {
    ComultiplierPair m = inner_comultiplier(c, index_vec(c.field, x, c.dim));
    int k = space.find(m);
    if (k < 0) throw InternalCheckError("inner comultiplier missing from the space");
    out[x] = k;
  }
  return out;
}

}  // namespace transhull
