#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "transhull/errors.hpp"

namespace transhull {

// Arithmetic in the prime field GF(p), p in {2, 3, 5, 7}.
struct Fp {
  int p = 2;

  Fp() = default;
  explicit Fp(int prime) : p(prime) {
    if (prime != 2 && prime != 3 && prime != 5 && prime != 7)
      throw ValidationError("unsupported prime " + std::to_string(prime));
  }

  int add(int a, int b) const { return (a + b) % p; }
  int sub(int a, int b) const { return ((a - b) % p + p) % p; }
  int mul(int a, int b) const { return (a * b) % p; }
  int neg(int a) const { return (p - a % p) % p; }
  int inv(int a) const {
    a %= p;
    for (int x = 1; x < p; ++x)
      if (a * x % p == 1) return x;
    throw ValidationError("inverse of 0 in GF(" + std::to_string(p) + ")");
  }
};

using FpVec = std::vector<int>;

// Dense square matrix over GF(p), row-major.  Acts on coordinate columns:
// (A*v)_i = sum_j A(i,j) v_j.
struct FpMat {
  int d = 0;
  std::vector<int> a;

  FpMat() = default;
  FpMat(int dim, int fill = 0) : d(dim), a(static_cast<size_t>(dim) * dim, fill) {}

  int& at(int i, int j) { return a[static_cast<size_t>(i) * d + j]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i) * d + j]; }

  static FpMat identity(int dim) {
    FpMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  FpMat transpose() const {
    FpMat t(d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const FpMat& o) const { return d == o.d && a == o.a; }
  bool operator<(const FpMat& o) const { return a < o.a; }
};

inline FpMat mat_mul(const Fp& F, const FpMat& A, const FpMat& B) {
  FpMat C(A.d);
  for (int i = 0; i < A.d; ++i)
    for (int k = 0; k < A.d; ++k) {
      int aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < A.d; ++j)
        C.at(i, j) = (C.at(i, j) + aik * B.at(k, j)) % F.p;
    }
  return C;
}

inline FpVec mat_apply(const Fp& F, const FpMat& A, const FpVec& v) {
  FpVec r(A.d, 0);
  for (int i = 0; i < A.d; ++i) {
    int acc = 0;
    for (int j = 0; j < A.d; ++j) acc += A.at(i, j) * v[j];
    r[i] = acc % F.p;
  }
  return r;
}

// Index of a coordinate vector under lexicographic order (v[0] most
// significant digit base p).  This fixes element order everywhere vectors
// are enumerated.
inline int vec_index(const Fp& F, const FpVec& v) {
  int idx = 0;
  for (int x : v) idx = idx * F.p + x;
  return idx;
}

inline FpVec index_vec(const Fp& F, int idx, int dim) {
  FpVec v(dim, 0);
  for (int i = dim - 1; i >= 0; --i) {
    v[i] = idx % F.p;
    idx /= F.p;
  }
  return v;
}

inline int pow_int(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Reduced row echelon form in place; returns the pivot column of each
// surviving row.  Deterministic: rows processed top-down, pivots chosen
// left-to-right.
inline std::vector<int> rref(const Fp& F, std::vector<std::vector<int>>& rows, int ncols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] % F.p == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    int s = F.inv(rows[r][c]);
    for (int j = 0; j < ncols; ++j) rows[r][j] = rows[r][j] * s % F.p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      int f = rows[i][c] % F.p;
      if (f == 0) continue;
      for (int j = 0; j < ncols; ++j)
        rows[i][j] = (rows[i][j] - f * rows[r][j] % F.p + F.p) % F.p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of the solution space of rows * x = 0, one vector per free column,
// in ascending free-column order.
inline std::vector<std::vector<int>> nullspace_basis(const Fp& F,
                                                     std::vector<std::vector<int>> rows,
                                                     int ncols) {
  for (auto& row : rows)
    for (int& x : row) x = (x % F.p + F.p) % F.p;
  std::vector<int> pivots = rref(F, rows, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<int>> basis;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(ncols, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(rows[r][c]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// All p^rank linear combinations of the basis, coefficient tuples iterated
// lexicographically.
inline std::vector<std::vector<int>> span_of(const Fp& F,
                                             const std::vector<std::vector<int>>& basis,
                                             int ncols) {
  std::vector<std::vector<int>> out;
  int total = pow_int(F.p, static_cast<int>(basis.size()));
  out.reserve(total);
  for (int t = 0; t < total; ++t) {
    FpVec coeff = index_vec(F, t, static_cast<int>(basis.size()));
    std::vector<int> v(ncols, 0);
    for (size_t b = 0; b < basis.size(); ++b) {
      if (coeff[b] == 0) continue;
      for (int j = 0; j < ncols; ++j) v[j] = (v[j] + coeff[b] * basis[b][j]) % F.p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline int matrix_rank(const Fp& F, std::vector<std::vector<int>> rows, int ncols) {
  return static_cast<int>(rref(F, rows, ncols).size());
}

// One solution of rows * x = rhs (free variables set to 0), or nullopt when
// inconsistent.
inline std::optional<std::vector<int>> solve_linear(const Fp& F,
                                                    std::vector<std::vector<int>> rows,
                                                    const std::vector<int>& rhs, int ncols) {
  for (size_t i = 0; i < rows.size(); ++i) rows[i].push_back(((rhs[i] % F.p) + F.p) % F.p);
  std::vector<int> pivots = rref(F, rows, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  std::vector<int> x(ncols, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][ncols];
  return x;
}

}  // namespace transhull
