#include "ips/certify.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "ips/errors.hpp"

namespace ips {

namespace {

// q = num / den, which must divide exactly.
Int exact_div(const Int& num, const Int& den) {
  assert(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()));
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Doubled Gram matrix relative to point 0: H[i][j] = d0i^2 + d0j^2 - dij^2
// for i,j in 1..n-1. Doubling keeps everything integral; rank and
// semidefiniteness match the true Gram matrix.
std::vector<Int> doubled_gram(const SquaredDistanceMatrix& sdm) {
  const int N = sdm.size() - 1;
  std::vector<Int> H(static_cast<std::size_t>(N) * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      H[static_cast<std::size_t>(i) * N + j] =
          sdm.at(0, i + 1) + sdm.at(0, j + 1) - sdm.at(i + 1, j + 1);
  return H;
}

}  // namespace

Int cayley_menger_det(const SquaredDistanceMatrix& sdm, std::span<const int> subset) {
  if (subset.empty()) throw std::invalid_argument("cayley_menger_det: empty subset");
  std::vector<char> seen(sdm.size(), 0);
  for (int idx : subset) {
    if (idx < 0 || idx >= sdm.size()) throw std::out_of_range("cayley_menger_det: index");
    if (seen[idx]) throw std::invalid_argument("cayley_menger_det: repeated index");
    seen[idx] = 1;
  }

  const int k = static_cast<int>(subset.size());
  const int n = k + 1;  // bordered size
  std::vector<Int> a(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
  at(0, 0) = 0;
  for (int i = 0; i < k; ++i) {
    at(0, i + 1) = 1;
    at(i + 1, 0) = 1;
    for (int j = 0; j < k; ++j) at(i + 1, j + 1) = sdm.at(subset[i], subset[j]);
  }

  // Bareiss fraction-free elimination with row pivoting.
  Int prev(1);
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (sgn(at(r, col)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Int(0);
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      sign = -sign;
    }
    const Int p = at(col, col);
    for (int r = col + 1; r < n; ++r) {
      for (int j = col + 1; j < n; ++j)
        at(r, j) = exact_div(at(r, j) * p - at(r, col) * at(col, j), prev);
      at(r, col) = 0;
    }
    prev = p;
  }
  return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

std::optional<int> embedding_dimension(const SquaredDistanceMatrix& sdm) {
  const int N = sdm.size() - 1;
  if (N <= 0) return 0;
  std::vector<Int> A = doubled_gram(sdm);
  auto at = [&](int i, int j) -> Int& { return A[static_cast<std::size_t>(i) * N + j]; };

  std::vector<char> done(N, 0);
  Int prev(1);
  int rank = 0;
  for (;;) {
    // Any negative diagonal entry of a (positively scaled) Schur
    // complement rules out semidefiniteness.
    int piv = -1;
    for (int i = 0; i < N; ++i) {
      if (done[i]) continue;
      const int s = sgn(at(i, i));
      if (s < 0) return std::nullopt;
      if (s > 0 && (piv < 0 || at(i, i) > at(piv, piv))) piv = i;
    }
    if (piv < 0) {
      // Remaining diagonal is all zero: PSD forces the whole block to
      // vanish, otherwise a 2x2 indefinite minor remains.
      for (int i = 0; i < N; ++i) {
        if (done[i]) continue;
        for (int j = 0; j < N; ++j)
          if (!done[j] && sgn(at(i, j)) != 0) return std::nullopt;
      }
      return rank;
    }
    ++rank;
    done[piv] = 1;
    const Int p = at(piv, piv);
    for (int i = 0; i < N; ++i) {
      if (done[i]) continue;
      for (int j = 0; j < N; ++j) {
        if (done[j]) continue;
        at(i, j) = exact_div(at(i, j) * p - at(i, piv) * at(piv, j), prev);
      }
    }
    prev = p;
  }
}

std::optional<Certificate> certify(const SquaredDistanceMatrix& sdm,
                                   std::optional<int> expected_dim) {
  auto dim = embedding_dimension(sdm);
  if (!dim) return std::nullopt;
  Certificate c;
  c.dim = *dim;
  c.diameter_squared = sdm.diameter_squared();
  c.integral = sdm.all_entries_square();
  if (c.integral) c.diameter = exact_sqrt(c.diameter_squared);
  if (expected_dim) {
    c.expected_dim = expected_dim;
    c.dim_mismatch = (*expected_dim != c.dim);
  }
  return c;
}

std::optional<Rat> circumradius_squared(const SquaredDistanceMatrix& sdm) {
  if (!embedding_dimension(sdm))
    throw NotRealizable("circumradius_squared: matrix is not realizable");
  const int N = sdm.size() - 1;
  if (N == 0) return Rat(0);

  // G x = diag(G)/2 with G the Gram matrix relative to point 0. A center
  // c = sum x_i p_i in the affine hull is equidistant from all points iff
  // x solves this system; then R^2 = |c|^2 = x . diag(G)/2.
  std::vector<Rat> M(static_cast<std::size_t>(N) * (N + 1));
  auto at = [&](int i, int j) -> Rat& { return M[static_cast<std::size_t>(i) * (N + 1) + j]; };
  std::vector<Rat> g(N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      Rat v(sdm.at(0, i + 1) + sdm.at(0, j + 1) - sdm.at(i + 1, j + 1), 2);
      v.canonicalize();
      at(i, j) = v;
    }
    g[i] = at(i, i);
    at(i, N) = g[i] / 2;
  }

  // Gauss-Jordan over exact rationals.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < N && row < N; ++col) {
    int piv = -1;
    for (int r = row; r < N; ++r)
      if (sgn(at(r, col)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j <= N; ++j) std::swap(at(piv, j), at(row, j));
    const Rat p = at(row, col);
    for (int j = col; j <= N; ++j) at(row, j) /= p;
    for (int r = 0; r < N; ++r) {
      if (r == row || sgn(at(r, col)) == 0) continue;
      const Rat f = at(r, col);
      for (int j = col; j <= N; ++j) at(r, j) -= f * at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < N; ++r)
    if (sgn(at(r, N)) != 0) return std::nullopt;  // inconsistent: no common sphere

  // Particular solution with free variables zero.
  std::vector<Rat> x(N, Rat(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = at(r, N);
  Rat r2(0);
  for (int i = 0; i < N; ++i) r2 += x[i] * g[i];
  r2 /= 2;
  return r2;
}

Realization realize_coordinates(const SquaredDistanceMatrix& sdm) {
  auto dim = embedding_dimension(sdm);
  if (!dim) throw NotRealizable("realize_coordinates: matrix is not realizable");
  const int n = sdm.size();
  const int N = n - 1;
  const int d = *dim;

  Realization out;
  out.dim = d;
  out.coords.assign(n, std::vector<double>(d, 0.0));
  if (d == 0) return out;

  // Pivoted outer-product Cholesky of the exact Gram matrix. The Schur
  // updates stay rational, so rank deficiency shows up as exact zeros
  // after d steps; square roots happen only on the way out.
  std::vector<Rat> A(static_cast<std::size_t>(N) * N);
  auto at = [&](int i, int j) -> Rat& { return A[static_cast<std::size_t>(i) * N + j]; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Rat v(sdm.at(0, i + 1) + sdm.at(0, j + 1) - sdm.at(i + 1, j + 1), 2);
      v.canonicalize();
      at(i, j) = v;
    }

  std::vector<char> done(N, 0);
  for (int axis = 0; axis < d; ++axis) {
    int piv = -1;
    for (int i = 0; i < N; ++i)
      if (!done[i] && sgn(at(i, i)) > 0 && (piv < 0 || at(i, i) > at(piv, piv))) piv = i;
    if (piv < 0) throw NotRealizable("realize_coordinates: rank collapse");
    const Rat p = at(piv, piv);
    const double sp = std::sqrt(p.get_d());
    for (int i = 0; i < N; ++i)
      if (!done[i]) out.coords[i + 1][axis] = at(i, piv).get_d() / sp;
    out.coords[piv + 1][axis] = sp;
    done[piv] = 1;
    for (int i = 0; i < N; ++i) {
      if (done[i]) continue;
      for (int j = 0; j < N; ++j) {
        if (done[j]) continue;
        at(i, j) -= at(i, piv) * at(piv, j) / p;
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) {
        const double diff = out.coords[i][k] - out.coords[j][k];
        s += diff * diff;
      }
      const double res = std::fabs(s - sdm.at(i, j).get_d());
      if (res > out.max_residual) out.max_residual = res;
    }
  return out;
}

}  // namespace ips
