#include "agr/smith.h"

#include <algorithm>

namespace agr {

namespace {

void swap_rows(IntMatrix& A, IntMatrix& U, size_t a, size_t b) {
  if (a == b) return;
  std::swap(A[a], A[b]);
  std::swap(U[a], U[b]);
}

void swap_cols(IntMatrix& A, size_t a, size_t b) {
  if (a == b) return;
  for (auto& row : A) std::swap(row[a], row[b]);
}

// row[a] -= q * row[b]
void row_axpy(IntMatrix& A, IntMatrix& U, size_t a, size_t b, const mpz_class& q) {
  if (q == 0) return;
  for (size_t j = 0; j < A[a].size(); ++j) A[a][j] -= q * A[b][j];
  for (size_t j = 0; j < U[a].size(); ++j) U[a][j] -= q * U[b][j];
}

// col[a] -= q * col[b]
void col_axpy(IntMatrix& A, size_t a, size_t b, const mpz_class& q) {
  if (q == 0) return;
  for (auto& row : A) row[a] -= q * row[b];
}

void negate_row(IntMatrix& A, IntMatrix& U, size_t a) {
  for (auto& x : A[a]) x = -x;
  for (auto& x : U[a]) x = -x;
}

}  // namespace

SmithResult smith_left(IntMatrix A) {
  size_t n = A.size();
  size_t m = n == 0 ? 0 : A[0].size();
  SmithResult out;
  out.U.assign(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < n; ++i) out.U[i][i] = 1;

  size_t k = 0;
  while (k < n && k < m) {
    // Global pivot: smallest nonzero magnitude in the trailing block.
    size_t pi = k, pj = k;
    mpz_class best = 0;
    for (size_t i = k; i < n; ++i)
      for (size_t j = k; j < m; ++j) {
        if (A[i][j] == 0) continue;
        mpz_class a = abs(A[i][j]);
        if (best == 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(A, out.U, k, pi);
    swap_cols(A, k, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear the pivot column with row operations.
      for (size_t i = k + 1; i < n; ++i) {
        while (A[i][k] != 0) {
          mpz_class q = A[i][k] / A[k][k];  // truncated
          row_axpy(A, out.U, i, k, q);
          if (A[i][k] != 0) {
            swap_rows(A, out.U, i, k);
            dirty = true;
          }
        }
      }
      // Clear the pivot row with column operations.
      for (size_t j = k + 1; j < m; ++j) {
        while (A[k][j] != 0) {
          mpz_class q = A[k][j] / A[k][k];
          col_axpy(A, j, k, q);
          if (A[k][j] != 0) {
            swap_cols(A, j, k);
            dirty = true;
          }
        }
      }
    }
    if (A[k][k] < 0) negate_row(A, out.U, k);
    ++k;
  }
  out.rank = static_cast<int>(k);

  // Enforce the divisibility chain d_i | d_{i+1}.
  bool fixed = true;
  while (fixed) {
    fixed = false;
    for (size_t i = 0; i + 1 < k; ++i) {
      if (A[i + 1][i + 1] % A[i][i] == 0) continue;
      fixed = true;
      // Fold the pair (d_i, d_{i+1}) to (gcd, lcm) with tracked operations.
      col_axpy(A, i, i + 1, mpz_class(-1));  // col_i += col_{i+1}
      while (A[i + 1][i] != 0) {
        mpz_class q = A[i][i] / A[i + 1][i];
        if (q != 0) row_axpy(A, out.U, i, i + 1, q);
        swap_rows(A, out.U, i, i + 1);
      }
      // Row i now holds the gcd at (i, i); clear the fill-in at (i, i+1).
      mpz_class q = A[i][i + 1] / A[i][i];
      col_axpy(A, i + 1, i, q);
      if (A[i][i] < 0) negate_row(A, out.U, i);
      if (A[i + 1][i + 1] < 0) negate_row(A, out.U, i + 1);
    }
  }

  out.diag.reserve(k);
  for (size_t i = 0; i < k; ++i) out.diag.push_back(A[i][i]);
  return out;
}

IntMatrix hnf_rows(IntMatrix P) {
  size_t n = P.size();
  size_t m = n == 0 ? 0 : P[0].size();
  size_t r = 0;
  for (size_t col = 0; col < m && r < n; ++col) {
    // Euclid down the column until at most one nonzero remains at row r.
    while (true) {
      size_t pick = n;
      for (size_t i = r; i < n; ++i)
        if (P[i][col] != 0 && (pick == n || abs(P[i][col]) < abs(P[pick][col]))) pick = i;
      if (pick == n) break;
      std::swap(P[r], P[pick]);
      bool cleared = true;
      for (size_t i = r + 1; i < n; ++i) {
        if (P[i][col] == 0) continue;
        mpz_class q = P[i][col] / P[r][col];
        for (size_t j = 0; j < m; ++j) P[i][j] -= q * P[r][j];
        if (P[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (P[r][col] == 0) continue;
    if (P[r][col] < 0)
      for (size_t j = 0; j < m; ++j) P[r][j] = -P[r][j];
    for (size_t i = 0; i < r; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), P[i][col].get_mpz_t(), P[r][col].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < m; ++j) P[i][j] -= q * P[r][j];
    }
    ++r;
  }
  return P;
}

Abelianization abelianize(const Presentation& p) {
  int g = p.ngens(), r = p.nrels();
  // Columns are relators: the map Z^r -> Z^g whose cokernel is G^ab.
  IntMatrix A(g, std::vector<mpz_class>(r, 0));
  for (int j = 0; j < r; ++j) {
    std::vector<long long> e = p.relators()[j].exponent_sums(g);
    for (int i = 0; i < g; ++i) A[i][j] = static_cast<long>(e[i]);
  }
  SmithResult snf = smith_left(std::move(A));

  Abelianization ab;
  ab.rank = g - snf.rank;
  for (const mpz_class& d : snf.diag)
    if (d > 1) {
      if (!d.fits_slong_p()) fail(ErrorCode::Internal, "torsion factor exceeds word size");
      ab.torsion.push_back(d.get_si());
    }

  // Left-kernel rows of U project to the free part; Hermite form fixes the
  // basis so equal presentations give equal images.
  IntMatrix proj(ab.rank, std::vector<mpz_class>(g, 0));
  for (int i = 0; i < ab.rank; ++i) proj[i] = snf.U[snf.rank + i];
  proj = hnf_rows(std::move(proj));

  ab.images.assign(g, std::vector<long long>(ab.rank, 0));
  for (int i = 0; i < ab.rank; ++i)
    for (int j = 0; j < g; ++j) {
      if (!proj[i][j].fits_slong_p()) fail(ErrorCode::Internal, "image exceeds word size");
      ab.images[j][i] = proj[i][j].get_si();
    }
  return ab;
}

}  // namespace agr
