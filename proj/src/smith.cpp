#include "ordext/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "ordext/error.hpp"

namespace ordext {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, Int c) {
  for (std::size_t k = 0; k < m[dst].size(); ++k)
    m[dst][k] = checked_add(m[dst][k], checked_mul(c, m[src][k]));
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, Int c) {
  for (auto& row : m) row[dst] = checked_add(row[dst], checked_mul(c, row[src]));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
  const std::size_t m = a.size();
  const std::size_t n = cols;
  for (const auto& row : a)
    if (row.size() != n)
      throw Error(ErrorKind::RankMismatch, "ragged matrix passed to smith_normal_form");

  SmithForm out;
  out.diagonal = a;
  out.left = identity(m);
  out.right = identity(n);
  IntMatrix& d = out.diagonal;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = m, pj = n;
      Int best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d[i][j] != 0 && (best == 0 || std::llabs(d[i][j]) < best)) {
            best = std::llabs(d[i][j]);
            pi = i;
            pj = j;
          }
      if (pi == m) {
        out.rank = t;
        goto finished;
      }
      std::swap(d[t], d[pi]);
      std::swap(out.left[t], out.left[pi]);
      swap_cols(d, t, pj);
      swap_cols(out.right, t, pj);

      bool clear = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d[i][t] == 0) continue;
        Int q = floor_div(d[i][t], d[t][t]);
        row_axpy(d, i, t, -q);
        row_axpy(out.left, i, t, -q);
        if (d[i][t] != 0) clear = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d[t][j] == 0) continue;
        Int q = floor_div(d[t][j], d[t][t]);
        col_axpy(d, j, t, -q);
        col_axpy(out.right, j, t, -q);
        if (d[t][j] != 0) clear = false;
      }
      if (!clear) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d[i][j] % d[t][t] != 0) {
            row_axpy(d, t, i, 1);
            row_axpy(out.left, t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : out.left[t]) x = -x;
    }
    out.rank = t + 1;
  }
finished:
  for (std::size_t t = 0; t < out.rank; ++t) out.divisors.push_back(d[t][t]);
  return out;
}

IntMatrix hermite_rows(IntMatrix rows, std::size_t cols) {
  std::size_t cur = 0;
  for (std::size_t c = 0; c < cols && cur < rows.size(); ++c) {
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t r = cur; r < rows.size(); ++r)
        if (rows[r][c] != 0 &&
            (pivot == rows.size() || std::llabs(rows[r][c]) < std::llabs(rows[pivot][c])))
          pivot = r;
      if (pivot == rows.size()) break;
      std::swap(rows[cur], rows[pivot]);
      bool done = true;
      for (std::size_t r = cur + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        row_axpy(rows, r, cur, -floor_div(rows[r][c], rows[cur][c]));
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (cur < rows.size() && rows[cur][c] != 0) {
      if (rows[cur][c] < 0)
        for (auto& x : rows[cur]) x = -x;
      for (std::size_t r = 0; r < cur; ++r)
        row_axpy(rows, r, cur, -floor_div(rows[r][c], rows[cur][c]));
      ++cur;
    }
  }
  rows.resize(cur);
  return rows;
}

std::optional<IntegralSolution> solve_integral(const IntMatrix& a, std::size_t cols,
                                               const IntVec& b) {
  if (b.size() != a.size())
    throw Error(ErrorKind::RankMismatch, "right-hand side has wrong length");
  SmithForm snf = smith_normal_form(a, cols);
  IntVec ub(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) ub[i] = pairing(snf.left[i], b);

  IntVec y(cols, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.divisors[i] != 0) return std::nullopt;
      y[i] = ub[i] / snf.divisors[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntegralSolution sol;
  sol.particular.assign(cols, 0);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t j = 0; j < cols; ++j)
      sol.particular[r] = checked_add(sol.particular[r], checked_mul(snf.right[r][j], y[j]));
  for (std::size_t j = snf.rank; j < cols; ++j) {
    IntVec k(cols);
    for (std::size_t r = 0; r < cols; ++r) k[r] = snf.right[r][j];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

IntVec reduce_modulo_lattice(IntVec x, const IntMatrix& kernel, std::size_t cols) {
  if (kernel.empty()) return x;
  auto reversed = [](const IntVec& v) { return IntVec(v.rbegin(), v.rend()); };
  IntMatrix rev;
  for (const auto& k : kernel) rev.push_back(reversed(k));
  IntMatrix h = hermite_rows(std::move(rev), cols);
  IntVec xr = reversed(x);
  for (const auto& row : h) {
    std::size_t pc = 0;
    while (row[pc] == 0) ++pc;
    Int q = floor_div(xr[pc], row[pc]);
    for (std::size_t k = 0; k < cols; ++k) xr[k] = checked_add(xr[k], checked_mul(-q, row[k]));
  }
  return reversed(xr);
}

}  // namespace ordext
