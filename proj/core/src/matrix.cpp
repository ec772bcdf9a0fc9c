#include "lpc/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace lpc {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    fail(errc::overflow_error, "integer matrix arithmetic exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

// Extended gcd: g = gcd(|a|, |b|) with x*a + y*b = g.
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

}  // namespace

std::int64_t chk_add(std::int64_t a, std::int64_t b) {
  return narrow(static_cast<__int128>(a) + b);
}

std::int64_t chk_mul(std::int64_t a, std::int64_t b) {
  return narrow(static_cast<__int128>(a) * b);
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transpose() const {
  IntMat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::string IntMat::key() const {
  return std::string(reinterpret_cast<const char*>(a.data()),
                     a.size() * sizeof(std::int64_t));
}

IntMat imat_mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) fail(errc::internal_error, "matrix shape mismatch");
  IntMat z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < y.cols; ++c) {
      __int128 acc = 0;
      for (int k = 0; k < x.cols; ++k)
        acc += static_cast<__int128>(x.at(r, k)) * y.at(k, c);
      z.at(r, c) = narrow(acc);
    }
  return z;
}

IntVec imat_apply(const IntMat& m, const IntVec& v) {
  if (m.cols != static_cast<int>(v.size()))
    fail(errc::internal_error, "matrix/vector shape mismatch");
  IntVec out(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    __int128 acc = 0;
    for (int c = 0; c < m.cols; ++c)
      acc += static_cast<__int128>(m.at(r, c)) * v[c];
    out[r] = narrow(acc);
  }
  return out;
}

RatVec imat_apply(const IntMat& m, const RatVec& v) {
  if (m.cols != static_cast<int>(v.size()))
    fail(errc::internal_error, "matrix/vector shape mismatch");
  RatVec out(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    Rational acc;
    for (int c = 0; c < m.cols; ++c)
      if (m.at(r, c) != 0) acc += Rational(m.at(r, c)) * v[c];
    out[r] = acc;
  }
  return out;
}

std::int64_t ivec_dot(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) fail(errc::internal_error, "vector length mismatch");
  __int128 acc = 0;
  for (size_t i = 0; i < x.size(); ++i)
    acc += static_cast<__int128>(x[i]) * y[i];
  return narrow(acc);
}

Rational rvec_dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) fail(errc::internal_error, "vector length mismatch");
  Rational acc;
  for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RatMat RatMat::from_int(const IntMat& src) {
  RatMat m(src.rows, src.cols);
  for (int r = 0; r < src.rows; ++r)
    for (int c = 0; c < src.cols; ++c) m.at(r, c) = Rational(src.at(r, c));
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMat rmat_mul(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) fail(errc::internal_error, "matrix shape mismatch");
  RatMat z(x.rows, y.cols);
  for (int r = 0; r < x.rows; ++r)
    for (int c = 0; c < y.cols; ++c) {
      Rational acc;
      for (int k = 0; k < x.cols; ++k) acc += x.at(r, k) * y.at(k, c);
      z.at(r, c) = acc;
    }
  return z;
}

RatVec rmat_apply(const RatMat& m, const RatVec& v) {
  if (m.cols != static_cast<int>(v.size()))
    fail(errc::internal_error, "matrix/vector shape mismatch");
  RatVec out(m.rows);
  for (int r = 0; r < m.rows; ++r) {
    Rational acc;
    for (int c = 0; c < m.cols; ++c) acc += m.at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Rational pair_with_gram(const RatVec& x, const RatMat& gram, const RatVec& y) {
  return rvec_dot(x, rmat_apply(gram, y));
}

int int_rows_rank(const std::vector<IntVec>& rows, int n) {
  RatMat m(static_cast<int>(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < n; ++c) m.at(static_cast<int>(r), c) = Rational(rows[r][c]);
  int rank = 0;
  for (int col = 0; col < n && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col) / m.at(rank, col);
      for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b) {
  int m = A.rows, n = A.cols;
  RatMat aug(m, n + 1);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, n) = b[r];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int p = -1;
    for (int r = row; r < m; ++r)
      if (!aug.at(r, col).is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    for (int c = 0; c <= n; ++c) std::swap(aug.at(row, c), aug.at(p, c));
    Rational inv = Rational(1) / aug.at(row, col);
    for (int c = col; c <= n; ++c) aug.at(row, c) *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == row || aug.at(r, col).is_zero()) continue;
      Rational f = aug.at(r, col);
      for (int c = col; c <= n; ++c) aug.at(r, c) -= f * aug.at(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < m; ++r)
    if (!aug.at(r, n).is_zero()) return std::nullopt;
  RatVec x(n);
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = aug.at(r, n);
  return x;
}

std::optional<IntMat> int_inverse(const IntMat& m) {
  if (m.rows != m.cols) return std::nullopt;
  int n = m.rows;
  RatMat A = RatMat::from_int(m);
  IntMat inv(n, n);
  for (int col = 0; col < n; ++col) {
    RatVec e(n);
    e[col] = Rational(1);
    auto x = solve_linear(A, e);
    if (!x) return std::nullopt;
    // Confirm uniqueness by checking A * x == e (solve_linear already does),
    // and integrality.
    for (int r = 0; r < n; ++r) {
      if (!(*x)[r].is_integer()) return std::nullopt;
      inv.at(r, col) = (*x)[r].num();
    }
  }
  // A singular matrix with a consistent system would give a wrong "inverse";
  // verify the product.
  if (imat_mul(m, inv) != IntMat::identity(n)) return std::nullopt;
  return inv;
}

std::vector<IntVec> integer_kernel(const std::vector<IntVec>& constraints, int n) {
  // Columns of U form a basis of the solution lattice of the constraints
  // processed so far; each new constraint row c is absorbed by unimodular
  // column operations that concentrate the pairing gcd in one column, which
  // is then dropped.  The result is automatically saturated.
  std::vector<IntVec> cols(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) cols[i][i] = 1;
  for (const auto& c : constraints) {
    if (static_cast<int>(c.size()) != n)
      fail(errc::internal_error, "constraint length mismatch");
    if (cols.empty()) break;
    std::vector<std::int64_t> d(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) d[j] = ivec_dot(c, cols[j]);
    int lead = -1;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (d[j] == 0) continue;
      if (lead < 0) {
        lead = static_cast<int>(j);
        continue;
      }
      std::int64_t x, y;
      std::int64_t g = xgcd(d[lead], d[j], x, y);
      std::int64_t a = d[lead] / g, b = d[j] / g;
      IntVec u(n), v(n);
      for (int r = 0; r < n; ++r) {
        u[r] = chk_add(chk_mul(x, cols[lead][r]), chk_mul(y, cols[j][r]));
        v[r] = chk_add(chk_mul(-b, cols[lead][r]), chk_mul(a, cols[j][r]));
      }
      cols[lead] = u;
      cols[j] = v;
      d[lead] = g;
      d[j] = 0;
    }
    if (lead >= 0) cols.erase(cols.begin() + lead);
  }
  std::vector<IntVec> rows(cols.begin(), cols.end());
  return hermite_rows(std::move(rows), n);
}

std::vector<IntVec> hermite_rows(std::vector<IntVec> rows, int n) {
  int m = static_cast<int>(rows.size());
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    // Gather the gcd of this column into `row`, zero it below.
    int nz = -1;
    for (int r = row; r < m; ++r)
      if (rows[r][col] != 0) {
        nz = r;
        break;
      }
    if (nz < 0) continue;
    std::swap(rows[row], rows[nz]);
    for (int r = row + 1; r < m; ++r) {
      while (rows[r][col] != 0) {
        std::int64_t x, y;
        std::int64_t g = xgcd(rows[row][col], rows[r][col], x, y);
        std::int64_t a = rows[row][col] / g, b = rows[r][col] / g;
        IntVec top(n), bot(n);
        for (int c = 0; c < n; ++c) {
          top[c] = chk_add(chk_mul(x, rows[row][c]), chk_mul(y, rows[r][c]));
          bot[c] = chk_add(chk_mul(-b, rows[row][c]), chk_mul(a, rows[r][c]));
        }
        rows[row] = top;
        rows[r] = bot;
      }
    }
    if (rows[row][col] < 0)
      for (int c = 0; c < n; ++c) rows[row][c] = -rows[row][c];
    // Reduce entries above the pivot into [0, pivot).
    for (int r = 0; r < row; ++r) {
      std::int64_t p = rows[row][col];
      std::int64_t q = rows[r][col] / p;
      if (rows[r][col] % p < 0) --q;
      if (q != 0)
        for (int c = 0; c < n; ++c)
          rows[r][c] = chk_add(rows[r][c], chk_mul(-q, rows[row][c]));
    }
    ++row;
  }
  rows.resize(row);
  return rows;
}

}  // namespace lpc
