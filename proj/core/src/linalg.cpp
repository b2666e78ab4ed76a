#include "wb/linalg.hpp"

#include <algorithm>

namespace wb {

CycMat mat_identity(int n, int conductor) {
  CycMat m(n, CycVec(n, CycNum(conductor)));
  for (int i = 0; i < n; ++i) m[i][i] = CycNum(conductor, 1);
  return m;
}

CycMat mat_mul(const CycMat& a, const CycMat& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = static_cast<int>(b[0].size());
  int cond = a[0][0].conductor();
  CycMat c(n, CycVec(m, CycNum(cond)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

CycVec mat_apply(const CycMat& a, const CycVec& v) {
  int cond = a[0][0].conductor();
  CycVec out(a.size(), CycNum(cond));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
  return out;
}

CycNum mat_det(CycMat a) {
  int n = static_cast<int>(a.size());
  int cond = a.empty() ? 1 : a[0][0].conductor();
  CycNum det(cond, 1);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!a[i][col].is_zero()) { p = i; break; }
    if (p < 0) return CycNum(cond);
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    CycNum inv = a[col][col].inverse();
    for (int i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      CycNum f = a[i][col] * inv;
      for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

CycMat mat_inverse(const CycMat& a) {
  int n = static_cast<int>(a.size());
  int cond = a[0][0].conductor();
  CycMat m = a;
  CycMat inv = mat_identity(n, cond);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!m[i][col].is_zero()) { p = i; break; }
    if (p < 0) throw ArithmeticError("matrix not invertible");
    std::swap(m[p], m[col]);
    std::swap(inv[p], inv[col]);
    CycNum f = m[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      m[col][j] = m[col][j] * f;
      inv[col][j] = inv[col][j] * f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      CycNum g = m[i][col];
      for (int j = 0; j < n; ++j) {
        m[i][j] -= g * m[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

bool mat_equal(const CycMat& a, const CycMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

CycMat mat_scale(const CycMat& a, const CycNum& s) {
  CycMat c = a;
  for (auto& row : c)
    for (auto& x : row) x = x * s;
  return c;
}

CycMat mat_add(const CycMat& a, const CycMat& b) {
  CycMat c = a;
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

CycVec RowSpan::reduce(CycVec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const CycNum& coef = v[pivots_[r]];
    if (coef.is_zero()) continue;
    CycNum f = coef;  // pivot entries are 1
    for (int j = 0; j < ncols_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool RowSpan::insert(CycVec v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < ncols_; ++j)
    if (!v[j].is_zero()) { pivot = j; break; }
  if (pivot < 0) return false;
  CycNum inv = v[pivot].inverse();
  for (int j = pivot; j < ncols_; ++j)
    if (!v[j].is_zero()) v[j] = v[j] * inv;
  // Back-substitute into existing rows to keep reduced form.
  for (size_t r = 0; r < rows_.size(); ++r) {
    CycNum f = rows_[r][pivot];
    if (f.is_zero()) continue;
    for (int j = 0; j < ncols_; ++j)
      if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpan::contains(const CycVec& v) const {
  CycVec r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [](const CycNum& x) { return x.is_zero(); });
}

std::vector<CycVec> kernel_basis(const CycMat& a) {
  if (a.empty()) return {};
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int cond = a[0][0].conductor();
  CycMat m = a;
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (!m[i][col].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    CycNum inv = m[rank][col].inverse();
    for (int j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      CycNum f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  std::vector<CycVec> basis;
  for (int col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    CycVec v(cols, CycNum(cond));
    v[col] = CycNum(cond, 1);
    for (int c2 = 0; c2 < col; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = -m[pivot_of_col[c2]][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycVec> solve(const CycMat& a, const CycVec& b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int cond = b.empty() ? (rows ? a[0][0].conductor() : 1) : b[0].conductor();
  CycMat m = a;
  for (int i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int i = rank; i < rows; ++i)
      if (!m[i][col].is_zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[p], m[rank]);
    CycNum inv = m[rank][col].inverse();
    for (int j = col; j <= cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      CycNum f = m[i][col];
      for (int j = col; j <= cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_of_col[col] = rank;
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (!m[i][cols].is_zero()) return std::nullopt;
  CycVec x(cols, CycNum(cond));
  for (int col = 0; col < cols; ++col)
    if (pivot_of_col[col] >= 0) x[col] = m[pivot_of_col[col]][cols];
  return x;
}

int rank(const CycMat& a) {
  if (a.empty()) return 0;
  RowSpan span(static_cast<int>(a[0].size()));
  for (const auto& row : a) span.insert(row);
  return span.rank();
}

}  // namespace wb
