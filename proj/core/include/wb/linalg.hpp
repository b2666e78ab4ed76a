#ifndef WB_LINALG_HPP
#define WB_LINALG_HPP

#include <optional>
#include <vector>

#include "wb/cyclotomic.hpp"

namespace wb {

using CycVec = std::vector<CycNum>;
using CycMat = std::vector<CycVec>;  // row-major

CycMat mat_identity(int n, int conductor);
CycMat mat_mul(const CycMat& a, const CycMat& b);
CycVec mat_apply(const CycMat& a, const CycVec& v);
CycNum mat_det(CycMat a);
CycMat mat_inverse(const CycMat& a);  // throws if singular
bool mat_equal(const CycMat& a, const CycMat& b);
CycMat mat_scale(const CycMat& a, const CycNum& s);
CycMat mat_add(const CycMat& a, const CycMat& b);

/// Incremental row space in reduced echelon form.  The workhorse for all
/// graded linear algebra: span membership, rank, independent complements.
class RowSpan {
 public:
  explicit RowSpan(int ncols) : ncols_(ncols) {}

  /// Residual of v after reduction against the current span.
  CycVec reduce(CycVec v) const;

  /// Insert v; returns true if it enlarged the span.
  bool insert(CycVec v);

  bool contains(const CycVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  const std::vector<CycVec>& rows() const { return rows_; }

 private:
  int ncols_;
  std::vector<CycVec> rows_;   // reduced echelon rows, pivot entry = 1
  std::vector<int> pivots_;    // pivot column of each row
};

/// Basis of the right kernel { x : A x = 0 }.
std::vector<CycVec> kernel_basis(const CycMat& a);

/// One solution of A x = b, if consistent.
std::optional<CycVec> solve(const CycMat& a, const CycVec& b);

int rank(const CycMat& a);

}  // namespace wb

#endif
