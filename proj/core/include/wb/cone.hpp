#ifndef WB_CONE_HPP
#define WB_CONE_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace wb {

struct ConeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<mpq_class>;

/// Divide by the gcd of the entries; the zero vector is unchanged.
ZVec primitive(ZVec v);
mpz_class dot(const ZVec& a, const ZVec& b);
mpq_class dot_q(const ZVec& a, const QVec& b);
ZVec z_of_q(const QVec& v);  // clear denominators, primitive

/// Closed convex rational polyhedral cone, held in double description:
/// generators (lineality basis + extreme rays) and a dual description
/// (span equations + irredundant facet normals).  Both sides are kept in
/// a canonical form - primitive vectors, rays and facets sorted
/// lexicographically, lineality and equations as reduced integer echelon
/// bases - so equal cones compare equal componentwise.
class Cone {
 public:
  Cone() = default;

  static Cone from_rays(int dim, const std::vector<ZVec>& rays);
  static Cone from_generators(int dim, const std::vector<ZVec>& rays,
                              const std::vector<ZVec>& lineality);
  /// { x : n.x >= 0 for all normals, e.x = 0 for all equations }
  static Cone from_inequalities(int dim, const std::vector<ZVec>& normals,
                                const std::vector<ZVec>& equations = {});

  int ambient_dim() const { return ambient_; }
  int dim() const;
  int lineality_dim() const { return static_cast<int>(lineality_.size()); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_fulldim() const { return dim() == ambient_; }
  bool is_zero() const { return rays_.empty() && lineality_.empty(); }

  const std::vector<ZVec>& rays() const { return rays_; }
  const std::vector<ZVec>& lineality() const { return lineality_; }
  const std::vector<ZVec>& facets() const { return facets_; }
  const std::vector<ZVec>& equations() const { return equations_; }

  bool contains(const ZVec& v) const;
  bool contains(const QVec& v) const;
  /// v in the relative interior: on the span, strictly inside each facet.
  bool contains_relint(const ZVec& v) const;
  bool contains_relint(const QVec& v) const;
  bool contains_cone(const Cone& other) const;

  /// Sum of the extreme rays: a relative-interior point (the origin for
  /// the zero cone or a linear subspace).
  ZVec relint_point() const;

  Cone dual() const;
  Cone intersect(const Cone& other) const;
  /// Image under the linear map with the given rows (m x n matrix).
  Cone image(const ZMat& matrix) const;
  /// The face { x in C : normal.x = 0 }; normal must be valid on C
  /// (nonnegative on every ray).
  Cone face(const ZVec& normal) const;

  bool operator==(const Cone& o) const {
    return ambient_ == o.ambient_ && rays_ == o.rays_ &&
           lineality_ == o.lineality_;
  }
  bool operator!=(const Cone& o) const { return !(*this == o); }
  bool operator<(const Cone& o) const;  // deterministic total order

  std::string str() const;

 private:
  int ambient_ = 0;
  std::vector<ZVec> rays_;       // extreme rays, primitive, sorted
  std::vector<ZVec> lineality_;  // canonical integer echelon basis
  std::vector<ZVec> facets_;     // irredundant facet normals, sorted
  std::vector<ZVec> equations_;  // canonical basis of the span's normals
};

}  // namespace wb

#endif
