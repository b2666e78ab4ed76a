#include "wb/cone.hpp"

#include <algorithm>
#include <sstream>

namespace wb {

ZVec primitive(ZVec v) {
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  return v;
}

mpz_class dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw ConeError("dot: dimension mismatch");
  mpz_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpq_class dot_q(const ZVec& a, const QVec& b) {
  if (a.size() != b.size()) throw ConeError("dot: dimension mismatch");
  mpq_class s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += mpq_class(a[i]) * b[i];
  return s;
}

ZVec z_of_q(const QVec& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  ZVec out;
  for (const auto& x : v) {
    mpq_class scaled = x * mpq_class(den);
    out.push_back(scaled.get_num());
  }
  return primitive(std::move(out));
}

namespace {

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<int> rref(std::vector<QVec>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int ncols = static_cast<int>(m[0].size());
  size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    mpq_class inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (int c = 0; c < ncols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

std::vector<QVec> to_q(const std::vector<ZVec>& rows) {
  std::vector<QVec> q;
  for (const auto& r : rows) {
    QVec qr;
    for (const auto& x : r) qr.emplace_back(x);
    q.push_back(std::move(qr));
  }
  return q;
}

/// Canonical integer echelon basis of the row span.
std::vector<ZVec> echelon_z(const std::vector<ZVec>& rows) {
  auto q = to_q(rows);
  rref(q);
  std::vector<ZVec> out;
  for (const auto& r : q) out.push_back(z_of_q(r));
  return out;
}

/// Integer basis of { x : e.x = 0 for all rows e }.
std::vector<ZVec> kernel_z(const std::vector<ZVec>& eqs, int dim) {
  auto q = to_q(eqs);
  auto pivots = rref(q);
  std::vector<bool> is_pivot(dim, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<ZVec> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    QVec v(dim, 0);
    v[free] = 1;
    for (size_t r = 0; r < q.size(); ++r) v[pivots[r]] = -q[r][free];
    basis.push_back(z_of_q(v));
  }
  return basis;
}

/// Reduce v modulo the span of an echelon basis (positive rescaling
/// only, so ray directions survive).
ZVec reduce_mod(const ZVec& v, const std::vector<ZVec>& echelon) {
  if (echelon.empty()) return primitive(v);
  QVec q;
  for (const auto& x : v) q.emplace_back(x);
  for (const auto& row : echelon) {
    int pivot = 0;
    while (row[pivot] == 0) ++pivot;
    mpq_class f = q[pivot] / mpq_class(row[pivot]);
    if (f == 0) continue;
    for (size_t c = 0; c < q.size(); ++c) q[c] -= f * mpq_class(row[c]);
  }
  return z_of_q(q);
}

struct DDRay {
  ZVec v;
  std::vector<char> tight;  // over the processed inequality indices
};

struct DDResult {
  std::vector<ZVec> lineality;
  std::vector<ZVec> rays;
};

/// Double description: generators of { x : n.x >= 0, e.x = 0 }.
DDResult dd_pair(int dim, const std::vector<ZVec>& normals,
                 const std::vector<ZVec>& equations) {
  std::vector<ZVec> lin = equations.empty()
                              ? kernel_z({}, dim)
                              : kernel_z(equations, dim);
  std::vector<DDRay> rays;
  int total = static_cast<int>(normals.size());

  for (int idx = 0; idx < total; ++idx) {
    const ZVec& a = normals[idx];
    if (static_cast<int>(a.size()) != dim)
      throw ConeError("inequality dimension mismatch");

    // Case 1: the inequality is active on the lineality space.
    int hit = -1;
    for (size_t i = 0; i < lin.size(); ++i) {
      if (dot(a, lin[i]) != 0) {
        hit = static_cast<int>(i);
        break;
      }
    }
    if (hit >= 0) {
      ZVec l0 = lin[hit];
      mpz_class al0 = dot(a, l0);
      if (al0 < 0) {
        for (auto& x : l0) x = -x;
        al0 = -al0;
      }
      std::vector<ZVec> new_lin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == hit) continue;
        mpz_class al = dot(a, lin[i]);
        ZVec l(dim);
        for (int c = 0; c < dim; ++c) l[c] = al0 * lin[i][c] - al * l0[c];
        new_lin.push_back(primitive(std::move(l)));
      }
      lin = std::move(new_lin);
      for (auto& r : rays) {
        mpz_class ar = dot(a, r.v);
        ZVec w(dim);
        for (int c = 0; c < dim; ++c) w[c] = al0 * r.v[c] - ar * l0[c];
        r.v = primitive(std::move(w));
        r.tight.push_back(1);
      }
      DDRay nr;
      nr.v = primitive(std::move(l0));
      nr.tight.assign(idx, 1);  // in the old lineality: tight everywhere
      nr.tight.push_back(0);
      rays.push_back(std::move(nr));
      continue;
    }

    // Case 2: classic step on the ray list.
    std::vector<int> pos, zer, neg;
    std::vector<mpz_class> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back(static_cast<int>(i));
      else if (val[i] == 0)
        zer.push_back(static_cast<int>(i));
      else
        neg.push_back(static_cast<int>(i));
    }
    if (neg.empty()) {
      for (size_t i = 0; i < rays.size(); ++i)
        rays[i].tight.push_back(val[i] == 0 ? 1 : 0);
      continue;
    }
    std::vector<DDRay> next;
    for (int i : pos) {
      DDRay r = rays[i];
      r.tight.push_back(0);
      next.push_back(std::move(r));
    }
    for (int i : zer) {
      DDRay r = rays[i];
      r.tight.push_back(1);
      next.push_back(std::move(r));
    }
    for (int ip : pos) {
      for (int in : neg) {
        // Combinatorial adjacency: no third ray is tight wherever both
        // are tight.
        std::vector<char> common(idx);
        for (int t = 0; t < idx; ++t)
          common[t] = rays[ip].tight[t] && rays[in].tight[t];
        bool adjacent = true;
        for (size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (static_cast<int>(k) == ip || static_cast<int>(k) == in)
            continue;
          bool covers = true;
          for (int t = 0; t < idx && covers; ++t)
            if (common[t] && !rays[k].tight[t]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay w;
        w.v.resize(dim);
        for (int c = 0; c < dim; ++c)
          w.v[c] = val[ip] * rays[in].v[c] - val[in] * rays[ip].v[c];
        w.v = primitive(std::move(w.v));
        w.tight = common;
        w.tight.push_back(1);
        next.push_back(std::move(w));
      }
    }
    rays = std::move(next);
  }

  DDResult out;
  out.lineality = echelon_z(lin);
  for (const auto& r : rays)
    out.rays.push_back(reduce_mod(r.v, out.lineality));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()),
                 out.rays.end());
  return out;
}

}  // namespace

Cone Cone::from_inequalities(int dim, const std::vector<ZVec>& normals,
                             const std::vector<ZVec>& equations) {
  Cone c;
  c.ambient_ = dim;
  DDResult gen = dd_pair(dim, normals, equations);
  c.rays_ = gen.rays;
  c.lineality_ = gen.lineality;
  DDResult dual = dd_pair(dim, c.rays_, c.lineality_);
  c.facets_ = dual.rays;
  c.equations_ = dual.lineality;
  return c;
}

Cone Cone::from_generators(int dim, const std::vector<ZVec>& rays,
                           const std::vector<ZVec>& lineality) {
  Cone c;
  c.ambient_ = dim;
  DDResult dual = dd_pair(dim, rays, lineality);
  c.facets_ = dual.rays;
  c.equations_ = dual.lineality;
  DDResult gen = dd_pair(dim, c.facets_, c.equations_);
  c.rays_ = gen.rays;
  c.lineality_ = gen.lineality;
  return c;
}

Cone Cone::from_rays(int dim, const std::vector<ZVec>& rays) {
  return from_generators(dim, rays, {});
}

int Cone::dim() const {
  return ambient_ - static_cast<int>(equations_.size());
}

bool Cone::contains(const ZVec& v) const {
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::contains(const QVec& v) const {
  for (const auto& e : equations_)
    if (dot_q(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot_q(f, v) < 0) return false;
  return true;
}

bool Cone::contains_relint(const ZVec& v) const {
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) <= 0) return false;
  return true;
}

bool Cone::contains_relint(const QVec& v) const {
  for (const auto& e : equations_)
    if (dot_q(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot_q(f, v) <= 0) return false;
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  if (ambient_ != other.ambient_)
    throw ConeError("containment: ambient dimension mismatch");
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_) {
    ZVec neg = l;
    for (auto& x : neg) x = -x;
    if (!contains(l) || !contains(neg)) return false;
  }
  return true;
}

ZVec Cone::relint_point() const {
  ZVec p(ambient_, 0);
  for (const auto& r : rays_)
    for (int c = 0; c < ambient_; ++c) p[c] += r[c];
  return p;
}

Cone Cone::dual() const {
  Cone c;
  c.ambient_ = ambient_;
  c.rays_ = facets_;
  c.lineality_ = equations_;
  c.facets_ = rays_;
  c.equations_ = lineality_;
  return c;
}

Cone Cone::intersect(const Cone& other) const {
  if (ambient_ != other.ambient_)
    throw ConeError("intersect: ambient dimension mismatch");
  std::vector<ZVec> normals = facets_;
  normals.insert(normals.end(), other.facets_.begin(), other.facets_.end());
  std::vector<ZVec> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  return from_inequalities(ambient_, normals, eqs);
}

Cone Cone::image(const ZMat& matrix) const {
  int m = static_cast<int>(matrix.size());
  auto apply = [&](const ZVec& v) {
    ZVec w(m);
    for (int r = 0; r < m; ++r) w[r] = dot(matrix[r], v);
    return w;
  };
  std::vector<ZVec> rays, lin;
  for (const auto& r : rays_) rays.push_back(apply(r));
  for (const auto& l : lineality_) lin.push_back(apply(l));
  return from_generators(m, rays, lin);
}

Cone Cone::face(const ZVec& normal) const {
  for (const auto& r : rays_)
    if (dot(normal, r) < 0)
      throw ConeError("face: normal is negative on a ray");
  std::vector<ZVec> eqs = equations_;
  eqs.push_back(normal);
  return from_inequalities(ambient_, facets_, eqs);
}

bool Cone::operator<(const Cone& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (rays_ != o.rays_) return rays_ < o.rays_;
  return lineality_ < o.lineality_;
}

std::string Cone::str() const {
  std::ostringstream os;
  os << "cone(dim " << dim() << " in R^" << ambient_ << "; rays";
  for (const auto& r : rays_) {
    os << " (";
    for (size_t c = 0; c < r.size(); ++c)
      os << (c ? "," : "") << r[c].get_str();
    os << ")";
  }
  if (!lineality_.empty()) os << "; lineality dim " << lineality_.size();
  os << ")";
  return os.str();
}

}  // namespace wb
