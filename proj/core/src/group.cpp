#include "wb/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace wb {

bool mat_less(const CycMat& a, const CycMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] < b[i][j]) return true;
      if (b[i][j] < a[i][j]) return false;
    }
  return false;
}

namespace {

struct MatCmp {
  bool operator()(const CycMat& a, const CycMat& b) const {
    return mat_less(a, b);
  }
};

int element_order(const FiniteMatrixGroup& g, int id) {
  int e = id, k = 1;
  while (e != 0) {
    e = g.mul(e, id);
    ++k;
  }
  return k;
}

}  // namespace

std::pair<std::vector<int>, CycMat> diagonalize(const CycMat& g, int order,
                                                int conductor,
                                                bool zeta_conjugate) {
  int n = static_cast<int>(g.size());
  int r = order;
  CycNum zr = CycNum::root(conductor, r, zeta_conjugate ? -1 : 1);
  // Powers of g.
  std::vector<CycMat> pw(r);
  pw[0] = mat_identity(n, conductor);
  for (int k = 1; k < r; ++k) pw[k] = mat_mul(pw[k - 1], g);

  std::vector<int> exps;
  CycMat basis_cols;  // stored as rows temporarily, transposed at the end
  Rat inv_r(1, r);
  for (int j = 0; j < r; ++j) {
    // P_j = (1/r) sum_k zeta_r^{-jk} g^k projects onto the zeta_r^j eigenspace.
    CycMat p(n, CycVec(n, CycNum(conductor)));
    for (int k = 0; k < r; ++k) {
      CycNum w = zr.pow(-static_cast<long>(j) * k) * CycNum(conductor, inv_r);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!pw[k][a][b].is_zero()) p[a][b] += w * pw[k][a][b];
    }
    RowSpan span(n);
    for (int col = 0; col < n; ++col) {
      CycVec v(n, CycNum(conductor));
      for (int a = 0; a < n; ++a) v[a] = p[a][col];
      if (span.insert(v)) {
        CycVec w(n, CycNum(conductor));
        for (int a = 0; a < n; ++a) w[a] = p[a][col];
        basis_cols.push_back(std::move(w));
        exps.push_back(j);
      }
    }
  }
  if (static_cast<int>(exps.size()) != n)
    throw GroupError("diagonalization failed: eigenspaces do not fill");
  CycMat basis(n, CycVec(n, CycNum(conductor)));
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) basis[a][j] = basis_cols[j][a];
  return {exps, basis};
}

FiniteMatrixGroup enumerate_group(const std::vector<CycMat>& generators,
                                  const EnumerateOptions& opts) {
  if (generators.empty()) throw GroupError("no generators");
  int n = static_cast<int>(generators[0].size());
  int cond = 1;
  for (const auto& g : generators)
    cond = std::lcm(cond, g[0][0].conductor());
  std::vector<CycMat> gens;
  for (const auto& g : generators) {
    CycMat m = g;
    for (auto& row : m)
      for (auto& x : row) x = x.lifted(cond);
    gens.push_back(std::move(m));
  }

  FiniteMatrixGroup grp;
  grp.dim = n;
  grp.zeta_conjugate = opts.zeta_conjugate;

  // BFS by word length; within a level, lexicographic by matrix entries.
  std::map<CycMat, int, MatCmp> index;
  std::vector<CycMat> mats;
  CycMat id = mat_identity(n, cond);
  mats.push_back(id);
  index.emplace(id, 0);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<CycMat> fresh;
    for (int e : frontier)
      for (const auto& g : gens) {
        CycMat p = mat_mul(mats[e], g);
        if (!index.count(p)) {
          index.emplace(p, -1);
          fresh.push_back(std::move(p));
        }
      }
    std::sort(fresh.begin(), fresh.end(), MatCmp());
    frontier.clear();
    for (auto& m : fresh) {
      int idx = static_cast<int>(mats.size());
      index[m] = idx;
      mats.push_back(std::move(m));
      frontier.push_back(idx);
      if (static_cast<int>(mats.size()) > opts.max_order)
        throw GroupError("group not finite within bound");
    }
  }

  int order = static_cast<int>(mats.size());
  grp.mul_table.assign(order, std::vector<int>(order, 0));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      auto it = index.find(mat_mul(mats[a], mats[b]));
      if (it == index.end()) throw GroupError("closure violated");
      grp.mul_table[a][b] = it->second;
    }
  grp.inv_of.assign(order, 0);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (grp.mul_table[a][b] == 0) grp.inv_of[a] = b;

  grp.elements.resize(order);
  for (int i = 0; i < order; ++i) {
    grp.elements[i].matrix = mats[i];
    grp.elements[i].id = i;
  }
  for (int i = 0; i < order; ++i)
    grp.elements[i].order = element_order(grp, i);

  // Session conductor: lcm of entry field and all element orders.
  int session = cond;
  for (const auto& e : grp.elements) session = std::lcm(session, e.order);
  grp.conductor = session;
  if (session != cond)
    for (auto& e : grp.elements)
      for (auto& row : e.matrix)
        for (auto& x : row) x = x.lifted(session);

  // Conjugacy classes.
  grp.class_of.assign(order, -1);
  for (int i = 0; i < order; ++i) {
    if (grp.class_of[i] >= 0) continue;
    ConjClass cls;
    cls.representative = i;
    int ci = static_cast<int>(grp.classes.size());
    std::set<int> members;
    for (int h = 0; h < order; ++h)
      members.insert(grp.mul(grp.mul(h, i), grp.inv(h)));
    for (int m : members) grp.class_of[m] = ci;
    cls.members.assign(members.begin(), members.end());
    cls.order = grp.elements[i].order;
    auto [exps, basis] = diagonalize(grp.elements[i].matrix, cls.order,
                                     session, opts.zeta_conjugate);
    cls.exponents = exps;
    cls.eigenbasis = basis;
    cls.age = Rat(std::accumulate(exps.begin(), exps.end(), 0), cls.order);
    cls.age.canonicalize();
    grp.classes.push_back(std::move(cls));
  }

  // Commutator subgroup: close the commutators under multiplication.
  {
    std::set<int> comm;
    comm.insert(0);
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        comm.insert(grp.mul(grp.mul(a, b), grp.mul(grp.inv(a), grp.inv(b))));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(comm.begin(), comm.end());
      for (int a : cur)
        for (int b : cur)
          if (comm.insert(grp.mul(a, b)).second) grew = true;
    }
    grp.commutator_ids.assign(comm.begin(), comm.end());
  }

  // Abelianization.
  {
    Abelianization& ab = grp.ab;
    const auto& H = grp.commutator_ids;
    std::set<int> hset(H.begin(), H.end());
    ab.coset_of.assign(order, -1);
    for (int i = 0; i < order; ++i) {
      if (ab.coset_of[i] >= 0) continue;
      int c = static_cast<int>(ab.coset_rep.size());
      ab.coset_rep.push_back(i);
      for (int h : H) ab.coset_of[grp.mul(i, h)] = c;
    }
    ab.order = static_cast<int>(ab.coset_rep.size());
    ab.mul.assign(ab.order, std::vector<int>(ab.order, 0));
    for (int a = 0; a < ab.order; ++a)
      for (int b = 0; b < ab.order; ++b)
        ab.mul[a][b] = ab.coset_of[grp.mul(ab.coset_rep[a], ab.coset_rep[b])];

    auto coset_order = [&](int c) {
      int e = c, k = 1;
      while (e != 0) {
        e = ab.mul[e][c];
        ++k;
      }
      return k;
    };
    auto gen_subgroup = [&](std::vector<int> seeds) {
      std::set<int> s(seeds.begin(), seeds.end());
      s.insert(0);
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
          for (int b : cur)
            if (s.insert(ab.mul[a][b]).second) grew = true;
      }
      return s;
    };

    // DFS for a basis realizing the invariant factor decomposition:
    // at each step add an element of maximal order whose cyclic span meets
    // the current subgroup trivially.
    std::vector<int> basis;
    std::vector<int> factors;
    std::set<int> span{0};
    std::function<bool()> dfs = [&]() -> bool {
      if (static_cast<int>(span.size()) == ab.order) return true;
      int limit = factors.empty() ? ab.order : factors.back();
      for (int d = limit; d >= 2; --d) {
        if (!factors.empty() && factors.back() % d != 0) continue;
        for (int c = 1; c < ab.order; ++c) {
          if (coset_order(c) != d) continue;
          auto joined = gen_subgroup([&] {
            std::vector<int> seeds(span.begin(), span.end());
            seeds.push_back(c);
            return seeds;
          }());
          if (static_cast<int>(joined.size()) !=
              static_cast<int>(span.size()) * d)
            continue;
          basis.push_back(c);
          factors.push_back(d);
          auto saved = span;
          span = joined;
          if (dfs()) return true;
          span = saved;
          basis.pop_back();
          factors.pop_back();
        }
      }
      return false;
    };
    if (ab.order > 1 && !dfs())
      throw GroupError("abelianization basis search failed");
    ab.basis = basis;
    ab.invariant_factors = factors;

    // Discrete logs by enumerating all exponent tuples.
    ab.dlog.assign(ab.order, {});
    std::vector<int> tuple(basis.size(), 0);
    std::function<void(size_t, int)> enumerate = [&](size_t i, int acc) {
      if (i == basis.size()) {
        ab.dlog[acc] = tuple;
        return;
      }
      int cur = acc;
      for (int k = 0; k < factors[i]; ++k) {
        tuple[i] = k;
        enumerate(i + 1, cur);
        cur = ab.mul[cur][basis[i]];
      }
    };
    if (basis.empty())
      ab.dlog[0] = {};
    else
      enumerate(0, 0);
  }

  return grp;
}

std::vector<int> FiniteMatrixGroup::junior_classes() const {
  std::vector<int> out;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].junior()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> FiniteMatrixGroup::age2_classes() const {
  std::vector<int> out;
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].age == 2) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> FiniteMatrixGroup::quasi_reflections() const {
  std::vector<int> out;
  for (const auto& c : classes) {
    if (c.representative == 0) continue;
    int ones = 0;
    for (int e : c.exponents)
      if (e == 0) ++ones;
    if (ones == dim - 1)
      for (int m : c.members) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteMatrixGroup::in_sl() const {
  CycNum one(conductor, 1);
  for (const auto& e : elements)
    if (mat_det(e.matrix) != one) return false;
  return true;
}

Rat age_of(const ConjClass& c) { return c.age; }

}  // namespace wb
