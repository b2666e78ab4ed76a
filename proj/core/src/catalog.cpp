#include "wb/catalog.hpp"

#include <map>
#include <numeric>
#include <set>

namespace wb {

namespace {

struct MatEntryLess {
  bool operator()(const CycMat& a, const CycMat& b) const {
    return mat_less(a, b);
  }
};

}  // namespace

namespace {

CycMat mat2(int cond, const CycNum& a, const CycNum& b, const CycNum& c,
            const CycNum& d) {
  (void)cond;
  return CycMat{{a, b}, {c, d}};
}

CycMat diag3(const CycNum& a, const CycNum& b, const CycNum& c) {
  int n = a.conductor();
  CycNum z(n);
  return CycMat{{a, z, z}, {z, b, z}, {z, z, c}};
}

CycNum zr(int N, long k) { return CycNum::root(N, N, k); }

}  // namespace

CycMat sl3_embed(const CycMat& g) {
  int cond = g[0][0].conductor();
  CycNum det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  CycNum z(cond);
  return CycMat{{g[0][0], g[0][1], z},
                {g[1][0], g[1][1], z},
                {z, z, det.inverse()}};
}

CatalogEntry catalog_dihedral(int n) {
  if (n < 3) throw GroupError("dihedral order parameter must be >= 3");
  int cond = std::lcm(n, 2);
  CycNum z(cond);
  CycNum one(cond, 1);
  CycMat rho = diag3(CycNum::root(cond, n, 1), CycNum::root(cond, n, -1), one);
  CycMat eps{{z, one, z}, {one, z, z}, {z, z, -one}};
  return {"D2n:" + std::to_string(n), {rho, eps}};
}

CatalogEntry catalog_binary_dihedral(int q) {
  if (q < 2) throw GroupError("binary dihedral parameter must be >= 2");
  int n = 2 * q;
  int cond = std::lcm(n, 4);
  CycNum i = CycNum::root(cond, 4, 1);
  CycNum z(cond);
  CycMat j = mat2(cond, z, i, i, z);
  CycMat a = mat2(cond, CycNum::root(cond, n, 1), z, z,
                  CycNum::root(cond, n, -1));
  return {"BD:" + std::to_string(4 * q), {sl3_embed(j), sl3_embed(a)}};
}

CatalogEntry catalog_binary_tetrahedral() {
  int cond = 8;
  CycNum z(cond);
  CycNum i = zr(8, 2);
  CycMat j = mat2(cond, z, i, i, z);
  CycMat a = mat2(cond, i, z, z, -i);
  // 1/sqrt(2) = (zeta_8 - zeta_8^3)/2.
  CycNum c = (zr(8, 1) - zr(8, 3)) * Rat(1, 2);
  CycMat t = mat2(cond, c * zr(8, 1), c * zr(8, 3), c * zr(8, 1), c * zr(8, 7));
  return {"BT", {sl3_embed(j), sl3_embed(a), sl3_embed(t)}};
}

CatalogEntry catalog_binary_octahedral() {
  CatalogEntry bt = catalog_binary_tetrahedral();
  CycNum z(8);
  bt.generators.push_back(sl3_embed(mat2(8, zr(8, 3), z, z, zr(8, 5))));
  bt.name = "BO";
  return bt;
}

CatalogEntry catalog_binary_icosahedral() {
  int cond = 5;
  // 1/sqrt(5) = (zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4)/5.
  CycNum s = (zr(5, 1) - zr(5, 2) - zr(5, 3) + zr(5, 4)) * Rat(1, 5);
  CycMat a = mat2(cond, s * (zr(5, 4) - zr(5, 1)), s * (zr(5, 2) - zr(5, 3)),
                  s * (zr(5, 2) - zr(5, 3)), s * (zr(5, 1) - zr(5, 4)));
  CycMat b = mat2(cond, s * (zr(5, 2) - zr(5, 4)),
                  s * (zr(5, 4) - CycNum(cond, 1)),
                  s * (CycNum(cond, 1) - zr(5, 1)), s * (zr(5, 3) - zr(5, 1)));
  return {"BI", {sl3_embed(a), sl3_embed(b)}};
}

CatalogEntry catalog_example16() {
  int cond = 8;
  CycNum z(cond);
  CycNum i = zr(8, 2);
  CycMat j = mat2(cond, z, i, i, z);
  CycMat a = mat2(cond, zr(8, 3), z, z, zr(8, 1));
  return {"EX16", {sl3_embed(j), sl3_embed(a)}};
}

CatalogEntry catalog_example24() {
  int cond = 24;
  CycNum z(cond);
  CycMat a = mat2(cond, CycNum::root(cond, 6, 1), z, z, CycNum::root(cond, 6, 5));
  CycNum w = CycNum::root(cond, 8, 3);
  CycMat b = mat2(cond, z, w, w, z);
  return {"EX24", {sl3_embed(a), sl3_embed(b)}};
}

namespace {

CycMat cycle3(int cond) {
  CycNum z(cond);
  CycNum one(cond, 1);
  return CycMat{{z, z, one}, {one, z, z}, {z, one, z}};
}

}  // namespace

CatalogEntry catalog_trihedral21() {
  CycMat d = diag3(CycNum::root(7, 7, 1), CycNum::root(7, 7, 2),
                   CycNum::root(7, 7, 4));
  return {"G21", {d, cycle3(7)}};
}

CatalogEntry catalog_heisenberg27() {
  CycMat d = diag3(CycNum(3, 1), CycNum::root(3, 3, 1), CycNum::root(3, 3, 2));
  return {"G27", {d, cycle3(3)}};
}

CatalogEntry catalog_extension54() {
  CatalogEntry e = catalog_heisenberg27();
  CycNum z(3);
  CycNum m(3, -1);
  e.generators.push_back(CycMat{{m, z, z}, {z, z, m}, {z, m, z}});
  e.name = "G54";
  return e;
}

CatalogEntry catalog_product(int w, int d, const std::vector<CycMat>& h_gens,
                             const std::vector<CycMat>& k_gens) {
  if (w < 1 || d < 1) throw GroupError("product parameters must be positive");
  FiniteMatrixGroup h = enumerate_group(h_gens);
  int cond = std::lcm(h.conductor, w * d);
  auto lift2 = [&](CycMat m) {
    for (auto& row : m)
      for (auto& x : row) x = x.lifted(cond);
    return m;
  };
  // Identify K inside H and build the coset map.
  std::map<CycMat, int, MatEntryLess> index;
  for (const auto& e : h.elements) index.emplace(lift2(e.matrix), e.id);
  std::set<int> k_ids{0};
  {
    std::vector<int> seeds;
    for (const auto& g : k_gens) {
      auto it = index.find(lift2(g));
      if (it == index.end())
        throw GroupError("K generator does not lie in H");
      seeds.push_back(it->second);
    }
    bool grew = true;
    k_ids.insert(seeds.begin(), seeds.end());
    while (grew) {
      grew = false;
      std::vector<int> cur(k_ids.begin(), k_ids.end());
      for (int a : cur)
        for (int b : cur)
          if (k_ids.insert(h.mul(a, b)).second) grew = true;
    }
  }
  int kq = h.size() / static_cast<int>(k_ids.size());
  if (kq != w) throw GroupError("quotient H/K does not have order w");
  // Smallest element whose coset generates the (required cyclic) quotient.
  auto coset_order = [&](int g) {
    int e = g, k = 1;
    while (!k_ids.count(e)) {
      e = h.mul(e, g);
      ++k;
    }
    return k;
  };
  int g0 = -1;
  for (int i = 0; i < h.size() && g0 < 0; ++i)
    if (coset_order(i) == w) g0 = i;
  if (g0 < 0) throw GroupError("quotient H/K is not cyclic of order w");

  CycNum zwd = CycNum::root(cond, w * d, 1);
  std::vector<CycMat> gens;
  gens.push_back(sl3_embed(mat_scale(lift2(h.elements[g0].matrix), zwd)));
  for (const auto& g : k_gens) gens.push_back(sl3_embed(lift2(g)));
  gens.push_back(sl3_embed(
      mat_scale(mat_identity(2, cond), CycNum::root(cond, d, 1))));
  return {"product(" + std::to_string(w) + "," + std::to_string(d) + ")",
          gens};
}

CatalogEntry catalog_lookup(const std::string& name) {
  auto colon = name.find(':');
  std::string head = colon == std::string::npos ? name : name.substr(0, colon);
  auto param = [&]() {
    if (colon == std::string::npos)
      throw GroupError("catalog name needs a parameter: " + name);
    return std::stoi(name.substr(colon + 1));
  };
  if (head == "D2n") return catalog_dihedral(param());
  if (head == "BD") {
    int o = param();
    if (o % 4 != 0) throw GroupError("binary dihedral order must be 4q");
    return catalog_binary_dihedral(o / 4);
  }
  if (name == "BT") return catalog_binary_tetrahedral();
  if (name == "BO") return catalog_binary_octahedral();
  if (name == "BI") return catalog_binary_icosahedral();
  if (name == "EX16") return catalog_example16();
  if (name == "EX24") return catalog_example24();
  if (name == "G21") return catalog_trihedral21();
  if (name == "G27") return catalog_heisenberg27();
  if (name == "G54") return catalog_extension54();
  throw GroupError("unknown catalog name: " + name);
}

namespace {

/// Polynomial in x, y, z over Q(zeta_3) from a term list.
Poly p3(std::vector<std::pair<CycNum, Exp>> terms) {
  Poly f(3, 3);
  for (auto& [c, e] : terms) f.add_term(e, c);
  return f;
}

}  // namespace

std::vector<GradedGenerator> catalog_cox_basis(const FiniteMatrixGroup& g,
                                               const std::string& name) {
  CycNum z = CycNum::root(3, 3, 1);   // zeta_3
  CycNum z2 = z * z;
  CycNum one(3, 1);
  auto r = [&](long k) { return CycNum(3, k); };
  std::vector<Poly> polys;
  if (name == "G21") {
    polys = {
        p3({{one, {1, 1, 1}}}),
        p3({{one, {1, 3, 0}}, {one, {3, 0, 1}}, {one, {0, 1, 3}}}),
        p3({{-z - r(2), {1, 3, 0}},
            {z * 2 + one, {3, 0, 1}},
            {-z + one, {0, 1, 3}}}),
        p3({{z - one, {1, 3, 0}},
            {-z * 2 - one, {3, 0, 1}},
            {z + r(2), {0, 1, 3}}}),
        p3({{one, {3, 2, 0}}, {one, {0, 3, 2}}, {one, {2, 0, 3}}}),
        p3({{z, {3, 2, 0}}, {-z - one, {0, 3, 2}}, {one, {2, 0, 3}}}),
        p3({{-z - one, {3, 2, 0}}, {z, {0, 3, 2}}, {one, {2, 0, 3}}}),
        p3({{one, {5, 1, 0}},
            {one, {0, 5, 1}},
            {one, {1, 0, 5}},
            {r(-3), {2, 2, 2}}}),
        p3({{z, {5, 1, 0}}, {-z - one, {0, 5, 1}}, {one, {1, 0, 5}}}),
        p3({{-z - one, {5, 1, 0}}, {z, {0, 5, 1}}, {one, {1, 0, 5}}}),
        p3({{one, {7, 0, 0}},
            {one, {0, 7, 0}},
            {one, {0, 0, 7}},
            {r(-1), {2, 4, 1}},
            {r(-1), {4, 1, 2}},
            {r(-1), {1, 2, 4}}}),
        p3({{-z * 3 - r(2), {7, 0, 0}},
            {z + r(3), {0, 7, 0}},
            {r(-7), {2, 4, 1}},
            {z * 7 + r(7), {4, 1, 2}},
            {-z * 7, {1, 2, 4}},
            {z * 2 - one, {0, 0, 7}}}),
        p3({{-z * 3 - one, {7, 0, 0}},
            {z - r(2), {0, 7, 0}},
            {r(7), {2, 4, 1}},
            {z * 7, {4, 1, 2}},
            {-z * 7 - r(7), {1, 2, 4}},
            {z * 2 + r(3), {0, 0, 7}}}),
    };
  } else if (name == "G27" || name == "G54") {
    // F-block: xyz and the three eigenvectors zeta^k(x^3+y^3+z^3) - 3xyz.
    // The column order of the eigenvector triple is fixed per group so that
    // the valuation rows land in the documented reference order.
    Poly f_plain = p3({{one, {3, 0, 0}},
                       {one, {0, 3, 0}},
                       {one, {0, 0, 3}},
                       {r(-3), {1, 1, 1}}});
    Poly f_zeta =
        p3({{z, {3, 0, 0}}, {z, {0, 3, 0}}, {z, {0, 0, 3}}, {r(-3), {1, 1, 1}}});
    Poly f_zeta2 = p3({{z2, {3, 0, 0}},
                       {z2, {0, 3, 0}},
                       {z2, {0, 0, 3}},
                       {r(-3), {1, 1, 1}}});
    polys.push_back(p3({{one, {1, 1, 1}}}));
    if (name == "G27") {
      polys.push_back(f_zeta2);
      polys.push_back(f_zeta);
      polys.push_back(f_plain);
    } else {
      polys.push_back(f_plain);
      polys.push_back(f_zeta);
      polys.push_back(f_zeta2);
    }
    if (name == "G27") {
      std::vector<Poly> tail = {
          p3({{z2, {3, 0, 0}}, {z, {0, 3, 0}}, {one, {0, 0, 3}}}),
          p3({{z, {3, 0, 0}}, {z2, {0, 3, 0}}, {one, {0, 0, 3}}}),
          p3({{one, {1, 2, 0}}, {one, {2, 0, 1}}, {one, {0, 1, 2}}}),
          p3({{one, {2, 1, 0}}, {one, {0, 2, 1}}, {one, {1, 0, 2}}}),
          p3({{z, {1, 2, 0}}, {z2, {2, 0, 1}}, {one, {0, 1, 2}}}),
          p3({{z, {2, 1, 0}}, {z2, {0, 2, 1}}, {one, {1, 0, 2}}}),
          p3({{z2, {1, 2, 0}}, {z, {2, 0, 1}}, {one, {0, 1, 2}}}),
          p3({{z2, {2, 1, 0}}, {z, {0, 2, 1}}, {one, {1, 0, 2}}}),
      };
      for (auto& f : tail) polys.push_back(std::move(f));
    } else {
      // Degree-6 combinations of (xyz)^2, xyz(x^3+y^3+z^3),
      // x^3y^3+x^3z^3+y^3z^3 and x^6+y^6+z^6, plus one degree-9
      // alternating generator.
      auto sym6 = [&](const CycNum& a, const CycNum& b, const CycNum& c) {
        return p3({{a, {2, 2, 2}},
                   {b, {4, 1, 1}},
                   {b, {1, 4, 1}},
                   {b, {1, 1, 4}},
                   {c, {3, 3, 0}},
                   {c, {3, 0, 3}},
                   {c, {0, 3, 3}}});
      };
      polys.push_back(sym6(r(3), z2, z));
      polys.push_back(sym6(r(3), z, z2));
      polys.push_back(sym6(r(3), one, one));
      polys.push_back(p3({{one, {6, 0, 0}},
                          {one, {0, 6, 0}},
                          {one, {0, 0, 6}},
                          {r(-1), {3, 3, 0}},
                          {r(-1), {3, 0, 3}},
                          {r(-1), {0, 3, 3}}}));
      polys.push_back(p3({{one, {6, 3, 0}},
                          {r(-1), {3, 6, 0}},
                          {r(-1), {6, 0, 3}},
                          {one, {0, 6, 3}},
                          {one, {3, 0, 6}},
                          {r(-1), {0, 3, 6}}}));
    }
  } else {
    throw GroupError("no curated generating set for: " + name);
  }
  std::vector<GradedGenerator> out;
  for (const auto& f : polys) {
    Poly lifted = f.lifted(g.conductor);
    out.push_back({lifted, lifted.total_degree(), character_of(g, lifted)});
  }
  return out;
}

}  // namespace wb
