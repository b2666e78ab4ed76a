#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "wb/catalog.hpp"
#include "wb/cox.hpp"

using namespace wb;

namespace {

using LMat = std::vector<std::vector<long>>;

/// Equality of integer matrices up to independent row and column
/// permutations (row order follows the internal conjugacy-class order,
/// column order the generator order; fixtures use their own layout).
bool matches_up_to_permutation(const LMat& a, const LMat& b) {
  size_t m = a.size();
  if (b.size() != m) return false;
  if (m == 0) return true;
  size_t s = a[0].size();
  if (b[0].size() != s) return false;
  auto sorted_cols = [&](const LMat& x, const std::vector<int>& rp) {
    std::vector<std::vector<long>> c;
    for (size_t j = 0; j < s; ++j) {
      std::vector<long> col;
      for (size_t i = 0; i < m; ++i) col.push_back(x[rp[i]][j]);
      c.push_back(std::move(col));
    }
    std::sort(c.begin(), c.end());
    return c;
  };
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  auto bs = sorted_cols(b, id);
  std::vector<int> rp = id;
  do {
    if (sorted_cols(a, rp) == bs) return true;
  } while (std::next_permutation(rp.begin(), rp.end()));
  return false;
}

/// Every witness must satisfy kappa(lift) = f with all monomials of the
/// lift dominating the required exceptional valuations.
void check_witnesses(const CoxPresentation& p,
                     const TrinomialLiftResult& res) {
  REQUIRE(!res.witnesses.empty());
  for (const auto& w : res.witnesses) {
    CHECK(p.kappa(w.lift) == w.f.lifted(p.group.conductor));
    for (const auto& [e, c] : w.lift.terms()) {
      (void)c;
      for (int j = 0; j < p.m(); ++j) {
        long t = 0;
        for (int i = 0; i < p.s(); ++i)
          t += p.generators[i].t_exponents[j] * e[i];
        CHECK(t >= w.required[j]);
      }
    }
  }
}

/// Total degree of the exceptional part of a relation monomial.
int t_total(const CoxPresentation& p, const Exp& e) {
  int t = 0;
  for (int i = p.num_phi; i < p.s(); ++i) t += e[i];
  return t;
}

}  // namespace

TEST_CASE("candidate presentation for the odd dihedral group") {
  auto g = enumerate_group(catalog_dihedral(7).generators);
  auto basis = minimal_generators(g, 7);
  auto p = build_candidate(g, basis.generators);
  REQUIRE(p.num_phi == 4);
  CHECK(p.m() == 4);
  CHECK(p.s() == 8);
  CHECK(std::multiset<long>(p.orders.begin(), p.orders.end()) ==
        std::multiset<long>({2, 7, 7, 7}));

  // Identify generators by degree/character and rows by valuation values.
  int iplus = -1, iminus = -1, ixy = -1, iz = -1;
  for (int i = 0; i < 4; ++i) {
    const auto& gen = p.generators[i];
    if (gen.degree == 1)
      iz = i;
    else if (gen.degree == 2)
      ixy = i;
    else if (gen.character == Character{0})
      iplus = i;
    else
      iminus = i;
  }
  REQUIRE(iz >= 0);
  REQUIRE(ixy >= 0);
  REQUIRE(iplus >= 0);
  REQUIRE(iminus >= 0);
  int jeps = -1, j1 = -1, j2 = -1, j3 = -1;
  for (int j = 0; j < 4; ++j) {
    if (p.orders[j] == 2)
      jeps = j;
    else if (p.generators[iplus].t_exponents[j] == 7)
      j1 = j;
    else if (p.generators[iplus].t_exponents[j] == 14)
      j2 = j;
    else if (p.generators[iplus].t_exponents[j] == 21)
      j3 = j;
  }
  REQUIRE(jeps >= 0);
  REQUIRE(j1 >= 0);
  REQUIRE(j2 >= 0);
  REQUIRE(j3 >= 0);

  // Valuation rows of the individual generators.
  for (int j : {j1, j2, j3}) {
    CHECK(p.generators[iz].t_exponents[j] == 0);
    CHECK(p.generators[ixy].t_exponents[j] == 7);
  }
  CHECK(p.generators[iz].t_exponents[jeps] == 1);
  CHECK(p.generators[ixy].t_exponents[jeps] == 0);
  CHECK(p.generators[iplus].t_exponents[jeps] == 0);
  CHECK(p.generators[iminus].t_exponents[jeps] == 1);
  CHECK(p.generators[iminus].t_exponents[j2] == 14);

  // Rescaled degree matrix against the closed form.
  std::vector<long> div(4);
  for (int j = 0; j < 4; ++j) div[j] = p.orders[j] == 2 ? 1 : 7;
  LMat expected_u = {{1, 1, 0, 1, -1, 0, 0, 0},
                     {2, 2, 0, 1, 0, -1, 0, 0},
                     {3, 3, 0, 1, 0, 0, -1, 0},
                     {0, 1, -2, 0, 0, 0, 0, 1}};
  CHECK(matches_up_to_permutation(scaled_U(p, div), expected_u));
  CHECK_THROWS_AS(scaled_U(p, {7, 7, 7, 7}), CoxError);

  // The attached relation is the homogenized trinomial.
  REQUIRE(p.relations.size() == 1);
  REQUIRE(p.relations[0].num_terms() == 3);
  CHECK(verify_relations(p).ok);
  int cond = g.conductor;
  Poly expect(8, cond);
  Exp e1(8, 0);
  e1[iplus] = 2;
  expect.add_term(e1, CycNum(cond, 1));
  Exp e2(8, 0);
  e2[iminus] = 2;
  e2[4 + jeps] = 1;
  expect.add_term(e2, CycNum(cond, Rat(-1)));
  Exp e3(8, 0);
  e3[ixy] = 7;
  e3[4 + j1] = 5;
  e3[4 + j2] = 3;
  e3[4 + j3] = 1;
  expect.add_term(e3, CycNum(cond, Rat(-4)));
  const Poly& rel = p.relations[0];
  REQUIRE(rel.terms().count(e1) == 1);
  CycNum scale = rel.terms().at(e1);
  CHECK(rel == expect * scale);

  // Tampering is caught.
  auto bad = p;
  bad.relations.push_back(Poly::variable(8, cond, 0));
  CHECK(!verify_relations(bad).ok);
  CHECK_THROWS_AS(homogenize_relation(p, Poly(4, cond)), CoxError);
}

TEST_CASE("lifting witnesses for the odd dihedral trinomial") {
  auto g = enumerate_group(catalog_dihedral(5).generators);
  auto basis = minimal_generators(g, 5);
  auto p = build_candidate(g, basis.generators);
  REQUIRE(p.relations.size() == 1);
  auto res = check_lifting_trinomial(p, 8);
  CHECK(res.ok);
  CHECK(!res.counterexample.has_value());
  check_witnesses(p, res);
  CHECK(suggest_corrections(p, 5).empty());
  CHECK(suggest_corrections(p, 7).empty());
}

TEST_CASE("a deficient generating set is detected and repaired") {
  auto g = enumerate_group(catalog_dihedral(7).generators);
  auto basis = minimal_generators(g, 7);
  auto full = build_candidate(g, basis.generators);
  // Drop the degree-7 sign-character generator.
  std::vector<GradedGenerator> subset;
  for (const auto& gen : basis.generators)
    if (gen.degree != 7 || gen.character == Character{0})
      subset.push_back(gen);
  REQUIRE(subset.size() == 3);
  auto p = build_candidate(g, subset);
  CHECK(p.relations.empty());  // the three survivors are independent

  auto rep = check_lifting_bounded(p, 7, true);
  CHECK(!rep.ok);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures[0].degree == 7);
  CHECK(rep.failures[0].character == Character{1});
  CHECK(check_lifting_bounded(p, 6).ok);
  CHECK(suggest_corrections(p, 5).empty());

  auto cs = suggest_corrections(p, 7);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].degree == 7);
  CHECK(cs[0].character == Character{1});
  CHECK(cs[0].replaces == -1);
  int cond = g.conductor;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  CHECK(cs[0].invariant == y.pow(7) - x.pow(7));
  int iminus = -1;
  for (int i = 0; i < full.num_phi; ++i)
    if (full.generators[i].degree == 7 &&
        full.generators[i].character == Character{1})
      iminus = i;
  REQUIRE(iminus >= 0);
  CHECK(cs[0].valuation_row == full.generators[iminus].t_exponents);

  auto fixed = apply_corrections(p, cs);
  CHECK(check_lifting_bounded(fixed, 7).ok);
  // The repaired presentation coincides with the full one.
  CHECK(fixed.U == full.U);
  REQUIRE(fixed.relations.size() == 1);
  CHECK(fixed.relations[0] == full.relations[0]);
}

TEST_CASE("candidate presentation for the 16-element example") {
  auto g = enumerate_group(catalog_example16().generators);
  auto basis = minimal_generators(g, 4);
  REQUIRE(basis.generators.size() == 4);
  auto p = build_candidate(g, basis.generators);
  CHECK(p.m() == 5);
  CHECK(p.s() == 9);
  CHECK(g.age2_classes().size() == 1);

  LMat expected_u = {{4, 0, 6, -4, 2, 0, 0, 0, 0},
                     {1, -2, 0, 0, 0, 0, 0, 1, 0},
                     {4, 0, 4, 0, 2, 0, 0, 0, -2},
                     {4, 0, 4, 0, 4, -4, 0, 0, 0},
                     {4, 0, 4, 0, 4, 0, -8, 4, 0}};
  CHECK(matches_up_to_permutation(p.U, expected_u));

  REQUIRE(p.relations.size() == 1);
  REQUIRE(p.relations[0].num_terms() == 3);
  CHECK(verify_relations(p).ok);
  // Term shape: A^2 * t, B^2 * t, C^4 * t^3 with C the degree-2 generator.
  int i2 = -1;
  for (int i = 0; i < 4; ++i)
    if (p.generators[i].degree == 2) i2 = i;
  REQUIRE(i2 >= 0);
  std::multiset<std::pair<int, int>> shape;
  for (const auto& [e, c] : p.relations[0].terms()) {
    (void)c;
    shape.insert({e[i2], t_total(p, e)});
  }
  CHECK(shape ==
        std::multiset<std::pair<int, int>>({{0, 1}, {0, 1}, {4, 3}}));

  auto res = check_lifting_trinomial(p, 6);
  CHECK(res.ok);
  check_witnesses(p, res);
}

TEST_CASE("candidate presentation for the 24-element example") {
  auto g = enumerate_group(catalog_example24().generators);
  CHECK(g.size() == 24);
  auto basis = minimal_generators(g, 6);
  REQUIRE(basis.generators.size() == 4);
  std::multiset<int> degs;
  for (const auto& gen : basis.generators) degs.insert(gen.degree);
  CHECK(degs == std::multiset<int>({1, 2, 3, 3}));
  auto p = build_candidate(g, basis.generators);
  CHECK(p.m() == 7);
  CHECK(p.s() == 11);
  CHECK(g.age2_classes().size() == 4);

  LMat expected_u = {{3, 0, 3, 0, 2, 0, 0, 0, 0, -2, 0},
                     {3, 0, 3, 0, 6, -6, 0, 0, 0, 0, 0},
                     {3, 0, 3, 0, 3, 0, -3, 0, 0, 0, 0},
                     {3, 0, 3, 0, 2, 0, 0, 0, 2, 0, -4},
                     {3, 0, 3, 0, 6, 0, 0, -12, 6, 0, 0},
                     {7, -8, 3, 0, 2, 0, 0, 0, 2, 0, 0},
                     {3, 0, 7, -8, 2, 0, 0, 0, 2, 0, 0}};
  CHECK(matches_up_to_permutation(p.U, expected_u));

  REQUIRE(p.relations.size() == 1);
  REQUIRE(p.relations[0].num_terms() == 3);
  CHECK(verify_relations(p).ok);
  int i2 = -1;
  for (int i = 0; i < 4; ++i)
    if (p.generators[i].degree == 2) i2 = i;
  REQUIRE(i2 >= 0);
  std::multiset<std::pair<int, int>> shape;
  for (const auto& [e, c] : p.relations[0].terms()) {
    (void)c;
    shape.insert({e[i2], t_total(p, e)});
  }
  CHECK(shape ==
        std::multiset<std::pair<int, int>>({{0, 1}, {0, 1}, {3, 4}}));

  auto res = check_lifting_trinomial(p, 6);
  CHECK(res.ok);
  check_witnesses(p, res);
}

TEST_CASE("repair loop for the 21-element trihedral group") {
  auto g = enumerate_group(catalog_trihedral21().generators);
  auto basis = minimal_generators(g, 7);
  REQUIRE(basis.generators.size() == 13);
  auto p = build_candidate(g, basis.generators, false);
  CHECK(p.m() == 3);

  // The raw generating set satisfies the valuation condition up to
  // degree 5 but fails in degree 6.
  CHECK(check_lifting_bounded(p, 5).ok);
  auto rep = check_lifting_bounded(p, 6, true);
  CHECK(!rep.ok);
  REQUIRE(!rep.failures.empty());
  CHECK(rep.failures[0].degree == 6);

  auto cs6 = suggest_corrections(p, 6);
  CHECK(cs6.size() == 1);
  auto aug6 = apply_corrections(p, cs6, false);
  CHECK(check_lifting_bounded(aug6, 6).ok);

  auto cs7 = suggest_corrections(aug6, 7);
  CHECK(cs7.size() == 3);
  auto aug7 = apply_corrections(aug6, cs7, false);
  CHECK(check_lifting_bounded(aug7, 9).ok);
}

TEST_CASE("repair loop for the order-27 Heisenberg group") {
  auto g = enumerate_group(catalog_heisenberg27().generators);
  auto basis = minimal_generators(g, 3);
  REQUIRE(basis.generators.size() == 10);
  auto p = build_candidate(g, basis.generators, false);
  CHECK(p.m() == 9);

  auto rep = check_lifting_bounded(p, 3, true);
  CHECK(!rep.ok);
  auto cs = suggest_corrections(p, 3);
  CHECK(cs.size() == 3);
  auto aug = apply_corrections(p, cs, false);
  CHECK(check_lifting_bounded(aug, 3).ok);
}

namespace {

/// Valuation matrix (junior-class rows by generator columns) of the phi
/// block of a presentation.
LMat valuation_matrix(const CoxPresentation& p) {
  LMat rows(p.m(), std::vector<long>(p.num_phi));
  for (int j = 0; j < p.m(); ++j)
    for (int i = 0; i < p.num_phi; ++i)
      rows[j][i] = p.generators[i].t_exponents[j];
  return rows;
}

/// Row-set equality with the column order fixed (rows follow the internal
/// conjugacy-class enumeration, which is a convention).
bool same_rows(LMat a, LMat b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// Equality of polynomials up to a nonzero scalar factor.
bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.terms().begin()->first != b.terms().begin()->first) return false;
  const CycNum& ca = a.terms().begin()->second;
  const CycNum& cb = b.terms().begin()->second;
  return a * cb == b * ca;
}

}  // namespace

TEST_CASE("curated generating sets reproduce the reference valuation tables") {
  SUBCASE("21-element trihedral group") {
    auto g = enumerate_group(catalog_trihedral21().generators);
    auto basis = catalog_cox_basis(g, "G21");
    REQUIRE(basis.size() == 13);
    std::multiset<int> degs;
    for (const auto& b : basis) degs.insert(b.degree);
    CHECK(degs == std::multiset<int>{3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7});
    auto p = build_candidate(g, basis, false);
    REQUIRE(p.num_phi == 13);
    REQUIRE(p.m() == 3);
    LMat expected = {
        {7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7},
        {0, 0, 2, 1, 0, 2, 1, 3, 2, 1, 3, 2, 4},
        {0, 0, 1, 2, 0, 1, 2, 3, 1, 2, 3, 4, 2},
    };
    CHECK(same_rows(valuation_matrix(p), expected));
  }
  SUBCASE("27-element Heisenberg group") {
    auto g = enumerate_group(catalog_heisenberg27().generators);
    auto basis = catalog_cox_basis(g, "G27");
    REQUIRE(basis.size() == 12);
    for (const auto& b : basis) CHECK(b.degree == 3);
    auto p = build_candidate(g, basis, false);
    REQUIRE(p.num_phi == 12);
    REQUIRE(p.m() == 9);
    LMat expected = {
        {3, 0, 0, 0, 0, 0, 1, 2, 1, 2, 1, 2},
        {3, 0, 0, 0, 0, 0, 2, 1, 2, 1, 2, 1},
        {0, 3, 0, 0, 2, 1, 1, 2, 0, 0, 2, 1},
        {0, 3, 0, 0, 1, 2, 2, 1, 0, 0, 1, 2},
        {0, 0, 3, 0, 2, 1, 2, 1, 1, 2, 0, 0},
        {0, 0, 3, 0, 1, 2, 1, 2, 2, 1, 0, 0},
        {0, 0, 0, 3, 1, 2, 0, 0, 1, 2, 2, 1},
        {0, 0, 0, 3, 2, 1, 0, 0, 2, 1, 1, 2},
        {3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
    };
    CHECK(same_rows(valuation_matrix(p), expected));
  }
  SUBCASE("54-element extension") {
    auto g = enumerate_group(catalog_extension54().generators);
    auto basis = catalog_cox_basis(g, "G54");
    REQUIRE(basis.size() == 9);
    std::multiset<int> degs;
    for (const auto& b : basis) degs.insert(b.degree);
    CHECK(degs == std::multiset<int>{3, 3, 3, 3, 6, 6, 6, 6, 9});
    auto p = build_candidate(g, basis, false);
    REQUIRE(p.num_phi == 9);
    REQUIRE(p.m() == 7);
    LMat expected = {
        {1, 1, 1, 1, 0, 0, 0, 0, 0},
        {3, 3, 3, 3, 6, 6, 6, 6, 12},
        {3, 0, 0, 0, 3, 3, 3, 0, 3},
        {0, 3, 0, 0, 3, 3, 0, 3, 3},
        {0, 0, 3, 0, 3, 0, 3, 3, 3},
        {0, 0, 0, 3, 0, 3, 3, 3, 3},
        {3, 3, 3, 3, 6, 6, 6, 6, 9},
    };
    CHECK(same_rows(valuation_matrix(p), expected));
  }
}

TEST_CASE("curated generators are invariant under the commutator subgroup") {
  for (const char* name : {"G21", "G27", "G54"}) {
    CAPTURE(name);
    auto g = enumerate_group(catalog_lookup(name).generators);
    auto basis = catalog_cox_basis(g, name);
    for (const auto& b : basis) {
      // character_of (run inside catalog_cox_basis) already certifies that
      // each polynomial is an eigenvector of the full group action.
      for (int id : g.commutator_ids)
        CHECK(b.poly.group_action(g.elements[id].matrix) == b.poly);
    }
  }
}

TEST_CASE("graded relation search finds the minimal relations") {
  SUBCASE("odd dihedral trinomial") {
    auto g = enumerate_group(catalog_dihedral(5).generators);
    auto basis = minimal_generators(g, 5);
    auto p = build_candidate(g, basis.generators);
    REQUIRE(p.relations.size() == 1);
    auto gr = graded_relations(p, 14);
    REQUIRE(gr.phi_relations.size() == 1);
    CHECK(gr.relation_degrees == std::vector<int>{10});
    CHECK(gr.last_new_degree == 10);
    CHECK(proportional(gr.relations[0], p.relations[0]));
    auto q = p;
    q.relations = gr.relations;
    CHECK(verify_relations(q).ok);
  }
  SUBCASE("16-element example") {
    auto g = enumerate_group(catalog_example16().generators);
    auto basis = minimal_generators(g, 8);
    auto p = build_candidate(g, basis.generators);
    REQUIRE(p.relations.size() == 1);
    auto gr = graded_relations(p, 12);
    REQUIRE(gr.phi_relations.size() == 1);
    CHECK(gr.relation_degrees == std::vector<int>{8});
    CHECK(proportional(gr.relations[0], p.relations[0]));
  }
}

TEST_CASE("principal relation ideals are already saturated") {
  for (int which : {0, 1}) {
    auto entry = which == 0 ? catalog_dihedral(5) : catalog_example16();
    auto g = enumerate_group(entry.generators);
    auto basis = minimal_generators(g, 8);
    auto p = build_candidate(g, basis.generators);
    REQUIRE(p.relations.size() == 1);
    auto sat = exceptional_saturation(p, p.relations);
    GroebnerBasis lhs(p.relations, TermOrder::grevlex());
    GroebnerBasis rhs(sat, TermOrder::grevlex());
    for (const auto& f : sat) CHECK(lhs.contains(f));
    for (const auto& f : p.relations) CHECK(rhs.contains(f));
  }
}
