#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "wb/catalog.hpp"
#include "wb/invariant.hpp"

using namespace wb;

namespace {

std::vector<CycMat> commutators(const FiniteMatrixGroup& g) {
  std::vector<CycMat> mats;
  for (int id : g.commutator_ids) mats.push_back(g.elements[id].matrix);
  return mats;
}

}  // namespace

TEST_CASE("reynolds operator basics") {
  auto d14 = enumerate_group(catalog_dihedral(7).generators);
  int cond = d14.conductor;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  // <rho> acts by zeta on x; x^7 invariant.
  CHECK(reynolds(commutators(d14), x.pow(7)) == x.pow(7).lifted(cond));

  auto g27 = enumerate_group(catalog_heisenberg27().generators);
  Poly x3 = Poly::variable(3, g27.conductor, 0);
  Poly y3 = Poly::variable(3, g27.conductor, 1);
  Poly m = x3 * x3 * y3;
  CHECK(reynolds(commutators(g27), m) == m);

  auto g21 = enumerate_group(catalog_trihedral21().generators);
  Poly x21 = Poly::variable(3, g21.conductor, 0);
  Poly y21 = Poly::variable(3, g21.conductor, 1);
  CHECK(reynolds(commutators(g21), x21 * y21 * y21).is_zero());

  // Idempotence.
  auto mats = commutators(d14);
  Poly f = x.pow(3) * y + y.pow(2);
  Poly r = reynolds(mats, f);
  CHECK(reynolds(mats, r) == r);
  CHECK(is_invariant(mats, r));
}

TEST_CASE("character split for odd dihedral") {
  auto g = enumerate_group(catalog_dihedral(7).generators);
  int cond = g.conductor;
  int n = 7;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  Poly z = Poly::variable(3, cond, 2);

  CHECK(character_of(g, x.pow(n) + y.pow(n)) == Character{0});
  CHECK(character_of(g, x * y) == Character{0});
  CHECK(character_of(g, x.pow(n) - y.pow(n)) == Character{1});
  CHECK(character_of(g, z) == Character{1});

  auto parts = character_split(g, x.pow(n) + z);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == Character{0});
  CHECK(parts[1].first == Character{1});
  CHECK(parts[0].second * Rat(2) == x.pow(n) + y.pow(n));
  CHECK(parts[1].second == (x.pow(n) - y.pow(n)) * Rat(1, 2) + z);

  CHECK_THROWS_AS(character_of(g, x), InvariantError);
}

TEST_CASE("minimal generators for odd dihedral") {
  auto g = enumerate_group(catalog_dihedral(5).generators);
  auto basis = minimal_generators(g, 5);
  CHECK(basis.certified);
  REQUIRE(basis.generators.size() == 4);
  std::multiset<int> degs;
  for (const auto& gen : basis.generators) degs.insert(gen.degree);
  CHECK(degs == std::multiset<int>({1, 2, 5, 5}));
  int cond = g.conductor;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  // Characters: z and x^5-y^5 carry the sign character.
  std::multiset<std::vector<int>> chars;
  for (const auto& gen : basis.generators) {
    chars.insert(gen.character);
    CHECK(is_invariant(commutators(g), gen.poly));
    CHECK(character_of(g, gen.poly) == gen.character);
  }
  CHECK(chars == std::multiset<std::vector<int>>(
                     {{0}, {0}, {1}, {1}}));
  // The degree-5 trivial-character generator spans x^5 + y^5.
  for (const auto& gen : basis.generators) {
    if (gen.degree == 5 && gen.character == Character{0}) {
      bool prop = false;
      for (const auto& [e, c] : gen.poly.terms()) (void)e, prop = true;
      CHECK(prop);
      // x^5+y^5 must be a scalar multiple of it.
      Poly target = x.pow(5) + y.pow(5);
      const auto& t0 = gen.poly.terms().begin()->second;
      CHECK(gen.poly * t0.inverse() * target.terms().begin()->second ==
            target);
    }
  }
}

TEST_CASE("minimal generators for the 16-element example") {
  auto g = enumerate_group(catalog_example16().generators);
  auto basis = minimal_generators(g, 4);
  CHECK(basis.certified);
  std::multiset<int> degs;
  for (const auto& gen : basis.generators) degs.insert(gen.degree);
  CHECK(degs == std::multiset<int>({1, 2, 4, 4}));
}

TEST_CASE("13 commutator invariants for the 21-element group") {
  auto g = enumerate_group(catalog_trihedral21().generators);
  auto basis = minimal_generators(g, 7);
  std::multiset<int> degs;
  for (const auto& gen : basis.generators) {
    degs.insert(gen.degree);
    CHECK(is_invariant(commutators(g), gen.poly));
    CHECK(character_of(g, gen.poly) == gen.character);
  }
  CHECK(basis.generators.size() == 13);
  CHECK(degs == std::multiset<int>({3, 4, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7}));
}

TEST_CASE("degree-3 invariants of the Heisenberg group") {
  auto g = enumerate_group(catalog_heisenberg27().generators);
  auto basis = minimal_generators(g, 3);
  CHECK(basis.generators.size() == 10);
  for (const auto& gen : basis.generators) CHECK(gen.degree == 3);
  // xyz is G-invariant: trivial character.
  int with_trivial = 0;
  for (const auto& gen : basis.generators)
    if (gen.character == Character({0, 0})) ++with_trivial;
  CHECK(with_trivial >= 1);
}

TEST_CASE("full invariants") {
  auto g = enumerate_group(catalog_dihedral(5).generators);
  auto basis = full_invariants(g, 10);
  // C[x^n+y^n, (x^n-y^n)z, xy, z^2]
  std::multiset<int> degs;
  for (const auto& gen : basis.generators) degs.insert(gen.degree);
  CHECK(degs == std::multiset<int>({2, 2, 5, 6}));

  auto g21 = enumerate_group(catalog_trihedral21().generators);
  auto b21 = full_invariants(g21, 4);
  // xyz is among the degree-3 G-invariants.
  Poly xyz = Poly::variable(3, g21.conductor, 0) *
             Poly::variable(3, g21.conductor, 1) *
             Poly::variable(3, g21.conductor, 2);
  bool found = false;
  for (const auto& gen : b21.generators)
    if (gen.poly == xyz) found = true;
  CHECK(found);
  CHECK(reynolds(commutators(g21), xyz) == xyz);
}

TEST_CASE("trivial group invariants") {
  CycMat id = mat_identity(3, 1);
  auto g = enumerate_group({id});
  auto basis = full_invariants(g, 1);
  CHECK(basis.generators.size() == 3);
  for (const auto& gen : basis.generators) CHECK(gen.degree == 1);
}

TEST_CASE("Molien series cross-check") {
  auto g = enumerate_group(catalog_trihedral21().generators);
  auto mats = commutators(g);
  auto dims = molien_dims(mats, g.conductor, 7);
  // Count invariant monomials of Z_7 = <diag(zeta,zeta^2,zeta^4)> directly.
  for (int d = 0; d <= 7; ++d) {
    long count = 0;
    for (const auto& e : monomials_of_degree(3, d))
      if ((e[0] + 2 * e[1] + 4 * e[2]) % 7 == 0) ++count;
    CHECK(dims[d] == count);
  }
}

TEST_CASE("classical SL(2) invariant table") {
  // Relations vanish on the generators.
  for (auto spec : std::vector<std::pair<std::string, int>>{
           {"BD", 3}, {"BD", 4}, {"BT", 0}, {"BO", 0}, {"BI", 0}}) {
    auto tab = sl2_invariant_table(spec.first, spec.second);
    REQUIRE(tab.p.size() == 3);
    int cond = tab.relation.conductor();
    std::vector<Poly> images;
    for (const auto& p : tab.p) images.push_back(p.lifted(cond));
    CHECK(tab.relation.substitute(images).is_zero());
  }
  // Invariance of the BT generators under [BT, BT].
  auto bt = enumerate_group(catalog_binary_tetrahedral().generators);
  auto tab = sl2_invariant_table("BT");
  for (const auto& p : tab.p) {
    CHECK(is_invariant(commutators(bt), p.lifted(bt.conductor)));
    CHECK_NOTHROW(character_of(bt, p.lifted(bt.conductor)));
  }
}
