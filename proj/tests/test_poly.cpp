#include <doctest.h>

#include "wb/catalog.hpp"
#include "wb/poly.hpp"

using namespace wb;

namespace {

Poly parse_mono(int nvars, int cond, std::initializer_list<int> exps,
                long coeff) {
  Exp e(exps);
  return Poly::monomial(nvars, e, CycNum(cond, coeff));
}

}  // namespace

TEST_CASE("polynomial ring basics") {
  int cond = 1;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  Poly z = Poly::variable(3, cond, 2);
  Poly f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.total_degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK((f - f).is_zero());
  Poly g = (x + y + z).pow(3);
  CHECK(g.num_terms() == 10);
  CHECK(g.total_degree() == 3);
  CHECK_FALSE((g + Poly::constant(3, CycNum(cond, 1))).is_homogeneous());
}

TEST_CASE("substitution and linear action") {
  int cond = 4;
  Poly x = Poly::variable(2, cond, 0);
  Poly y = Poly::variable(2, cond, 1);
  Poly f = x * x + y * y;
  // Rotate by i: x -> ix, y -> -iy leaves x^2+y^2... actually maps to -x^2-y^2.
  CycNum i = CycNum::root(cond, 4, 1);
  CycMat rot{{i, CycNum(cond)}, {CycNum(cond), -i}};
  Poly g = f.linear_substitute(rot);
  CHECK(g == -(x * x) - y * y);
}

TEST_CASE("group action convention composes contravariantly") {
  auto entry = catalog_dihedral(5);
  auto grp = enumerate_group(entry.generators);
  int cond = grp.conductor;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  Poly z = Poly::variable(3, cond, 2);
  Poly f = x * y + z * z * z + x * x * x * x * x;
  for (int a : {1, 3}) {
    for (int b : {2, 5}) {
      const CycMat& ga = grp.elements[a].matrix;
      const CycMat& gb = grp.elements[b].matrix;
      Poly lhs = f.group_action(mat_mul(ga, gb));
      Poly rhs = f.group_action(gb).group_action(ga);
      // (gh).f = g.(h.f)
      CHECK(lhs == f.group_action(grp.elements[grp.mul(a, b)].matrix));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("monomial valuation on diagonal weights") {
  // nu for exponents (1,2,4) of an order-7 element, identity eigenbasis.
  MonomialValuation nu({1, 2, 4}, mat_identity(3, 7));
  Poly x = Poly::variable(3, 7, 0);
  Poly y = Poly::variable(3, 7, 1);
  Poly z = Poly::variable(3, 7, 2);
  CHECK(nu.value(Poly::constant(3, CycNum(7, 1))) == 0);  // nu(1) = 0
  CHECK(nu.value(x * y * z) == 7);
  CHECK(nu.value(x.pow(7) + y.pow(7) + z.pow(7)) == 7);
  CHECK(nu.value(x * y.pow(3)) == 7);
  CHECK(nu.value(x.pow(5) * y + y.pow(5) * z) == 7);
  CHECK_THROWS_AS(nu.value(Poly(3, 7)), PolyError);
  // Leading form keeps only minimal-weight monomials.
  Poly f = x * y * z + z;
  CHECK(nu.eigen_leading_form(f) == z);
}

TEST_CASE("valuation through a nontrivial eigenbasis") {
  auto g = enumerate_group(catalog_dihedral(7).generators);
  // Reflection class: exponents (0,1) pattern on a 3-dim space.
  int refl = -1;
  for (size_t i = 0; i < g.classes.size(); ++i)
    if (g.classes[i].order == 2) refl = static_cast<int>(i);
  REQUIRE(refl >= 0);
  const auto& cls = g.classes[refl];
  MonomialValuation nu(cls.exponents, cls.eigenbasis);
  int cond = g.conductor;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  Poly z = Poly::variable(3, cond, 2);
  int n = 7;
  // Values from the odd dihedral table: rows (0,1,0,1) on the generators.
  CHECK(nu.value(x.pow(n) + y.pow(n)) == 0);
  CHECK(nu.value(x.pow(n) - y.pow(n)) == 1);
  CHECK(nu.value(x * y) == 0);
  CHECK(nu.value(z) == 1);
}

TEST_CASE("rotation valuations match the odd dihedral table") {
  int n = 7;
  auto g = enumerate_group(catalog_dihedral(n).generators);
  int cond = g.conductor;
  Poly x = Poly::variable(3, cond, 0);
  Poly y = Poly::variable(3, cond, 1);
  Poly z = Poly::variable(3, cond, 2);
  for (const auto& cls : g.classes) {
    if (cls.order != n || cls.representative == 0) continue;
    MonomialValuation nu(cls.exponents, cls.eigenbasis);
    // Row (in/gcd, in/gcd, n/gcd, 0) for some i depending on the class.
    long vxy = nu.value(x * y);
    CHECK(vxy == n);  // gcd(7, i) = 1 for all i
    long vp = nu.value(x.pow(n) + y.pow(n));
    CHECK(vp == nu.value(x.pow(n) - y.pow(n)));
    CHECK(vp % n == 0);
    long i = vp / n;
    CHECK(i >= 1);
    CHECK(i <= 3);
    CHECK(nu.value(z) == 0);
  }
}

TEST_CASE("valuation is multiplicative on products of monomial terms") {
  MonomialValuation nu({2, 3, 5}, mat_identity(3, 1));
  Poly a = parse_mono(3, 1, {1, 1, 0}, 2) + parse_mono(3, 1, {0, 0, 1}, -1);
  Poly b = parse_mono(3, 1, {2, 0, 0}, 1) + parse_mono(3, 1, {0, 1, 1}, 5);
  CHECK(nu.value(a * b) >= nu.value(a) + nu.value(b));
  CHECK(nu.value(a.pow(4)) == 4 * nu.value(a));
}
