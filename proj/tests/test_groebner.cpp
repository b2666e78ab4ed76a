#include <doctest.h>

#include <algorithm>
#include <vector>

#include "wb/groebner.hpp"
#include "wb/invariant.hpp"

using namespace wb;

namespace {

Poly var(int n, int i, int cond = 4) { return Poly::variable(n, cond, i); }

Poly rat_const(int n, int v, int cond = 4) {
  return Poly::constant(n, CycNum(cond, Rat(v)));
}

}  // namespace

TEST_CASE("term orders") {
  // grevlex: y^2 beats x; lex: x beats y^2.
  Exp x{1, 0}, y2{0, 2}, xy{1, 1};
  auto grevlex = TermOrder::grevlex();
  auto lex = TermOrder::lex();
  CHECK(grevlex.less(x, y2));
  CHECK(lex.less(y2, x));
  CHECK(grevlex.cmp(xy, xy) == 0);
  // grevlex in 3 vars: x*z < y^2 (same degree, reverse-lex tie).
  Exp xz{1, 0, 1}, yy{0, 2, 0};
  CHECK(grevlex.less(xz, yy));
  // Block order eliminating the first variable: x beats y^5.
  auto block = TermOrder::block_elim(1);
  Exp y5{0, 5};
  CHECK(block.less(y5, x));
  CHECK_THROWS_AS(grevlex.cmp(Exp{1}, Exp{1, 0}), GroebnerError);
}

TEST_CASE("linear lex elimination") {
  // (Z1 - Z2, Z2 - Z3) under lex -> {Z1 - Z3, Z2 - Z3}.
  Poly z1 = var(3, 0), z2 = var(3, 1), z3 = var(3, 2);
  GroebnerBasis gb({z1 - z2, z2 - z3}, TermOrder::lex());
  REQUIRE(gb.basis().size() == 2);
  CHECK(gb.basis()[0] == z2 - z3);
  CHECK(gb.basis()[1] == z1 - z3);
  CHECK(gb.contains(z1 - z3));
  CHECK(!gb.contains(z1 + z3));
}

TEST_CASE("principal ideal is its own reduced basis") {
  Poly z1 = var(6, 0), z2 = var(6, 1), z3 = var(6, 2);
  Poly te = var(6, 5), t1 = var(6, 3), t2 = var(6, 4);
  Poly tri = z1 * z1 - z2 * z2 * te -
             rat_const(6, 4) * z3.pow(5) * t1.pow(3) * t2;
  GroebnerBasis gb({tri}, TermOrder::grevlex());
  REQUIRE(gb.basis().size() == 1);
  // Reduced basis is the trinomial normalized on its grevlex lead
  // (the degree-9 monomial, coefficient -4).
  CHECK(gb.basis()[0] * CycNum(4, Rat(-4)) == tri);
}

TEST_CASE("reduced basis is independent of generator order") {
  Poly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  std::vector<Poly> gens = {x * x - y, y * y - z, x * y - z * z,
                            x + y + z - rat_const(3, 1)};
  GroebnerBasis a(gens, TermOrder::grevlex());
  std::vector<Poly> shuffled = {gens[2], gens[0], gens[3], gens[1]};
  GroebnerBasis b(shuffled, TermOrder::grevlex());
  REQUIRE(a.basis().size() == b.basis().size());
  for (size_t i = 0; i < a.basis().size(); ++i)
    CHECK(a.basis()[i] == b.basis()[i]);
}

TEST_CASE("ideal closure under multiplication") {
  Poly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  std::vector<Poly> gens = {x * x - y * z, x * y * y - z};
  GroebnerBasis gb(gens, TermOrder::grevlex());
  std::vector<Poly> cofactors = {x + y, z * z - rat_const(3, 7), x * y * z};
  for (const auto& g : gens)
    for (const auto& c : cofactors) CHECK(gb.contains(g * c));
  CHECK(!gb.contains(x));
  // Normal form reproduces the remainder: x^2 reduces to y z.
  CHECK(gb.normal_form(x * x) == y * z);
}

TEST_CASE("unit ideal detection") {
  Poly x = var(2, 0), y = var(2, 1);
  GroebnerBasis unit({x, x - rat_const(2, 1)}, TermOrder::grevlex());
  CHECK(unit.is_unit_ideal());
  GroebnerBasis axes({x, y}, TermOrder::grevlex());
  CHECK(!axes.is_unit_ideal());
  // consistency_with_unit with no forced zeros: true iff I != (1) has a
  // solution with all coordinates nonzero.
  CHECK(!consistency_with_unit({x, y}, {}));       // only the origin
  CHECK(consistency_with_unit({x - y}, {}));       // diagonal
  CHECK(!consistency_with_unit({x, x - rat_const(2, 1)}, {}));
}

TEST_CASE("consistency matches the trinomial counting rule") {
  // Trinomial relation of a small dihedral-type presentation:
  //   Z1^2 - Z2^2 Te - 4 Z3^5 T1^3 T2  in 6 variables.
  Poly z1 = var(6, 0), z2 = var(6, 1), z3 = var(6, 2);
  Poly t1 = var(6, 3), t2 = var(6, 4), te = var(6, 5);
  Poly tri = z1 * z1 - z2 * z2 * te -
             rat_const(6, 4) * z3.pow(5) * t1.pow(3) * t2;
  std::vector<Exp> monos;
  for (const auto& [e, c] : tri.terms()) monos.push_back(e);
  for (int mask = 0; mask < (1 << 6); ++mask) {
    std::vector<int> zeros;
    for (int v = 0; v < 6; ++v)
      if (mask & (1 << v)) zeros.push_back(v);
    int surviving = 0;
    for (const auto& e : monos) {
      bool alive = true;
      for (int v : zeros)
        if (e[v] > 0) alive = false;
      if (alive) ++surviving;
    }
    bool expect = surviving != 1;
    CHECK(consistency_with_unit({tri}, zeros) == expect);
  }
}

TEST_CASE("kernel of the binary dihedral invariant map") {
  auto tab = sl2_invariant_table("BD", 3);
  auto kernel = kernel_of_map(tab.p);
  REQUIRE(kernel.size() == 1);
  // The kernel generator is the trinomial up to a scalar.
  Poly rel = tab.relation.lifted(kernel[0].conductor());
  const CycNum& a = kernel[0].terms().begin()->second;
  const CycNum& b = rel.terms().begin()->second;
  CHECK(kernel[0] * b == rel * a);
  // And the relation certainly maps to zero.
  std::vector<Poly> images;
  for (const auto& p : tab.p) images.push_back(p.lifted(rel.conductor()));
  CHECK(rel.substitute(images).is_zero());
}

TEST_CASE("kernel of a toric map") {
  // x -> s t, y -> s, z -> t: kernel is (x - y z).
  Poly s = var(2, 0), t = var(2, 1);
  auto kernel = kernel_of_map({s * t, s, t});
  REQUIRE(kernel.size() == 1);
  Poly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  Poly expect = y * z - x;
  const CycNum& a = kernel[0].terms().begin()->second;
  const CycNum& b = expect.terms().begin()->second;
  CHECK(kernel[0] * b == expect * a);
}

TEST_CASE("radical membership") {
  Poly x = var(2, 0), y = var(2, 1);
  CHECK(radical_membership(x, {x * x}));
  CHECK(radical_membership(x * y, {x * x * y.pow(3)}));
  CHECK(!radical_membership(x, {y}));
  CHECK(!radical_membership(x + y, {x * x}));
  CHECK(radical_membership(Poly(2, 4), {y}));  // zero polynomial
}

TEST_CASE("krull dimension") {
  Poly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  // Principal ideal in s variables -> s - 1.
  CHECK(krull_dimension({x * x - y * z}, 3) == 2);
  Poly z1 = var(6, 0), z2 = var(6, 1), z3 = var(6, 2);
  Poly t1 = var(6, 3), t2 = var(6, 4), te = var(6, 5);
  Poly tri = z1 * z1 - z2 * z2 * te -
             rat_const(6, 4) * z3.pow(5) * t1.pow(3) * t2;
  CHECK(krull_dimension({tri}, 6) == 5);
  // Coordinate subspaces.
  CHECK(krull_dimension({x, y}, 3) == 1);
  CHECK(krull_dimension({x, y, z}, 3) == 0);
  CHECK(krull_dimension({}, 3) == 3);                       // zero ideal
  CHECK(krull_dimension({rat_const(3, 2)}, 3) == -1);       // unit ideal
  CHECK(krull_dimension({x * y, y * z, x * z}, 3) == 1);    // three axes
}

TEST_CASE("budget exhaustion is reported") {
  Poly x = var(2, 0), y = var(2, 1);
  GroebnerOptions tight;
  tight.max_pairs = 0;
  CHECK_THROWS_AS(GroebnerBasis({x * x - y, x * y - rat_const(2, 1)},
                                TermOrder::grevlex(), tight),
                  BudgetError);
  GroebnerOptions low_deg;
  low_deg.max_degree = 2;
  CHECK_THROWS_AS(GroebnerBasis({x * x - y, x * y * y - rat_const(2, 1)},
                                TermOrder::grevlex(), low_deg),
                  BudgetError);
  try {
    GroebnerBasis gb({x * x - y, x * y - rat_const(2, 1)},
                     TermOrder::grevlex(), tight);
  } catch (const BudgetError& e) {
    CHECK(e.stats.pairs_considered >= 1);
  }
}

TEST_CASE("set_vars_zero") {
  Poly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  Poly f = x * y + z * z + x - rat_const(3, 5);
  Poly g = set_vars_zero(f, {0});
  CHECK(g == z * z - rat_const(3, 5));
  CHECK(set_vars_zero(f, {0, 2}) == -rat_const(3, 5));
}

TEST_CASE("saturation by a variable") {
  Poly x = var(2, 0), y = var(2, 1);
  // (x^2 y) : x^infty = (y).
  auto sat = saturation({x * x * y}, x);
  GroebnerBasis gb(sat, TermOrder::grevlex());
  CHECK(gb.contains(y));
  CHECK(!gb.contains(x));
  // (x^2, xy) : x^infty is the unit ideal: the variety is {x = 0}.
  auto unit = saturation({x * x, x * y}, x);
  CHECK(GroebnerBasis(unit, TermOrder::grevlex()).is_unit_ideal());
  // An ideal already saturated is unchanged as an ideal.
  auto sat2 = saturation({x * y - rat_const(2, 1)}, x);
  GroebnerBasis gb2(sat2, TermOrder::grevlex());
  REQUIRE(gb2.basis().size() == 1);
  CHECK(gb2.contains(x * y - rat_const(2, 1)));
  CHECK(saturation({}, x).empty());
}
