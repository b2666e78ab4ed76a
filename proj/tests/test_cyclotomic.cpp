#include <doctest.h>

#include <random>

#include "wb/cyc_parser.hpp"
#include "wb/cyclotomic.hpp"

using namespace wb;

TEST_CASE("primitive roots and basic identities") {
  CHECK(CycNum::root(4, 4, 2) == CycNum(4, -1));
  CHECK(CycNum::root(3, 3, 1) + CycNum::root(3, 3, 2) == CycNum(3, -1));
  // zeta_3 * zeta_4 = zeta_12^{4+3}
  CHECK(CycNum::root(12, 3, 1) * CycNum::root(12, 4, 1) ==
        CycNum::root(12, 12, 7));
}

TEST_CASE("field operations") {
  // (zeta_8 + zeta_8^7)^2 = (2 cos(pi/4))^2 = 2
  CycNum a = CycNum::root(8, 8, 1) + CycNum::root(8, 8, 7);
  CHECK(a * a == CycNum(8, 2));
  CycNum z7 = CycNum::root(7, 7, 1);
  CHECK(z7 / z7 == CycNum(7, 1));
  CycNum b = CycNum(5, 1) + CycNum::root(5, 5, 1);
  CHECK(b * b.inverse() == CycNum(5, 1));
  CHECK_THROWS_AS(CycNum(5).inverse(), ArithmeticError);
  CHECK_THROWS_AS(CycNum::root(12, 5, 1), ArithmeticError);
}

TEST_CASE("multiplicative order of make_root") {
  for (int N : {4, 6, 8, 12}) {
    for (int r = 1; r <= N; ++r) {
      if (N % r != 0) continue;
      CHECK(CycNum::root(N, r, 1).root_of_unity_order() == r);
    }
  }
}

TEST_CASE("lift and rebase between conductors") {
  CycNum z3 = CycNum::root(3, 3, 1);
  CycNum lifted = z3.lifted(12);
  CHECK(lifted == CycNum::root(12, 3, 1));
  auto back = lifted.rebased(3);
  REQUIRE(back.has_value());
  CHECK(*back == z3);
  CHECK_FALSE(CycNum::root(12, 4, 1).rebased(3).has_value());
}

TEST_CASE("parser handles grammar cases") {
  CHECK(parse_cyc("z^2 - 1", 4) == CycNum(4, -2));
  CHECK_FALSE(parse_cyc("(1 - z)^7", 7).is_zero());
  // -3*zeta_3 - 2
  CycNum want = CycNum::root(3, 3, 1) * Rat(-3) - CycNum(3, 2);
  CHECK(parse_cyc("-3*z - 2", 3) == want);
  CHECK(parse_cyc(" 1/2 * z + 1/2*z ", 8) == CycNum::root(8, 8, 1));
  CHECK_THROWS_AS(parse_cyc("z +", 4), ParseError);
  CHECK_THROWS_AS(parse_cyc("z^x", 4), ParseError);
}

TEST_CASE("render round-trips through the parser") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int N : {1, 3, 4, 7, 8, 12}) {
    int phi = totient(N);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rat> c;
      for (int i = 0; i < phi; ++i) c.emplace_back(coef(rng), 1 + trial % 3);
      CycNum a = CycNum::from_poly(N, c);
      CHECK(parse_cyc(a.str(), N) == a);
    }
  }
}

TEST_CASE("field axioms on randomized triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto rand_num = [&](int N) {
    std::vector<Rat> c;
    for (int i = 0; i < totient(N); ++i) c.emplace_back(coef(rng));
    return CycNum::from_poly(N, c);
  };
  for (int trial = 0; trial < 40; ++trial) {
    int N = 12;
    CycNum a = rand_num(N), b = rand_num(N), c = rand_num(N);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(N, 1));
    CHECK(a.conj().conj() == a);
  }
}

TEST_CASE("galois maps respect multiplication") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rand_num = [&](int N) {
    std::vector<Rat> c;
    for (int i = 0; i < totient(N); ++i) c.emplace_back(coef(rng));
    return CycNum::from_poly(N, c);
  };
  for (int k : {5, 7, 11}) {
    for (int trial = 0; trial < 10; ++trial) {
      CycNum a = rand_num(12), b = rand_num(12);
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
    }
  }
}
