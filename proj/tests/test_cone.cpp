#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "wb/cone.hpp"

using namespace wb;

namespace {

ZVec zv(std::vector<long> v) {
  ZVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("primitive vectors") {
  CHECK(primitive(zv({4, -6, 8})) == zv({2, -3, 4}));
  CHECK(primitive(zv({0, 0})) == zv({0, 0}));
  CHECK(primitive(zv({-3, 0})) == zv({-1, 0}));  // sign preserved
}

TEST_CASE("orthant round trip") {
  auto orthant = Cone::from_rays(
      3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})});
  CHECK(orthant.dim() == 3);
  CHECK(orthant.is_pointed());
  REQUIRE(orthant.rays().size() == 3);
  REQUIRE(orthant.facets().size() == 3);
  CHECK(orthant.rays() == orthant.facets());  // self-dual
  CHECK(orthant.contains(zv({2, 5, 0})));
  CHECK(!orthant.contains(zv({-1, 0, 0})));
  CHECK(orthant.contains_relint(zv({1, 1, 1})));
  CHECK(!orthant.contains_relint(zv({1, 1, 0})));

  // Same cone from inequalities, in any order, with a redundant one.
  auto again = Cone::from_inequalities(
      3, {zv({0, 0, 1}), zv({1, 0, 0}), zv({0, 1, 0}), zv({1, 1, 1})});
  CHECK(again == orthant);
  CHECK(again.facets() == orthant.facets());
}

TEST_CASE("intersection of opposite orthants is the origin") {
  auto pos = Cone::from_rays(
      3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})});
  auto neg = Cone::from_rays(
      3, {zv({-1, 0, 0}), zv({0, -1, 0}), zv({0, 0, -1})});
  auto zero = pos.intersect(neg);
  CHECK(zero.dim() == 0);
  CHECK(zero.is_zero());
  CHECK(zero.contains(zv({0, 0, 0})));
  CHECK(!zero.contains(zv({1, 0, 0})));
}

TEST_CASE("non-simplicial cone over a square") {
  std::vector<ZVec> rays = {zv({1, 0, 1}), zv({0, 1, 1}), zv({-1, 0, 1}),
                            zv({0, -1, 1})};
  auto c = Cone::from_rays(3, rays);
  CHECK(c.dim() == 3);
  CHECK(c.rays().size() == 4);
  CHECK(c.facets().size() == 4);
  // The apex direction is interior.
  CHECK(c.contains_relint(zv({0, 0, 1})));
  // A redundant interior generator is pruned.
  auto with_center = rays;
  with_center.push_back(zv({0, 0, 5}));
  CHECK(Cone::from_rays(3, with_center) == c);
  // Each facet yields a 2-dimensional face with 2 extreme rays.
  for (const auto& f : c.facets()) {
    auto face = c.face(f);
    CHECK(face.dim() == 2);
    CHECK(face.rays().size() == 2);
    CHECK(c.contains_cone(face));
  }
}

TEST_CASE("lower dimensional cones and lineality") {
  // Halfplane x >= 0 in R^2.
  auto half = Cone::from_inequalities(2, {zv({1, 0})});
  CHECK(half.dim() == 2);
  CHECK(half.lineality_dim() == 1);
  REQUIRE(half.rays().size() == 1);
  CHECK(half.facets() == std::vector<ZVec>{zv({1, 0})});
  CHECK(half.contains(zv({0, -7})));
  CHECK(half.contains_relint(zv({1, -3})));
  CHECK(!half.contains_relint(zv({0, 1})));

  // A ray inside a plane in R^3.
  auto ray = Cone::from_rays(3, {zv({1, 2, 3})});
  CHECK(ray.dim() == 1);
  CHECK(ray.equations().size() == 2);
  CHECK(ray.contains(zv({2, 4, 6})));
  CHECK(!ray.contains(zv({-1, -2, -3})));
  CHECK(ray.contains_relint(zv({1, 2, 3})));
  CHECK(!ray.contains_relint(zv({0, 0, 0})));

  // A full plane: x + y + z = 0.
  auto plane = Cone::from_inequalities(3, {}, {zv({1, 1, 1})});
  CHECK(plane.dim() == 2);
  CHECK(plane.lineality_dim() == 2);
  CHECK(plane.rays().empty());
  CHECK(plane.contains(zv({1, -1, 0})));
  CHECK(!plane.contains(zv({1, 0, 0})));
}

TEST_CASE("dual of dual is the identity") {
  std::mt19937 rng(20260823);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int dim = 2 + trial % 4;  // 2..5
    std::vector<ZVec> rays;
    int nrays = 1 + (trial * 7) % 7;
    for (int i = 0; i < nrays; ++i) {
      ZVec r(dim);
      bool zero = true;
      for (int c = 0; c < dim; ++c) {
        r[c] = coef(rng);
        if (r[c] != 0) zero = false;
      }
      if (!zero) rays.push_back(std::move(r));
    }
    auto c = Cone::from_rays(dim, rays);
    CHECK(c.dual().dual() == c);
    CHECK(c.dual().ambient_dim() == dim);
    // Every generating ray is contained, relint point in relint.
    for (const auto& r : rays) CHECK(c.contains(r));
    if (!c.is_zero() && c.lineality_dim() == 0)
      CHECK(c.contains_relint(c.relint_point()));
  }
}

TEST_CASE("image of a cone") {
  auto orthant = Cone::from_rays(
      3, {zv({1, 0, 0}), zv({0, 1, 0}), zv({0, 0, 1})});
  // Project away the last coordinate.
  ZMat proj = {zv({1, 0, 0}), zv({0, 1, 0})};
  auto img = orthant.image(proj);
  CHECK(img == Cone::from_rays(2, {zv({1, 0}), zv({0, 1})}));
  // A map collapsing the orthant to a halfplane-like cone.
  ZMat collapse = {zv({1, -1, 0}), zv({0, 0, 1})};
  auto img2 = orthant.image(collapse);
  CHECK(img2.dim() == 2);
  CHECK(img2.lineality_dim() == 1);  // e1 and -e1 are both images
}

TEST_CASE("deterministic canonical form") {
  std::vector<ZVec> rays = {zv({2, 1, 0}), zv({0, 1, 2}), zv({1, 1, 1}),
                            zv({1, 0, 2})};
  auto a = Cone::from_rays(3, rays);
  std::reverse(rays.begin(), rays.end());
  auto b = Cone::from_rays(3, rays);
  CHECK(a == b);
  CHECK(a.facets() == b.facets());
  CHECK(a.equations() == b.equations());
  CHECK(std::is_sorted(a.rays().begin(), a.rays().end()));
  CHECK(std::is_sorted(a.facets().begin(), a.facets().end()));
}

TEST_CASE("containment order") {
  auto orthant = Cone::from_rays(
      2, {zv({1, 0}), zv({0, 1})});
  auto wedge = Cone::from_rays(2, {zv({1, 1}), zv({1, 2})});
  CHECK(orthant.contains_cone(wedge));
  CHECK(!wedge.contains_cone(orthant));
  CHECK(orthant.contains_cone(orthant));
  CHECK((orthant < wedge || wedge < orthant));
}
