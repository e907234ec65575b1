#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "radon/geometry.hpp"

using namespace radon;

TEST_SUITE("geometry") {

TEST_CASE("boxes count exactly") {
  for (std::int64_t r : {1, 3, 6, 12}) {
    auto b = ConvexBody::box(std::vector<double>(2, -static_cast<double>(r)),
                             std::vector<double>(2, static_cast<double>(r)));
    auto lc = lattice_points(b, false);
    CHECK(lc.count == (2 * r + 1) * (2 * r + 1));

    // lattice points within distance 1 of the boundary form the outermost ring
    auto bc = boundary_near_count(b, 1.0);
    CHECK(bc.count == (2 * r + 1) * (2 * r + 1) - (2 * r - 1) * (2 * r - 1));
  }
}

TEST_CASE("disk counts match the circle problem") {
  auto d10 = lattice_points(ConvexBody::ball({0.0, 0.0}, 10.0), true);
  CHECK(d10.count == 317);
  CHECK(d10.points.size() == 317);
  CHECK(std::abs(static_cast<double>(d10.count) - 100.0 * std::acos(-1.0)) < 2.5 * 10.0);

  auto d5 = lattice_points(ConvexBody::ball({0.0, 0.0}, 5.0), false);
  CHECK(d5.count == 81);

  // off-center placement only translates the lattice when the shift is integral
  auto shifted = lattice_points(ConvexBody::ball({3.0, -7.0}, 10.0), false);
  CHECK(shifted.count == 317);
}

TEST_CASE("summation window") {
  auto w = lattice_points(ConvexBody::window(2, 5), true);
  CHECK(w.count == 25);
  for (const auto& p : w.points)
    for (auto c : p) {
      CHECK(c >= 1);
      CHECK(c <= 5);
    }
}

TEST_CASE("boundary layer saturates when s exceeds the inradius") {
  auto b = ConvexBody::ball({0.0, 0.0}, 10.0);
  auto bc = boundary_near_count(b, 10.5);
  CHECK(bc.count == 317);
}

TEST_CASE("comparison scales") {
  auto b = ConvexBody::ball({0.0, 0.0}, 10.0);
  auto bc = boundary_near_count(b, 1.0, 0.25);
  CHECK(bc.comparisonInner == doctest::Approx(10.0));
  CHECK(bc.comparisonSigma == doctest::Approx(std::pow(10.0, 1.5)));
  CHECK(bc.count <= lattice_points(b, false).count);
}

TEST_CASE("dilation") {
  auto b = ConvexBody::ball({0.0, 0.0}, 10.0);
  CHECK(lattice_points(dilate_body(b, 1.0), false).count == 317);
  CHECK(lattice_points(dilate_body(b, 0.5), false).count == 81);
  auto c05 = lattice_points(dilate_body(b, 0.5), false).count;
  auto c09 = lattice_points(dilate_body(b, 0.9), false).count;
  CHECK(c05 <= c09);
  CHECK(c09 <= 317);
  CHECK_THROWS_AS(dilate_body(b, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(dilate_body(b, 1.5), std::invalid_argument);
}

TEST_CASE("polytope triangle") {
  // x >= 0, y >= 0, x + y <= 10
  auto tri = ConvexBody::polytope({{-1.0, 0.0}, {0.0, -1.0}, {1.0, 1.0}}, {0.0, 0.0, 10.0},
                                  {1.0, 1.0});
  CHECK(lattice_points(tri, false).count == 66);
  CHECK(tri.inner_radius().value() == doctest::Approx(1.0));

  // half dilation about (1,1): x >= 0.5, y >= 0.5, x + y <= 6
  CHECK(lattice_points(dilate_body(tri, 0.5), false).count == 15);

  CHECK_THROWS_AS(ConvexBody::polytope({{1.0, 0.0}}, {-5.0}, {0.0, 0.0}),
                  std::invalid_argument);  // infeasible center
}

TEST_CASE("thin box holds no lattice points") {
  auto b = ConvexBody::box({0.2, 0.2}, {0.8, 0.8});
  CHECK(lattice_points(b, true).count == 0);
}

TEST_CASE("scan budget guards") {
  CHECK_THROWS_AS(lattice_points(ConvexBody::ball({0.0, 0.0}, 1.1e4), false),
                  std::invalid_argument);
  CHECK_THROWS_AS(lattice_points(ConvexBody::ball({0.0, 0.0, 0.0}, 300.0), false),
                  std::invalid_argument);
  CHECK_THROWS_AS(lattice_points(ConvexBody::ball({0.0, 0.0, 0.0, 0.0}, 2.0), false),
                  std::invalid_argument);
}

TEST_CASE("body specs parse") {
  auto b1 = parse_body("ball:r=50", 2);
  CHECK(b1.bounding_radius() == doctest::Approx(50.0));
  CHECK(b1.center_point() == std::vector<double>{0.0, 0.0});

  auto b2 = parse_body("ball:r=50,c=1,2", 2);
  CHECK(b2.center_point() == std::vector<double>{1.0, 2.0});

  auto b3 = parse_body("box:half=10", 2);
  CHECK(lattice_points(b3, false).count == 21 * 21);

  auto b4 = parse_body("box:lo=-1,-1,hi=5,5", 2);
  CHECK(lattice_points(b4, false).count == 7 * 7);

  CHECK_THROWS_AS(parse_body("ball", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_body("ball:x=3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_body("torus:r=3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_body("ball:r=5,c=1,2,3", 2), std::invalid_argument);
}

}  // TEST_SUITE
