#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "radon/lattice_function.hpp"

namespace radon {

struct Ball {
  std::vector<double> center;
  double radius = 1.0;
};

struct AxisBox {
  std::vector<double> lo, hi;
};

// intersection of halfspaces <a_i, x> <= b_i; center is a designated interior
// point used for dilation
struct Polytope {
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  std::vector<double> center;
};

struct ConvexBody {
  std::variant<Ball, AxisBox, Polytope> shape;

  int dim() const;
  double bounding_radius() const;              // radius about the body's center
  std::vector<double> center_point() const;
  // inner radius about the center (exact for balls/boxes, halfspace slack for polytopes)
  std::optional<double> inner_radius() const;

  bool contains(const std::vector<double>& x) const;
  bool contains(const Point& x) const;
  // distance from an interior point to the boundary; negative outside
  double boundary_distance(const std::vector<double>& x) const;

  static ConvexBody ball(std::vector<double> center, double r);
  static ConvexBody box(std::vector<double> lo, std::vector<double> hi);
  // the standard Weyl summation window [1, N]^k
  static ConvexBody window(int k, std::int64_t N);
  static ConvexBody polytope(std::vector<std::vector<double>> normals, std::vector<double> offsets,
                             std::vector<double> center);
};

struct LatticeCount {
  std::int64_t count = 0;
  std::vector<Point> points;  // filled when requested
};

// exact count by bounding-box scan; guard: r <= 1e7 for k=1, 1e4 for k=2, 200 for k=3
LatticeCount lattice_points(const ConvexBody& body, bool keepPoints = true);

struct BoundaryCount {
  std::int64_t count = 0;          // lattice x in the body with dist(x, boundary) < s
  double comparisonSigma = 0.0;    // s * r^{k-1+2*sigma}
  double comparisonInner = 0.0;    // s * r^{k-1}
};

BoundaryCount boundary_near_count(const ConvexBody& body, double s, double sigma = 0.0);

// Omega_delta = delta-dilate about the body's center, delta in (0, 1]
ConvexBody dilate_body(const ConvexBody& body, double delta);

// CLI body spec: "ball:r=50", "ball:r=50,c=1,2", "box:half=10", "box:lo=-1,-1,hi=5,5"
ConvexBody parse_body(const std::string& spec, int k);

}  // namespace radon
