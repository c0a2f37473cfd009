#pragma once

#include "annulus/triangulation.hpp"

#include <array>
#include <vector>

namespace annulus {

// One arc-end (or boundary-segment end) at a lifted marked point of the cover.
struct End {
  int category = 0;
  Lift key = 0;
  int arc = -1;
  MarkedPoint far;
};

// Ends at a lifted point of a finite triangulation in counter-clockwise order.
std::vector<End> ends_at(const Triangulation& t, const MarkedPoint& u);

// A face with its sides listed so that the quiver arrows run side[0] -> side[1] -> side[2] -> side[0].
// Sides are arc indices, or -1 for a boundary segment.
struct Face {
  std::array<int, 3> sides{};
  bool at_infinity = false;

  bool internal() const { return !at_infinity && sides[0] >= 0 && sides[1] >= 0 && sides[2] >= 0; }
};

// Frame polygon of one boundary of an asymptotic triangulation cut along a strictly asymptotic arc.
// Vertices 0..n are consecutive marked points starting at the framing point, n + 1 is the limit point.
struct PolyEdge {
  int i = 0, j = 0;
  int arc = -1;
  int copy = 0;  // 0 plain, 1 left copy of the framing arc, 2 right copy
};

struct PolyTriangle {
  int i = 0, j = 0, k = 0;
  std::array<int, 3> edges{};  // edge indices of (i,j), (j,k), (i,k)
  bool at_infinity = false;
};

struct FramePolygon {
  Boundary boundary = Boundary::Outer;
  int n = 0;
  Lift m = 0;
  int framing = -1;
  std::vector<PolyEdge> edges;
  std::vector<PolyTriangle> triangles;

  int infinity() const { return n + 1; }
  int edge_index(int i, int j) const;
};

FramePolygon frame_polygon(const Triangulation& t, int framing_index);

std::vector<Face> faces(const Triangulation& t);

}  // namespace annulus
