#pragma once

// Triangle shape space: base fixed from (0,0) to (10,0), apex C = (x3, y3)
// ranging over the canonical half of a radius-10 disc about (10,0).

#include <vector>

#include "congrucut/geometry.hpp"

namespace congrucut {

inline constexpr double kBaseLength = 10.0;

struct TriangleShape {
    double x3 = 0.0;
    double y3 = 0.0;
};

struct ShapeMetrics {
    double side_a = 0.0;  // |BC|
    double side_b = 0.0;  // |CA|
    double side_c = kBaseLength;
    double alpha = 0.0;  // angle at A
    double beta = 0.0;   // angle at B
    double gamma = 0.0;  // angle at C
    double h = 0.0;      // height of C over AB
};

struct GridSpec {
    double step = 0.1;
    double y_min = 0.05;
};

// canonical region: y3 > 0, 0 < x3 <= 5, (x3-10)^2 + y3^2 <= 100
bool in_region(const TriangleShape& s);

// triangle (0,0),(10,0),(x3,y3); throws OutOfRegion outside the canonical half
ConvexPolygon make_triangle(const TriangleShape& s);

// same polygon without the region check, for mirrored/diagnostic evaluation
ConvexPolygon make_triangle_unchecked(const TriangleShape& s);

ShapeMetrics metrics(const TriangleShape& s);

// lattice points (i*step, max(j*step, y_min)) inside the region, row-major;
// rows below y_min collapse onto a single y_min row
std::vector<TriangleShape> grid(const GridSpec& g);

}  // namespace congrucut
