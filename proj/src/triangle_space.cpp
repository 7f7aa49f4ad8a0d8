#include "congrucut/triangle_space.hpp"

#include <cmath>

namespace congrucut {

namespace {
constexpr double kRegionSlack = 1e-9;
}

bool in_region(const TriangleShape& s) {
    if (!(s.y3 > 0.0)) return false;
    if (!(s.x3 > 0.0) || s.x3 > 5.0 + kRegionSlack) return false;
    const double dx = s.x3 - kBaseLength;
    return dx * dx + s.y3 * s.y3 <= 100.0 + kRegionSlack;
}

ConvexPolygon make_triangle_unchecked(const TriangleShape& s) {
    return ConvexPolygon({{0.0, 0.0}, {kBaseLength, 0.0}, {s.x3, s.y3}});
}

ConvexPolygon make_triangle(const TriangleShape& s) {
    if (!in_region(s)) throw OutOfRegion("vertex C outside shape region");
    return make_triangle_unchecked(s);
}

ShapeMetrics metrics(const TriangleShape& s) {
    ShapeMetrics m;
    m.side_b = std::hypot(s.x3, s.y3);
    m.side_a = std::hypot(kBaseLength - s.x3, s.y3);
    m.side_c = kBaseLength;
    m.alpha = std::atan2(s.y3, s.x3);
    m.beta = std::atan2(s.y3, kBaseLength - s.x3);
    m.gamma = 3.14159265358979323846 - m.alpha - m.beta;
    m.h = s.y3;
    return m;
}

std::vector<TriangleShape> grid(const GridSpec& g) {
    std::vector<TriangleShape> out;
    if (!(g.step > 0.0)) throw InvalidInput("grid step must be positive");

    // row y-values: y_min once, then every multiple of step above it
    std::vector<double> rows;
    rows.push_back(g.y_min);
    for (long j = 1;; ++j) {
        const double y = g.step * static_cast<double>(j);
        if (y > kBaseLength + kRegionSlack) break;
        if (y > g.y_min) rows.push_back(y);
    }

    for (double y : rows) {
        for (long i = 1;; ++i) {
            const double x = g.step * static_cast<double>(i);
            if (x > 5.0 + kRegionSlack) break;
            TriangleShape s{x, y};
            if (in_region(s)) out.push_back(s);
        }
    }
    return out;
}

}  // namespace congrucut
