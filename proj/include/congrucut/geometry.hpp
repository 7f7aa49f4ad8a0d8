#pragma once

// 2D computational geometry for congruent-piece cutting: convex polygons,
// half-plane clipping, plane isometries, congruence tests, corner trimming.

#include <cmath>
#include <optional>
#include <vector>

#include "congrucut/errors.hpp"

namespace congrucut {

// absolute area threshold below which a clip/intersection result is Empty
inline constexpr double kAreaEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

// angle wrapped into [0, pi): a line direction, not a ray
double normalize_line_angle(double angle);

// Oriented line through `anchor` with direction (cos angle, sin angle).
// The "left" side is the half-plane to the left of the direction vector.
struct SeparatingLine {
    Point anchor;
    double angle = 0.0;  // radians in [0, pi)

    Point dir() const { return {std::cos(angle), std::sin(angle)}; }
    Point left_normal() const { return {-std::sin(angle), std::cos(angle)}; }
    // signed distance, positive on the left side
    double signed_dist(Point p) const { return dot(left_normal(), p - anchor); }

    static SeparatingLine through(Point anchor, double angle) {
        return {anchor, normalize_line_angle(angle)};
    }
};

// Plane isometry g(p) = Rot(theta) * Mirror(reflect) * p + t, where Mirror
// negates y before the rotation.
struct Isometry {
    bool reflect = false;
    double theta = 0.0;
    Point t{0.0, 0.0};

    Point apply(Point p) const {
        if (reflect) p.y = -p.y;
        const double c = std::cos(theta), s = std::sin(theta);
        return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y};
    }

    Point apply_inverse(Point q) const {
        q = q - t;
        const double c = std::cos(theta), s = std::sin(theta);
        Point p{c * q.x + s * q.y, -s * q.x + c * q.y};
        if (reflect) p.y = -p.y;
        return p;
    }

    Isometry inverse() const;

    // composition: (a * b)(p) = a(b(p))
    friend Isometry operator*(const Isometry& a, const Isometry& b);

    static Isometry identity() { return {}; }
    static Isometry rotation_about(Point center, double angle);
    // reflection across the line through `anchor` with direction `axis_angle`
    static Isometry reflection_across(Point anchor, double axis_angle);
    // reflection across the axis, then slide by `slide` along it
    static Isometry glide(Point anchor, double axis_angle, double slide);
};

struct ConvexPolygon {
    std::vector<Point> verts;  // counterclockwise

    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Point> v) : verts(std::move(v)) {}

    std::size_t size() const { return verts.size(); }
    const Point& operator[](std::size_t i) const { return verts[i]; }
};

using MaybePolygon = std::optional<ConvexPolygon>;

double area(const ConvexPolygon& p);
Point centroid(const ConvexPolygon& p);
double diameter(const ConvexPolygon& p);

// canonical constructor: orients ccw, rejects degenerate input
ConvexPolygon make_polygon(std::vector<Point> verts);

// strict validity: >=3 vertices, ccw, convex turns, no dup/collinear within tol
bool is_valid_strict(const ConvexPolygon& p, double tol);

// portion of `p` on the requested side of `l`; Empty below the area epsilon
MaybePolygon clip_halfplane(const ConvexPolygon& p, const SeparatingLine& l,
                            bool keep_left);

MaybePolygon intersect_convex(const ConvexPolygon& a, const ConvexPolygon& b);

ConvexPolygon apply_isometry(const Isometry& g, const ConvexPolygon& p);

// cyclic edge-length + interior-angle match, direct or reversed
bool congruent(const ConvexPolygon& a, const ConvexPolygon& b, double tol);

// merge near-duplicate vertices, drop near-collinear ones
ConvexPolygon snap_vertices(const ConvexPolygon& p, double collinear_tol);

struct TrimSpec {
    std::size_t vertex_index = 0;
    double area = 0.0;  // absolute area to remove
};

// replace the corner by a chord removing exactly spec.area
ConvexPolygon trim_corner(const ConvexPolygon& p, const TrimSpec& spec);

// pieces of a \ b (disjoint convex cover of the difference)
std::vector<ConvexPolygon> convex_difference(const ConvexPolygon& a,
                                             const ConvexPolygon& b);

// area of a ∩ b, 0 if empty
double intersection_area(const ConvexPolygon& a, const ConvexPolygon& b);

}  // namespace congrucut
