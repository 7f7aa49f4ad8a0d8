#include "congrucut/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace congrucut {

double normalize_line_angle(double angle) {
    const double pi = 3.14159265358979323846;
    double a = std::fmod(angle, pi);
    if (a < 0) a += pi;
    if (a >= pi) a -= pi;
    return a;
}

Isometry Isometry::inverse() const {
    // rotations: R(-theta), t' = -R(-theta) t
    // reflections are involutions conjugated by the translation
    Isometry inv;
    inv.reflect = reflect;
    if (!reflect) {
        inv.theta = -theta;
        const double c = std::cos(-theta), s = std::sin(-theta);
        inv.t = {-(c * t.x - s * t.y), -(s * t.x + c * t.y)};
    } else {
        inv.theta = theta;
        const double c = std::cos(theta), s = std::sin(theta);
        // g^-1(q) = R(theta) M q - R(theta) M t
        Point mt{t.x, -t.y};
        inv.t = {-(c * mt.x - s * mt.y), -(s * mt.x + c * mt.y)};
    }
    return inv;
}

Isometry operator*(const Isometry& a, const Isometry& b) {
    Isometry c;
    c.reflect = a.reflect != b.reflect;
    c.theta = a.reflect ? a.theta - b.theta : a.theta + b.theta;
    c.t = a.apply(b.t);
    return c;
}

Isometry Isometry::rotation_about(Point center, double angle) {
    Isometry g;
    g.theta = angle;
    const double c = std::cos(angle), s = std::sin(angle);
    g.t = {center.x - (c * center.x - s * center.y),
           center.y - (s * center.x + c * center.y)};
    return g;
}

Isometry Isometry::reflection_across(Point anchor, double axis_angle) {
    // Ref about a line of direction psi has matrix Rot(2 psi) * Mirror
    Isometry g;
    g.reflect = true;
    g.theta = 2.0 * axis_angle;
    const double c = std::cos(g.theta), s = std::sin(g.theta);
    g.t = {anchor.x - (c * anchor.x + s * anchor.y),
           anchor.y - (s * anchor.x - c * anchor.y)};
    return g;
}

Isometry Isometry::glide(Point anchor, double axis_angle, double slide) {
    Isometry g = reflection_across(anchor, axis_angle);
    g.t.x += slide * std::cos(axis_angle);
    g.t.y += slide * std::sin(axis_angle);
    return g;
}

double area(const ConvexPolygon& p) {
    double s = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % n];
        s += cross(a, b);
    }
    return 0.5 * s;
}

Point centroid(const ConvexPolygon& p) {
    double a6 = 0.0, cx = 0.0, cy = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& u = p[i];
        const Point& v = p[(i + 1) % n];
        const double w = cross(u, v);
        a6 += w;
        cx += (u.x + v.x) * w;
        cy += (u.y + v.y) * w;
    }
    a6 *= 3.0;
    if (std::abs(a6) < 1e-300) return p.verts.empty() ? Point{} : p[0];
    return {cx / a6, cy / a6};
}

double diameter(const ConvexPolygon& p) {
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            d = std::max(d, dist(p[i], p[j]));
    return d;
}

ConvexPolygon make_polygon(std::vector<Point> verts) {
    if (verts.size() < 3) throw InvalidInput("polygon needs at least 3 vertices");
    ConvexPolygon p(std::move(verts));
    if (area(p) < 0) std::reverse(p.verts.begin(), p.verts.end());
    if (area(p) < kAreaEps) throw InvalidInput("degenerate polygon");
    return p;
}

bool is_valid_strict(const ConvexPolygon& p, double tol) {
    const std::size_t n = p.size();
    if (n < 3) return false;
    if (area(p) <= 0) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % n];
        const Point& c = p[(i + 2) % n];
        if (dist(a, b) <= tol) return false;
        // convex turn and no collinear run: perpendicular deviation above tol
        const double dev = cross(b - a, c - a) / std::max(dist(a, c), 1e-300);
        if (dev <= tol) return false;
    }
    return true;
}

namespace {

// clip by n·p >= c with |n| = 1; vertices within `band` of the line count as
// inside so that crossings are never generated against fp-noise endpoints
MaybePolygon clip_unit_halfplane(const ConvexPolygon& p, Point n, double c) {
    const std::size_t m = p.size();
    if (m < 3) return std::nullopt;
    double mag = std::abs(c);
    for (const Point& v : p.verts) mag = std::max({mag, std::abs(v.x), std::abs(v.y)});
    const double band = 1e-12 * (1.0 + mag);

    std::vector<Point> out;
    out.reserve(m + 2);
    double dprev = dot(n, p[0]) - c;
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % m];
        const double da = dprev;
        const double db = dot(n, b) - c;
        dprev = db;
        if (da >= -band) out.push_back(a);
        if ((da > band && db < -band) || (da < -band && db > band)) {
            const double t = da / (da - db);
            out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
    if (out.size() < 3) return std::nullopt;
    ConvexPolygon r(std::move(out));
    if (std::abs(area(r)) < kAreaEps) return std::nullopt;
    return r;
}

}  // namespace

MaybePolygon clip_halfplane(const ConvexPolygon& p, const SeparatingLine& l,
                            bool keep_left) {
    Point n = l.left_normal();
    double c = dot(n, l.anchor);
    if (!keep_left) {
        n = -1.0 * n;
        c = -c;
    }
    return clip_unit_halfplane(p, n, c);
}

MaybePolygon intersect_convex(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.size() < 3 || b.size() < 3) return std::nullopt;
    ConvexPolygon r = a;
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& u = b[i];
        const Point& v = b[(i + 1) % m];
        Point n{-(v.y - u.y), v.x - u.x};
        const double len = norm(n);
        if (len < 1e-300) continue;
        n = (1.0 / len) * n;
        auto clipped = clip_unit_halfplane(r, n, dot(n, u));
        if (!clipped) return std::nullopt;
        r = std::move(*clipped);
    }
    return r;
}

double intersection_area(const ConvexPolygon& a, const ConvexPolygon& b) {
    auto r = intersect_convex(a, b);
    return r ? area(*r) : 0.0;
}

ConvexPolygon apply_isometry(const Isometry& g, const ConvexPolygon& p) {
    ConvexPolygon out;
    out.verts.reserve(p.size());
    for (const Point& v : p.verts) out.verts.push_back(g.apply(v));
    if (g.reflect) std::reverse(out.verts.begin(), out.verts.end());
    return out;
}

namespace {

bool sequences_match(const std::vector<double>& ea, const std::vector<double>& aa,
                     const std::vector<double>& eb, const std::vector<double>& ab,
                     double len_tol, double ang_tol) {
    const std::size_t n = ea.size();
    for (std::size_t off = 0; off < n; ++off) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const std::size_t j = (i + off) % n;
            ok = std::abs(ea[i] - eb[j]) <= len_tol && std::abs(aa[i] - ab[j]) <= ang_tol;
        }
        if (ok) return true;
    }
    return false;
}

void edge_angle_seq(const ConvexPolygon& p, std::vector<double>& edges,
                    std::vector<double>& angles) {
    const std::size_t n = p.size();
    edges.resize(n);
    angles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = p[(i + n - 1) % n];
        const Point& cur = p[i];
        const Point& next = p[(i + 1) % n];
        edges[i] = dist(cur, next);
        const Point u = prev - cur, v = next - cur;
        angles[i] = std::atan2(std::abs(cross(u, v)), dot(u, v));
    }
}

}  // namespace

bool congruent(const ConvexPolygon& a, const ConvexPolygon& b, double tol) {
    if (a.size() != b.size() || a.size() < 3) return false;
    const double scale = std::max(1.0, std::max(diameter(a), diameter(b)));
    const double len_tol = tol * scale;
    const double ang_tol = tol;

    std::vector<double> ea, aa, eb, ab;
    edge_angle_seq(a, ea, aa);
    edge_angle_seq(b, eb, ab);
    if (sequences_match(ea, aa, eb, ab, len_tol, ang_tol)) return true;

    // reversed traversal covers the mirror alignment; edge i of the reversed
    // polygon is edge (n-1-i) of the original offset by one vertex
    ConvexPolygon brev;
    brev.verts.assign(b.verts.rbegin(), b.verts.rend());
    std::vector<double> er, ar;
    edge_angle_seq(brev, er, ar);
    return sequences_match(ea, aa, er, ar, len_tol, ang_tol);
}

ConvexPolygon snap_vertices(const ConvexPolygon& p, double collinear_tol) {
    std::vector<Point> v = p.verts;
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        const std::size_t n = v.size();
        // merge near-duplicate consecutive vertices
        for (std::size_t i = 0; i < n; ++i) {
            if (dist(v[i], v[(i + 1) % n]) <= collinear_tol) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>((i + 1) % n));
                changed = true;
                break;
            }
        }
        if (changed) continue;
        // drop vertices within collinear_tol of their neighbors' chord
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = v[(i + n - 1) % n];
            const Point& b = v[i];
            const Point& c = v[(i + 1) % n];
            const Point u = c - a;
            const double len = norm(u);
            if (len < 1e-300) continue;
            const double dev = std::abs(cross(b - a, u)) / len;
            if (dev <= collinear_tol) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return ConvexPolygon(std::move(v));
}

ConvexPolygon trim_corner(const ConvexPolygon& p, const TrimSpec& spec) {
    const std::size_t n = p.size();
    if (spec.vertex_index >= n) throw InvalidInput("trim vertex index out of range");
    if (!(spec.area > 0.0) || spec.area >= 0.1 * area(p))
        throw InvalidInput("trim area must be in (0, 0.1*area)");

    const Point& prev = p[(spec.vertex_index + n - 1) % n];
    const Point& v = p[spec.vertex_index];
    const Point& next = p[(spec.vertex_index + 1) % n];
    const Point u1 = prev - v, u2 = next - v;
    const double l1 = norm(u1), l2 = norm(u2);
    const double sin_th = std::abs(cross(u1, u2)) / (l1 * l2);
    if (sin_th < 1e-12) throw TrimTooLarge("corner is degenerate");
    const double t = std::sqrt(2.0 * spec.area / sin_th);
    if (t >= l1 || t >= l2) throw TrimTooLarge("trim chord exceeds adjacent edge");

    const Point a = v + (t / l1) * u1;  // on edge (prev, v)
    const Point b = v + (t / l2) * u2;  // on edge (v, next)
    std::vector<Point> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == spec.vertex_index) {
            out.push_back(a);
            out.push_back(b);
        } else {
            out.push_back(p[i]);
        }
    }
    return ConvexPolygon(std::move(out));
}

std::vector<ConvexPolygon> convex_difference(const ConvexPolygon& a,
                                             const ConvexPolygon& b) {
    std::vector<ConvexPolygon> pieces;
    ConvexPolygon rest = a;
    const std::size_t m = b.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& u = b[i];
        const Point& v = b[(i + 1) % m];
        // b is ccw, so its interior is left of each directed edge; everything
        // on the right can never meet b again and becomes a difference piece
        Point n{-(v.y - u.y), v.x - u.x};
        const double len = norm(n);
        if (len < 1e-300) continue;
        n = (1.0 / len) * n;
        const double c = dot(n, u);
        auto out_piece = clip_unit_halfplane(rest, -1.0 * n, -c);
        if (out_piece && std::abs(area(*out_piece)) >= kAreaEps)
            pieces.push_back(std::move(*out_piece));
        auto keep = clip_unit_halfplane(rest, n, c);
        if (!keep) return pieces;
        rest = std::move(*keep);
    }
    return pieces;
}

}  // namespace congrucut
