#include "congrucut/candidates.hpp"

#include <algorithm>
#include <cmath>

#include "congrucut/search.hpp"

namespace congrucut {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Bisector: return "bisector";
        case Family::Quad: return "quad";
        case Family::Search: return "search";
    }
    return "?";
}

std::vector<Partition> method1_candidates(const TriangleShape& t) {
    const ConvexPolygon tri = make_triangle_unchecked(t);
    std::vector<Partition> out;
    out.reserve(3);

    for (std::size_t k = 0; k < 3; ++k) {
        const Point v = tri[k];
        const Point x = tri[(k + 1) % 3];
        const Point y = tri[(k + 2) % 3];
        const double p = dist(v, x);
        const double q = dist(v, y);

        // bisector from v meets the opposite side at w with xw/wy = p/q
        const Point w = x + (p / (p + q)) * (y - x);
        const Point bis = w - v;
        const double bis_angle = std::atan2(bis.y, bis.x);

        // smaller adjacent sub-triangle is piece1; ties pick the lower label
        const bool pick_x = p < q || (p == q && (k + 1) % 3 < (k + 2) % 3);
        const Point near = pick_x ? x : y;
        const Point far = pick_x ? y : x;
        const double near_len = pick_x ? p : q;
        const double far_len = pick_x ? q : p;

        Partition part;
        part.family = Family::Bisector;
        part.map = Isometry::reflection_across(v, bis_angle);
        part.piece1 = make_polygon({v, near, w});
        part.piece2 = apply_isometry(part.map, part.piece1);
        part.coverage = 2.0 * std::min(p, q) / (p + q);
        part.piece_class = 3;

        // waste: between the mirrored image of `near` and the far vertex
        const Point image = v + (near_len / far_len) * (far - v);
        ConvexPolygon leftover({image, far, w});
        if (std::abs(area(leftover)) >= kAreaEps) {
            if (area(leftover) < 0)
                std::reverse(leftover.verts.begin(), leftover.verts.end());
            part.waste.push_back(std::move(leftover));
        }

        // orient the separating line so piece1 sits on its left
        SeparatingLine l = SeparatingLine::through(v, bis_angle);
        if (l.signed_dist(centroid(part.piece1)) < 0.0) {
            std::swap(part.piece1, part.piece2);
            part.map = part.map.inverse();  // reflections: unchanged
        }
        part.line = l;
        out.push_back(std::move(part));
    }
    return out;
}

Method2Params method2_reference_offset(const ShapeMetrics& m, BaseEdge edge,
                                       bool orientation) {
    // base angles under the chosen orientation of the chosen edge, and the
    // height of the opposite vertex over that edge
    double a1 = 0.0, a2 = 0.0, h = 0.0;
    switch (edge) {
        case BaseEdge::AB:
            a1 = m.alpha;
            a2 = m.beta;
            h = m.h;
            break;
        case BaseEdge::BC:
            a1 = m.beta;
            a2 = m.gamma;
            h = 2.0 * 0.5 * m.side_c * m.h / m.side_a;  // 2*area / |BC|
            break;
        case BaseEdge::CA:
            a1 = m.gamma;
            a2 = m.alpha;
            h = 2.0 * 0.5 * m.side_c * m.h / m.side_b;
            break;
    }
    if (orientation) std::swap(a1, a2);

    Method2Params out;
    out.base_edge = edge;
    out.orientation = orientation;
    out.c = 2.0 * std::sin(a1) * std::cos(a2) / std::sin(a1 + a2);
    out.d = h / (out.c + 1.0);
    return out;
}

namespace {

struct EdgeFrame {
    Point v0, v1;   // base endpoints, ccw
    Point apex;     // opposite vertex
    double L = 0;   // base length
    double psi = 0; // world angle of the base direction
    Point fapex;    // apex in frame coordinates (base on +x from origin)
};

EdgeFrame edge_frame(const ConvexPolygon& tri, int edge_index) {
    EdgeFrame f;
    f.v0 = tri[static_cast<std::size_t>(edge_index)];
    f.v1 = tri[static_cast<std::size_t>((edge_index + 1) % 3)];
    f.apex = tri[static_cast<std::size_t>((edge_index + 2) % 3)];
    const Point d = f.v1 - f.v0;
    f.L = norm(d);
    f.psi = std::atan2(d.y, d.x);
    const Point r = f.apex - f.v0;
    const double c = std::cos(-f.psi), s = std::sin(-f.psi);
    f.fapex = {c * r.x - s * r.y, s * r.x + c * r.y};
    return f;
}

Point frame_to_world(const EdgeFrame& f, Point p) {
    const double c = std::cos(f.psi), s = std::sin(f.psi);
    return {c * p.x - s * p.y + f.v0.x, s * p.x + c * p.y + f.v0.y};
}

// stationary cut position of the perpendicular mirror-quad family anchored at
// the frame origin; valid when both base angles see the apex from inside
double mirror_quad_optimal_cut(double L, Point apex) {
    const double u = apex.y / apex.x;            // tan(angle at origin)
    const double v = apex.y / (L - apex.x);      // tan(angle at far end)
    if (apex.x <= 0.0 || apex.x >= L) return -1.0;
    if (u < v) return -1.0;  // interior optimum lives on the other orientation
    return L * (u + v) / (3.0 * u + v);
}

void push_mirror_seed(std::vector<SeedConfig>& seeds, const EdgeFrame& f,
                      double m_frame) {
    const Point anchor = frame_to_world(f, {m_frame, 0.0});
    const double axis = normalize_line_angle(f.psi + kPi / 2.0);
    seeds.push_back({SeparatingLine{anchor, axis},
                     Isometry::reflection_across(anchor, f.psi + kPi / 2.0),
                     Family::Quad});
}

std::vector<SeedConfig> quad_seeds_for_edge(const ConvexPolygon& tri, int edge_index) {
    std::vector<SeedConfig> seeds;
    const EdgeFrame f = edge_frame(tri, edge_index);

    // orientation anchored at v0
    const double m0 = mirror_quad_optimal_cut(f.L, f.fapex);
    if (m0 > 0)
        for (double scale : {1.0, 0.92, 1.08})
            push_mirror_seed(seeds, f, std::clamp(m0 * scale, 0.02 * f.L, 0.5 * f.L));
    // orientation anchored at v1: mirror the frame problem
    const double m1 = mirror_quad_optimal_cut(f.L, {f.L - f.fapex.x, f.fapex.y});
    if (m1 > 0)
        for (double scale : {1.0, 0.92, 1.08})
            push_mirror_seed(seeds, f,
                             f.L - std::clamp(m1 * scale, 0.02 * f.L, 0.5 * f.L));
    // midline fallback keeps near-isoceles edges seeded
    push_mirror_seed(seeds, f, 0.5 * f.L * 0.98);

    // rotation-by-pi about the reference chord midpoint
    const double hE = f.fapex.y;
    for (double frac : {0.35, 0.5}) {
        const double d = frac * hE;
        const double xa = f.fapex.x * d / hE;                        // on side v0-apex
        const double xb = f.L + (f.fapex.x - f.L) * d / hE;          // on side v1-apex
        const Point mid = frame_to_world(f, {0.5 * (xa + xb), d});
        seeds.push_back({SeparatingLine::through(mid, f.psi + kPi / 2.0),
                         Isometry::rotation_about(mid, kPi), Family::Quad});
    }
    return seeds;
}

double polygon_principal_angle(const ConvexPolygon& p) {
    // principal axis of the area second moments about the centroid
    const Point c = centroid(p);
    double ixx = 0, iyy = 0, ixy = 0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = p[i] - c;
        const Point b = p[(i + 1) % n] - c;
        const double w = cross(a, b);
        ixx += w * (a.y * a.y + a.y * b.y + b.y * b.y);
        iyy += w * (a.x * a.x + a.x * b.x + b.x * b.x);
        ixy += w * (a.x * b.y + 2 * a.x * a.y + 2 * b.x * b.y + b.x * a.y);
    }
    return 0.5 * std::atan2(ixy / 12.0 * 2.0, (iyy - ixx) / 12.0);
}

}  // namespace

double method2_closed_form_coverage(const TriangleShape& t, bool orientation) {
    const ShapeMetrics m = metrics(t);
    double u = std::tan(m.alpha), v = std::tan(m.beta);
    if (orientation) std::swap(u, v);
    if (u <= 0 || v <= 0) return 0.0;
    if (std::abs(u - v) < 1e-12) return 1.0;  // degenerate: mirror halves
    // the stationary cut exists only when the anchored base angle dominates
    if (u < v) return 0.0;
    return 2.0 * (u + v) / (3.0 * u + v);
}

std::vector<double> method1_sliver_coverages(double x3) {
    // degenerate-limit side lengths: b -> x3, a -> 10 - x3
    const double b = x3, a = kBaseLength - x3, c = kBaseLength;
    return {2.0 * std::min(c, b) / (c + b), 2.0 * std::min(c, a) / (c + a),
            2.0 * std::min(a, b) / (a + b)};
}

Partition method2_best(const TriangleShape& t, BaseEdge edge,
                       const SearchConfig& cfg) {
    const ConvexPolygon tri = make_triangle_unchecked(t);
    std::vector<SeedConfig> seeds = quad_seeds_for_edge(tri, static_cast<int>(edge));

    SearchConfig c2 = cfg;
    c2.random_starts = std::max(2, cfg.random_starts / 8);
    BestPartition best = optimize_constrained_class(tri, seeds, c2, 4);
    best.partition.family = Family::Quad;
    return best.partition;
}

std::vector<SeedConfig> method3_seeds(const TriangleShape& t) {
    const ConvexPolygon tri = make_triangle_unchecked(t);
    const Point c = centroid(tri);
    std::vector<SeedConfig> seeds;
    seeds.reserve(3);

    for (std::size_t k = 0; k < 3; ++k) {
        const Point v = tri[k];
        const Point d = v - c;
        const double angle = normalize_line_angle(std::atan2(d.y, d.x) + kPi / 2.0);
        const SeparatingLine l{c, angle};
        auto r1 = clip_halfplane(tri, l, true);
        auto r2 = clip_halfplane(tri, l, false);
        Isometry g = Isometry::identity();
        if (r1 && r2) {
            const double th = polygon_principal_angle(*r2) - polygon_principal_angle(*r1);
            g = Isometry::rotation_about({0, 0}, th);
            const Point shift = centroid(*r2) - g.apply(centroid(*r1));
            g.t = g.t + shift;
        }
        seeds.push_back({l, g, Family::Search});
    }
    return seeds;
}

std::vector<SeedConfig> auxiliary_seeds(const ConvexPolygon& region) {
    std::vector<SeedConfig> seeds;
    const std::size_t n = region.size();
    const double diam = diameter(region);
    const Point cen = centroid(region);

    for (std::size_t k = 0; k < n; ++k) {
        const Point v = region[k];
        const Point prev = region[(k + n - 1) % n];
        const Point next = region[(k + 1) % n];
        const Point u1 = next - v, u2 = prev - v;
        const double l1 = norm(u1), l2 = norm(u2);
        if (l1 < 1e-12 || l2 < 1e-12) continue;
        const double omega = std::atan2(std::abs(cross(u1, u2)), dot(u1, u2));
        const Point bis = (1.0 / l1) * u1 + (1.0 / l2) * u2;
        const double bis_angle = std::atan2(bis.y, bis.x);
        const SeparatingLine bis_line = SeparatingLine::through(v, bis_angle);

        // mirror, glide and fold starts about the corner bisector
        seeds.push_back({bis_line, Isometry::reflection_across(v, bis_angle),
                         Family::Search});
        for (double s : {0.12 * diam, -0.12 * diam})
            seeds.push_back({bis_line, Isometry::glide(v, bis_angle, s),
                             Family::Search});
        const double a1 = std::atan2(u1.y, u1.x);
        const double a2 = std::atan2(u2.y, u2.x);
        for (double fold : {omega, -omega, 0.5 * omega, -0.5 * omega}) {
            const Isometry rot = Isometry::rotation_about(v, fold);
            seeds.push_back({bis_line, rot, Family::Search});
            // cuts through the centroid parallel to each adjacent edge and to
            // its fold image: the thin-triangle slab family lives here
            double cut_angles[4] = {a1, a2, a1 + fold, a2 + fold};
            for (double ca : cut_angles) {
                const double cn = normalize_line_angle(ca);
                bool dup = false;
                for (const SeedConfig& sc : seeds)
                    if (sc.iso.reflect == rot.reflect && sc.iso.theta == rot.theta &&
                        sc.iso.t.x == rot.t.x && sc.iso.t.y == rot.t.y &&
                        std::abs(sc.line.angle - cn) < 1e-3 &&
                        sc.line.anchor.x == cen.x && sc.line.anchor.y == cen.y)
                        dup = true;
                if (!dup)
                    seeds.push_back({SeparatingLine::through(cen, ca), rot,
                                     Family::Search});
            }
        }
    }
    return seeds;
}

}  // namespace congrucut
