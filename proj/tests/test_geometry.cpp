#include <doctest.h>

#include <cmath>

#include "congrucut/geometry.hpp"
#include "congrucut/rng.hpp"

using namespace congrucut;

namespace {

ConvexPolygon unit_square() {
    return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

ConvexPolygon random_convex(Rng& rng, int max_verts = 8) {
    const int k = 3 + static_cast<int>(rng.next_u64() % static_cast<unsigned>(max_verts - 2));
    std::vector<double> ang(static_cast<std::size_t>(k));
    for (double& a : ang) a = rng.uniform(0, 6.283185307179586);
    std::sort(ang.begin(), ang.end());
    for (std::size_t i = 1; i < ang.size(); ++i)
        if (ang[i] - ang[i - 1] < 0.05) return random_convex(rng, max_verts);
    if (6.283185307179586 - (ang.back() - ang.front()) < 0.05)
        return random_convex(rng, max_verts);
    const double rx = rng.uniform(0.5, 5.0), ry = rng.uniform(0.5, 5.0);
    std::vector<Point> pts;
    for (double a : ang) pts.push_back({rx * std::cos(a), ry * std::sin(a)});
    return make_polygon(std::move(pts));
}

}  // namespace

TEST_CASE("area of basic polygons") {
    CHECK(area(unit_square()) == doctest::Approx(1.0));
    CHECK(area(make_polygon({{0, 0}, {10, 0}, {4.2, 6.7}})) == doctest::Approx(33.5));
    CHECK(area(make_polygon({{0, 0}, {10, 0}, {3.82, 0.001}})) ==
          doctest::Approx(0.005));
}

TEST_CASE("half-plane clipping of the unit square") {
    const ConvexPolygon sq = unit_square();
    const double up = 1.5707963267948966;  // line direction +y: west is left

    auto west = clip_halfplane(sq, SeparatingLine{{0.5, 0.0}, up}, true);
    REQUIRE(west.has_value());
    CHECK(area(*west) == doctest::Approx(0.5));
    for (const Point& v : west->verts) CHECK(v.x <= 0.5 + 1e-12);

    auto all = clip_halfplane(sq, SeparatingLine{{2.0, 0.0}, up}, true);
    REQUIRE(all.has_value());
    CHECK(area(*all) == doctest::Approx(1.0));

    auto none = clip_halfplane(sq, SeparatingLine{{-1.0, 0.0}, up}, true);
    CHECK(!none.has_value());
}

TEST_CASE("clip sides partition the area") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        const ConvexPolygon p = random_convex(rng);
        const SeparatingLine l{{rng.uniform(-3, 3), rng.uniform(-3, 3)},
                               normalize_line_angle(rng.uniform(0, 3.14159))};
        auto left = clip_halfplane(p, l, true);
        auto right = clip_halfplane(p, l, false);
        const double s = (left ? area(*left) : 0.0) + (right ? area(*right) : 0.0);
        CHECK(s == doctest::Approx(area(p)).epsilon(1e-9));
        if (left) CHECK(area(*left) <= area(p) + 1e-9);
    }
}

TEST_CASE("convex intersection") {
    const ConvexPolygon a = unit_square();
    const ConvexPolygon b =
        make_polygon({{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}});
    auto ab = intersect_convex(a, b);
    REQUIRE(ab.has_value());
    CHECK(area(*ab) == doctest::Approx(0.25));

    auto self = intersect_convex(a, a);
    REQUIRE(self.has_value());
    CHECK(area(*self) == doctest::Approx(1.0));

    const ConvexPolygon far =
        make_polygon({{5, 5}, {6, 5}, {6, 6}, {5, 6}});
    CHECK(!intersect_convex(a, far).has_value());
}

TEST_CASE("intersection is commutative and idempotent") {
    Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        const ConvexPolygon a = random_convex(rng);
        const ConvexPolygon b = random_convex(rng);
        const double ab = intersection_area(a, b);
        const double ba = intersection_area(b, a);
        CHECK(std::abs(ab - ba) <= 1e-9 * std::max(1.0, std::max(ab, ba)) + 1e-12);
        CHECK(ab <= std::min(area(a), area(b)) + 1e-9);
        if (ab > 0) {
            auto r = intersect_convex(a, b);
            CHECK(intersection_area(*r, b) == doctest::Approx(ab).epsilon(1e-9));
        }
    }
}

TEST_CASE("isometries: identity, reflection, rotation") {
    const ConvexPolygon tri = make_polygon({{0, 0}, {1, 0}, {0, 1}});
    const ConvexPolygon same = apply_isometry(Isometry::identity(), tri);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(same[i].x == doctest::Approx(tri[i].x));
        CHECK(same[i].y == doctest::Approx(tri[i].y));
    }

    // mirror across the x axis re-orients ccw and flips y
    const Isometry mir{true, 0.0, {0, 0}};
    const ConvexPolygon m = apply_isometry(mir, tri);
    CHECK(area(m) == doctest::Approx(area(tri)).epsilon(1e-12));
    bool has_neg = false;
    for (const Point& v : m.verts) has_neg = has_neg || v.y < -0.5;
    CHECK(has_neg);

    const Isometry rot = Isometry::rotation_about({5, 0}, 3.14159265358979323846);
    const Point img = rot.apply({0, 0});
    CHECK(img.x == doctest::Approx(10.0));
    CHECK(img.y == doctest::Approx(0.0));
}

TEST_CASE("isometries preserve distances and compose") {
    Rng rng(13);
    for (int i = 0; i < 300; ++i) {
        const Isometry g{rng.flip(), rng.uniform(0, 6.28), {rng.uniform(-5, 5), rng.uniform(-5, 5)}};
        const Point a{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        const Point b{rng.uniform(-5, 5), rng.uniform(-5, 5)};
        CHECK(dist(g.apply(a), g.apply(b)) ==
              doctest::Approx(dist(a, b)).epsilon(1e-12));

        // inverse undoes the map
        const Point back = g.inverse().apply(g.apply(a));
        CHECK(back.x == doctest::Approx(a.x).epsilon(1e-12));
        CHECK(back.y == doctest::Approx(a.y).epsilon(1e-12));
        CHECK(g.apply_inverse(g.apply(a)).x == doctest::Approx(a.x).epsilon(1e-12));

        const Isometry h{rng.flip(), rng.uniform(0, 6.28), {rng.uniform(-5, 5), rng.uniform(-5, 5)}};
        const Point c1 = (g * h).apply(a);
        const Point c2 = g.apply(h.apply(a));
        CHECK(c1.x == doctest::Approx(c2.x).epsilon(1e-12));
        CHECK(c1.y == doctest::Approx(c2.y).epsilon(1e-12));
    }
}

TEST_CASE("congruence") {
    const ConvexPolygon t1 = make_polygon({{0, 0}, {1, 0}, {0, 1}});
    const ConvexPolygon t1m = make_polygon({{0, 0}, {1, 0}, {1, -1}});
    CHECK(congruent(t1, apply_isometry(Isometry{true, 0, {0, 0}}, t1), 1e-9));
    CHECK(congruent(t1, t1m, 1e-6));

    const ConvexPolygon t345 = make_polygon({{0, 0}, {3, 0}, {0, 4}});
    const Isometry g = Isometry::rotation_about({1, 2}, 0.7);
    ConvexPolygon moved = apply_isometry(g, t345);
    for (Point& v : moved.verts) v = v + Point{0.3, -0.8};
    CHECK(congruent(t345, moved, 1e-9));

    const ConvexPolygon t344 = make_polygon({{0, 0}, {3, 0}, {0.0745, 3.9993}});
    // |hyp| differs in the third digit: not congruent at 1e-6
    CHECK(!congruent(t345, t344, 1e-6));
}

TEST_CASE("congruent under random isometries (property)") {
    Rng rng(14);
    for (int i = 0; i < 300; ++i) {
        const ConvexPolygon p = random_convex(rng);
        const Isometry g{rng.flip(), rng.uniform(0, 6.28), {rng.uniform(-5, 5), rng.uniform(-5, 5)}};
        CHECK(congruent(p, apply_isometry(g, p), 1e-9));
    }
}

TEST_CASE("snap_vertices") {
    // square with an extra midpoint on one edge
    const ConvexPolygon sq5 =
        make_polygon({{0, 0}, {0.5, 0.0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(snap_vertices(sq5, 1e-6).size() == 4);

    // a vertex pushed off the edge by 10x the tolerance survives
    const ConvexPolygon bumped =
        make_polygon({{0, 0}, {0.5, 1e-5}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(snap_vertices(bumped, 1e-6).size() == 5);

    const ConvexPolygon tri = make_polygon({{0, 0}, {1, 0}, {0, 1}});
    CHECK(snap_vertices(tri, 1e-6).size() == 3);
}

TEST_CASE("trim_corner removes the requested area") {
    const ConvexPolygon tri = make_polygon({{0, 0}, {1, 0}, {0, 1}});
    const ConvexPolygon trimmed = trim_corner(tri, TrimSpec{0, 0.005});
    CHECK(trimmed.size() == 4);
    CHECK(area(trimmed) == doctest::Approx(0.495).epsilon(1e-9));
    bool a1 = false, a2 = false;
    for (const Point& v : trimmed.verts) {
        a1 = a1 || (std::abs(v.x - 0.1) < 1e-12 && std::abs(v.y) < 1e-12);
        a2 = a2 || (std::abs(v.x) < 1e-12 && std::abs(v.y - 0.1) < 1e-12);
    }
    CHECK(a1);
    CHECK(a2);

    Rng rng(15);
    for (int i = 0; i < 200; ++i) {
        const ConvexPolygon p = random_convex(rng);
        const double eps = rng.uniform(1e-4, 0.09) * area(p);
        const std::size_t k = rng.next_u64() % p.size();
        try {
            const ConvexPolygon t = trim_corner(p, TrimSpec{k, eps});
            CHECK(area(t) == doctest::Approx(area(p) - eps).epsilon(1e-9));
            CHECK(t.size() == p.size() + 1);
        } catch (const TrimTooLarge&) {
            // admissible for sharp corners with short edges
        }
    }
}

TEST_CASE("trim_corner rejects chords past the edge ends") {
    // right corner at the origin with one short adjacent edge
    const ConvexPolygon thin = make_polygon({{0, 0}, {10, 0}, {0, 0.1}});
    CHECK_THROWS_AS(trim_corner(thin, TrimSpec{0, 0.04}), TrimTooLarge);
}

TEST_CASE("convex difference covers the leftover") {
    Rng rng(16);
    for (int i = 0; i < 100; ++i) {
        const ConvexPolygon a = random_convex(rng);
        const ConvexPolygon b = random_convex(rng);
        const auto pieces = convex_difference(a, b);
        double total = 0.0;
        for (const ConvexPolygon& w : pieces) {
            total += area(w);
            // pieces stay inside a and outside b
            CHECK(intersection_area(w, a) == doctest::Approx(area(w)).epsilon(1e-7));
            CHECK(intersection_area(w, b) <= 1e-7);
        }
        CHECK(total == doctest::Approx(area(a) - intersection_area(a, b)).epsilon(1e-7));
    }
}
