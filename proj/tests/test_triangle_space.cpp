#include <doctest.h>

#include <cmath>

#include "congrucut/geometry.hpp"
#include "congrucut/triangle_space.hpp"

using namespace congrucut;

TEST_CASE("make_triangle and the shape region") {
    const ConvexPolygon fat = make_triangle({4.2, 6.7});
    CHECK(area(fat) == doctest::Approx(33.5));

    // equilateral apex lies exactly on the circle boundary
    CHECK_NOTHROW(make_triangle({5.0, 8.660254037844386}));
    CHECK_THROWS_AS(make_triangle({6.0, 1.0}), OutOfRegion);
    CHECK_THROWS_AS(make_triangle({4.0, -1.0}), OutOfRegion);
    CHECK_THROWS_AS(make_triangle({1.0, 9.99}), OutOfRegion);
}

TEST_CASE("metrics") {
    const ShapeMetrics m = metrics({4.2, 6.7});
    CHECK(m.side_b == doctest::Approx(std::sqrt(4.2 * 4.2 + 6.7 * 6.7)).epsilon(1e-12));
    CHECK(m.side_b == doctest::Approx(7.90759).epsilon(1e-5));
    CHECK(m.side_a == doctest::Approx(8.86171).epsilon(1e-5));
    CHECK(m.h == doctest::Approx(6.7));
    CHECK(m.alpha + m.beta + m.gamma == doctest::Approx(3.14159265358979).epsilon(1e-9));
    // law of sines
    CHECK(m.side_a / std::sin(m.alpha) == doctest::Approx(m.side_c / std::sin(m.gamma)).epsilon(1e-9));

    const ShapeMetrics eq = metrics({5.0, 8.6603});
    CHECK(eq.alpha == doctest::Approx(1.0471975512).epsilon(1e-4));
    CHECK(eq.beta == doctest::Approx(eq.gamma).epsilon(1e-4));

    const ShapeMetrics sl = metrics({2.9289, 1e-3});
    CHECK(sl.side_b == doctest::Approx(2.929).epsilon(1e-3));
    CHECK(sl.side_a == doctest::Approx(7.071).epsilon(1e-3));
}

TEST_CASE("grid enumerates the admissible lattice") {
    const auto cells = grid(GridSpec{2.5, 2.5});
    REQUIRE(cells.size() == 5);
    const double expect[5][2] = {
        {2.5, 2.5}, {5.0, 2.5}, {2.5, 5.0}, {5.0, 5.0}, {5.0, 7.5}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(cells[i].x3 == doctest::Approx(expect[i][0]));
        CHECK(cells[i].y3 == doctest::Approx(expect[i][1]));
    }

    // every emitted shape satisfies the invariants, AB stays longest
    for (const TriangleShape& s : grid(GridSpec{1.0, 0.5})) {
        CHECK(in_region(s));
        const ShapeMetrics m = metrics(s);
        CHECK(m.side_a <= 10.0 + 1e-9);
        CHECK(m.side_b <= 10.0 + 1e-9);
    }

    CHECK(grid(GridSpec{50.0, 1.0}).empty());
}

TEST_CASE("collapsed rows below y_min appear exactly once") {
    const auto cells = grid(GridSpec{1.0, 0.5});
    int rows_below_1 = 0;
    double prev_y = -1;
    for (const TriangleShape& s : cells) {
        if (s.y3 != prev_y && s.y3 < 1.0) ++rows_below_1;
        prev_y = s.y3;
    }
    CHECK(rows_below_1 == 1);
}

TEST_CASE("mirrored shapes are congruent to the canonical ones") {
    for (const TriangleShape& s : grid(GridSpec{1.0, 1.0})) {
        if (s.x3 >= 5.0) continue;
        const ConvexPolygon canon = make_triangle(s);
        const ConvexPolygon mirrored =
            make_triangle_unchecked({10.0 - s.x3, s.y3});
        CHECK(congruent(canon, mirrored, 1e-9));
    }
}
