#include <doctest.h>

#include <cmath>

#include "congrucut/sweep.hpp"

using namespace congrucut;

namespace {

SearchConfig sweep_cfg() {
    SearchConfig cfg;
    cfg.random_starts = 16;
    cfg.local_iters = 250;
    return cfg;
}

}  // namespace

TEST_CASE("best_coverage per mode at the paper's anchor shapes") {
    const SearchConfig cfg = sweep_cfg();

    // the golden sliver under method 1 only
    const SweepRecord r1 = best_coverage({3.8197, 0.1}, Mode::M1, cfg);
    CHECK(r1.cov_best == doctest::Approx(0.764).epsilon(2e-3));
    CHECK(r1.winner == Family::Bisector);
    CHECK(r1.cov_m2 < 0);
    CHECK(r1.cov_search < 0);

    // the sqrt(2) sliver under methods 1+2
    const SweepRecord r2 = best_coverage({2.9289, 0.1}, Mode::M1M2, cfg);
    CHECK(r2.cov_m2 == doctest::Approx(0.8284).epsilon(3e-3));
    CHECK(r2.cov_best >= r2.cov_m1 - 1e-12);
    CHECK(r2.cov_search < 0);
}

TEST_CASE("mode monotonicity on sample cells") {
    const SearchConfig cfg = sweep_cfg();
    for (const TriangleShape s : {TriangleShape{2.0, 1.0}, {4.0, 5.0}, {3.0, 0.5}}) {
        const double v1 = best_coverage(s, Mode::M1, cfg).cov_best;
        const double v2 = best_coverage(s, Mode::M1M2, cfg).cov_best;
        const double v3 = best_coverage(s, Mode::ALL, cfg).cov_best;
        CHECK(v1 <= v2 + 1e-9);
        CHECK(v2 <= v3 + 1e-9);
    }
}

TEST_CASE("mirror invariance of the best coverage") {
    const SearchConfig cfg = sweep_cfg();
    const TriangleShape s{3.0, 2.0};
    const double v = best_coverage(s, Mode::ALL, cfg).cov_best;
    const double vm = best_coverage_unchecked({10.0 - s.x3, s.y3}, Mode::ALL, cfg).cov_best;
    CHECK(std::abs(v - vm) <= 2e-3);
}

TEST_CASE("closed-form smoothness of the bisector family") {
    // |cov_m1(cell) - cov_m1(neighbor)| <= step on a coarse grid
    const SearchConfig cfg = sweep_cfg();
    const double step = 0.5;
    const auto cells = grid(GridSpec{step, 0.5});
    std::vector<SweepRecord> recs;
    for (const TriangleShape& s : cells) recs.push_back(best_coverage(s, Mode::M1, cfg));
    for (std::size_t i = 0; i < recs.size(); ++i)
        for (std::size_t j = i + 1; j < recs.size(); ++j) {
            const double dx = std::abs(recs[i].shape.x3 - recs[j].shape.x3);
            const double dy = std::abs(recs[i].shape.y3 - recs[j].shape.y3);
            if ((dx == 0 && std::abs(dy - step) < 1e-12) ||
                (dy == 0 && std::abs(dx - step) < 1e-12))
                CHECK(std::abs(recs[i].cov_m1 - recs[j].cov_m1) <= step + 1e-9);
        }
}

TEST_CASE("sweep extracts the minimax deterministically") {
    const SearchConfig cfg = sweep_cfg();
    const GridSpec g{1.0, 0.5};
    const SweepResult a = sweep(g, Mode::M1, cfg);
    const SweepResult b = sweep(g, Mode::M1, cfg);
    REQUIRE(a.records.size() == b.records.size());
    CHECK(a.records.size() == grid(g).size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].cov_best == b.records[i].cov_best);
        CHECK(a.records[i].winner == b.records[i].winner);
    }
    CHECK(a.minimax_value == b.minimax_value);
    double lo = 1.0;
    for (const SweepRecord& r : a.records) lo = std::min(lo, r.cov_best);
    CHECK(a.minimax_value == doctest::Approx(lo));
}

TEST_CASE("region map winners and the degenerate tie tolerance") {
    const SearchConfig cfg = sweep_cfg();
    const GridSpec g{1.0, 1.0};
    const SweepResult r = sweep(g, Mode::ALL, cfg);
    const RegionMap m = region_map(r, cfg.tie_tol);
    REQUIRE(m.cells.size() == r.records.size());

    // isoceles apex cells (x3 = 5) are bisector-perfect
    for (std::size_t i = 0; i < m.cells.size(); ++i)
        if (std::abs(m.cells[i].x3 - 5.0) < 1e-12)
            CHECK(m.winners[i] == Family::Bisector);

    // zero tolerance: ties have measure zero
    CHECK(!region_map(r, 0.0).triple_point.has_value());
}
