#include "congrucut/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "congrucut/parallel.hpp"

namespace congrucut {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::M1: return "m1";
        case Mode::M1M2: return "m1m2";
        case Mode::ALL: return "all";
    }
    return "?";
}

namespace {

struct ShapeEval {
    SweepRecord rec;
    BestPartition detail;
};

SeedConfig seed_of(const Partition& p) { return {p.line, p.map, p.family}; }

ShapeEval evaluate_shape(const TriangleShape& s, Mode mode, const SearchConfig& cfg) {
    const ConvexPolygon tri = make_triangle_unchecked(s);

    ShapeEval ev;
    ev.rec.shape = s;

    std::vector<Partition> m1 = method1_candidates(s);
    const Partition* best_m1 = &m1[0];
    for (const Partition& p : m1)
        if (p.coverage > best_m1->coverage) best_m1 = &p;
    ev.rec.cov_m1 = best_m1->coverage;

    std::vector<Partition> m2;
    const Partition* best_m2 = nullptr;
    if (mode != Mode::M1) {
        for (BaseEdge e : {BaseEdge::AB, BaseEdge::BC, BaseEdge::CA})
            m2.push_back(method2_best(s, e, cfg));
        best_m2 = &m2[0];
        for (const Partition& p : m2)
            if (p.coverage > best_m2->coverage) best_m2 = &p;
        ev.rec.cov_m2 = best_m2->coverage;
    }

    if (mode == Mode::ALL) {
        std::vector<SeedConfig> seeds;
        for (const Partition& p : m1) seeds.push_back(seed_of(p));
        for (const Partition& p : m2) seeds.push_back(seed_of(p));
        for (SeedConfig sc : method3_seeds(s)) {
            seeds.push_back(sc);
            sc.iso.reflect = !sc.iso.reflect;  // mirrored branch of each seed
            seeds.push_back(sc);
        }
        for (const SeedConfig& sc : auxiliary_seeds(tri)) seeds.push_back(sc);
        ev.detail = optimize(tri, seeds, cfg);
        ev.rec.cov_search = ev.detail.partition.coverage;
    }

    // best over the enabled families; ties go to the simpler family
    ev.rec.cov_best = ev.rec.cov_m1;
    ev.rec.winner = Family::Bisector;
    ev.rec.piece_class = best_m1->piece_class;
    if (mode != Mode::M1 && ev.rec.cov_m2 > ev.rec.cov_best) {
        ev.rec.cov_best = ev.rec.cov_m2;
        ev.rec.winner = Family::Quad;
        ev.rec.piece_class = best_m2->piece_class;
    }
    if (mode == Mode::ALL && ev.rec.cov_search > ev.rec.cov_best) {
        ev.rec.cov_best = ev.rec.cov_search;
        ev.rec.winner = Family::Search;
        ev.rec.piece_class = ev.detail.partition.piece_class;
    }
    if (ev.rec.winner == Family::Search && ev.rec.cov_m2 >= ev.rec.cov_best - cfg.tie_tol) {
        ev.rec.winner = Family::Quad;
        ev.rec.piece_class = best_m2->piece_class;
    }
    if (ev.rec.winner != Family::Bisector && ev.rec.cov_m1 >= ev.rec.cov_best - cfg.tie_tol) {
        ev.rec.winner = Family::Bisector;
        ev.rec.piece_class = best_m1->piece_class;
    }

    if (mode != Mode::ALL) {
        // partition detail for the winning closed family
        const Partition& w = ev.rec.winner == Family::Quad ? *best_m2 : *best_m1;
        ev.detail.partition = w;
        for (const Partition& p : m1)
            if (&p != &w && p.coverage >= ev.rec.cov_best - cfg.tie_tol)
                ev.detail.runner_ups.push_back(p);
        for (const Partition& p : m2)
            if (&p != &w && p.coverage >= ev.rec.cov_best - cfg.tie_tol)
                ev.detail.runner_ups.push_back(p);
    }
    ev.detail.family_scores[Family::Bisector] = ev.rec.cov_m1;
    if (mode != Mode::M1) ev.detail.family_scores[Family::Quad] = ev.rec.cov_m2;
    if (mode == Mode::ALL) ev.detail.family_scores[Family::Search] = ev.rec.cov_search;
    return ev;
}

SearchConfig cell_config(const SearchConfig& cfg, std::uint64_t cell_key) {
    SearchConfig c = cfg;
    c.rng_seed = cfg.rng_seed ^ (0x9e3779b97f4a7c15ULL * (cell_key + 1));
    return c;
}

void extract_minimax(SweepResult& r) {
    if (r.records.empty()) return;
    std::size_t best = 0;
    for (std::size_t i = 1; i < r.records.size(); ++i)
        if (r.records[i].cov_best < r.records[best].cov_best) best = i;
    r.minimax_shape = r.records[best].shape;
    r.minimax_value = r.records[best].cov_best;
}

std::optional<Point> triple_point_of(const std::vector<SweepRecord>& records,
                                     double tie_tol) {
    double sx = 0, sy = 0;
    std::size_t count = 0;
    for (const SweepRecord& rec : records) {
        if (rec.cov_m2 < 0 || rec.cov_search < 0) continue;
        if (rec.cov_m1 >= rec.cov_best - tie_tol &&
            rec.cov_m2 >= rec.cov_best - tie_tol &&
            rec.cov_search >= rec.cov_best - tie_tol && tie_tol > 0) {
            sx += rec.shape.x3;
            sy += rec.shape.y3;
            ++count;
        }
    }
    if (count == 0) return std::nullopt;
    return Point{sx / static_cast<double>(count), sy / static_cast<double>(count)};
}

}  // namespace

SweepRecord best_coverage(const TriangleShape& s, Mode mode, const SearchConfig& cfg) {
    if (!in_region(s)) throw OutOfRegion("vertex C outside shape region");
    return evaluate_shape(s, mode, cfg).rec;
}

SweepRecord best_coverage_unchecked(const TriangleShape& s, Mode mode,
                                    const SearchConfig& cfg) {
    return evaluate_shape(s, mode, cfg).rec;
}

BestPartition optimize_shape(const TriangleShape& s, Mode mode, const SearchConfig& cfg) {
    if (!in_region(s)) throw OutOfRegion("vertex C outside shape region");
    return evaluate_shape(s, mode, cfg).detail;
}

SweepResult sweep(const GridSpec& g, Mode mode, const SearchConfig& cfg) {
    const std::vector<TriangleShape> cells = grid(g);
    SweepResult r;
    r.records.resize(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        r.records[i] = evaluate_shape(cells[i], mode, cell_config(cfg, i)).rec;
    });
    extract_minimax(r);
    r.triple_point = triple_point_of(r.records, cfg.tie_tol);
    return r;
}

SweepResult sweep_refined(const GridSpec& g, Mode mode, const SearchConfig& cfg) {
    return refine_sweep(sweep(g, mode, cfg), g, mode, cfg);
}

SweepResult refine_sweep(const SweepResult& coarse_in, const GridSpec& g, Mode mode,
                         const SearchConfig& cfg) {
    SweepResult coarse = coarse_in;
    if (coarse.records.empty()) return coarse;

    const double fine_step = g.step / 10.0;
    const TriangleShape c = coarse.minimax_shape;
    std::vector<TriangleShape> window;
    for (long j = 0;; ++j) {
        const double y = std::max(g.y_min, c.y3 - 0.5) + fine_step * static_cast<double>(j);
        if (y > c.y3 + 0.5 + 1e-12) break;
        for (long i = 0;; ++i) {
            const double x = std::max(fine_step, c.x3 - 0.5) + fine_step * static_cast<double>(i);
            if (x > c.x3 + 0.5 + 1e-12) break;
            TriangleShape s{x, y};
            if (in_region(s)) window.push_back(s);
        }
    }

    std::vector<SweepRecord> fine(window.size());
    parallel_for(window.size(), [&](std::size_t i) {
        fine[i] = evaluate_shape(window[i], mode,
                                 cell_config(cfg, (1ULL << 32) + i)).rec;
    });
    coarse.records.insert(coarse.records.end(), fine.begin(), fine.end());
    extract_minimax(coarse);
    coarse.triple_point = triple_point_of(coarse.records, cfg.tie_tol);
    return coarse;
}

RegionMap region_map(const SweepResult& r, double tie_tol) {
    RegionMap m;
    m.cells.reserve(r.records.size());
    m.winners.reserve(r.records.size());
    for (const SweepRecord& rec : r.records) {
        m.cells.push_back(rec.shape);
        m.winners.push_back(rec.winner);
    }
    m.triple_point = triple_point_of(r.records, tie_tol);
    return m;
}

}  // namespace congrucut
