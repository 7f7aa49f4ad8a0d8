#pragma once

// Shape-space sweep: per-shape best coverage under a candidate-set mode,
// minimax extraction, and the method-region map.

#include <cstdint>
#include <optional>
#include <vector>

#include "congrucut/search.hpp"
#include "congrucut/triangle_space.hpp"

namespace congrucut {

enum class Mode : std::uint8_t { M1, M1M2, ALL };

const char* mode_name(Mode m);

struct SweepRecord {
    TriangleShape shape;
    double cov_m1 = 0.0;
    double cov_m2 = -1.0;      // negative: not evaluated in this mode
    double cov_search = -1.0;  // negative: not evaluated in this mode
    double cov_best = 0.0;
    Family winner = Family::Bisector;
    int piece_class = 0;
};

struct SweepResult {
    std::vector<SweepRecord> records;
    TriangleShape minimax_shape;
    double minimax_value = 1.0;
    std::optional<Point> triple_point;
};

struct RegionMap {
    std::vector<TriangleShape> cells;
    std::vector<Family> winners;
    std::optional<Point> triple_point;
};

// per-shape record; in ALL mode the general search is seeded with every
// family's configurations
SweepRecord best_coverage(const TriangleShape& s, Mode mode, const SearchConfig& cfg);

// evaluation on an explicit triangle, bypassing the canonical-region check
// (mirrored shapes in the invariance tests)
SweepRecord best_coverage_unchecked(const TriangleShape& s, Mode mode,
                                    const SearchConfig& cfg);

// full partition detail at one shape: family seeds + general search
BestPartition optimize_shape(const TriangleShape& s, Mode mode, const SearchConfig& cfg);

SweepResult sweep(const GridSpec& g, Mode mode, const SearchConfig& cfg);

// coarse pass plus a step/10 refinement window of +-0.5 around the argmin
SweepResult sweep_refined(const GridSpec& g, Mode mode, const SearchConfig& cfg);

// refinement on top of an already-computed coarse result
SweepResult refine_sweep(const SweepResult& coarse, const GridSpec& g, Mode mode,
                         const SearchConfig& cfg);

// winner labels per cell and the triple point: centroid of cells where all
// three family coverages lie within tie_tol of the cell's best
RegionMap region_map(const SweepResult& r, double tie_tol);

}  // namespace congrucut
