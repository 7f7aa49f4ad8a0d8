#pragma once

// Candidate partition families: angle-bisector triangle pairs, perpendicular
// mirror quadrilateral pairs about a reference offset, and search seeds.

#include <cstdint>
#include <vector>

#include "congrucut/geometry.hpp"
#include "congrucut/triangle_space.hpp"

namespace congrucut {

enum class Family : std::uint8_t { Bisector, Quad, Search };

const char* family_name(Family f);

// Two congruent convex pieces cut from a region, with piece2 = map(piece1),
// separated by `line` (piece1 on its left side).
struct Partition {
    ConvexPolygon piece1;
    ConvexPolygon piece2;
    Isometry map;
    SeparatingLine line;
    double coverage = 0.0;
    std::vector<ConvexPolygon> waste;
    Family family = Family::Search;
    int piece_class = 0;
};

enum class BaseEdge : std::uint8_t { AB, BC, CA };

struct Method2Params {
    BaseEdge base_edge = BaseEdge::AB;
    bool orientation = false;  // false: alpha at the edge's first vertex
    double d = 0.0;            // reference-line offset above the base
    double c = 0.0;
};

struct SearchConfig;  // search.hpp

// a (line, isometry) starting configuration for the optimizer
struct SeedConfig {
    SeparatingLine line;
    Isometry iso;
    Family origin = Family::Search;
};

// one bisector partition per vertex; coverage 2*min(p,q)/(p+q)
std::vector<Partition> method1_candidates(const TriangleShape& t);

// d = h/(c+1) with c = 2 sin(alpha) cos(beta) / sin(alpha+beta); the base
// angles alpha, beta follow the chosen orientation of the base edge
Method2Params method2_reference_offset(const ShapeMetrics& m, BaseEdge edge,
                                       bool orientation);

// best quadrilateral-pair partition over the given base edge (both
// orientations); throws SearchFailed if no quad configuration is found
Partition method2_best(const TriangleShape& t, BaseEdge edge,
                       const SearchConfig& cfg);

// three pentagon-search seeds, one per vertex of the triangle
std::vector<SeedConfig> method3_seeds(const TriangleShape& t);

// structured extra starts (vertex folds, glides, mirror cuts) for the
// general search; tagged Family::Search
std::vector<SeedConfig> auxiliary_seeds(const ConvexPolygon& region);

// closed-form mirror-quad family over base AB evaluated at the stationary
// cut; used for seeding and as an independent floor in tests
double method2_closed_form_coverage(const TriangleShape& t, bool orientation);

// method-1 candidate coverages of the degenerate (y->0) triangle at x3
std::vector<double> method1_sliver_coverages(double x3);

}  // namespace congrucut
