#pragma once

// General maximum 2-coverage optimizer over (separating line, isometry)
// using the maximal-piece formula P1 = R1 ∩ g^-1(R2).

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "congrucut/candidates.hpp"
#include "congrucut/geometry.hpp"

namespace congrucut {

struct SearchConfig {
    int random_starts = 64;
    std::uint64_t rng_seed = 42;
    int local_iters = 400;
    double xtol = 1e-7;
    double ftol = 1e-9;
    double tie_tol = 1e-4;
};

struct BestPartition {
    Partition partition;
    std::vector<Partition> runner_ups;  // within tie_tol of the best
    std::map<Family, double> family_scores;
};

// coverage 2*area(P1)/area(region) of the maximal piece for fixed (l, g),
// together with the piece itself; g(P1) lies in the right side by construction
std::pair<double, MaybePolygon> coverage_at(const ConvexPolygon& region,
                                            const SeparatingLine& l,
                                            const Isometry& g);

// derivative-free refinement from every seed plus cfg.random_starts random
// configurations; deterministic for a fixed cfg.rng_seed
BestPartition optimize(const ConvexPolygon& region,
                       const std::vector<SeedConfig>& seeds,
                       const SearchConfig& cfg);

// vertex count of the snapped piece1
int classify(const Partition& p, double collinear_tol);

// spec default: collinear snap at 1e-6 of the polygon diameter
double default_collinear_tol(const ConvexPolygon& p);

// assemble a full Partition (pieces, waste, coverage, class) from a
// configuration; throws InvalidInput when the piece is empty
Partition make_partition(const ConvexPolygon& region, const SeparatingLine& l,
                         const Isometry& g, Family family);

// optimize constrained to finals whose snapped pieces have `piece_class`
// vertices; non-matching finals are discarded (and penalized during search)
BestPartition optimize_constrained_class(const ConvexPolygon& region,
                                         const std::vector<SeedConfig>& seeds,
                                         const SearchConfig& cfg,
                                         int piece_class);

}  // namespace congrucut
