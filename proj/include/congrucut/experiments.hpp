#pragma once

// Executable forms of the paper-level arguments: corner-trimming
// perturbation, perfect-partition feasibility, coverage gap, sliver limits.

#include "congrucut/sweep.hpp"

namespace congrucut {

struct TrimReport {
    double alpha = 0.0;      // untrimmed best coverage
    double eps_hat = 0.0;    // trim area normalized by the triangle area
    double predicted = 0.0;  // (alpha - 2 eps_hat) / (1 - 2 eps_hat)
    double observed = 0.0;   // re-optimized coverage of the trimmed polygon
};

double trim_prediction(double alpha, double eps_hat);

// trim vertices A and B by `eps` area each and re-optimize, seeding with the
// untrimmed best configurations
TrimReport trim_experiment(const TriangleShape& s, double eps, const SearchConfig& cfg);

// true iff the triangle is isoceles within tol (mirror cut is perfect)
bool perfect_partition_exists(const TriangleShape& s, double tol);

// 1 - best coverage; requires a scalene shape
double lemma1_gap(const TriangleShape& s, const SearchConfig& cfg);

// best coverage at y in {0.4, 0.2, 0.1}, linearly extrapolated to y = 0
double sliver_limit(double x3, Mode mode, const SearchConfig& cfg);

}  // namespace congrucut
