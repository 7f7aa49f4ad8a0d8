#include "congrucut/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace congrucut {

double trim_prediction(double alpha, double eps_hat) {
    return (alpha - 2.0 * eps_hat) / (1.0 - 2.0 * eps_hat);
}

TrimReport trim_experiment(const TriangleShape& s, double eps, const SearchConfig& cfg) {
    const ConvexPolygon tri = make_triangle(s);
    const double tri_area = area(tri);
    if (!(eps > 0.0) || eps > 0.01 * tri_area)
        throw InvalidInput("trim eps must be in (0, 0.01*area]");

    BestPartition base = optimize_shape(s, Mode::ALL, cfg);

    // trim at A (vertex 0), then at B (now vertex 2 of the quad)
    ConvexPolygon trimmed = trim_corner(tri, TrimSpec{0, eps});
    trimmed = trim_corner(trimmed, TrimSpec{2, eps});

    // seed with the untrimmed best configurations, slightly deformed by the
    // optimizer itself
    std::vector<SeedConfig> seeds;
    seeds.push_back({base.partition.line, base.partition.map, Family::Search});
    for (const Partition& p : base.runner_ups)
        seeds.push_back({p.line, p.map, Family::Search});
    for (const SeedConfig& sc : auxiliary_seeds(trimmed)) seeds.push_back(sc);

    BestPartition after = optimize(trimmed, seeds, cfg);

    TrimReport rep;
    rep.alpha = base.partition.coverage;
    rep.eps_hat = eps / tri_area;
    rep.predicted = trim_prediction(rep.alpha, rep.eps_hat);
    rep.observed = after.partition.coverage;
    return rep;
}

bool perfect_partition_exists(const TriangleShape& s, double tol) {
    const ShapeMetrics m = metrics(s);
    const double d1 = std::abs(m.side_a - m.side_b);
    const double d2 = std::abs(m.side_b - m.side_c);
    const double d3 = std::abs(m.side_a - m.side_c);
    return std::min({d1, d2, d3}) <= tol;
}

double lemma1_gap(const TriangleShape& s, const SearchConfig& cfg) {
    if (perfect_partition_exists(s, 1e-6))
        throw InvalidInput("shape is isoceles within tolerance");
    const BestPartition best = optimize_shape(s, Mode::ALL, cfg);
    return 1.0 - best.partition.coverage;
}

double sliver_limit(double x3, Mode mode, const SearchConfig& cfg) {
    if (!(x3 > 0.0) || x3 >= 5.0) throw InvalidInput("x3 must lie in (0, 5)");
    const std::array<double, 3> ys{0.4, 0.2, 0.1};
    std::array<double, 3> cov{};
    for (std::size_t i = 0; i < ys.size(); ++i)
        cov[i] = best_coverage(TriangleShape{x3, ys[i]}, mode, cfg).cov_best;

    // least-squares line through the three samples, evaluated at y = 0
    double my = 0, mc = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        my += ys[i] / 3.0;
        mc += cov[i] / 3.0;
    }
    double num = 0, den = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        num += (ys[i] - my) * (cov[i] - mc);
        den += (ys[i] - my) * (ys[i] - my);
    }
    const double slope = num / den;
    return mc - slope * my;
}

}  // namespace congrucut
