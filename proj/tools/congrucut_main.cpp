// congrucut: maximum 2-coverage of triangles by two congruent convex pieces.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "congrucut/experiments.hpp"
#include "congrucut/report.hpp"
#include "congrucut/verify.hpp"

namespace {

using namespace congrucut;

Mode parse_mode(const std::string& s) {
    if (s == "m1") return Mode::M1;
    if (s == "m1m2") return Mode::M1M2;
    if (s == "all") return Mode::ALL;
    throw CLI::ValidationError("--mode", "expected m1, m1m2 or all");
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum 2-coverage partitions of triangles"};
    app.require_subcommand(1);

    double x3 = 0, y3 = 0, eps = 0, step = 0.1, ymin = 0.1;
    std::string mode_str = "all";
    std::uint64_t seed = 42;
    std::string json_path, svg_path, out_path, region_svg_path;
    bool refine = false, fast = false;

    CLI::App* opt = app.add_subcommand("optimize", "best partition of one triangle shape");
    opt->add_option("--x3", x3, "apex x coordinate")->required();
    opt->add_option("--y3", y3, "apex y coordinate")->required();
    opt->add_option("--mode", mode_str, "candidate set: m1|m1m2|all");
    opt->add_option("--seed", seed, "rng seed");
    opt->add_option("--json", json_path, "write the partition as JSON");
    opt->add_option("--svg", svg_path, "render the partition as SVG");

    CLI::App* sw = app.add_subcommand("sweep", "sweep the shape space and extract the minimax");
    sw->add_option("--step", step, "grid step")->required();
    sw->add_option("--ymin", ymin, "sliver guard row")->required();
    sw->add_option("--mode", mode_str, "candidate set: m1|m1m2|all");
    sw->add_option("--seed", seed, "rng seed");
    sw->add_option("--out", out_path, "CSV output path")->required();
    sw->add_option("--region-svg", region_svg_path, "render the winner map as SVG");
    sw->add_flag("--refine", refine, "refine around the argmin at step/10");

    CLI::App* ex = app.add_subcommand("experiment", "paper-argument experiments");
    CLI::App* trim = ex->add_subcommand("trim", "corner-trimming perturbation");
    trim->add_option("--x3", x3, "apex x coordinate")->required();
    trim->add_option("--y3", y3, "apex y coordinate")->required();
    trim->add_option("--eps", eps, "area trimmed at each of A and B")->required();
    trim->add_option("--seed", seed, "rng seed");

    CLI::App* ver = app.add_subcommand("verify", "run the acceptance criteria");
    ver->add_flag("--fast", fast, "coarse grids and reduced starts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    SearchConfig cfg;
    cfg.rng_seed = seed;

    RunManifest manifest;
    manifest.command = join_args(argc, argv);
    manifest.config = cfg;

    try {
        if (opt->parsed()) {
            const Mode mode = parse_mode(mode_str);
            manifest.mode = mode;
            const TriangleShape s{x3, y3};
            if (!in_region(s)) {
                std::cerr << "error: (" << x3 << ", " << y3 << ") outside shape region\n";
                return 1;
            }
            const BestPartition best = optimize_shape(s, mode, cfg);
            const ConvexPolygon tri = make_triangle(s);
            std::printf("shape C=(%g, %g)  mode=%s\n", x3, y3, mode_name(mode));
            std::printf("coverage  %.6f  family=%s  piece_class=%d\n",
                        best.partition.coverage, family_name(best.partition.family),
                        best.partition.piece_class);
            for (const Partition& r : best.runner_ups)
                std::printf("runner-up %.6f  family=%s  piece_class=%d\n", r.coverage,
                            family_name(r.family), r.piece_class);
            if (!json_path.empty()) emit_partition_json(best, tri, manifest, json_path);
            if (!svg_path.empty()) render_svg(best.partition, tri, manifest, svg_path);
            return 0;
        }

        if (sw->parsed()) {
            const Mode mode = parse_mode(mode_str);
            manifest.mode = mode;
            const GridSpec g{step, ymin};
            manifest.grid = g;
            manifest.has_grid = true;
            const SweepResult r = refine ? sweep_refined(g, mode, cfg) : sweep(g, mode, cfg);
            emit_sweep_csv(r, manifest, out_path);
            if (!region_svg_path.empty())
                render_region_svg(region_map(r, cfg.tie_tol), step, manifest, region_svg_path);
            std::printf("cells     %zu\n", r.records.size());
            std::printf("minimax   %.6f at (%g, %g)\n", r.minimax_value,
                        r.minimax_shape.x3, r.minimax_shape.y3);
            if (r.triple_point)
                std::printf("triple    (%.3f, %.3f)\n", r.triple_point->x, r.triple_point->y);
            return 0;
        }

        if (trim->parsed()) {
            const TriangleShape s{x3, y3};
            if (!in_region(s)) {
                std::cerr << "error: (" << x3 << ", " << y3 << ") outside shape region\n";
                return 1;
            }
            const TrimReport rep = trim_experiment(s, eps, cfg);
            std::printf("alpha     %.6f\n", rep.alpha);
            std::printf("eps_hat   %.6f\n", rep.eps_hat);
            std::printf("predicted %.6f\n", rep.predicted);
            std::printf("observed  %.6f\n", rep.observed);
            std::printf("delta     %+.6f\n", rep.observed - rep.predicted);
            return 0;
        }

        if (ver->parsed()) {
            const auto results = run_acceptance(fast, std::cerr);
            bool all = true;
            for (const CriterionResult& c : results) {
                std::printf("%s  criterion %d (%s): %s\n", c.pass ? "PASS" : "FAIL",
                            c.id, c.name.c_str(), c.detail.c_str());
                all = all && c.pass;
            }
            return all ? 0 : 2;
        }
    } catch (const OutOfRegion& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
