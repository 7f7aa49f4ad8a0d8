#pragma once

// Deterministic file emitters (JSON, CSV, SVG) and the run manifest.

#include <string>

#include "congrucut/sweep.hpp"

namespace congrucut {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
    std::string command;
    SearchConfig config;
    GridSpec grid;
    Mode mode = Mode::ALL;
    bool has_grid = false;
};

void emit_partition_json(const BestPartition& p, const ConvexPolygon& region,
                         const RunManifest& manifest, const std::string& path);

void emit_sweep_csv(const SweepResult& r, const RunManifest& manifest,
                    const std::string& path);

void render_svg(const Partition& p, const ConvexPolygon& region,
                const RunManifest& manifest, const std::string& path);

void render_region_svg(const RegionMap& m, double step,
                       const RunManifest& manifest, const std::string& path);

}  // namespace congrucut
