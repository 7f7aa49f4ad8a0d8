#include "congrucut/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace congrucut {

using json = nlohmann::json;

namespace {

json manifest_json(const RunManifest& m) {
    json j;
    j["command"] = m.command;
    j["tool_version"] = kToolVersion;
    j["rng_seed"] = m.config.rng_seed;
    json cfg;
    cfg["random_starts"] = m.config.random_starts;
    cfg["local_iters"] = m.config.local_iters;
    cfg["xtol"] = m.config.xtol;
    cfg["ftol"] = m.config.ftol;
    cfg["tie_tol"] = m.config.tie_tol;
    cfg["mode"] = mode_name(m.mode);
    if (m.has_grid) {
        cfg["grid_step"] = m.grid.step;
        cfg["grid_y_min"] = m.grid.y_min;
    }
    j["config"] = cfg;
    return j;
}

json poly_json(const ConvexPolygon& p) {
    json j = json::array();
    for (const Point& v : p.verts) j.push_back({v.x, v.y});
    return j;
}

json partition_json(const Partition& p) {
    json j;
    j["coverage"] = p.coverage;
    j["family"] = family_name(p.family);
    j["piece_class"] = p.piece_class;
    j["line"] = {{"anchor", {p.line.anchor.x, p.line.anchor.y}},
                 {"angle", p.line.angle}};
    j["isometry"] = {{"reflect", p.map.reflect},
                     {"theta", p.map.theta},
                     {"t", {p.map.t.x, p.map.t.y}}};
    j["piece1"] = poly_json(p.piece1);
    j["piece2"] = poly_json(p.piece2);
    json waste = json::array();
    for (const ConvexPolygon& w : p.waste) waste.push_back(poly_json(w));
    j["waste"] = waste;
    return j;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    return out;
}

}  // namespace

void emit_partition_json(const BestPartition& p, const ConvexPolygon& region,
                         const RunManifest& manifest, const std::string& path) {
    json j = partition_json(p.partition);
    j["triangle"] = poly_json(region);
    json rus = json::array();
    for (const Partition& r : p.runner_ups) rus.push_back(partition_json(r));
    j["runner_ups"] = rus;
    json scores;
    for (const auto& [fam, cov] : p.family_scores) scores[family_name(fam)] = cov;
    j["family_scores"] = scores;
    j["manifest"] = manifest_json(manifest);

    auto out = open_or_throw(path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

void emit_sweep_csv(const SweepResult& r, const RunManifest& manifest,
                    const std::string& path) {
    auto out = open_or_throw(path);
    out << "# manifest: " << manifest_json(manifest).dump() << "\n";
    out << "x3,y3,cov_m1,cov_m2,cov_search,cov_best,winner,piece_class\n";
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return std::string(buf);
    };
    for (const SweepRecord& rec : r.records) {
        out << num(rec.shape.x3) << ',' << num(rec.shape.y3) << ','
            << num(rec.cov_m1) << ','
            << (rec.cov_m2 < 0 ? std::string() : num(rec.cov_m2)) << ','
            << (rec.cov_search < 0 ? std::string() : num(rec.cov_search)) << ','
            << num(rec.cov_best) << ',' << family_name(rec.winner) << ','
            << rec.piece_class << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

namespace {

constexpr double kPxPerUnit = 40.0;

struct SvgFrame {
    double xmin, ymax, w, h;
    double X(double x) const { return (x - xmin) * kPxPerUnit + 20.0; }
    double Y(double y) const { return (ymax - y) * kPxPerUnit + 20.0; }
};

SvgFrame frame_of(const ConvexPolygon& region) {
    double xmin = region[0].x, xmax = xmin, ymin = region[0].y, ymax = ymin;
    for (const Point& v : region.verts) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    return {xmin, ymax, (xmax - xmin) * kPxPerUnit + 40.0,
            (ymax - ymin) * kPxPerUnit + 40.0};
}

void svg_poly(std::ostream& out, const SvgFrame& f, const ConvexPolygon& p,
              const char* fill, const char* stroke) {
    out << "<polygon points=\"";
    char buf[64];
    for (const Point& v : p.verts) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", f.X(v.x), f.Y(v.y));
        out << buf;
    }
    out << "\" fill=\"" << fill << "\" stroke=\"" << stroke
        << "\" stroke-width=\"1\"/>\n";
}

}  // namespace

void render_svg(const Partition& p, const ConvexPolygon& region,
                const RunManifest& manifest, const std::string& path) {
    auto out = open_or_throw(path);
    const SvgFrame f = frame_of(region);
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n",
                  f.w, f.h + 24.0);
    out << buf;
    out << "<!-- manifest: " << manifest_json(manifest).dump() << " -->\n";
    for (const ConvexPolygon& w : p.waste) svg_poly(out, f, w, "#d62728", "none");
    svg_poly(out, f, p.piece1, "#2ca02c", "none");
    svg_poly(out, f, p.piece2, "#ff7f0e", "none");
    svg_poly(out, f, region, "none", "#000000");
    std::snprintf(buf, sizeof buf,
                  "<text x=\"20\" y=\"%.0f\" font-size=\"14\">coverage = %.6f</text>\n",
                  f.h + 16.0, p.coverage);
    out << buf;
    out << "</svg>\n";
    if (!out) throw IoError("write failed: " + path);
}

void render_region_svg(const RegionMap& m, double step,
                       const RunManifest& manifest, const std::string& path) {
    auto out = open_or_throw(path);
    ConvexPolygon bounds({{0, 0}, {10, 0}, {5, 9}});
    const SvgFrame f = frame_of(bounds);
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n",
                  f.w, f.h);
    out << buf;
    out << "<!-- manifest: " << manifest_json(manifest).dump() << " -->\n";
    const double px = step * kPxPerUnit;
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
        const char* color = "#2ca02c";
        if (m.winners[i] == Family::Quad) color = "#ff7f0e";
        if (m.winners[i] == Family::Search) color = "#9467bd";
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"%s\"/>\n",
                      f.X(m.cells[i].x3) - px / 2, f.Y(m.cells[i].y3) - px / 2, px,
                      px, color);
        out << buf;
    }
    if (m.triple_point) {
        const double cx = f.X(m.triple_point->x), cy = f.Y(m.triple_point->y);
        std::snprintf(buf, sizeof buf,
                      "<path d=\"M %.2f %.2f L %.2f %.2f M %.2f %.2f L %.2f %.2f\" "
                      "stroke=\"#000000\" stroke-width=\"2\"/>\n",
                      cx - 6, cy - 6, cx + 6, cy + 6, cx - 6, cy + 6, cx + 6, cy - 6);
        out << buf;
    }
    out << "</svg>\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace congrucut
