#include "congrucut/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "congrucut/rng.hpp"

namespace congrucut {

namespace {

constexpr double kPi = 3.14159265358979323846;

// fixed-capacity polygon for the inner optimization loop
struct SmallPoly {
    std::array<Point, 24> v;
    int n = 0;
};

double sp_area(const SmallPoly& p) {
    double s = 0.0;
    for (int i = 0; i < p.n; ++i) {
        const Point& a = p.v[static_cast<std::size_t>(i)];
        const Point& b = p.v[static_cast<std::size_t>((i + 1) % p.n)];
        s += cross(a, b);
    }
    return 0.5 * s;
}

// clip by n·p >= c, |n| = 1; same banded rule as the public clipper
void sp_clip(const SmallPoly& in, Point nrm, double c, SmallPoly& out) {
    out.n = 0;
    if (in.n < 3) return;
    double mag = std::abs(c);
    for (int i = 0; i < in.n; ++i)
        mag = std::max({mag, std::abs(in.v[static_cast<std::size_t>(i)].x),
                        std::abs(in.v[static_cast<std::size_t>(i)].y)});
    const double band = 1e-12 * (1.0 + mag);

    double da = dot(nrm, in.v[0]) - c;
    for (int i = 0; i < in.n; ++i) {
        const Point& a = in.v[static_cast<std::size_t>(i)];
        const Point& b = in.v[static_cast<std::size_t>((i + 1) % in.n)];
        const double db = dot(nrm, b) - c;
        if (da >= -band && out.n < 24) out.v[static_cast<std::size_t>(out.n++)] = a;
        if (((da > band && db < -band) || (da < -band && db > band)) && out.n < 24) {
            const double t = da / (da - db);
            out.v[static_cast<std::size_t>(out.n++)] = {a.x + t * (b.x - a.x),
                                                        a.y + t * (b.y - a.y)};
        }
        da = db;
    }
    if (out.n < 3) out.n = 0;
}

void sp_from(const ConvexPolygon& p, SmallPoly& out) {
    out.n = static_cast<int>(std::min<std::size_t>(p.size(), 24));
    for (int i = 0; i < out.n; ++i) out.v[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
}

struct RawConfig {
    double o = 0.0;      // line offset: n(phi)·p = o
    double phi = 0.0;    // line direction angle (unwrapped)
    double theta = 0.0;  // isometry rotation
    double tx = 0.0;
    double ty = 0.0;
    bool reflect = false;
};

// maximal-piece coverage for a raw configuration; optionally keeps the piece
double eval_raw(const SmallPoly& tri, double tri_area, const RawConfig& rc,
                SmallPoly* piece_out = nullptr) {
    const Point nrm{-std::sin(rc.phi), std::cos(rc.phi)};
    SmallPoly r1, r2, work;
    sp_clip(tri, nrm, rc.o, r1);
    if (r1.n < 3) return 0.0;
    sp_clip(tri, {-nrm.x, -nrm.y}, -rc.o, r2);
    if (r2.n < 3) return 0.0;

    // g^-1(R2), re-oriented ccw when reflected
    const double cth = std::cos(rc.theta), sth = std::sin(rc.theta);
    SmallPoly gi;
    gi.n = r2.n;
    for (int i = 0; i < r2.n; ++i) {
        const Point& q = r2.v[static_cast<std::size_t>(rc.reflect ? (r2.n - 1 - i) : i)];
        const double x = q.x - rc.tx, y = q.y - rc.ty;
        Point p{cth * x + sth * y, -sth * x + cth * y};
        if (rc.reflect) p.y = -p.y;
        gi.v[static_cast<std::size_t>(i)] = p;
    }

    // P1 = R1 ∩ g^-1(R2)
    SmallPoly cur = r1;
    for (int i = 0; i < gi.n; ++i) {
        const Point& u = gi.v[static_cast<std::size_t>(i)];
        const Point& v = gi.v[static_cast<std::size_t>((i + 1) % gi.n)];
        Point en{-(v.y - u.y), v.x - u.x};
        const double len = norm(en);
        if (len < 1e-300) continue;
        en = (1.0 / len) * en;
        sp_clip(cur, en, dot(en, u), work);
        if (work.n < 3) return 0.0;
        cur = work;
    }

    const double a = sp_area(cur);
    if (a < kAreaEps) return 0.0;
    // guard against degenerate slivers thinner than the geometric epsilon
    double ext = 0.0;
    for (int i = 1; i < cur.n; ++i)
        ext = std::max(ext, dist(cur.v[static_cast<std::size_t>(i)], cur.v[0]));
    if (a < 1e-9 * ext) return 0.0;
    if (piece_out) *piece_out = cur;
    return 2.0 * a / tri_area;
}

struct NmScales {
    double pos;  // offsets and translations
    double ang;  // angles
};

using ParamVec = std::array<double, 5>;

RawConfig to_raw(const ParamVec& z, bool reflect) {
    return {z[0], z[1], z[2], z[3], z[4], reflect};
}

ParamVec from_raw(const RawConfig& rc) {
    return {rc.o, rc.phi, rc.theta, rc.tx, rc.ty};
}

template <class F>
std::pair<ParamVec, double> nelder_mead(F&& f, const ParamVec& z0,
                                        const NmScales& sc, double step_frac,
                                        int max_iter, double ftol, double xtol) {
    constexpr int n = 5;
    std::array<ParamVec, n + 1> simplex;
    std::array<double, n + 1> fv;
    const ParamVec steps{step_frac * sc.pos, step_frac * sc.ang, step_frac * sc.ang,
                         step_frac * sc.pos, step_frac * sc.pos};
    simplex[0] = z0;
    fv[0] = f(z0);
    for (int i = 0; i < n; ++i) {
        simplex[static_cast<std::size_t>(i + 1)] = z0;
        simplex[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] +=
            steps[static_cast<std::size_t>(i)];
        fv[static_cast<std::size_t>(i + 1)] = f(simplex[static_cast<std::size_t>(i + 1)]);
    }

    auto order = [&] {
        std::array<int, n + 1> idx{};
        for (int i = 0; i <= n; ++i) idx[static_cast<std::size_t>(i)] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return fv[static_cast<std::size_t>(a)] < fv[static_cast<std::size_t>(b)]; });
        std::array<ParamVec, n + 1> s2;
        std::array<double, n + 1> f2;
        for (int i = 0; i <= n; ++i) {
            s2[static_cast<std::size_t>(i)] = simplex[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            f2[static_cast<std::size_t>(i)] = fv[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        }
        simplex = s2;
        fv = f2;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        order();
        // converged when both values and (scaled) extent are tight
        double extent = 0.0;
        for (int i = 1; i <= n; ++i)
            for (int d = 0; d < n; ++d)
                extent = std::max(extent,
                                  std::abs(simplex[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] -
                                           simplex[0][static_cast<std::size_t>(d)]) /
                                      steps[static_cast<std::size_t>(d)]);
        if (std::abs(fv[n] - fv[0]) < ftol && extent * step_frac < xtol) break;

        ParamVec cen{};
        for (int i = 0; i < n; ++i)
            for (int d = 0; d < n; ++d)
                cen[static_cast<std::size_t>(d)] +=
                    simplex[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] / n;

        auto affine = [&](double coef) {
            ParamVec z;
            for (int d = 0; d < n; ++d)
                z[static_cast<std::size_t>(d)] = cen[static_cast<std::size_t>(d)] +
                                                 coef * (cen[static_cast<std::size_t>(d)] -
                                                         simplex[n][static_cast<std::size_t>(d)]);
            return z;
        };

        const ParamVec zr = affine(1.0);
        const double fr = f(zr);
        if (fr < fv[0]) {
            const ParamVec ze = affine(2.0);
            const double fe = f(ze);
            if (fe < fr) {
                simplex[n] = ze;
                fv[n] = fe;
            } else {
                simplex[n] = zr;
                fv[n] = fr;
            }
        } else if (fr < fv[n - 1]) {
            simplex[n] = zr;
            fv[n] = fr;
        } else {
            const ParamVec zc = affine(fr < fv[n] ? 0.5 : -0.5);
            const double fc = f(zc);
            if (fc < std::min(fr, fv[n])) {
                simplex[n] = zc;
                fv[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int d = 0; d < n; ++d)
                        simplex[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] =
                            simplex[0][static_cast<std::size_t>(d)] +
                            0.5 * (simplex[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)] -
                                   simplex[0][static_cast<std::size_t>(d)]);
                    fv[static_cast<std::size_t>(i)] = f(simplex[static_cast<std::size_t>(i)]);
                }
            }
        }
    }
    order();
    return {simplex[0], fv[0]};
}

// coordinate descent with shrinking steps; certifies a local optimum at xtol
template <class F>
std::pair<ParamVec, double> pattern_polish(F&& f, ParamVec z, double fz,
                                           const NmScales& sc, double xtol) {
    const ParamVec unit{sc.pos, sc.ang, sc.ang, sc.pos, sc.pos};
    for (double step = 1e-3; step >= xtol; step *= 0.5) {
        bool moved = true;
        int guard = 0;
        while (moved && guard++ < 40) {
            moved = false;
            for (int d = 0; d < 5; ++d) {
                for (double sgn : {1.0, -1.0}) {
                    ParamVec zt = z;
                    zt[static_cast<std::size_t>(d)] += sgn * step * unit[static_cast<std::size_t>(d)];
                    const double ft = f(zt);
                    if (ft < fz - 1e-15) {
                        z = zt;
                        fz = ft;
                        moved = true;
                    }
                }
            }
        }
    }
    return {z, fz};
}

bool point_in_convex(const ConvexPolygon& p, Point q) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % n];
        if (cross(b - a, q - a) < 0) return false;
    }
    return true;
}

RawConfig seed_to_raw(const SeedConfig& s) {
    RawConfig rc;
    const Point n = s.line.left_normal();
    rc.o = dot(n, s.line.anchor);
    rc.phi = s.line.angle;
    rc.theta = s.iso.theta;
    rc.tx = s.iso.t.x;
    rc.ty = s.iso.t.y;
    rc.reflect = s.iso.reflect;
    return rc;
}

struct StartPoint {
    RawConfig rc;
    Family origin = Family::Search;
    bool is_seed = false;
};

std::vector<StartPoint> build_starts(const ConvexPolygon& region,
                                     const std::vector<SeedConfig>& seeds,
                                     const SearchConfig& cfg) {
    std::vector<StartPoint> starts;
    starts.reserve(seeds.size() + static_cast<std::size_t>(cfg.random_starts));
    for (const SeedConfig& s : seeds) starts.push_back({seed_to_raw(s), s.origin, true});

    // bbox rejection sampling keeps start generation covariant under scaling
    double xmin = region[0].x, xmax = xmin, ymin = region[0].y, ymax = ymin;
    for (const Point& v : region.verts) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }

    for (int i = 0; i < cfg.random_starts; ++i) {
        Rng rng = Rng::fork(cfg.rng_seed, static_cast<std::uint64_t>(i) + 1000);
        RawConfig rc;
        bool ok = false;
        for (int attempt = 0; attempt < 16 && !ok; ++attempt) {
            Point anchor{rng.uniform(xmin, xmax), rng.uniform(ymin, ymax)};
            if (!point_in_convex(region, anchor)) continue;
            rc.phi = rng.uniform(0.0, kPi);
            const Point nrm{-std::sin(rc.phi), std::cos(rc.phi)};
            rc.o = dot(nrm, anchor);
            const SeparatingLine l{anchor, rc.phi};
            auto r1 = clip_halfplane(region, l, true);
            auto r2 = clip_halfplane(region, l, false);
            if (!r1 || !r2) continue;
            rc.theta = rng.uniform(0.0, 2.0 * kPi);
            rc.reflect = (i % 2) == 1;
            const Point c1 = centroid(*r1);
            const Point c2 = centroid(*r2);
            Isometry g{rc.reflect, rc.theta, {0, 0}};
            const Point gc1 = g.apply(c1);
            rc.tx = c2.x - gc1.x;
            rc.ty = c2.y - gc1.y;
            ok = true;
        }
        if (ok) starts.push_back({rc, Family::Search, false});
    }
    return starts;
}

struct Final {
    RawConfig rc;
    double cov = 0.0;
    Family origin = Family::Search;
    std::size_t index = 0;
};

// canonical (line, iso) with piece1 on the left of a [0,pi) angle
void normalize_config(const ConvexPolygon& region, const RawConfig& rc,
                      SeparatingLine& line, Isometry& iso) {
    const double phin = normalize_line_angle(rc.phi);
    const Point nraw{-std::sin(rc.phi), std::cos(rc.phi)};
    const Point nnew{-std::sin(phin), std::cos(phin)};
    const bool flipped = dot(nraw, nnew) < 0.0;

    // anchor: projection of the region centroid onto the line
    const Point c = centroid(region);
    const Point base = rc.o * nraw;
    const Point dir{std::cos(rc.phi), std::sin(rc.phi)};
    const Point anchor = base + dot(c - base, dir) * dir;

    line = SeparatingLine{anchor, phin};
    iso = Isometry{rc.reflect, rc.theta, {rc.tx, rc.ty}};
    if (flipped) iso = iso.inverse();
}

}  // namespace

double default_collinear_tol(const ConvexPolygon& p) {
    return 1e-6 * diameter(p);
}

std::pair<double, MaybePolygon> coverage_at(const ConvexPolygon& region,
                                            const SeparatingLine& l,
                                            const Isometry& g) {
    auto r1 = clip_halfplane(region, l, true);
    auto r2 = clip_halfplane(region, l, false);
    if (!r1 || !r2) return {0.0, std::nullopt};
    const Isometry gi = g.inverse();
    const ConvexPolygon gir2 = apply_isometry(gi, *r2);
    auto p1 = intersect_convex(*r1, gir2);
    if (!p1) return {0.0, std::nullopt};
    const double a = area(*p1);
    if (a < kAreaEps || a < 1e-9 * diameter(*p1)) return {0.0, std::nullopt};
    return {2.0 * a / area(region), std::move(p1)};
}

int classify(const Partition& p, double collinear_tol) {
    return static_cast<int>(snap_vertices(p.piece1, collinear_tol).size());
}

Partition make_partition(const ConvexPolygon& region, const SeparatingLine& l,
                         const Isometry& g, Family family) {
    auto [cov, p1] = coverage_at(region, l, g);
    if (!p1) throw InvalidInput("configuration yields an empty piece");

    Partition part;
    part.line = l;
    part.map = g;
    part.family = family;
    part.coverage = cov;
    part.piece1 = std::move(*p1);
    part.piece2 = apply_isometry(g, part.piece1);
    part.piece_class = classify(part, default_collinear_tol(part.piece1));

    const double tidy = 1e-9 * diameter(region);
    auto r1 = clip_halfplane(region, l, true);
    auto r2 = clip_halfplane(region, l, false);
    for (const auto& side : {std::pair{&*r1, &part.piece1}, std::pair{&*r2, &part.piece2}}) {
        for (ConvexPolygon& w : convex_difference(*side.first, *side.second)) {
            ConvexPolygon s = snap_vertices(w, tidy);
            if (s.size() >= 3 && area(s) >= kAreaEps) part.waste.push_back(std::move(s));
        }
    }
    return part;
}

namespace {

BestPartition optimize_impl(const ConvexPolygon& region,
                            const std::vector<SeedConfig>& seeds,
                            const SearchConfig& cfg, int class_constraint) {
    SmallPoly tri;
    sp_from(region, tri);
    const double tri_area = area(region);
    const double diam = diameter(region);
    const NmScales sc{diam, 1.0};

    const double penalty = class_constraint > 0 ? 0.35 : 0.0;
    auto piece_class_of = [&](const RawConfig& rc) {
        SmallPoly piece;
        if (eval_raw(tri, tri_area, rc, &piece) <= 0.0) return 0;
        ConvexPolygon p;
        p.verts.assign(piece.v.begin(), piece.v.begin() + piece.n);
        return static_cast<int>(snap_vertices(p, default_collinear_tol(p)).size());
    };

    std::vector<StartPoint> starts = build_starts(region, seeds, cfg);
    std::vector<Final> finals;
    finals.reserve(starts.size() * 2);

    for (std::size_t si = 0; si < starts.size(); ++si) {
        const StartPoint& st = starts[si];
        bool refl = st.rc.reflect;
        auto obj = [&](const ParamVec& z) {
            const RawConfig rc = to_raw(z, refl);
            double cov = eval_raw(tri, tri_area, rc);
            if (penalty > 0.0 && cov > 0.0 && piece_class_of(rc) != class_constraint)
                cov -= penalty;
            return -cov;
        };

        // the raw seed itself is always a candidate (seed domination)
        if (st.is_seed)
            finals.push_back({st.rc, eval_raw(tri, tri_area, st.rc), st.origin, si});

        const double step_frac = st.is_seed ? 0.03 : 0.12;
        auto [z1, f1] = nelder_mead(obj, from_raw(st.rc), sc, step_frac,
                                    cfg.local_iters, cfg.ftol, cfg.xtol);
        auto [z2, f2] = pattern_polish(obj, z1, f1, sc, cfg.xtol);
        RawConfig rc = to_raw(z2, refl);
        const double cov = eval_raw(tri, tri_area, rc);  // unpenalized
        finals.push_back({rc, cov, st.origin, si});
    }

    if (class_constraint > 0) {
        std::vector<Final> kept;
        for (const Final& f : finals)
            if (f.cov > 0.0 && piece_class_of(f.rc) == class_constraint)
                kept.push_back(f);
        finals = std::move(kept);
        if (finals.empty()) throw SearchFailed("no configuration with the requested piece class");
    }

    std::size_t best_i = 0;
    for (std::size_t i = 1; i < finals.size(); ++i)
        if (finals[i].cov > finals[best_i].cov) best_i = i;

    BestPartition out;
    {
        SeparatingLine l;
        Isometry g;
        normalize_config(region, finals[best_i].rc, l, g);
        out.partition = make_partition(region, l, g,
                                       class_constraint == 4 ? Family::Quad : Family::Search);
    }

    // distinct runner-ups within tie_tol: different class, or line parameters
    // apart by more than 1e-2
    struct Rep {
        double o, phi;
        int cls;
    };
    std::vector<Rep> reps;
    auto rep_of = [](const Partition& p) {
        const Point nn = p.line.left_normal();
        return Rep{dot(nn, p.line.anchor), p.line.angle, p.piece_class};
    };
    reps.push_back(rep_of(out.partition));

    std::vector<std::size_t> order(finals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (finals[a].cov != finals[b].cov) return finals[a].cov > finals[b].cov;
        return finals[a].index < finals[b].index;
    });
    for (std::size_t oi : order) {
        if (oi == best_i) continue;
        const Final& f = finals[oi];
        if (f.cov < finals[best_i].cov - cfg.tie_tol) break;
        if (f.cov <= 0.0) continue;
        SeparatingLine l;
        Isometry g;
        normalize_config(region, f.rc, l, g);
        Partition p;
        try {
            p = make_partition(region, l, g, out.partition.family);
        } catch (const InvalidInput&) {
            continue;
        }
        const Rep r = rep_of(p);
        bool dup = false;
        for (const Rep& q : reps) {
            const double dphi = std::min(std::abs(r.phi - q.phi),
                                         kPi - std::abs(r.phi - q.phi));
            if (r.cls == q.cls && std::abs(r.o - q.o) <= 1e-2 && dphi <= 1e-2) {
                dup = true;
                break;
            }
        }
        if (dup) continue;
        reps.push_back(r);
        out.runner_ups.push_back(std::move(p));
        if (out.runner_ups.size() >= 8) break;
    }

    // family scores: seed families at their seed configurations, plus the
    // refined best for the general search
    for (const SeedConfig& s : seeds) {
        const double cov = eval_raw(tri, tri_area, seed_to_raw(s));
        auto it = out.family_scores.find(s.origin);
        if (it == out.family_scores.end() || cov > it->second)
            out.family_scores[s.origin] = cov;
    }
    auto its = out.family_scores.find(Family::Search);
    if (its == out.family_scores.end() || finals[best_i].cov > its->second)
        out.family_scores[Family::Search] = finals[best_i].cov;

    return out;
}

}  // namespace

BestPartition optimize(const ConvexPolygon& region,
                       const std::vector<SeedConfig>& seeds,
                       const SearchConfig& cfg) {
    return optimize_impl(region, seeds, cfg, 0);
}

BestPartition optimize_constrained_class(const ConvexPolygon& region,
                                         const std::vector<SeedConfig>& seeds,
                                         const SearchConfig& cfg,
                                         int piece_class) {
    return optimize_impl(region, seeds, cfg, piece_class);
}

}  // namespace congrucut
