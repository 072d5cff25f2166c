#include "diskspan/sparsifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <map>
#include <stdexcept>
#include <utility>

#include "diskspan/grid.hpp"

namespace diskspan {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

using EdgeKey = std::pair<int, int>;

Point lens_point(const Disk& a, const Disk& b) {
    if (circles_cross(a, b)) {
        const auto pts = circle_intersection_points(a, b);
        return {0.5 * (pts[0].x + pts[1].x), 0.5 * (pts[0].y + pts[1].y)};
    }
    return a.radius <= b.radius ? a.center : b.center;
}

// Telemetry sample: points whose depth falls in this round's range
// (2^(i-2)*alpha, 2^(i-1)*alpha], i.e. faces the round is responsible
// for. Sampled uniformly inside random disks from a dedicated
// substream so the sample is reproducible.
struct TelemetryPoint {
    std::vector<int> cover;  // covering disk indices
};

std::vector<TelemetryPoint> sample_round_faces(const DiskInstance& instance,
                                               const DiskGrid& grid,
                                               double range_lo, double range_hi,
                                               std::size_t want, Rng rng) {
    std::vector<TelemetryPoint> points;
    const std::size_t n = instance.size();
    if (n == 0 || want == 0) return points;
    const std::size_t attempts = want * 4;
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (std::size_t k = 0; k < attempts && points.size() < want; ++k) {
        const Disk& d = instance.disks[rng.uniform(n)];
        const double r = d.radius * std::sqrt(rng.uniform_double());
        const double phi = rng.uniform_double() * two_pi;
        const Point p{d.center.x + r * std::cos(phi), d.center.y + r * std::sin(phi)};
        auto cover = grid.covering_set(p);
        const double depth = static_cast<double>(cover.size());
        if (depth > range_lo && depth <= range_hi)
            points.push_back({std::move(cover)});
    }
    return points;
}

// Counts, for one coloring, how many sampled faces are deeper than
// alpha inside some consecutive color-class union (the hole event).
std::size_t hole_events(const std::vector<TelemetryPoint>& points,
                        const std::vector<int>& color, long alpha_i, long alpha,
                        std::vector<int>& scratch) {
    std::size_t events = 0;
    for (const TelemetryPoint& tp : points) {
        std::vector<int> present;
        for (int idx : tp.cover) {
            const int c = color[idx];
            if (scratch[c] == 0) present.push_back(c);
            ++scratch[c];
        }
        bool hole = false;
        for (int c : present) {
            const int next = (c == alpha_i) ? 1 : c + 1;
            if (scratch[c] > alpha || scratch[c] + scratch[next] > alpha) {
                hole = true;
                break;
            }
        }
        if (hole) ++events;
        for (int c : present) scratch[c] = 0;
    }
    return events;
}

struct RepetitionResult {
    std::vector<SpannerEdge> edges;
    std::size_t ignored = 0;
};

RepetitionResult run_repetition(const DiskInstance& instance, int round_index,
                                long alpha, long alpha_i, std::size_t j,
                                const Rng& master,
                                const std::vector<TelemetryPoint>& telemetry) {
    RepetitionResult result;
    const std::size_t n = instance.size();
    Rng sub = master.substream(static_cast<std::uint64_t>(round_index), j + 1);

    std::vector<int> color(n);
    for (std::size_t d = 0; d < n; ++d)
        color[d] = 1 + static_cast<int>(sub.uniform(static_cast<std::uint64_t>(alpha_i)));

    std::vector<std::vector<Disk>> classes(static_cast<std::size_t>(alpha_i) + 1);
    for (std::size_t d = 0; d < n; ++d)
        classes[color[d]].push_back(instance.disks[d]);

    for (long t = 1; t <= alpha_i; ++t) {
        const auto& prev = classes[t == 1 ? alpha_i : t - 1];
        const auto& cur = classes[t];
        if (prev.empty() || cur.empty()) continue;
        for (const WitnessedEdge& e :
             shallow_edges_bipartite(prev, cur, static_cast<int>(alpha))) {
            SpannerEdge se;
            se.a = e.a;
            se.b = e.b;
            se.witness = e.witness;
            se.witness_depth = e.witness_depth;
            se.prov = {round_index, static_cast<int>(j + 1), static_cast<int>(t)};
            result.edges.push_back(se);
        }
    }

    if (!telemetry.empty()) {
        std::vector<int> scratch(static_cast<std::size_t>(alpha_i) + 2, 0);
        result.ignored = hole_events(telemetry, color, alpha_i, alpha, scratch);
    }
    return result;
}

}  // namespace

SpannerConfig SpannerConfig::calibration(double eps, std::uint64_t seed) {
    SpannerConfig cfg;
    cfg.eps = eps;
    cfg.seed = seed;
    return cfg;
}

SpannerConfig SpannerConfig::paper(double eps, std::uint64_t seed) {
    SpannerConfig cfg;
    cfg.eps = eps;
    cfg.seed = seed;
    cfg.c_exp_size = 640.0;
    cfg.c_exp_rep = 2600.0;
    cfg.preset = "paper";
    return cfg;
}

long compute_alpha(std::size_t n, const SpannerConfig& cfg) {
    if (n < 1) throw std::invalid_argument("compute_alpha: n must be >= 1");
    if (cfg.eps <= 0.0 || cfg.eps > 1.0)
        throw std::invalid_argument("compute_alpha: eps must be in (0,1]");
    const double inv_eps2 = 1.0 / (cfg.eps * cfg.eps);
    const double value = cfg.c_alpha * cfg.c_exp_size *
                         (inv_eps2 + 4.0 * std::log(static_cast<double>(n)));
    return static_cast<long>(std::ceil(value));
}

std::size_t compute_repetitions(const SpannerConfig& cfg) {
    return static_cast<std::size_t>(
        std::ceil(cfg.c_exp_rep / (cfg.eps * cfg.eps) - 1e-12));
}

RoundResult round_edges(const DiskInstance& instance, int round_index,
                        long alpha, std::size_t repetitions, const Rng& master,
                        std::size_t telemetry_samples, int threads) {
    RoundResult out;
    const std::size_t n = instance.size();
    const long alpha_i = alpha << (round_index - 1);
    out.telemetry.round = round_index;
    out.telemetry.alpha_i = alpha_i;
    if (alpha_i > 2 * static_cast<long>(n)) return out;  // vacuous round

    const Clock::time_point t0 = Clock::now();
    const DiskGrid grid(instance.disks);

    const double range_lo = 0.5 * static_cast<double>(alpha_i);
    const auto telemetry = sample_round_faces(
        instance, grid, range_lo, static_cast<double>(alpha_i),
        std::min<std::size_t>(telemetry_samples, 10000),
        master.substream(static_cast<std::uint64_t>(round_index), 0));
    out.telemetry.sampled_faces = telemetry.size();

    std::vector<RepetitionResult> reps(repetitions);
    const int workers = std::max(1, threads);
    if (workers == 1 || repetitions <= 1) {
        for (std::size_t j = 0; j < repetitions; ++j)
            reps[j] = run_repetition(instance, round_index, alpha, alpha_i, j,
                                     master, telemetry);
    } else {
        std::vector<std::future<void>> futures;
        const std::size_t chunk = (repetitions + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(repetitions, lo + chunk);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, [&, lo, hi] {
                for (std::size_t j = lo; j < hi; ++j)
                    reps[j] = run_repetition(instance, round_index, alpha,
                                             alpha_i, j, master, telemetry);
            }));
        }
        for (auto& f : futures) f.get();
    }

    // Merge in repetition order: earliest (j, t) wins, independent of
    // the execution schedule.
    std::map<EdgeKey, SpannerEdge> merged;
    for (std::size_t j = 0; j < repetitions; ++j) {
        out.telemetry.ignored_events += reps[j].ignored;
        for (SpannerEdge& e : reps[j].edges)
            merged.emplace(EdgeKey{e.a, e.b}, e);
    }
    out.edges.reserve(merged.size());
    for (auto& [key, e] : merged) out.edges.push_back(e);
    out.telemetry.ms = ms_since(t0);
    return out;
}

std::pair<SpannerGraph, BuildReport> build_spanner(const DiskInstance& instance,
                                                   const SpannerConfig& cfg) {
    const Clock::time_point t0 = Clock::now();
    const std::size_t n = instance.size();
    if (cfg.eps <= 0.0 || cfg.eps >= 1.0)
        throw std::invalid_argument("build_spanner: eps must be in (0,1)");
    SpannerGraph graph;
    graph.n = n;
    BuildReport report;
    report.n = n;
    if (n == 0) return {graph, report};

    const long alpha = compute_alpha(n, cfg);
    const std::size_t reps = compute_repetitions(cfg);
    report.alpha = alpha;
    report.repetitions = reps;

    std::map<EdgeKey, SpannerEdge> edges;
    const Rng master(cfg.seed);

    if (alpha >= static_cast<long>(n)) {
        // Every witness has depth <= n <= alpha, so the construction
        // degenerates to the full intersection graph; rounds would be
        // vacuous.
        report.full_graph = true;
        const Clock::time_point tb = Clock::now();
        const DiskGrid grid(instance.disks);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const Disk& a = instance.disks[i];
                const Disk& b = instance.disks[j];
                if (!disks_intersect(a, b)) continue;
                SpannerEdge e;
                e.a = a.id;
                e.b = b.id;
                e.witness = lens_point(a, b);
                e.witness_depth = static_cast<int>(grid.depth_at(e.witness));
                edges.emplace(EdgeKey{e.a, e.b}, e);
            }
        }
        report.base_edges = edges.size();
        report.base_ms = ms_since(tb);
    } else {
        const Clock::time_point tb = Clock::now();
        for (const WitnessedEdge& we :
             shallow_edges(instance.disks, static_cast<int>(alpha))) {
            SpannerEdge e;
            e.a = we.a;
            e.b = we.b;
            e.witness = we.witness;
            e.witness_depth = we.witness_depth;
            e.prov = {};
            edges.emplace(EdgeKey{e.a, e.b}, e);
        }
        report.base_edges = edges.size();
        report.base_ms = ms_since(tb);

        int rounds = 1;
        while ((alpha << (rounds - 1)) < static_cast<long>(n)) ++rounds;
        report.rounds = rounds;
        for (int i = 1; i <= rounds; ++i) {
            RoundResult rr = round_edges(instance, i, alpha, reps, master,
                                         cfg.telemetry_samples, cfg.threads);
            std::size_t added = 0;
            for (SpannerEdge& e : rr.edges)
                if (edges.emplace(EdgeKey{e.a, e.b}, e).second) ++added;
            rr.telemetry.edges_added = added;
            report.per_round.push_back(rr.telemetry);
        }
    }

    graph.edges.reserve(edges.size());
    for (auto& [key, e] : edges) graph.edges.push_back(e);
    report.total_edges = graph.edges.size();
    report.total_ms = ms_since(t0);
    return {graph, report};
}

std::vector<std::pair<int, int>> edge_pairs(const SpannerGraph& g) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges.size());
    for (const SpannerEdge& e : g.edges) pairs.push_back({e.a, e.b});
    return pairs;
}

SpannerGraph full_intersection_graph(const DiskInstance& instance) {
    SpannerGraph g;
    g.n = instance.size();
    const DiskGrid grid(instance.disks);
    for (std::size_t i = 0; i < instance.size(); ++i) {
        for (std::size_t j = i + 1; j < instance.size(); ++j) {
            const Disk& a = instance.disks[i];
            const Disk& b = instance.disks[j];
            if (!disks_intersect(a, b)) continue;
            SpannerEdge e;
            e.a = a.id;
            e.b = b.id;
            e.witness = lens_point(a, b);
            e.witness_depth = static_cast<int>(grid.depth_at(e.witness));
            g.edges.push_back(e);
        }
    }
    return g;
}

}  // namespace diskspan
