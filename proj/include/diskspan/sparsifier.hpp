#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskspan/arrangement.hpp"
#include "diskspan/geometry.hpp"
#include "diskspan/rng.hpp"

namespace diskspan {

/// Construction constants and seed. The shipped default is the
/// calibration preset (proof constants scaled down 50x, fast and
/// empirically solid but without the proven failure bounds); the full
/// paper-constant preset sits behind a flag.
struct SpannerConfig {
    double eps = 0.5;            // in (0, 1)
    double c_alpha = 1.0;        // multiplier in the depth threshold
    double c_exp_size = 12.8;    // expansion size constant (c1)
    double c_exp_rep = 52.0;     // repetition constant (c2)
    std::uint64_t seed = 1;
    std::string preset = "calibration";
    std::size_t telemetry_samples = 64;  // sampled faces per round (<= 10^4)
    int threads = 1;             // parallel repetitions; result is identical

    static SpannerConfig calibration(double eps = 0.5, std::uint64_t seed = 1);
    static SpannerConfig paper(double eps = 0.5, std::uint64_t seed = 1);
};

/// Where a spanner edge came from: the shallow base layer or a
/// specific (round, repetition, color) coloring step.
struct Provenance {
    int round = 0;  // 0 = base layer
    int repetition = 0;
    int color = 0;

    bool is_base() const { return round == 0; }
};

struct SpannerEdge {
    int a = -1;  // a < b, original disk ids
    int b = -1;
    Point witness;
    int witness_depth = 0;
    Provenance prov;
};

struct SpannerGraph {
    std::size_t n = 0;                // vertex set = disk ids 0..n-1
    std::vector<SpannerEdge> edges;   // sorted by (a, b), unique
};

struct RoundTelemetry {
    int round = 0;
    long alpha_i = 0;
    std::size_t edges_added = 0;     // new edges this round contributed
    std::size_t sampled_faces = 0;   // telemetry sample points in the depth range
    std::size_t ignored_events = 0;  // (face, repetition) pairs deeper than
                                     // alpha under some consecutive color pair
    double ms = 0.0;
};

struct BuildReport {
    std::size_t n = 0;
    long alpha = 0;
    std::size_t repetitions = 0;     // M per round
    int rounds = 0;                  // 0 when alpha >= n (construction degenerates)
    bool full_graph = false;         // alpha >= n short-circuit taken
    std::size_t base_edges = 0;
    std::size_t total_edges = 0;
    std::vector<RoundTelemetry> per_round;
    double base_ms = 0.0;
    double total_ms = 0.0;
};

/// Depth threshold: ceil(c_alpha * c_exp_size * (eps^-2 + 4 ln n)).
long compute_alpha(std::size_t n, const SpannerConfig& cfg);

/// Repetition count M = ceil(c_exp_rep / eps^2).
std::size_t compute_repetitions(const SpannerConfig& cfg);

struct RoundResult {
    std::vector<SpannerEdge> edges;  // deduped within the round, earliest (j, t) kept
    RoundTelemetry telemetry;
};

/// One construction round: M random colorings with alpha_i = 2^(i-1) *
/// alpha colors each, collecting the alpha-shallow bipartite edges
/// between consecutive color classes (class 0 wraps to class alpha_i).
/// Rounds with alpha_i > 2n are vacuous and return empty. Repetitions
/// may run in parallel; the merged result is bit-identical to
/// sequential execution.
RoundResult round_edges(const DiskInstance& instance, int round_index,
                        long alpha, std::size_t repetitions, const Rng& master,
                        std::size_t telemetry_samples, int threads = 1);

/// The full construction: shallow base edges at depth <= alpha, then
/// rounds i = 1 .. 1 + ceil(log2(n/alpha)) of consecutive-color
/// bipartite edges; when alpha >= n the result is the whole
/// intersection graph and the rounds are skipped. Duplicate edges keep
/// their earliest provenance.
std::pair<SpannerGraph, BuildReport> build_spanner(const DiskInstance& instance,
                                                   const SpannerConfig& cfg);

/// Plain id-pair view, for component computations.
std::vector<std::pair<int, int>> edge_pairs(const SpannerGraph& g);

/// The full intersection graph as a SpannerGraph (every intersecting
/// pair, base provenance) — the ground-truth object the spanner is
/// compared against.
SpannerGraph full_intersection_graph(const DiskInstance& instance);

}  // namespace diskspan
