// Command-line front end: instance generation, spanner construction,
// attacks, verification, statistics, brute-force oracle cross-checks,
// and scaling benchmarks.
//
// Exit codes: 0 success, 1 verification/oracle failure, 2 usage error,
// 3 I/O error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "diskspan/attack.hpp"
#include "diskspan/generators.hpp"
#include "diskspan/grid.hpp"
#include "diskspan/io.hpp"
#include "diskspan/sparsifier.hpp"
#include "diskspan/svg.hpp"

using namespace diskspan;

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

int thread_default() {
    if (const char* env = std::getenv("DISKSPAN_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

Manifest base_manifest(const std::string& command) {
    Manifest m;
    m.set("tool", std::string("diskspan ") + kVersion);
    m.set("command", command);
    return m;
}

SpannerConfig make_config(double eps, const std::string& preset,
                          std::uint64_t seed, int threads) {
    SpannerConfig cfg = preset == "paper" ? SpannerConfig::paper(eps, seed)
                                          : SpannerConfig::calibration(eps, seed);
    cfg.threads = threads;
    return cfg;
}

// ── gen ──────────────────────────────────────────────────────────────

struct GenArgs {
    std::size_t n = 100;
    std::string generator = "uniform_unit";
    std::uint64_t seed = 1;
    std::string out;
    double r_min = 0.02;
    double r_max = 0.08;
};

int cmd_gen(const GenArgs& a) {
    GeneratorOptions opts;
    opts.r_min = a.r_min;
    opts.r_max = a.r_max;
    const DiskInstance inst = generate_instance(a.generator, a.n, a.seed, opts);
    Manifest m = base_manifest("gen");
    m.set("n", static_cast<long long>(a.n));
    m.set("generator", a.generator);
    m.set("seed", static_cast<long long>(a.seed));
    m.set("r_min", a.r_min);
    m.set("r_max", a.r_max);
    write_instance(a.out, inst, m);
    std::printf("wrote %s (n=%zu, generator=%s)\n", a.out.c_str(), inst.size(),
                a.generator.c_str());
    return 0;
}

// ── build ────────────────────────────────────────────────────────────

struct BuildArgs {
    std::string in;
    std::string out;
    std::string report;
    double eps = 0.5;
    std::string preset = "calibration";
    std::uint64_t seed = 1;
    int threads = thread_default();
};

Manifest build_manifest(const BuildArgs& a, const std::string& instance_text) {
    Manifest m = base_manifest("build");
    m.set("input", a.in);
    m.set("instance_hash", std::to_string(fnv1a(instance_text)));
    m.set("eps", a.eps);
    m.set("preset", a.preset);
    m.set("seed", static_cast<long long>(a.seed));
    return m;
}

int cmd_build(const BuildArgs& a) {
    const std::string instance_text = read_text_file(a.in);
    const DiskInstance inst = parse_instance(instance_text);
    const SpannerConfig cfg = make_config(a.eps, a.preset, a.seed, a.threads);
    const auto [graph, report] = build_spanner(inst, cfg);

    Manifest m = build_manifest(a, instance_text);
    write_spanner(a.out, graph, m);
    if (!a.report.empty()) write_text_file(a.report, build_report_to_string(report, m));
    std::printf("wrote %s (n=%zu, edges=%zu, alpha=%ld, rounds=%d%s)\n",
                a.out.c_str(), graph.n, graph.edges.size(), report.alpha,
                report.rounds, report.full_graph ? ", full-graph shortcut" : "");
    return 0;
}

// ── attack ───────────────────────────────────────────────────────────

struct AttackArgs {
    std::string in;
    std::string out;
    std::string strategy = "random_fraction";
    double rho = 0.25;
    int target = -1;
    std::size_t count = 1;
    std::vector<int> ids;
    std::string graph_path;  // for neighborhood_kill
    std::uint64_t seed = 1;
};

int cmd_attack(const AttackArgs& a) {
    const std::string instance_text = read_text_file(a.in);
    const DiskInstance inst = parse_instance(instance_text);
    AttackStrategy strategy;
    strategy.name = a.strategy;
    strategy.rho = a.rho;
    strategy.target = a.target;
    strategy.count = a.count;
    strategy.ids = a.ids;
    SpannerGraph graph;
    if (!a.graph_path.empty()) {
        graph = read_spanner(a.graph_path);
        strategy.graph = &graph;
    }
    Rng rng(a.seed);
    const AttackSet b = generate_attack(inst, strategy, rng);
    Manifest m = base_manifest("attack");
    m.set("input", a.in);
    m.set("instance_hash", std::to_string(fnv1a(instance_text)));
    m.set("seed", static_cast<long long>(a.seed));
    write_attack(a.out, b, m);
    std::printf("wrote %s (%zu of %zu disks removed)\n", a.out.c_str(),
                b.ids.size(), inst.size());
    return 0;
}

// ── verify ───────────────────────────────────────────────────────────

struct VerifyArgs {
    std::string in;
    std::string spanner;
    std::string attack;
    std::string out;
    std::string bundle_dir;  // write a replayable bundle on FAIL
    std::string replay;      // replay a previously written bundle
    double eps = 0.3;
    double build_eps = 0.5;
    std::string preset = "calibration";
    std::uint64_t build_seed = 1;
};

void write_bundle(const std::string& dir, const std::string& instance_text,
                  const AttackSet& b, const VerificationReport& report,
                  const VerifyArgs& a) {
    std::filesystem::create_directories(dir);
    write_text_file(dir + "/instance.txt", instance_text);
    write_attack(dir + "/attack.txt", b, base_manifest("bundle"));
    Manifest m = base_manifest("bundle");
    m.set("eps", a.eps);
    m.set("build_eps", a.build_eps);
    m.set("preset", a.preset);
    m.set("build_seed", static_cast<long long>(a.build_seed));
    if (!report.counterexamples.empty()) {
        m.set("face_a", static_cast<long long>(report.counterexamples[0].face_a));
        m.set("face_b", static_cast<long long>(report.counterexamples[0].face_b));
    }
    write_text_file(dir + "/manifest.txt", m.header());
}

int verify_and_report(const DiskInstance& inst, const SpannerGraph& graph,
                      const AttackSet& b, double eps, const std::string& out,
                      const std::string& bundle_dir,
                      const std::string& instance_text, const VerifyArgs& a) {
    const Arrangement arr = build_arrangement(inst.disks);
    const VerificationReport report = verify_spanner(arr, graph, b, eps);
    Manifest m = base_manifest("verify");
    m.set("eps", eps);
    if (!out.empty()) write_text_file(out, verification_report_to_string(report, m));
    std::printf("%s\n", verification_summary(report).c_str());
    if (!report.pass && !bundle_dir.empty()) {
        write_bundle(bundle_dir, instance_text, b, report, a);
        std::printf("counterexample bundle written to %s\n", bundle_dir.c_str());
    }
    return report.pass ? 0 : 1;
}

int cmd_verify(const VerifyArgs& a) {
    if (!a.replay.empty()) {
        const std::string instance_text = read_text_file(a.replay + "/instance.txt");
        const DiskInstance inst = parse_instance(instance_text);
        const AttackSet b = read_attack(a.replay + "/attack.txt");
        const Manifest m = Manifest::parse_comments([&] {
            std::vector<std::string> lines;
            std::string text = read_text_file(a.replay + "/manifest.txt");
            std::size_t pos = 0;
            while (pos < text.size()) {
                const std::size_t nl = text.find('\n', pos);
                lines.push_back(text.substr(pos, nl - pos));
                if (nl == std::string::npos) break;
                pos = nl + 1;
            }
            return lines;
        }());
        const double eps = m.find("eps") ? std::stod(*m.find("eps")) : a.eps;
        const double build_eps =
            m.find("build_eps") ? std::stod(*m.find("build_eps")) : a.build_eps;
        const std::string preset = m.find("preset") ? *m.find("preset") : a.preset;
        const std::uint64_t seed =
            m.find("build_seed") ? std::stoull(*m.find("build_seed")) : a.build_seed;
        const SpannerConfig cfg = make_config(build_eps, preset, seed, thread_default());
        const auto [graph, report] = build_spanner(inst, cfg);
        VerifyArgs replay_args = a;
        return verify_and_report(inst, graph, b, eps, a.out, "", instance_text,
                                 replay_args);
    }

    const std::string instance_text = read_text_file(a.in);
    const DiskInstance inst = parse_instance(instance_text);
    const SpannerGraph graph = read_spanner(a.spanner);
    const AttackSet b = read_attack(a.attack);

    // Manifest consistency: the spanner and attack must have been
    // produced from this instance.
    const std::string hash = std::to_string(fnv1a(instance_text));
    for (const std::string& path : {a.spanner, a.attack}) {
        const auto parsed = [&] {
            std::vector<std::string> comments;
            const std::string text = read_text_file(path);
            std::size_t pos = 0;
            while (pos < text.size()) {
                const std::size_t nl = text.find('\n', pos);
                const std::string line = text.substr(pos, nl - pos);
                if (!line.empty() && line[0] == '#') comments.push_back(line);
                if (nl == std::string::npos) break;
                pos = nl + 1;
            }
            return Manifest::parse_comments(comments);
        }();
        if (const std::string* h = parsed.find("instance_hash")) {
            if (*h != hash)
                throw CLI::ValidationError(
                    path + " was produced from a different instance "
                           "(manifest hash mismatch)");
        }
    }
    return verify_and_report(inst, graph, b, a.eps, a.out, a.bundle_dir,
                             instance_text, a);
}

// ── stats ────────────────────────────────────────────────────────────

struct StatsArgs {
    std::string in;
    std::string spanner;
    std::string out;
};

int cmd_stats(const StatsArgs& a) {
    const DiskInstance inst = parse_instance(read_text_file(a.in));
    const std::size_t n = inst.size();
    const SpannerGraph full = full_intersection_graph(inst);

    std::vector<std::size_t> degree(n, 0);
    for (const SpannerEdge& e : full.edges) {
        ++degree[e.a];
        ++degree[e.b];
    }
    std::vector<std::size_t> sorted = degree;
    std::sort(sorted.begin(), sorted.end());
    const double mean =
        n ? std::accumulate(sorted.begin(), sorted.end(), 0.0) / n : 0.0;

    std::string out;
    out += "n: " + std::to_string(n) + "\n";
    out += "full_edges: " + std::to_string(full.edges.size()) + "\n";
    if (!a.spanner.empty()) {
        const SpannerGraph sp = read_spanner(a.spanner);
        out += "spanner_edges: " + std::to_string(sp.edges.size()) + "\n";
        out += "edge_ratio: " +
               format_double(full.edges.empty()
                                 ? 1.0
                                 : static_cast<double>(sp.edges.size()) /
                                       static_cast<double>(full.edges.size())) +
               "\n";
    }
    out += "degree_min: " + std::to_string(n ? sorted.front() : 0) + "\n";
    out += "degree_median: " + std::to_string(n ? sorted[n / 2] : 0) + "\n";
    out += "degree_max: " + std::to_string(n ? sorted.back() : 0) + "\n";
    out += "degree_mean: " + format_double(mean) + "\n";

    if (n <= 1500) {
        const Arrangement arr = build_arrangement(inst.disks);
        int max_depth = 0;
        for (const Face& f : arr.faces) max_depth = std::max(max_depth, f.depth);
        out += "max_depth: " + std::to_string(max_depth) + "\n";
        out += "faces: " + std::to_string(arr.faces.size()) + "\n";
        out += "arrangement_vertices: " + std::to_string(arr.vertices.size()) + "\n";
    } else {
        // Too large for the full arrangement; sample depths instead.
        const DiskGrid grid(inst.disks);
        Rng rng(inst.seed);
        std::size_t max_depth = 0;
        for (int s = 0; s < 20000; ++s) {
            const Disk& d = inst.disks[rng.uniform(n)];
            const double r = d.radius * std::sqrt(rng.uniform_double());
            const double phi = rng.uniform_double() * 6.283185307179586;
            max_depth = std::max(
                max_depth, grid.depth_at({d.center.x + r * std::cos(phi),
                                          d.center.y + r * std::sin(phi)}));
        }
        out += "max_depth_sampled: " + std::to_string(max_depth) + "\n";
    }

    Manifest m = base_manifest("stats");
    m.set("input", a.in);
    if (!a.out.empty()) write_text_file(a.out, m.header() + out);
    std::fputs(out.c_str(), stdout);
    return 0;
}

// ── oracle ───────────────────────────────────────────────────────────

struct OracleArgs {
    std::size_t instances = 20;
    std::size_t max_n = 60;
    std::uint64_t seed = 1;
};

int cmd_oracle(const OracleArgs& a) {
    std::size_t mismatches = 0;
    Rng rng(a.seed);
    for (std::size_t trial = 0; trial < a.instances; ++trial) {
        const std::size_t n = 8 + rng.uniform(a.max_n - 7);
        GeneratorOptions opts;
        opts.r_min = 0.05;
        opts.r_max = (trial % 2) ? 0.2 : 0.4;
        const DiskInstance inst =
            generate_instance("uniform_unit", n, a.seed * 1000 + trial, opts);

        // Route 1 vs route 2: arrangement enumeration against the
        // candidate-point lens oracle.
        for (const int k : {2, 5, static_cast<int>(n)}) {
            std::set<std::pair<int, int>> via_lens;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!disks_intersect(inst.disks[i], inst.disks[j])) continue;
                    if (min_depth_in_lens(inst.disks[i], inst.disks[j],
                                          inst.disks).first <= k)
                        via_lens.insert({static_cast<int>(i), static_cast<int>(j)});
                }
            }
            std::set<std::pair<int, int>> via_arrangement;
            for (const WitnessedEdge& e : shallow_edges(inst.disks, k))
                via_arrangement.insert({e.a, e.b});
            if (via_lens != via_arrangement) {
                ++mismatches;
                std::printf("MISMATCH shallow_edges vs lens oracle: trial=%zu "
                            "n=%zu k=%d (%zu vs %zu edges)\n",
                            trial, n, k, via_arrangement.size(), via_lens.size());
            }
        }

        // Component labeling against BFS on the full graph after a
        // random attack.
        const SpannerGraph full = full_intersection_graph(inst);
        AttackStrategy strategy;
        strategy.name = "random_fraction";
        strategy.rho = 0.3;
        Rng attack_rng(a.seed * 77 + trial);
        const AttackSet b = generate_attack(inst, strategy, attack_rng);
        const auto mine = components_after_attack(n, edge_pairs(full), b.ids);
        std::vector<std::vector<int>> adjacency(n);
        std::vector<int> theirs(n, -1);
        {
            std::vector<bool> removed(n, false);
            for (int id : b.ids) removed[id] = true;
            int next = 0;
            for (std::size_t s = 0; s < n; ++s) {
                if (removed[s] || theirs[s] >= 0) continue;
                std::vector<std::size_t> stack{s};
                theirs[s] = next;
                while (!stack.empty()) {
                    const std::size_t v = stack.back();
                    stack.pop_back();
                    for (const SpannerEdge& e : full.edges) {
                        std::size_t w = n;
                        if (e.a == static_cast<int>(v)) w = e.b;
                        if (e.b == static_cast<int>(v)) w = e.a;
                        if (w == n || removed[w] || theirs[w] >= 0) continue;
                        theirs[w] = next;
                        stack.push_back(w);
                    }
                }
                ++next;
            }
        }
        bool same = true;
        std::map<int, int> fwd, bwd;
        for (std::size_t v = 0; v < n; ++v) {
            if ((mine[v] < 0) != (theirs[v] < 0)) same = false;
            if (mine[v] < 0 || !same) continue;
            if (fwd.count(mine[v]) && fwd[mine[v]] != theirs[v]) same = false;
            if (bwd.count(theirs[v]) && bwd[theirs[v]] != mine[v]) same = false;
            fwd[mine[v]] = theirs[v];
            bwd[theirs[v]] = mine[v];
        }
        if (!same) {
            ++mismatches;
            std::printf("MISMATCH components vs BFS: trial=%zu\n", trial);
        }
    }
    std::printf("oracle: %zu instances checked, %zu mismatches\n", a.instances,
                mismatches);
    return mismatches == 0 ? 0 : 1;
}

// ── bench ────────────────────────────────────────────────────────────

struct BenchArgs {
    std::vector<std::size_t> sizes{100, 300, 1000, 3000};
    double eps = 0.5;
    std::string preset = "calibration";
    std::uint64_t seed = 1;
    double degree = 12.0;  // target expected degree of the full graph
    std::string out_csv = "bench.csv";
    std::string out_svg = "bench.svg";
    int threads = thread_default();
};

int cmd_bench(const BenchArgs& a) {
    std::string csv = "n,eps,preset,seed,full_edges,spanner_edges,ratio,"
                      "alpha,rounds,build_ms\n";
    PlotSeries full_series{"full graph", "#b2451f", {}};
    PlotSeries spanner_series{"spanner", "#1f6fb2", {}};
    std::vector<double> log_n, log_e;

    for (const std::size_t n : a.sizes) {
        // Constant expected degree: radii shrink like 1/sqrt(n), which
        // keeps the family comparable across sizes.
        const double r0 = std::sqrt(a.degree / (4.0 * 3.141592653589793 *
                                                static_cast<double>(n)));
        GeneratorOptions opts;
        opts.r_min = 0.4 * r0;
        opts.r_max = 1.6 * r0;
        const DiskInstance inst =
            generate_instance("uniform_unit", n, a.seed + n, opts);
        const SpannerConfig cfg = make_config(a.eps, a.preset, a.seed, a.threads);

        const auto t0 = std::chrono::steady_clock::now();
        const auto [graph, report] = build_spanner(inst, cfg);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        const SpannerGraph full = full_intersection_graph(inst);
        const double ratio =
            full.edges.empty() ? 1.0
                               : static_cast<double>(graph.edges.size()) /
                                     static_cast<double>(full.edges.size());

        csv += std::to_string(n) + "," + format_double(a.eps) + "," + a.preset +
               "," + std::to_string(a.seed) + "," +
               std::to_string(full.edges.size()) + "," +
               std::to_string(graph.edges.size()) + "," + format_double(ratio) +
               "," + std::to_string(report.alpha) + "," +
               std::to_string(report.rounds) + "," + format_double(ms) + "\n";
        full_series.points.push_back(
            {static_cast<double>(n), static_cast<double>(full.edges.size())});
        spanner_series.points.push_back(
            {static_cast<double>(n), static_cast<double>(graph.edges.size())});
        log_n.push_back(std::log10(static_cast<double>(n)));
        log_e.push_back(std::log10(std::max<double>(1, graph.edges.size())));
        std::printf("n=%zu: full=%zu spanner=%zu ratio=%.3f %.0f ms\n", n,
                    full.edges.size(), graph.edges.size(), ratio, ms);
    }

    // Least-squares slope of log |E| against log n.
    double slope = 0.0;
    if (log_n.size() >= 2) {
        const double mx = std::accumulate(log_n.begin(), log_n.end(), 0.0) / log_n.size();
        const double my = std::accumulate(log_e.begin(), log_e.end(), 0.0) / log_e.size();
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < log_n.size(); ++i) {
            num += (log_n[i] - mx) * (log_e[i] - my);
            den += (log_n[i] - mx) * (log_n[i] - mx);
        }
        slope = den > 0 ? num / den : 0.0;
    }
    std::printf("fitted log-log slope of spanner edges vs n: %.3f\n", slope);

    write_text_file(a.out_csv, csv);
    write_text_file(a.out_svg,
                    render_plot_svg("edges vs n (slope " + format_double(slope) + ")",
                                    "n", "edges", {full_series, spanner_series},
                                    true, true));
    std::printf("wrote %s and %s\n", a.out_csv.c_str(), a.out_svg.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"attack-resilient sparsifiers for disk intersection graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a disk instance");
    cgen->add_option("--n", gen.n, "number of disks")->required();
    cgen->add_option("--generator", gen.generator,
                     "uniform_unit | stacked | corridor | clustered")
        ->default_val("uniform_unit");
    cgen->add_option("--seed", gen.seed, "random seed")->default_val(1);
    cgen->add_option("--out", gen.out, "output instance file")->required();
    cgen->add_option("--r-min", gen.r_min, "uniform radius lower bound")
        ->default_val(0.02);
    cgen->add_option("--r-max", gen.r_max, "uniform radius upper bound")
        ->default_val(0.08);

    BuildArgs build;
    auto* cbuild = app.add_subcommand("build", "build the sparse spanner");
    cbuild->add_option("--in", build.in, "instance file")->required();
    cbuild->add_option("--out", build.out, "output spanner file")->required();
    cbuild->add_option("--report", build.report, "output build report file");
    cbuild->add_option("--eps", build.eps, "safety parameter in (0,1)")
        ->default_val(0.5);
    cbuild->add_option("--preset", build.preset, "calibration | paper")
        ->default_val("calibration");
    cbuild->add_option("--seed", build.seed, "construction seed")->default_val(1);
    cbuild->add_option("--threads", build.threads,
                       "parallel repetitions (default: DISKSPAN_THREADS or 1)");

    AttackArgs attack;
    auto* cattack = app.add_subcommand("attack", "generate an attack set");
    cattack->add_option("--in", attack.in, "instance file")->required();
    cattack->add_option("--out", attack.out, "output attack file")->required();
    cattack->add_option("--strategy", attack.strategy,
                        "random_fraction | neighborhood_kill | deepest_point | ids")
        ->default_val("random_fraction");
    cattack->add_option("--rho", attack.rho, "deletion probability")->default_val(0.25);
    cattack->add_option("--target", attack.target, "neighborhood_kill target id");
    cattack->add_option("--count", attack.count, "deepest_point deletion count");
    cattack->add_option("--ids", attack.ids, "explicit disk ids");
    cattack->add_option("--graph", attack.graph_path,
                        "spanner file for neighborhood_kill");
    cattack->add_option("--seed", attack.seed, "random seed")->default_val(1);

    VerifyArgs verify;
    auto* cverify = app.add_subcommand(
        "verify", "check safe connectivity of a spanner under an attack");
    cverify->add_option("--in", verify.in, "instance file");
    cverify->add_option("--spanner", verify.spanner, "spanner file");
    cverify->add_option("--attack", verify.attack, "attack file");
    cverify->add_option("--out", verify.out, "output report file");
    cverify->add_option("--eps", verify.eps, "safety parameter")->default_val(0.3);
    cverify->add_option("--bundle-dir", verify.bundle_dir,
                        "write a replayable counterexample bundle here on FAIL");
    cverify->add_option("--replay", verify.replay,
                        "replay a counterexample bundle directory");
    cverify->add_option("--build-eps", verify.build_eps,
                        "eps the spanner was built with (replay)")
        ->default_val(0.5);
    cverify->add_option("--preset", verify.preset, "build preset (replay)")
        ->default_val("calibration");
    cverify->add_option("--build-seed", verify.build_seed,
                        "build seed (replay)")
        ->default_val(1);

    StatsArgs stats;
    auto* cstats = app.add_subcommand("stats", "instance and spanner statistics");
    cstats->add_option("--in", stats.in, "instance file")->required();
    cstats->add_option("--spanner", stats.spanner, "spanner file (optional)");
    cstats->add_option("--out", stats.out, "also write the stats to this file");

    OracleArgs oracle;
    auto* coracle = app.add_subcommand(
        "oracle", "brute-force cross-checks of the geometric enumeration");
    coracle->add_option("--instances", oracle.instances, "number of random instances")
        ->default_val(20);
    coracle->add_option("--max-n", oracle.max_n, "maximum instance size")
        ->default_val(60);
    coracle->add_option("--seed", oracle.seed, "random seed")->default_val(1);

    BenchArgs bench;
    auto* cbench = app.add_subcommand("bench", "edge-count and runtime scaling sweep");
    cbench->add_option("--n-list", bench.sizes, "instance sizes")
        ->delimiter(',');
    cbench->add_option("--eps", bench.eps, "safety parameter")->default_val(0.5);
    cbench->add_option("--preset", bench.preset, "calibration | paper")
        ->default_val("calibration");
    cbench->add_option("--seed", bench.seed, "random seed")->default_val(1);
    cbench->add_option("--degree", bench.degree,
                       "target expected degree of the full graph")
        ->default_val(12.0);
    cbench->add_option("--out-csv", bench.out_csv, "CSV output path")
        ->default_val("bench.csv");
    cbench->add_option("--out-svg", bench.out_svg, "SVG plot output path")
        ->default_val("bench.svg");
    cbench->add_option("--threads", bench.threads, "parallel repetitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help is success; parse errors are usage errors
    }

    try {
        if (cgen->parsed()) return cmd_gen(gen);
        if (cbuild->parsed()) return cmd_build(build);
        if (cattack->parsed()) return cmd_attack(attack);
        if (cverify->parsed()) {
            if (verify.replay.empty() &&
                (verify.in.empty() || verify.spanner.empty() || verify.attack.empty())) {
                std::fprintf(stderr,
                             "verify needs --in/--spanner/--attack or --replay\n");
                return 2;
            }
            return cmd_verify(verify);
        }
        if (cstats->parsed()) return cmd_stats(stats);
        if (coracle->parsed()) return cmd_oracle(oracle);
        if (cbench->parsed()) return cmd_bench(bench);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}
