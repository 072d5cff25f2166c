#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diskspan/arrangement.hpp"
#include "diskspan/attack.hpp"
#include "diskspan/connector.hpp"
#include "diskspan/geometry.hpp"
#include "diskspan/sparsifier.hpp"

namespace diskspan {

/// Key=value metadata serialized as `# manifest key=value` comment
/// lines at the top of every output file. Re-running the recorded
/// command reproduces the file byte for byte; timing lines (keys
/// starting with "time_") are the only run-dependent content and are
/// excluded from reproducibility comparisons.
struct Manifest {
    std::vector<std::pair<std::string, std::string>> entries;

    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, double value);
    void set(const std::string& key, long long value);
    const std::string* find(const std::string& key) const;
    std::string header() const;  // the comment block, newline-terminated

    static Manifest parse_comments(const std::vector<std::string>& comment_lines);
};

/// Shortest decimal that round-trips the double ("%.17g").
std::string format_double(double v);

// ── Instance files: `x y r` per line, '#' comments ──────────────────
std::string instance_to_string(const DiskInstance& instance, const Manifest& m);
DiskInstance parse_instance(const std::string& text);
void write_instance(const std::string& path, const DiskInstance& instance,
                    const Manifest& m);
DiskInstance read_instance(const std::string& path);

// ── Edge lists: `id1 id2 wx wy depth` (id1 < id2, sorted) ───────────
std::string witnessed_edges_to_string(const std::vector<WitnessedEdge>& edges,
                                      const Manifest& m);

/// Connector graphs use the edge-list format without witness columns.
std::string index_edges_to_string(const std::vector<IndexEdge>& edges,
                                  const Manifest& m);

// ── Spanner files: edge list plus a provenance column ───────────────
std::string provenance_to_string(const Provenance& p);
Provenance parse_provenance(const std::string& s);
std::string spanner_to_string(const SpannerGraph& g, const Manifest& m);
SpannerGraph parse_spanner(const std::string& text);
void write_spanner(const std::string& path, const SpannerGraph& g,
                   const Manifest& m);
SpannerGraph read_spanner(const std::string& path);

// ── Attack files: strategy header, one disk id per line ─────────────
std::string attack_to_string(const AttackSet& b, const Manifest& m);
AttackSet parse_attack(const std::string& text);
void write_attack(const std::string& path, const AttackSet& b, const Manifest& m);
AttackSet read_attack(const std::string& path);

// ── Reports: `key: value` lines -------------------------------------
std::string build_report_to_string(const BuildReport& r, const Manifest& m);
std::string verification_report_to_string(const VerificationReport& r,
                                          const Manifest& m);
/// One-line machine-readable verdict:
/// `PASS|FAIL components=<k> checked_pairs=<m>`.
std::string verification_summary(const VerificationReport& r);

// ── Raw file helpers (throw std::runtime_error on I/O failure) ──────
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Content with `time_` report lines removed — the reproducible
/// portion of a report file.
std::string strip_timing_lines(const std::string& content);

}  // namespace diskspan
