#include "diskspan/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace diskspan {

void Manifest::set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : entries)
        if (k == key) {
            v = value;
            return;
        }
    entries.push_back({key, value});
}

void Manifest::set(const std::string& key, double value) {
    set(key, format_double(value));
}

void Manifest::set(const std::string& key, long long value) {
    set(key, std::to_string(value));
}

const std::string* Manifest::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

std::string Manifest::header() const {
    std::string out;
    for (const auto& [k, v] : entries)
        out += "# manifest " + k + "=" + v + "\n";
    return out;
}

Manifest Manifest::parse_comments(const std::vector<std::string>& comment_lines) {
    Manifest m;
    const std::string tag = "# manifest ";
    for (const std::string& line : comment_lines) {
        if (line.rfind(tag, 0) != 0) continue;
        const std::string rest = line.substr(tag.size());
        const auto eq = rest.find('=');
        if (eq == std::string::npos) continue;
        m.set(rest.substr(0, eq), rest.substr(eq + 1));
    }
    return m;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

// Splits text into comment lines and whitespace-tokenized data lines.
struct ParsedText {
    std::vector<std::string> comments;
    std::vector<std::vector<std::string>> rows;
};

ParsedText tokenize(const std::string& text) {
    ParsedText out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            out.comments.push_back(line);
            continue;
        }
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) out.rows.push_back(std::move(tokens));
    }
    return out;
}

double parse_number(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("failed to parse ") + what + ": " + s);
    }
    if (used != s.size())
        throw std::runtime_error(std::string("trailing junk in ") + what + ": " + s);
    return v;
}

}  // namespace

// ── Instances ────────────────────────────────────────────────────────

std::string instance_to_string(const DiskInstance& instance, const Manifest& m) {
    std::string out = m.header();
    for (const Disk& d : instance.disks)
        out += format_double(d.center.x) + " " + format_double(d.center.y) + " " +
               format_double(d.radius) + "\n";
    return out;
}

DiskInstance parse_instance(const std::string& text) {
    const ParsedText parsed = tokenize(text);
    std::vector<Disk> disks;
    for (const auto& row : parsed.rows) {
        if (row.size() != 3)
            throw std::runtime_error("instance line must be `x y r`");
        disks.push_back({{parse_number(row[0], "x"), parse_number(row[1], "y")},
                         parse_number(row[2], "r"),
                         -1});
    }
    const Manifest m = Manifest::parse_comments(parsed.comments);
    std::uint64_t seed = 0;
    std::string generator = "unknown";
    if (const std::string* s = m.find("seed")) seed = std::stoull(*s);
    if (const std::string* g = m.find("generator")) generator = *g;
    return make_instance(std::move(disks), seed, generator);
}

void write_instance(const std::string& path, const DiskInstance& instance,
                    const Manifest& m) {
    write_text_file(path, instance_to_string(instance, m));
}

DiskInstance read_instance(const std::string& path) {
    return parse_instance(read_text_file(path));
}

// ── Edge lists ───────────────────────────────────────────────────────

std::string witnessed_edges_to_string(const std::vector<WitnessedEdge>& edges,
                                      const Manifest& m) {
    std::string out = m.header();
    for (const WitnessedEdge& e : edges)
        out += std::to_string(e.a) + " " + std::to_string(e.b) + " " +
               format_double(e.witness.x) + " " + format_double(e.witness.y) +
               " " + std::to_string(e.witness_depth) + "\n";
    return out;
}

std::string index_edges_to_string(const std::vector<IndexEdge>& edges,
                                  const Manifest& m) {
    std::string out = m.header();
    for (const auto& [u, v] : edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ── Spanners ─────────────────────────────────────────────────────────

std::string provenance_to_string(const Provenance& p) {
    if (p.is_base()) return "base";
    return "layer:" + std::to_string(p.round) + ":" + std::to_string(p.repetition) +
           ":" + std::to_string(p.color);
}

Provenance parse_provenance(const std::string& s) {
    if (s == "base") return {};
    if (s.rfind("layer:", 0) != 0)
        throw std::runtime_error("bad provenance: " + s);
    Provenance p;
    if (std::sscanf(s.c_str(), "layer:%d:%d:%d", &p.round, &p.repetition,
                    &p.color) != 3)
        throw std::runtime_error("bad provenance: " + s);
    return p;
}

std::string spanner_to_string(const SpannerGraph& g, const Manifest& m) {
    Manifest full = m;
    full.set("n", static_cast<long long>(g.n));
    std::string out = full.header();
    for (const SpannerEdge& e : g.edges)
        out += std::to_string(e.a) + " " + std::to_string(e.b) + " " +
               format_double(e.witness.x) + " " + format_double(e.witness.y) +
               " " + std::to_string(e.witness_depth) + " " +
               provenance_to_string(e.prov) + "\n";
    return out;
}

SpannerGraph parse_spanner(const std::string& text) {
    const ParsedText parsed = tokenize(text);
    const Manifest m = Manifest::parse_comments(parsed.comments);
    SpannerGraph g;
    if (const std::string* n = m.find("n"))
        g.n = std::stoull(*n);
    else
        throw std::runtime_error("spanner file lacks `n` in its manifest");
    for (const auto& row : parsed.rows) {
        if (row.size() != 6)
            throw std::runtime_error(
                "spanner line must be `id1 id2 wx wy depth layer`");
        SpannerEdge e;
        e.a = static_cast<int>(parse_number(row[0], "id1"));
        e.b = static_cast<int>(parse_number(row[1], "id2"));
        e.witness = {parse_number(row[2], "wx"), parse_number(row[3], "wy")};
        e.witness_depth = static_cast<int>(parse_number(row[4], "depth"));
        e.prov = parse_provenance(row[5]);
        g.edges.push_back(e);
    }
    return g;
}

void write_spanner(const std::string& path, const SpannerGraph& g,
                   const Manifest& m) {
    write_text_file(path, spanner_to_string(g, m));
}

SpannerGraph read_spanner(const std::string& path) {
    return parse_spanner(read_text_file(path));
}

// ── Attacks ──────────────────────────────────────────────────────────

std::string attack_to_string(const AttackSet& b, const Manifest& m) {
    Manifest full = m;
    full.set("strategy", b.strategy);
    if (!b.params.empty()) full.set("params", b.params);
    full.set("attack_seed", static_cast<long long>(b.seed));
    std::string out = full.header();
    out += "# strategy " + b.strategy + "\n";
    for (int id : b.ids) out += std::to_string(id) + "\n";
    return out;
}

AttackSet parse_attack(const std::string& text) {
    const ParsedText parsed = tokenize(text);
    const Manifest m = Manifest::parse_comments(parsed.comments);
    AttackSet b;
    if (const std::string* s = m.find("strategy")) b.strategy = *s;
    if (const std::string* s = m.find("params")) b.params = *s;
    if (const std::string* s = m.find("attack_seed")) b.seed = std::stoull(*s);
    for (const auto& row : parsed.rows) {
        if (row.size() != 1)
            throw std::runtime_error("attack line must be a single disk id");
        b.ids.push_back(static_cast<int>(parse_number(row[0], "disk id")));
    }
    std::sort(b.ids.begin(), b.ids.end());
    b.ids.erase(std::unique(b.ids.begin(), b.ids.end()), b.ids.end());
    return b;
}

void write_attack(const std::string& path, const AttackSet& b, const Manifest& m) {
    write_text_file(path, attack_to_string(b, m));
}

AttackSet read_attack(const std::string& path) {
    return parse_attack(read_text_file(path));
}

// ── Reports ──────────────────────────────────────────────────────────

std::string build_report_to_string(const BuildReport& r, const Manifest& m) {
    std::string out = m.header();
    out += "n: " + std::to_string(r.n) + "\n";
    out += "alpha: " + std::to_string(r.alpha) + "\n";
    out += "repetitions: " + std::to_string(r.repetitions) + "\n";
    out += "rounds: " + std::to_string(r.rounds) + "\n";
    out += "full_graph_shortcut: " + std::string(r.full_graph ? "yes" : "no") + "\n";
    out += "base_edges: " + std::to_string(r.base_edges) + "\n";
    out += "total_edges: " + std::to_string(r.total_edges) + "\n";
    for (const RoundTelemetry& t : r.per_round) {
        const std::string p = "round_" + std::to_string(t.round) + "_";
        out += p + "alpha_i: " + std::to_string(t.alpha_i) + "\n";
        out += p + "edges_added: " + std::to_string(t.edges_added) + "\n";
        out += p + "sampled_faces: " + std::to_string(t.sampled_faces) + "\n";
        out += p + "ignored_faces: " + std::to_string(t.ignored_events) + "\n";
        out += "time_" + p + "ms: " + format_double(t.ms) + "\n";
    }
    out += "time_base_ms: " + format_double(r.base_ms) + "\n";
    out += "time_total_ms: " + format_double(r.total_ms) + "\n";
    return out;
}

std::string verification_summary(const VerificationReport& r) {
    return std::string(r.pass ? "PASS" : "FAIL") +
           " components=" + std::to_string(r.safe_components) +
           " checked_pairs=" + std::to_string(r.checked_pairs);
}

std::string verification_report_to_string(const VerificationReport& r,
                                          const Manifest& m) {
    std::string out = m.header();
    out += "verdict: " + std::string(r.pass ? "PASS" : "FAIL") + "\n";
    out += "safe_components: " + std::to_string(r.safe_components) + "\n";
    out += "checked_pairs: " + std::to_string(r.checked_pairs) + "\n";
    out += "violating_pairs: " + std::to_string(r.violating_pairs) + "\n";
    out += "structural_flags: " + std::to_string(r.structural_flags) + "\n";
    for (std::size_t c = 0; c < r.component_pass.size(); ++c)
        out += "component_" + std::to_string(c) + ": " +
               (r.component_pass[c] ? "PASS" : "FAIL") + "\n";
    for (const Counterexample& ce : r.counterexamples) {
        out += "counterexample:\n";
        out += "  face_a: " + std::to_string(ce.face_a) + "\n";
        out += "  face_b: " + std::to_string(ce.face_b) + "\n";
        out += "  reason: " + ce.reason + "\n";
    }
    out += "summary: " + verification_summary(r) + "\n";
    return out;
}

// ── Raw files ────────────────────────────────────────────────────────

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip_timing_lines(const std::string& content) {
    std::istringstream in(content);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.rfind("time_", 0) == 0) continue;
        out += line + "\n";
    }
    return out;
}

}  // namespace diskspan
