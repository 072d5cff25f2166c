#include "diskspan/attack.hpp"

#include <algorithm>
#include <stdexcept>

#include "diskspan/union_find.hpp"

namespace diskspan {

namespace {

// Inclusive comparison with enough slack to absorb float noise in
// eps * depth (depths are integers, so anything within 1e-9 of the
// threshold is a tie and ties count as safe).
bool safety_inequality(int surviving, int full, double eps) {
    if (full <= 0) return false;  // uncovered points are never safe
    return static_cast<double>(surviving) + 1e-9 >=
           eps * static_cast<double>(full);
}

std::vector<int> sorted_unique(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace

bool AttackSet::removes(int id) const {
    return std::binary_search(ids.begin(), ids.end(), id);
}

AttackSet generate_attack(const DiskInstance& instance,
                          const AttackStrategy& strategy, Rng& rng) {
    const std::size_t n = instance.size();
    AttackSet b;
    b.strategy = strategy.name;
    b.seed = rng.seed();

    if (strategy.name == "random_fraction") {
        if (strategy.rho < 0.0 || strategy.rho > 1.0)
            throw std::invalid_argument("random_fraction: rho must be in [0,1]");
        b.params = "rho=" + std::to_string(strategy.rho);
        for (std::size_t i = 0; i < n; ++i)
            if (rng.uniform_double() < strategy.rho)
                b.ids.push_back(static_cast<int>(i));
        return b;
    }

    if (strategy.name == "neighborhood_kill") {
        if (strategy.target < 0 || strategy.target >= static_cast<int>(n))
            throw std::invalid_argument("neighborhood_kill: invalid target id");
        if (!strategy.graph)
            throw std::invalid_argument("neighborhood_kill: a graph is required");
        b.params = "target=" + std::to_string(strategy.target);
        for (const SpannerEdge& e : strategy.graph->edges) {
            if (e.a == strategy.target) b.ids.push_back(e.b);
            if (e.b == strategy.target) b.ids.push_back(e.a);
        }
        b.ids = sorted_unique(std::move(b.ids));
        return b;
    }

    if (strategy.name == "deepest_point") {
        b.params = "count=" + std::to_string(strategy.count);
        const Arrangement arr = build_arrangement(instance.disks);
        const Face* deepest = nullptr;
        for (const Face& f : arr.faces)
            if (!deepest || f.depth > deepest->depth) deepest = &f;
        if (!deepest || deepest->cover.empty()) return b;  // nothing covered
        std::vector<int> pool = deepest->cover;
        const std::size_t take = std::min(strategy.count, pool.size());
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + rng.uniform(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        b.ids.assign(pool.begin(), pool.begin() + take);
        b.ids = sorted_unique(std::move(b.ids));
        return b;
    }

    if (strategy.name == "ids") {
        for (int id : strategy.ids)
            if (id < 0 || id >= static_cast<int>(n))
                throw std::invalid_argument("ids: id out of range: " +
                                            std::to_string(id));
        b.ids = sorted_unique(strategy.ids);
        return b;
    }

    throw std::invalid_argument("unknown attack strategy: " + strategy.name);
}

bool is_safe_point(Point p, const DiskInstance& instance, const AttackSet& b,
                   double eps) {
    int full = 0, surviving = 0;
    for (const Disk& d : instance.disks) {
        if (!contains(d, p)) continue;
        ++full;
        if (!b.removes(d.id)) ++surviving;
    }
    return safety_inequality(surviving, full, eps);
}

SafeZoneReport safe_zone(const Arrangement& arr, const AttackSet& b, double eps) {
    SafeZoneReport report;
    const std::size_t nf = arr.faces.size();
    report.face_safe.assign(nf, false);
    report.face_component.assign(nf, -1);
    report.full_depth.assign(nf, 0);
    report.surviving_depth.assign(nf, 0);

    for (const Face& f : arr.faces) {
        int surviving = 0;
        for (int id : f.cover)
            if (!b.removes(id)) ++surviving;
        report.full_depth[f.id] = f.depth;
        report.surviving_depth[f.id] = surviving;
        if (!f.hole && !f.unbounded)
            report.face_safe[f.id] = safety_inequality(surviving, f.depth, eps);
    }

    // Components of the safe faces across safe arcs. The arc's covering
    // set is the deeper flanking face's, so the arc is safe exactly
    // when that face is.
    UnionFind uf(nf);
    for (const auto& [f1, f2] : arr.arc_faces) {
        if (f1 < 0 || f2 < 0) continue;
        if (!report.face_safe[f1] || !report.face_safe[f2]) continue;
        const int deeper = arr.faces[f1].depth >= arr.faces[f2].depth ? f1 : f2;
        if (!safety_inequality(report.surviving_depth[deeper],
                               report.full_depth[deeper], eps))
            continue;
        uf.unite(static_cast<std::size_t>(f1), static_cast<std::size_t>(f2));
    }
    std::vector<int> root_label(nf, -1);
    for (std::size_t f = 0; f < nf; ++f) {
        if (!report.face_safe[f]) continue;
        const std::size_t root = uf.find(f);
        if (root_label[root] < 0)
            root_label[root] = static_cast<int>(report.component_count++);
        report.face_component[f] = root_label[root];
    }
    return report;
}

SafeZoneReport safe_zone(const DiskInstance& instance, const AttackSet& b,
                         double eps) {
    return safe_zone(build_arrangement(instance.disks), b, eps);
}

std::vector<int> components_after_attack(
    std::size_t n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& removed_ids) {
    std::vector<bool> removed(n, false);
    for (int id : removed_ids)
        if (id >= 0 && id < static_cast<int>(n)) removed[id] = true;

    UnionFind uf(n);
    for (const auto& [u, v] : edges)
        if (!removed[u] && !removed[v])
            uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));

    std::vector<int> label(n, -1);
    std::vector<int> root_label(n, -1);
    int next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (removed[v]) continue;
        const std::size_t root = uf.find(v);
        if (root_label[root] < 0) root_label[root] = next++;
        label[v] = root_label[root];
    }
    return label;
}

VerificationReport verify_spanner(const Arrangement& arr,
                                  const SpannerGraph& spanner,
                                  const AttackSet& b, double eps) {
    if (spanner.n != arr.disks.size())
        throw std::invalid_argument(
            "verify_spanner: spanner and instance disagree on vertex count");

    VerificationReport report;
    const SafeZoneReport zone = safe_zone(arr, b, eps);
    report.safe_components = zone.component_count;
    report.component_pass.assign(zone.component_count, true);

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(spanner.edges.size());
    for (const SpannerEdge& e : spanner.edges) pairs.push_back({e.a, e.b});
    report.spanner_component = components_after_attack(spanner.n, pairs, b.ids);

    // Label each safe face with the spanner-minus-B components its
    // surviving covering disks fall into.
    const std::size_t nf = arr.faces.size();
    std::vector<std::vector<int>> labels(nf);
    std::vector<std::vector<int>> component_faces(zone.component_count);
    for (const Face& f : arr.faces) {
        if (!zone.face_safe[f.id]) continue;
        component_faces[zone.face_component[f.id]].push_back(f.id);
        std::vector<int>& ls = labels[f.id];
        for (int id : f.cover) {
            if (b.removes(id)) continue;
            ls.push_back(report.spanner_component[id]);
        }
        std::sort(ls.begin(), ls.end());
        ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
        if (ls.empty()) ++report.structural_flags;  // eps = 0 corner only
    }

    auto intersects = [](const std::vector<int>& a, const std::vector<int>& c) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < c.size()) {
            if (a[i] == c[j]) return true;
            if (a[i] < c[j]) ++i; else ++j;
        }
        return false;
    };

    for (std::size_t comp = 0; comp < component_faces.size(); ++comp) {
        const auto& faces = component_faces[comp];
        if (faces.size() >= 2)
            report.checked_pairs += faces.size() * (faces.size() - 1) / 2;

        // Fast path: a label common to every face settles all pairs.
        std::vector<int> common = labels[faces.front()];
        for (std::size_t k = 1; k < faces.size() && !common.empty(); ++k) {
            std::vector<int> next;
            const auto& ls = labels[faces[k]];
            std::set_intersection(common.begin(), common.end(), ls.begin(),
                                  ls.end(), std::back_inserter(next));
            common = std::move(next);
        }
        if (!common.empty()) continue;

        // No global label: fall back to the pairwise criterion, which
        // is what the connectivity statement actually requires.
        bool ok = true;
        for (std::size_t x = 0; x < faces.size(); ++x) {
            for (std::size_t y = x + 1; y < faces.size(); ++y) {
                if (intersects(labels[faces[x]], labels[faces[y]])) continue;
                ok = false;
                ++report.violating_pairs;
                if (report.counterexamples.size() < 16)
                    report.counterexamples.push_back(
                        {faces[x], faces[y],
                         "no surviving covering disks of the two faces share a "
                         "spanner component"});
            }
        }
        if (!ok) {
            report.component_pass[comp] = false;
            report.pass = false;
        }
    }
    return report;
}

}  // namespace diskspan
