#pragma once

// Brute-force oracles used across the test suites. These deliberately
// re-derive everything from first principles (double loops, BFS, grid
// scans) so they stay independent of the library's construction paths.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "diskspan/geometry.hpp"
#include "diskspan/rng.hpp"

namespace oracle {

using diskspan::Disk;
using diskspan::Point;

/// Per-disk counting loop.
inline int depth_loop(Point p, const std::vector<Disk>& disks) {
    int n = 0;
    for (const Disk& d : disks) {
        const double dx = p.x - d.center.x, dy = p.y - d.center.y;
        if (dx * dx + dy * dy <= d.radius * d.radius) ++n;
    }
    return n;
}

/// All intersecting id pairs by pairwise predicate.
inline std::set<std::pair<int, int>> intersection_pairs(
    const std::vector<Disk>& disks) {
    std::set<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j)
            if (diskspan::disks_intersect(disks[i], disks[j]))
                pairs.insert({std::min(disks[i].id, disks[j].id),
                              std::max(disks[i].id, disks[j].id)});
    return pairs;
}

/// Connected-component labels via BFS over an adjacency list; removed
/// vertices get label -1.
inline std::vector<int> bfs_components(
    std::size_t n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& removed_ids) {
    std::vector<bool> removed(n, false);
    for (int id : removed_ids) removed[id] = true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        if (removed[u] || removed[v]) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (removed[s] || label[s] >= 0) continue;
        label[s] = next;
        std::queue<int> q;
        q.push(static_cast<int>(s));
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (label[w] < 0) {
                    label[w] = next;
                    q.push(w);
                }
        }
        ++next;
    }
    return label;
}

/// True when two labelings induce the same partition of the surviving
/// vertices.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::pair<int, int>> mapping;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((a[i] < 0) != (b[i] < 0)) return false;
        if (a[i] < 0) continue;
        mapping.push_back({a[i], b[i]});
    }
    std::sort(mapping.begin(), mapping.end());
    mapping.erase(std::unique(mapping.begin(), mapping.end()), mapping.end());
    std::set<int> lhs, rhs;
    for (const auto& [x, y] : mapping) {
        lhs.insert(x);
        rhs.insert(y);
    }
    return mapping.size() == lhs.size() && mapping.size() == rhs.size();
}

/// Minimum depth over a grid confined to the closed lens of a and b,
/// at the given resolution (absolute step in instance units).
inline int grid_min_depth_in_lens(const Disk& a, const Disk& b,
                                  const std::vector<Disk>& disks,
                                  double resolution) {
    const double x0 = std::max(a.center.x - a.radius, b.center.x - b.radius);
    const double x1 = std::min(a.center.x + a.radius, b.center.x + b.radius);
    const double y0 = std::max(a.center.y - a.radius, b.center.y - b.radius);
    const double y1 = std::min(a.center.y + a.radius, b.center.y + b.radius);
    int best = -1;
    for (double x = x0; x <= x1; x += resolution) {
        for (double y = y0; y <= y1; y += resolution) {
            const Point p{x, y};
            if (!diskspan::contains(a, p) || !diskspan::contains(b, p)) continue;
            const int d = depth_loop(p, disks);
            if (best < 0 || d < best) best = d;
        }
    }
    return best;
}

/// Random disks in the unit square; ids assigned, general position NOT
/// enforced (callers that need it use the library generators).
inline std::vector<Disk> random_disks(std::size_t n, diskspan::Rng& rng,
                                      double r_lo = 0.05, double r_hi = 0.25) {
    std::vector<Disk> disks(n);
    for (std::size_t i = 0; i < n; ++i) {
        disks[i].center = {rng.uniform_double(), rng.uniform_double()};
        disks[i].radius = rng.uniform_double(r_lo, r_hi);
        disks[i].id = static_cast<int>(i);
    }
    return disks;
}

}  // namespace oracle
