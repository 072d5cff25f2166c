#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "diskspan/arrangement.hpp"

namespace diskspan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

using EdgeKey = std::pair<int, int>;

EdgeKey key_of(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

void emit_face_pairs(const Face& f, int k,
                     std::map<EdgeKey, WitnessedEdge>& best,
                     const std::unordered_set<int>* side1) {
    if (f.hole || f.unbounded || f.depth < 2 || f.depth > k) return;
    for (std::size_t i = 0; i < f.cover.size(); ++i) {
        for (std::size_t j = i + 1; j < f.cover.size(); ++j) {
            const int a = f.cover[i], b = f.cover[j];
            if (side1 && (side1->count(a) == side1->count(b)))
                continue;  // bipartite: only cross-side pairs
            const EdgeKey key = key_of(a, b);
            auto it = best.find(key);
            if (it == best.end())
                best.emplace(key, WitnessedEdge{key.first, key.second,
                                                f.representative, f.depth});
            else if (f.depth < it->second.witness_depth)
                it->second = {key.first, key.second, f.representative, f.depth};
        }
    }
}

std::vector<WitnessedEdge> collect(std::map<EdgeKey, WitnessedEdge>&& best) {
    std::vector<WitnessedEdge> edges;
    edges.reserve(best.size());
    for (auto& [key, e] : best) edges.push_back(e);
    return edges;  // map order == (a, b) lexicographic
}

/// Any point of the closed lens of an intersecting pair: the chord
/// midpoint for properly crossing circles, the smaller disk's center
/// when one disk contains the other.
Point lens_point(const Disk& a, const Disk& b) {
    if (circles_cross(a, b)) {
        const auto pts = circle_intersection_points(a, b);
        return {0.5 * (pts[0].x + pts[1].x), 0.5 * (pts[0].y + pts[1].y)};
    }
    return a.radius <= b.radius ? a.center : b.center;
}

}  // namespace

std::vector<WitnessedEdge> shallow_edges(const std::vector<Disk>& disks, int k) {
    if (k < 1) throw std::invalid_argument("shallow_edges: k must be >= 1");
    const Arrangement arr = build_arrangement(disks, k);
    std::map<EdgeKey, WitnessedEdge> best;
    for (const Face& f : arr.faces) emit_face_pairs(f, k, best, nullptr);
    return collect(std::move(best));
}

std::vector<WitnessedEdge> shallow_edges_bipartite(const std::vector<Disk>& d1,
                                                   const std::vector<Disk>& d2,
                                                   int k) {
    if (k < 1) throw std::invalid_argument("shallow_edges_bipartite: k must be >= 1");
    std::unordered_set<int> side1;
    for (const Disk& d : d1) side1.insert(d.id);
    for (const Disk& d : d2)
        if (side1.count(d.id))
            throw std::invalid_argument(
                "shallow_edges_bipartite: id sets overlap (id " +
                std::to_string(d.id) + ")");

    std::vector<Disk> all;
    all.reserve(d1.size() + d2.size());
    all.insert(all.end(), d1.begin(), d1.end());
    all.insert(all.end(), d2.begin(), d2.end());

    // Small unions cannot exceed the cap anywhere, so every
    // cross-intersecting pair is k-shallow and no arrangement is
    // needed. This is the hot path inside the spanner rounds.
    if (all.size() <= static_cast<std::size_t>(k)) {
        std::map<EdgeKey, WitnessedEdge> best;
        for (const Disk& a : d1) {
            for (const Disk& b : d2) {
                if (!disks_intersect(a, b)) continue;
                const Point w = lens_point(a, b);
                const EdgeKey key = key_of(a.id, b.id);
                best.emplace(key, WitnessedEdge{
                                      key.first, key.second, w,
                                      static_cast<int>(depth_at(w, all))});
            }
        }
        return collect(std::move(best));
    }

    const Arrangement arr = build_arrangement(all, k);
    std::map<EdgeKey, WitnessedEdge> best;
    for (const Face& f : arr.faces) emit_face_pairs(f, k, best, &side1);
    return collect(std::move(best));
}

// ════════════════════════════════════════════════════════════════════
//  Brute-force lens oracle
// ════════════════════════════════════════════════════════════════════
//
// Samples at least one point in every arrangement face meeting the
// closed lens a ∩ b:
//   - every circle-pair intersection point in the closed lens, nudged
//     into its four incident faces along the radial bisectors;
//   - the chord midpoint of the lens vertices (crossing pairs);
//   - the disk centers when they lie in the lens;
//   - the midpoint of every maximal sub-arc of every circle clipped to
//     the lens, nudged to both sides (this also covers faces whose
//     boundary carries no vertex, e.g. regions bounded by nested
//     vertex-free circles).
// Depth is evaluated with the plain per-disk loop, independent of the
// arrangement construction.

namespace {

struct AngInterval {
    double lo = 0.0, hi = 0.0;  // hi in (lo, lo + 2*pi]
};

// Angular portion of circle c lying inside the closed disk d:
// nullopt = none, full = whole circle, otherwise one interval.
struct ClipResult {
    bool any = false;
    bool full = false;
    AngInterval interval;
};

double angle_on(const Disk& d, Point p) {
    return std::atan2(p.y - d.center.y, p.x - d.center.x);
}

double normalize_into(double phi, double base) {
    while (phi < base) phi += kTwoPi;
    while (phi >= base + kTwoPi) phi -= kTwoPi;
    return phi;
}

ClipResult clip_circle_to_disk(const Disk& c, const Disk& d) {
    const double sep = dist(c.center, d.center);
    ClipResult r;
    if (sep + c.radius <= d.radius) {  // circle entirely inside the disk
        r.any = r.full = true;
        return r;
    }
    if (std::abs(sep - c.radius) >= d.radius) return r;  // entirely outside
    const auto pts = circle_intersection_points(c, d);
    if (pts.size() < 2) return r;  // tangent-degenerate; treat as none
    const double a0 = angle_on(c, pts[0]);
    const double a1 = normalize_into(angle_on(c, pts[1]), a0);
    // Which of the two sub-arcs is inside d: test one midpoint.
    const Point mid{c.center.x + c.radius * std::cos(0.5 * (a0 + a1)),
                    c.center.y + c.radius * std::sin(0.5 * (a0 + a1))};
    r.any = true;
    if (contains(d, mid))
        r.interval = {a0, a1};
    else
        r.interval = {a1, a0 + kTwoPi};
    if (r.interval.hi <= r.interval.lo) r.interval.hi += kTwoPi;
    return r;
}

// Intersection of two circular intervals; up to two pieces.
std::vector<AngInterval> intersect_intervals(AngInterval a, AngInterval b) {
    std::vector<AngInterval> out;
    for (const double shift : {-kTwoPi, 0.0, kTwoPi}) {
        const double lo = std::max(a.lo, b.lo + shift);
        const double hi = std::min(a.hi, b.hi + shift);
        if (hi > lo) out.push_back({lo, hi});
    }
    return out;
}

}  // namespace

std::pair<int, Point> min_depth_in_lens(const Disk& a, const Disk& b,
                                        const std::vector<Disk>& disks) {
    if (!disks_intersect(a, b))
        throw std::invalid_argument("min_depth_in_lens: disks do not intersect");

    const double scale = bbox_scale(disks);
    const double h = candidate_step(scale);
    const double tol = coincidence_tol(scale);
    const auto in_lens = [&](Point p) { return contains(a, p) && contains(b, p); };
    // Vertices sit exactly on circle boundaries, so gate them with a
    // tolerance; the perturbed candidates are then filtered exactly.
    const auto near_lens = [&](Point p) {
        return dist(p, a.center) <= a.radius + tol &&
               dist(p, b.center) <= b.radius + tol;
    };

    std::vector<Point> candidates;

    // Pair intersection vertices in the closed lens, nudged into the
    // four incident faces along the radial bisector directions.
    auto add_vertex_candidates = [&](Point v, const Disk& c1, const Disk& c2) {
        if (!near_lens(v)) return;
        const double n1 = dist(v, c1.center), n2 = dist(v, c2.center);
        const double u1x = (v.x - c1.center.x) / n1, u1y = (v.y - c1.center.y) / n1;
        const double u2x = (v.x - c2.center.x) / n2, u2y = (v.y - c2.center.y) / n2;
        double w1x = u1x + u2x, w1y = u1y + u2y;
        double w2x = u1x - u2x, w2y = u1y - u2y;
        const double l1 = std::hypot(w1x, w1y), l2 = std::hypot(w2x, w2y);
        if (l1 < 1e-12) { w1x = -u1y; w1y = u1x; }
        else { w1x /= l1; w1y /= l1; }
        if (l2 < 1e-12) { w2x = -u1y; w2y = u1x; }
        else { w2x /= l2; w2y /= l2; }
        for (const auto& [sx, sy] : {std::pair{w1x, w1y}, {-w1x, -w1y},
                                     {w2x, w2y}, {-w2x, -w2y}}) {
            const Point p{v.x + h * sx, v.y + h * sy};
            if (in_lens(p)) candidates.push_back(p);
        }
    };
    for (std::size_t i = 0; i < disks.size(); ++i) {
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            if (!circles_cross(disks[i], disks[j])) continue;
            for (Point v : circle_intersection_points(disks[i], disks[j]))
                add_vertex_candidates(v, disks[i], disks[j]);
        }
    }

    // Chord midpoint of the lens's own vertices.
    if (circles_cross(a, b)) {
        const auto pts = circle_intersection_points(a, b);
        const Point mid{0.5 * (pts[0].x + pts[1].x), 0.5 * (pts[0].y + pts[1].y)};
        if (in_lens(mid)) candidates.push_back(mid);
    }

    // Disk centers inside the lens.
    if (in_lens(a.center)) candidates.push_back(a.center);
    if (in_lens(b.center)) candidates.push_back(b.center);

    // Clipped-arc midpoints of every circle, nudged to both sides.
    auto add_arc_samples = [&](const Disk& c, double phi) {
        const Point p0{c.center.x + c.radius * std::cos(phi),
                       c.center.y + c.radius * std::sin(phi)};
        const double ux = (p0.x - c.center.x) / c.radius;
        const double uy = (p0.y - c.center.y) / c.radius;
        for (const double s : {-h, h}) {
            const Point p{p0.x + s * ux, p0.y + s * uy};
            if (in_lens(p)) candidates.push_back(p);
        }
    };
    for (const Disk& c : disks) {
        const ClipResult ca = clip_circle_to_disk(c, a);
        if (!ca.any) continue;
        const ClipResult cb = clip_circle_to_disk(c, b);
        if (!cb.any) continue;
        if (ca.full && cb.full) {
            for (int q = 0; q < 4; ++q) add_arc_samples(c, q * (kTwoPi / 4.0));
            continue;
        }
        std::vector<AngInterval> pieces;
        if (ca.full)
            pieces.push_back(cb.interval);
        else if (cb.full)
            pieces.push_back(ca.interval);
        else
            pieces = intersect_intervals(ca.interval, cb.interval);
        for (const AngInterval& piece : pieces)
            add_arc_samples(c, 0.5 * (piece.lo + piece.hi));
    }

    if (candidates.empty())
        throw std::runtime_error("min_depth_in_lens: no candidate point landed "
                                 "in the lens (degenerate input?)");

    int best_depth = -1;
    Point best_point;
    for (const Point& p : candidates) {
        const int d = static_cast<int>(depth_at(p, disks));
        if (best_depth < 0 || d < best_depth) {
            best_depth = d;
            best_point = p;
        }
    }
    return {best_depth, best_point};
}

}  // namespace diskspan
