#include "diskspan/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "diskspan/grid.hpp"
#include "diskspan/union_find.hpp"

namespace diskspan {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix_once(std::uint64_t x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double angle_on(const Disk& d, Point p) {
    return std::atan2(p.y - d.center.y, p.x - d.center.x);
}

Point point_at(const Disk& d, double theta) {
    return {d.center.x + d.radius * std::cos(theta),
            d.center.y + d.radius * std::sin(theta)};
}

// phi shifted by a multiple of 2*pi into [base, base + 2*pi).
double normalize_into(double phi, double base) {
    while (phi < base) phi += kTwoPi;
    while (phi >= base + kTwoPi) phi -= kTwoPi;
    return phi;
}

// Green's theorem term for the directed arc of `d` from angle a to b:
// 1/2 * integral of (x dy - y dx). Negative spans integrate backwards.
double arc_area_term(const Disk& d, double a, double b) {
    const double r = d.radius;
    return 0.5 * (r * r * (b - a) +
                  r * (d.center.x * (std::sin(b) - std::sin(a)) -
                       d.center.y * (std::cos(b) - std::cos(a))));
}

struct BBox {
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    void add(Point p) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
    void add(const BBox& o) {
        x0 = std::min(x0, o.x0);
        y0 = std::min(y0, o.y0);
        x1 = std::max(x1, o.x1);
        y1 = std::max(y1, o.y1);
    }
    bool contains(Point p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
};

BBox arc_bbox(const Disk& d, double tb, double te) {
    BBox b;
    b.add(point_at(d, tb));
    b.add(point_at(d, te));
    // Circle axis extremes falling inside the angular span.
    for (int k = -2; k <= 6; ++k) {
        const double phi = k * (kTwoPi / 4.0);
        if (phi > tb && phi < te) b.add(point_at(d, phi));
    }
    return b;
}

// ── Ray-parity point-in-cycle test ──────────────────────────────────
//
// Counts crossings of a ray from p with the cycle's arcs. Directions
// come from a fixed pseudo-random table; any near-degenerate hit
// (tangential ray, hit near an arc endpoint, origin on a circle)
// aborts the attempt and the next direction is tried. General position
// leaves only finitely many bad directions, so this terminates.
bool cycle_contains(Point p, const std::vector<int>& members,
                    const std::vector<Arc>& arcs, const std::vector<Disk>& disks,
                    double scale) {
    const double eps_t = 1e-12 * scale;
    const double eps_ang = 1e-9;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double ang =
            (splitmix_once(0x5bf03635ULL + attempt) >> 11) * 0x1.0p-53 * kTwoPi;
        const double ux = std::cos(ang), uy = std::sin(ang);
        int crossings = 0;
        bool clean = true;
        for (int ai : members) {
            const Arc& arc = arcs[ai];
            const Disk& d = disks[arc.circle];
            const double dx = p.x - d.center.x, dy = p.y - d.center.y;
            const double b = dx * ux + dy * uy;
            const double c = dx * dx + dy * dy - d.radius * d.radius;
            const double disc = b * b - c;
            const double disc_floor = 1e-9 * d.radius * d.radius;
            if (disc < disc_floor) {
                if (disc > -disc_floor) { clean = false; break; }  // near-tangent ray
                continue;
            }
            const double root = std::sqrt(disc);
            for (const double t : {-b - root, -b + root}) {
                if (t < eps_t) {
                    if (t > -eps_t) { clean = false; break; }  // origin on the circle
                    continue;
                }
                const Point q{p.x + t * ux, p.y + t * uy};
                const double phi = normalize_into(angle_on(d, q), arc.theta_begin);
                if (std::abs(phi - arc.theta_begin) < eps_ang ||
                    std::abs(phi - arc.theta_end) < eps_ang) {
                    clean = false;  // hit too close to an arc endpoint
                    break;
                }
                if (phi < arc.theta_end) ++crossings;
            }
            if (!clean) break;
        }
        if (clean) return (crossings & 1) != 0;
    }
    throw std::runtime_error(
        "point-in-cycle test found no clean ray (degenerate input?)");
}

}  // namespace

Arrangement build_arrangement(const std::vector<Disk>& disks,
                              std::optional<int> cap) {
    Arrangement out;
    out.disks = disks;
    out.cap = cap;

    const std::size_t n = disks.size();
    const double scale = bbox_scale(disks);
    const double tol = coincidence_tol(scale);
    const DiskGrid grid(out.disks);

    // Duplicates and tangencies abort with diagnostics; the remaining
    // general-position checks are the validator's job.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Disk& a = disks[i];
            const Disk& b = disks[j];
            const double d = dist(a.center, b.center);
            if (d <= tol && std::abs(a.radius - b.radius) <= tol)
                throw std::runtime_error("general position violated: disks " +
                                         std::to_string(a.id) + " and " +
                                         std::to_string(b.id) + " are identical");
            if (std::abs(d - (a.radius + b.radius)) <= tol ||
                std::abs(d - std::abs(a.radius - b.radius)) <= tol)
                throw std::runtime_error("general position violated: circles " +
                                         std::to_string(a.id) + " and " +
                                         std::to_string(b.id) + " are tangent");
        }
    }

    // ── Vertices ────────────────────────────────────────────────────
    //
    // With a cap, a vertex can bound a face of depth <= cap only if its
    // own depth is <= cap + 2 (a vertex covers at most two circles more
    // than an incident face). Deeper vertices are pruned. For large
    // inputs a sampling prefilter skips the exact count for vertices
    // that are deep beyond doubt (6.5 sigma); the exact bounded count
    // confirms everything borderline.
    const std::size_t keep_limit = cap ? static_cast<std::size_t>(*cap) + 2 : 0;
    const bool prefilter = cap && n > 400;

    auto vertex_kept = [&](Point p) -> bool {
        if (!cap) return true;
        if (prefilter) {
            const int m = 96;
            int hits = 0;
            std::uint64_t h =
                static_cast<std::uint64_t>(static_cast<std::int64_t>(p.x * 1048576.0)) *
                    0x9e3779b97f4a7c15ULL ^
                static_cast<std::uint64_t>(static_cast<std::int64_t>(p.y * 1048576.0));
            for (int s = 0; s < m; ++s) {
                h = splitmix_once(h);
                if (contains(disks[h % n], p)) ++hits;
            }
            const double ph = static_cast<double>(hits) / m;
            const double sigma = std::sqrt(std::max(ph * (1.0 - ph), 1.0 / m) / m);
            if ((ph - 6.5 * sigma) * static_cast<double>(n) >
                static_cast<double>(keep_limit))
                return false;
        }
        return grid.bounded_depth(p, keep_limit).has_value();
    };

    std::vector<std::vector<std::pair<double, int>>> on_circle(n);  // (angle, vertex id)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!circles_cross(disks[i], disks[j])) continue;
            for (Point p : circle_intersection_points(disks[i], disks[j])) {
                if (!vertex_kept(p)) continue;
                const int vid = static_cast<int>(out.vertices.size());
                out.vertices.push_back({p, static_cast<int>(i), static_cast<int>(j)});
                on_circle[i].push_back({angle_on(disks[i], p), vid});
                on_circle[j].push_back({angle_on(disks[j], p), vid});
            }
        }
    }

    // ── Arcs: split each circle at its kept vertices ────────────────
    //
    // Kept arcs must have interior depth <= cap + 1. A kept arc is
    // always an exact arrangement arc: if pruning merged true arcs
    // across a pruned vertex, every constituent piece flanks only
    // deeper-than-cap faces (the pruned vertex has depth > cap + 2, so
    // the circle on both sides of it is deeper than cap + 1), hence the
    // merged arc's sample depth exceeds cap + 1 and it is dropped here.
    for (std::size_t i = 0; i < n; ++i) {
        auto& vs = on_circle[i];
        std::sort(vs.begin(), vs.end());
        auto push_arc = [&](int vb, int ve, double tb, double te) {
            if (cap) {
                const Point mid = point_at(disks[i], 0.5 * (tb + te));
                if (!grid.bounded_depth(mid, static_cast<std::size_t>(*cap) + 1))
                    return;
            }
            out.arcs.push_back({static_cast<int>(i), vb, ve, tb, te});
        };
        if (vs.empty()) {
            push_arc(-1, -1, -kTwoPi / 2.0, kTwoPi / 2.0);
            continue;
        }
        for (std::size_t m = 0; m < vs.size(); ++m) {
            const auto [tb, vb] = vs[m];
            const auto [tn, vn] = vs[(m + 1) % vs.size()];
            const double te = (m + 1 < vs.size()) ? tn : tn + kTwoPi;
            push_arc(vb, vn, tb, te);
        }
    }

    const int A = static_cast<int>(out.arcs.size());
    const int V = static_cast<int>(out.vertices.size());

    // ── Halfedges and next pointers ─────────────────────────────────
    //
    // Halfedge 2a traverses arc a counterclockwise (circle interior on
    // the left), 2a+1 clockwise. Outgoing ends at each vertex are
    // sorted by tangent direction; the successor of an incoming
    // halfedge is the clockwise-next outgoing end after its twin. This
    // traces every face with its interior on the left. Dropped arcs
    // cannot disturb valid faces: a kept true successor stays the
    // clockwise-next element when others disappear.
    auto head_of = [&](int h) {
        const Arc& a = out.arcs[h >> 1];
        return (h & 1) ? a.v_begin : a.v_end;
    };

    std::vector<std::vector<std::pair<double, int>>> outgoing(V);
    for (int a = 0; a < A; ++a) {
        const Arc& arc = out.arcs[a];
        if (arc.v_begin < 0) continue;  // full circle: self-loop cycle
        outgoing[arc.v_begin].push_back(
            {std::atan2(std::cos(arc.theta_begin), -std::sin(arc.theta_begin)),
             2 * a});
        outgoing[arc.v_end].push_back(
            {std::atan2(-std::cos(arc.theta_end), std::sin(arc.theta_end)),
             2 * a + 1});
    }
    std::vector<int> pos_at_tail(2 * A, -1);
    for (int v = 0; v < V; ++v) {
        std::sort(outgoing[v].begin(), outgoing[v].end());
        for (std::size_t k = 0; k < outgoing[v].size(); ++k)
            pos_at_tail[outgoing[v][k].second] = static_cast<int>(k);
    }

    auto next_of = [&](int h) {
        const int v = head_of(h);
        if (v < 0) return h;  // full-circle arc
        const auto& outs = outgoing[v];
        const int p = pos_at_tail[h ^ 1];
        return outs[(p + outs.size() - 1) % outs.size()].second;
    };

    // ── Trace boundary cycles ───────────────────────────────────────
    struct Cycle {
        std::vector<int> halfedges;
        std::vector<int> arcs;
        double area = 0.0;
        Point rep;
        std::vector<int> cover;
        int depth = 0;
        bool valid = true;  // depth <= cap at the representative
        BBox bbox;
        int face = -1;
    };
    std::vector<Cycle> cycles;
    std::vector<int> cycle_of(2 * A, -1);
    for (int h0 = 0; h0 < 2 * A; ++h0) {
        if (cycle_of[h0] >= 0) continue;
        Cycle cy;
        int h = h0;
        do {
            cycle_of[h] = static_cast<int>(cycles.size());
            cy.halfedges.push_back(h);
            cy.arcs.push_back(h >> 1);
            const Arc& arc = out.arcs[h >> 1];
            const Disk& d = out.disks[arc.circle];
            if ((h & 1) == 0)
                cy.area += arc_area_term(d, arc.theta_begin, arc.theta_end);
            else
                cy.area += arc_area_term(d, arc.theta_end, arc.theta_begin);
            cy.bbox.add(arc_bbox(d, arc.theta_begin, arc.theta_end));
            h = next_of(h);
        } while (h != h0);
        cycles.push_back(std::move(cy));
    }

    // ── Representatives: arc midpoint nudged into the face side ─────
    //
    // The step is half the clearance to the nearest other circle, so
    // the sample stays strictly inside the face on the halfedge's left.
    for (Cycle& cy : cycles) {
        int best_h = cy.halfedges.front();
        double best_span = -1.0;
        for (int h : cy.halfedges) {
            const Arc& arc = out.arcs[h >> 1];
            const double span = arc.theta_end - arc.theta_begin;
            if (span > best_span) {
                best_span = span;
                best_h = h;
            }
        }
        const Arc& arc = out.arcs[best_h >> 1];
        const Disk& d = out.disks[arc.circle];
        const Point p0 = point_at(d, 0.5 * (arc.theta_begin + arc.theta_end));
        double clearance = 1e300;
        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<int>(i) == arc.circle) continue;
            clearance = std::min(
                clearance, std::abs(dist(p0, disks[i].center) - disks[i].radius));
        }
        const double rho = 0.5 * std::min(clearance, 0.5 * d.radius);
        const double ux = (d.center.x - p0.x) / d.radius;
        const double uy = (d.center.y - p0.y) / d.radius;
        const double sgn = ((best_h & 1) == 0) ? 1.0 : -1.0;  // ccw: interior left
        cy.rep = {p0.x + sgn * rho * ux, p0.y + sgn * rho * uy};
        cy.cover = grid.covering_set(cy.rep);
        cy.depth = static_cast<int>(cy.cover.size());
        cy.valid = !cap || cy.depth <= *cap;
    }

    // ── Faces ───────────────────────────────────────────────────────
    //
    // One face per valid positive cycle plus the unbounded face. Valid
    // negative cycles are hole boundaries; each attaches to the face
    // whose outer cycle is the innermost valid positive cycle
    // containing its representative (enclosed regions form a laminar
    // family, so innermost = smallest containing area). Deep cycles
    // collapse into opaque hole placeholders.
    BBox global;
    for (const Disk& d : disks) {
        global.add(Point{d.center.x - d.radius, d.center.y - d.radius});
        global.add(Point{d.center.x + d.radius, d.center.y + d.radius});
    }
    if (n == 0) global = BBox{0, 0, 1, 1};

    Face unbounded;
    unbounded.id = 0;
    unbounded.unbounded = true;
    unbounded.representative = {global.x1 + std::max(scale, 1.0),
                                global.y1 + std::max(scale, 1.0)};
    unbounded.depth = 0;
    out.faces.push_back(unbounded);
    out.unbounded_face = 0;

    std::vector<int> positive_order;  // valid positive cycles, ascending area
    for (std::size_t c = 0; c < cycles.size(); ++c)
        if (cycles[c].valid && cycles[c].area > 0.0)
            positive_order.push_back(static_cast<int>(c));
    std::sort(positive_order.begin(), positive_order.end(),
              [&](int l, int r) { return cycles[l].area < cycles[r].area; });

    for (std::size_t c = 0; c < cycles.size(); ++c) {
        Cycle& cy = cycles[c];
        if (!(cy.valid && cy.area > 0.0)) continue;
        Face f;
        f.id = static_cast<int>(out.faces.size());
        f.representative = cy.rep;
        f.cover = cy.cover;
        f.depth = cy.depth;
        f.arcs = cy.arcs;
        f.outer_arcs = cy.arcs;
        f.outer_area = cy.area;
        cy.face = f.id;
        out.faces.push_back(std::move(f));
    }

    for (std::size_t c = 0; c < cycles.size(); ++c) {
        Cycle& cy = cycles[c];
        if (!cy.valid || cy.area > 0.0) continue;
        int target = 0;  // unbounded unless some positive cycle contains it
        for (int pc : positive_order) {
            const Cycle& outer = cycles[pc];
            if (outer.area <= -cy.area) continue;  // cannot strictly contain it
            if (!outer.bbox.contains(cy.rep)) continue;
            if (cycle_contains(cy.rep, outer.arcs, out.arcs, out.disks, scale)) {
                target = outer.face;
                break;
            }
        }
        cy.face = target;
        auto& fa = out.faces[target].arcs;
        fa.insert(fa.end(), cy.arcs.begin(), cy.arcs.end());
    }

    // Deep cycles become placeholders, merged across arcs whose both
    // sides are deep. Garbage cycles produced by pruning only ever
    // carry deep left sides, so they all land here.
    {
        std::vector<int> deep_index(cycles.size(), -1);
        std::vector<int> deep;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            if (cycles[c].valid) continue;
            deep_index[c] = static_cast<int>(deep.size());
            deep.push_back(static_cast<int>(c));
        }
        if (!deep.empty()) {
            UnionFind uf(deep.size());
            for (int a = 0; a < A; ++a) {
                const int c1 = cycle_of[2 * a], c2 = cycle_of[2 * a + 1];
                if (deep_index[c1] >= 0 && deep_index[c2] >= 0)
                    uf.unite(deep_index[c1], deep_index[c2]);
            }
            std::map<std::size_t, int> root_face;
            for (std::size_t k = 0; k < deep.size(); ++k) {
                const std::size_t root = uf.find(k);
                auto it = root_face.find(root);
                if (it == root_face.end()) {
                    Face f;
                    f.id = static_cast<int>(out.faces.size());
                    f.hole = true;
                    f.representative = cycles[deep[k]].rep;
                    f.depth = cycles[deep[k]].depth;
                    out.faces.push_back(std::move(f));
                    it = root_face.emplace(root, out.faces.back().id).first;
                }
                cycles[deep[k]].face = it->second;
                auto& fa = out.faces[it->second].arcs;
                fa.insert(fa.end(), cycles[deep[k]].arcs.begin(),
                          cycles[deep[k]].arcs.end());
            }
        }
    }

    // ── Arc incidences and face adjacency ───────────────────────────
    out.arc_faces.resize(A, {-1, -1});
    for (int a = 0; a < A; ++a) {
        out.arc_faces[a] = {cycles[cycle_of[2 * a]].face,
                            cycles[cycle_of[2 * a + 1]].face};
        const auto [f1, f2] = out.arc_faces[a];
        if (f1 != f2) {
            out.faces[f1].adjacent.push_back(f2);
            out.faces[f2].adjacent.push_back(f1);
        }
    }
    for (Face& f : out.faces) {
        std::sort(f.adjacent.begin(), f.adjacent.end());
        f.adjacent.erase(std::unique(f.adjacent.begin(), f.adjacent.end()),
                         f.adjacent.end());
        std::sort(f.arcs.begin(), f.arcs.end());
        f.arcs.erase(std::unique(f.arcs.begin(), f.arcs.end()), f.arcs.end());
    }

    return out;
}

int face_at(Point p, const Arrangement& arr) {
    const double scale = bbox_scale(arr.disks);
    const double tol = coincidence_tol(scale);
    for (const Disk& d : arr.disks)
        if (std::abs(dist(p, d.center) - d.radius) <= tol)
            throw std::invalid_argument(
                "query point lies on a circle boundary; perturb query point");

    if (arr.cap) {
        const std::size_t depth = depth_at(p, arr.disks);
        if (depth > static_cast<std::size_t>(*arr.cap))
            throw std::invalid_argument(
                "query point is deeper than the arrangement cap");
    }

    // Innermost bounded face whose outer cycle contains p. A point of
    // depth <= cap always lies in a non-hole face, so holes need not be
    // examined.
    int best = arr.unbounded_face;
    double best_area = 1e300;
    for (const Face& f : arr.faces) {
        if (f.unbounded || f.hole || f.outer_area >= best_area) continue;
        BBox bbox;
        for (int ai : f.outer_arcs) {
            const Arc& arc = arr.arcs[ai];
            bbox.add(arc_bbox(arr.disks[arc.circle], arc.theta_begin, arc.theta_end));
        }
        if (!bbox.contains(p)) continue;
        if (cycle_contains(p, f.outer_arcs, arr.arcs, arr.disks, scale)) {
            best = f.id;
            best_area = f.outer_area;
        }
    }
    return best;
}

}  // namespace diskspan
