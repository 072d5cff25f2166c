#include "diskspan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

namespace diskspan {

double dist_sq(Point a, Point b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double dist(Point a, Point b) { return std::sqrt(dist_sq(a, b)); }

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

DiskInstance make_instance(std::vector<Disk> disks, std::uint64_t seed,
                           std::string generator) {
    for (std::size_t i = 0; i < disks.size(); ++i) {
        if (!is_finite(disks[i].center) || !std::isfinite(disks[i].radius))
            throw std::invalid_argument("disk " + std::to_string(i) +
                                        ": non-finite coordinates");
        if (disks[i].radius <= 0.0)
            throw std::invalid_argument("disk " + std::to_string(i) +
                                        ": radius must be positive");
        disks[i].id = static_cast<int>(i);
    }
    DiskInstance inst;
    inst.disks = std::move(disks);
    inst.seed = seed;
    inst.generator = std::move(generator);
    return inst;
}

double bbox_scale(const std::vector<Disk>& disks) {
    if (disks.empty()) return 1.0;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const Disk& d : disks) {
        xmin = std::min(xmin, d.center.x - d.radius);
        xmax = std::max(xmax, d.center.x + d.radius);
        ymin = std::min(ymin, d.center.y - d.radius);
        ymax = std::max(ymax, d.center.y + d.radius);
    }
    return std::max(xmax - xmin, ymax - ymin);
}

bool disks_intersect(const Disk& a, const Disk& b) {
    const double r = a.radius + b.radius;
    return dist_sq(a.center, b.center) <= r * r;
}

bool contains(const Disk& d, Point p) {
    return dist_sq(d.center, p) <= d.radius * d.radius;
}

std::size_t depth_at(Point p, const std::vector<Disk>& disks) {
    std::size_t n = 0;
    for (const Disk& d : disks)
        if (contains(d, p)) ++n;
    return n;
}

std::vector<int> covering_set(Point p, const std::vector<Disk>& disks) {
    std::vector<int> ids;
    for (const Disk& d : disks)
        if (contains(d, p)) ids.push_back(d.id);
    return ids;
}

bool circles_cross(const Disk& a, const Disk& b) {
    const double d2 = dist_sq(a.center, b.center);
    const double sum = a.radius + b.radius;
    const double diff = a.radius - b.radius;
    return d2 < sum * sum && d2 > diff * diff;
}

std::vector<Point> circle_intersection_points(const Disk& a, const Disk& b) {
    const double d2 = dist_sq(a.center, b.center);
    if (d2 == 0.0 && a.radius == b.radius)
        throw std::invalid_argument("identical circles (general-position violation)");
    const double sum = a.radius + b.radius;
    const double diff = a.radius - b.radius;
    if (d2 >= sum * sum || d2 <= diff * diff) return {};

    // Radical line: distance from a.center to the chord along the
    // center line, then the half-chord offset.
    const double d = std::sqrt(d2);
    const double along = (a.radius * a.radius - b.radius * b.radius + d2) / (2.0 * d);
    const double h2 = a.radius * a.radius - along * along;
    const double h = std::sqrt(std::max(0.0, h2));
    const double ux = (b.center.x - a.center.x) / d;
    const double uy = (b.center.y - a.center.y) / d;
    const Point base{a.center.x + along * ux, a.center.y + along * uy};
    return {Point{base.x - h * uy, base.y + h * ux},
            Point{base.x + h * uy, base.y - h * ux}};
}

namespace {

// Cell key for the vertex-proximity hash.
std::int64_t cell_key(double v, double cell) {
    return static_cast<std::int64_t>(std::floor(v / cell));
}

std::uint64_t hash_cell(std::int64_t cx, std::int64_t cy) {
    return static_cast<std::uint64_t>(cx) * 0x9e3779b97f4a7c15ULL ^
           static_cast<std::uint64_t>(cy) * 0xbf58476d1ce4e5b9ULL;
}

}  // namespace

GeneralPositionReport validate_general_position(const DiskInstance& instance) {
    GeneralPositionReport report;
    const auto& disks = instance.disks;
    const std::size_t n = disks.size();
    const double tol = coincidence_tol(bbox_scale(disks));

    auto add = [&](GeneralPositionViolation::Kind k, std::vector<int> ids,
                   std::string detail) {
        report.ok = false;
        report.violations.push_back({k, std::move(ids), std::move(detail)});
    };

    // Duplicates and tangencies.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Disk& a = disks[i];
            const Disk& b = disks[j];
            const double d = dist(a.center, b.center);
            if (d <= tol && std::abs(a.radius - b.radius) <= tol) {
                add(GeneralPositionViolation::Kind::duplicate,
                    {a.id, b.id}, "identical disks");
                continue;
            }
            if (std::abs(d - (a.radius + b.radius)) <= tol)
                add(GeneralPositionViolation::Kind::tangent,
                    {a.id, b.id}, "externally tangent circles");
            else if (std::abs(d - std::abs(a.radius - b.radius)) <= tol)
                add(GeneralPositionViolation::Kind::tangent,
                    {a.id, b.id}, "internally tangent circles");
        }
    }

    // Gather all circle-pair intersection points.
    struct Vertex { Point p; int a, b; };
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!circles_cross(disks[i], disks[j])) continue;
            for (Point p : circle_intersection_points(disks[i], disks[j]))
                vertices.push_back({p, disks[i].id, disks[j].id});
        }
    }

    // Concurrent triples: a third circle passing within tol of a vertex.
    // The full sweep is O(V*n); above a size budget we fall back to the
    // vertex-proximity grid below, which also flags concurrency (the
    // three pairwise vertices collapse to within tol of each other).
    if (vertices.size() * n <= 200u * 1000u * 1000u) {
        for (const Vertex& v : vertices) {
            for (const Disk& d : disks) {
                if (d.id == v.a || d.id == v.b) continue;
                if (std::abs(dist(v.p, d.center) - d.radius) <= tol)
                    add(GeneralPositionViolation::Kind::concurrent_triple,
                        {v.a, v.b, d.id}, "three circles through one point");
            }
        }
    } else {
        report.triple_check_exhaustive = false;
    }

    // Distinct intersection points closer than tol, via a uniform grid
    // with 3x3 neighborhood probing.
    if (!vertices.empty()) {
        const double cell = std::max(tol, 1e-300);
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> grid;
        grid.reserve(vertices.size() * 2);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const std::int64_t cx = cell_key(vertices[i].p.x, cell);
            const std::int64_t cy = cell_key(vertices[i].p.y, cell);
            for (std::int64_t dx = -1; dx <= 1; ++dx) {
                for (std::int64_t dy = -1; dy <= 1; ++dy) {
                    auto it = grid.find(hash_cell(cx + dx, cy + dy));
                    if (it == grid.end()) continue;
                    for (std::size_t j : it->second) {
                        if (dist(vertices[i].p, vertices[j].p) > tol) continue;
                        // Same unordered pair produces two distinct points;
                        // if those collide the circles are near-tangent and
                        // already reported above.
                        if (vertices[i].a == vertices[j].a &&
                            vertices[i].b == vertices[j].b)
                            continue;
                        add(GeneralPositionViolation::Kind::close_vertices,
                            {vertices[i].a, vertices[i].b, vertices[j].a, vertices[j].b},
                            "intersection points closer than tolerance");
                    }
                }
            }
            grid[hash_cell(cx, cy)].push_back(i);
        }
    }

    return report;
}

}  // namespace diskspan
