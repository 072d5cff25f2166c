#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace diskspan {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

double dist(Point a, Point b);
double dist_sq(Point a, Point b);
bool is_finite(Point p);

/// A closed disk. `id` is the disk's index in the instance it belongs
/// to; subset operations keep the original ids.
struct Disk {
    Point center;
    double radius = 0.0;
    int id = -1;
};

/// An ordered disk set with its generation metadata. Ids are 0..n-1 in
/// list order; immutable after construction.
struct DiskInstance {
    std::vector<Disk> disks;
    std::uint64_t seed = 0;
    std::string generator = "unknown";

    std::size_t size() const { return disks.size(); }
};

/// Builds an instance from raw (center, radius) triples, assigning ids
/// by position. Throws std::invalid_argument on non-finite coordinates
/// or non-positive radii.
DiskInstance make_instance(std::vector<Disk> disks, std::uint64_t seed = 0,
                           std::string generator = "unknown");

/// Bounding-box scale of a disk set (max of width/height of the box
/// spanned by the circles). All coincidence tolerances are relative to
/// this, which is equivalent to fixing absolute tolerances after
/// normalizing the instance to a unit bounding box.
double bbox_scale(const std::vector<Disk>& disks);

/// Absolute tolerance for coincidence tests on an instance at the given
/// scale (1e-9 of the unit-normalized box).
inline double coincidence_tol(double scale) { return 1e-9 * scale; }

/// Step used to nudge candidate points off curves and into adjacent
/// faces. Larger than the coincidence tolerance, smaller than the
/// general-position jitter applied by the generators.
inline double candidate_step(double scale) { return 1e-7 * scale; }

// ---------------------------------------------------------------------
// Predicates (exact double arithmetic on closed disks; tangency and
// other degeneracies are excluded by general-position validation, so
// none of these need a tolerance).
// ---------------------------------------------------------------------

bool disks_intersect(const Disk& a, const Disk& b);
bool contains(const Disk& d, Point p);

/// Number of disks of `disks` containing p.
std::size_t depth_at(Point p, const std::vector<Disk>& disks);

/// Ids of the disks containing p, in input order.
std::vector<int> covering_set(Point p, const std::vector<Disk>& disks);

/// Intersection points of the two boundary circles, by the radical-line
/// construction. Empty if the circles are disjoint or nested. Throws
/// std::invalid_argument for identical circles (a general-position
/// violation); tangent pairs are the validator's job and yield either
/// zero or two nearly-coincident points here.
std::vector<Point> circle_intersection_points(const Disk& a, const Disk& b);

/// True if the boundary circles properly cross (two intersection
/// points): |r_a - r_b| < d < r_a + r_b.
bool circles_cross(const Disk& a, const Disk& b);

// ---------------------------------------------------------------------
// General position
// ---------------------------------------------------------------------

struct GeneralPositionViolation {
    enum class Kind { duplicate, tangent, concurrent_triple, close_vertices };
    Kind kind;
    std::vector<int> disk_ids;  // the offending disks
    std::string detail;
};

struct GeneralPositionReport {
    bool ok = true;
    std::vector<GeneralPositionViolation> violations;
    // True when the O(V*n) concurrency sweep was skipped for size and
    // concurrency was checked through the vertex-proximity grid only.
    bool triple_check_exhaustive = true;
};

/// Checks for duplicate disks, tangent circle pairs, three circles
/// through (nearly) one point, and distinct intersection points closer
/// than the coincidence tolerance. Verdict-returning; never throws.
GeneralPositionReport validate_general_position(const DiskInstance& instance);

}  // namespace diskspan
