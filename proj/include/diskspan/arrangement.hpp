#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "diskspan/geometry.hpp"

namespace diskspan {

// ════════════════════════════════════════════════════════════════════
//  Planar arrangement of disk boundary circles
// ════════════════════════════════════════════════════════════════════

struct ArrangementVertex {
    Point location;
    int circle_a = -1;  // disk ids of the two circles meeting here
    int circle_b = -1;
};

/// A maximal circle piece whose interior contains no arrangement
/// vertex. Angles are positional (atan2 around the circle center),
/// with theta_end in (theta_begin, theta_begin + 2*pi]; a vertex-free
/// circle is one full-circle arc with v_begin == v_end == -1.
struct Arc {
    int circle = -1;          // disk id
    int v_begin = -1;         // vertex ids, -1 for a full circle
    int v_end = -1;
    double theta_begin = 0.0;
    double theta_end = 0.0;
};

struct Face {
    int id = -1;
    Point representative;       // strictly interior
    int depth = 0;              // |cover|; for hole placeholders: measured at rep, unreliable
    bool hole = false;          // capped placeholder for a deeper-than-cap region
    bool unbounded = false;
    std::vector<int> cover;     // covering disk ids (sorted); empty for holes
    std::vector<int> adjacent;  // face ids sharing an arc (sorted, deduped)
    std::vector<int> arcs;      // bounding arc ids (all boundary cycles)
    std::vector<int> outer_arcs;  // arcs of the outer cycle only (empty for the unbounded face)
    double outer_area = 0.0;    // signed area enclosed by the outer cycle
};

struct Arrangement {
    std::vector<Disk> disks;        // source list (original ids preserved)
    std::optional<int> cap;         // depth cap, or nullopt for the full arrangement
    std::vector<ArrangementVertex> vertices;
    std::vector<Arc> arcs;
    std::vector<Face> faces;
    int unbounded_face = -1;

    // Arc id -> the two incident face ids (order unspecified).
    std::vector<std::pair<int, int>> arc_faces;
};

/// Builds the arrangement of the boundary circles: split every circle
/// at its intersection vertices, order arc ends around each vertex by
/// tangent direction, trace the face cycles, group cycles into faces
/// (outer boundary + holes), and assign per-face depth/adjacency.
///
/// With a cap, vertices/arcs that can only bound deeper-than-cap faces
/// are pruned up front and the deep regions collapse into opaque hole
/// placeholders; every face of depth <= cap still appears with correct
/// depth and adjacency.
///
/// Throws std::runtime_error with the offending disks if a
/// general-position violation is detected during construction.
Arrangement build_arrangement(const std::vector<Disk>& disks,
                              std::optional<int> cap = std::nullopt);

/// Id of the unique face containing p. Throws std::invalid_argument if
/// p lies within the coincidence tolerance of some circle ("perturb
/// query point").
int face_at(Point p, const Arrangement& arr);

// ════════════════════════════════════════════════════════════════════
//  Shallow edge enumeration
// ════════════════════════════════════════════════════════════════════

/// A disk pair together with a point of their intersection witnessing
/// the pair's shallowness, and that point's depth.
struct WitnessedEdge {
    int a = -1;  // a < b (original disk ids)
    int b = -1;
    Point witness;
    int witness_depth = 0;
};

inline bool operator<(const WitnessedEdge& l, const WitnessedEdge& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
}

/// All pairs admitting a common point of depth <= k in `disks`, each
/// with one such witness (the shallowest face representative found).
/// Enumerated over the depth-capped arrangement: every face of depth
/// d <= k emits the pairs of its covering set with the face
/// representative as witness; duplicates keep the shallowest witness.
std::vector<WitnessedEdge> shallow_edges(const std::vector<Disk>& disks, int k);

/// Bipartite variant: pairs (a in d1, b in d2) with a witness of depth
/// <= k measured in d1 union d2. Throws std::invalid_argument if the
/// id sets overlap.
std::vector<WitnessedEdge> shallow_edges_bipartite(const std::vector<Disk>& d1,
                                                   const std::vector<Disk>& d2,
                                                   int k);

/// Brute-force oracle: the minimum of depth_at over the closed lens
/// a ∩ b, with an achieving point. Independent of the arrangement
/// construction — evaluates depth directly at a candidate set that
/// samples every face meeting the lens. Throws std::invalid_argument
/// if the disks do not intersect.
std::pair<int, Point> min_depth_in_lens(const Disk& a, const Disk& b,
                                        const std::vector<Disk>& disks);

}  // namespace diskspan
