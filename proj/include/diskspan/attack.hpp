#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diskspan/arrangement.hpp"
#include "diskspan/geometry.hpp"
#include "diskspan/rng.hpp"
#include "diskspan/sparsifier.hpp"

namespace diskspan {

/// A set of deleted disks, with how it was produced.
struct AttackSet {
    std::vector<int> ids;  // sorted, unique
    std::string strategy = "ids";
    std::string params;
    std::uint64_t seed = 0;

    bool removes(int id) const;
};

struct AttackStrategy {
    std::string name;  // random_fraction | neighborhood_kill | deepest_point | ids
    double rho = 0.0;                     // random_fraction
    int target = -1;                      // neighborhood_kill
    const SpannerGraph* graph = nullptr;  // neighborhood_kill: whose neighbors die
    std::size_t count = 0;                // deepest_point
    std::vector<int> ids;                 // ids
};

/// random_fraction deletes each disk independently with probability
/// rho; neighborhood_kill deletes the neighbors of `target` in the
/// given graph (the classic isolate-a-vertex attack); deepest_point
/// deletes `count` disks covering the deepest arrangement face (chosen
/// by the rng); ids is explicit. Throws std::invalid_argument for
/// unknown strategies or invalid targets.
AttackSet generate_attack(const DiskInstance& instance,
                          const AttackStrategy& strategy, Rng& rng);

/// depth(p, D - B) >= eps * depth(p, D), with integer depths. Points
/// covered by no disk are never safe (no covering disk can witness
/// them), matching the per-face convention.
bool is_safe_point(Point p, const DiskInstance& instance, const AttackSet& b,
                   double eps);

struct SafeZoneReport {
    std::vector<bool> face_safe;       // per face id
    std::vector<int> face_component;   // component id per safe face, -1 otherwise
    std::size_t component_count = 0;
    std::vector<int> full_depth;       // depth(f, D)
    std::vector<int> surviving_depth;  // depth(f, D - B)
};

/// Per-face safety verdicts over the full arrangement (face depths are
/// constant, so representatives are exact), plus connected components
/// of the safe faces. Two safe faces connect when they share an arc
/// whose covering set is itself safe — the arc inherits the deeper
/// face's covering set, so this is the deeper face's own verdict.
SafeZoneReport safe_zone(const Arrangement& arr, const AttackSet& b, double eps);

/// Convenience: builds the full arrangement first.
SafeZoneReport safe_zone(const DiskInstance& instance, const AttackSet& b,
                         double eps);

/// Connected components of the induced subgraph on the surviving
/// vertices: label per vertex, -1 for deleted, component ids assigned
/// in vertex order.
std::vector<int> components_after_attack(
    std::size_t n, const std::vector<std::pair<int, int>>& edges,
    const std::vector<int>& removed_ids);

struct Counterexample {
    int face_a = -1;
    int face_b = -1;
    std::string reason;
};

struct VerificationReport {
    bool pass = true;
    std::size_t safe_components = 0;
    std::size_t checked_pairs = 0;  // face pairs covered by the check
    std::size_t violating_pairs = 0;
    std::vector<bool> component_pass;          // per safe component
    std::vector<Counterexample> counterexamples;  // first few violating pairs
    std::vector<int> spanner_component;        // per disk, -1 if deleted
    std::size_t structural_flags = 0;  // safe faces with no surviving cover
};

/// Checks that for every pair of safe faces in one safe-zone component
/// there are surviving covering disks of the two faces lying in the
/// same component of spanner - B. Each safe face is labeled with the
/// set of spanner-minus-B components reachable from its surviving
/// covering disks; a component-wide common label settles all pairs at
/// once, otherwise pairs with disjoint label sets are reported as
/// counterexamples. Throws std::invalid_argument on an
/// instance/spanner size mismatch.
VerificationReport verify_spanner(const Arrangement& arr,
                                  const SpannerGraph& spanner,
                                  const AttackSet& b, double eps);

}  // namespace diskspan
