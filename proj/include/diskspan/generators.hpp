#pragma once

#include <cstdint>
#include <string>

#include "diskspan/geometry.hpp"

namespace diskspan {

struct GeneratorOptions {
    double r_min = 0.02;   // uniform_unit radii
    double r_max = 0.08;
    int clusters = 4;      // clustered
    double cluster_sigma = 0.05;
};

/// Seeded instance generators. Every generator jitters coordinates by
/// 1e-6 of the bounding-box diagonal and re-rolls the jitter until
/// validate_general_position is clean (a handful of attempts at most).
///
///   uniform_unit  centers uniform in [0,1]^2, radii uniform in [r_min, r_max]
///   stacked       near-coincident disks, realizing depth ~ n at the center
///   corridor      a chain of disks overlapping only their neighbors
///   clustered     Gaussian clusters bridged by corridor chains
DiskInstance generate_instance(const std::string& generator, std::size_t n,
                               std::uint64_t seed,
                               const GeneratorOptions& opts = {});

}  // namespace diskspan
