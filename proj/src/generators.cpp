#include "diskspan/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diskspan/rng.hpp"

namespace diskspan {

namespace {

std::vector<Disk> raw_uniform(std::size_t n, Rng& rng, const GeneratorOptions& o) {
    std::vector<Disk> disks(n);
    for (auto& d : disks) {
        d.center = {rng.uniform_double(), rng.uniform_double()};
        d.radius = rng.uniform_double(o.r_min, o.r_max);
    }
    return disks;
}

std::vector<Disk> raw_stacked(std::size_t n, Rng& rng) {
    // Near-coincident disks: every disk contains the common center, so
    // the deepest face has depth n. The spread cannot be arbitrarily
    // small: with ~n^2 boundary crossings packed into the spread band,
    // the expected number of near-concurrent triples grows like
    // n^3 * tol / spread, so a few-percent spread keeps instances
    // validatable up to n in the low hundreds.
    std::vector<Disk> disks(n);
    for (auto& d : disks) {
        d.center = {0.5 + 0.025 * rng.gaussian(), 0.5 + 0.025 * rng.gaussian()};
        d.radius = 0.25 * (1.0 + 0.08 * rng.uniform_double(-1.0, 1.0));
    }
    return disks;
}

std::vector<Disk> chain(Point from, Point to, double radius, std::size_t count,
                        std::vector<Disk>& out) {
    // Consecutive spacing 1.4r: neighbors overlap, skip-neighbors do not.
    for (std::size_t i = 0; i < count; ++i) {
        const double t = count > 1 ? static_cast<double>(i) / (count - 1) : 0.5;
        out.push_back({{from.x + t * (to.x - from.x), from.y + t * (to.y - from.y)},
                       radius,
                       -1});
    }
    return out;
}

std::vector<Disk> raw_corridor(std::size_t n) {
    // A single chain across the unit square: every interior disk is a
    // cut vertex of the intersection graph.
    std::vector<Disk> disks;
    const double span = 0.9;
    const double step = n > 1 ? span / (n - 1) : span;
    const double radius = 0.7 * step + 1e-6;  // 1.4r spacing
    for (std::size_t i = 0; i < n; ++i)
        disks.push_back({{0.05 + i * step, 0.5}, std::max(radius, 1e-4), -1});
    return disks;
}

std::vector<Disk> raw_clustered(std::size_t n, Rng& rng,
                                const GeneratorOptions& o) {
    std::vector<Disk> disks;
    const int k = std::max(1, o.clusters);
    std::vector<Point> centers;
    for (int c = 0; c < k; ++c)
        centers.push_back({0.2 + 0.6 * rng.uniform_double(),
                           0.2 + 0.6 * rng.uniform_double()});

    const std::size_t bridge_budget = n / 5;
    const std::size_t body = n - std::min(n, bridge_budget);
    for (std::size_t i = 0; i < body; ++i) {
        const Point& c = centers[i % k];
        disks.push_back({{c.x + o.cluster_sigma * rng.gaussian(),
                          c.y + o.cluster_sigma * rng.gaussian()},
                         rng.uniform_double(o.r_min, o.r_max),
                         -1});
    }
    // Bridge consecutive cluster centers with chains.
    std::size_t left = n - disks.size();
    for (int c = 0; c + 1 < k && left > 0; ++c) {
        const std::size_t take = std::min(left, std::max<std::size_t>(
                                                    2, bridge_budget / (k - 1)));
        const double len = dist(centers[c], centers[c + 1]);
        const double radius = std::max(0.7 * len / std::max<std::size_t>(take - 1, 1), 0.01);
        chain(centers[c], centers[c + 1], radius, take, disks);
        left -= take;
    }
    while (disks.size() < n)
        disks.push_back({{rng.uniform_double(), rng.uniform_double()},
                         rng.uniform_double(o.r_min, o.r_max),
                         -1});
    return disks;
}

}  // namespace

DiskInstance generate_instance(const std::string& generator, std::size_t n,
                               std::uint64_t seed, const GeneratorOptions& opts) {
    if (n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");

    for (int attempt = 0; attempt < 16; ++attempt) {
        Rng rng = Rng(seed).substream(0xD15C, attempt);
        std::vector<Disk> disks;
        if (generator == "uniform_unit")
            disks = raw_uniform(n, rng, opts);
        else if (generator == "stacked")
            disks = raw_stacked(n, rng);
        else if (generator == "corridor")
            disks = raw_corridor(n);
        else if (generator == "clustered")
            disks = raw_clustered(n, rng, opts);
        else
            throw std::invalid_argument("unknown generator: " + generator);

        // General-position jitter, relative to the bounding box.
        const double jitter = 1e-6 * bbox_scale(disks) * 1.4142135623730951;
        for (Disk& d : disks) {
            d.center.x += jitter * (2.0 * rng.uniform_double() - 1.0);
            d.center.y += jitter * (2.0 * rng.uniform_double() - 1.0);
            d.radius *= 1.0 + 1e-6 * (2.0 * rng.uniform_double() - 1.0);
        }

        DiskInstance inst = make_instance(std::move(disks), seed, generator);
        if (validate_general_position(inst).ok) return inst;
    }
    throw std::runtime_error("generate_instance: could not reach general "
                             "position after 16 jitter attempts");
}

}  // namespace diskspan
