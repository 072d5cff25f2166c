#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "diskspan/rng.hpp"

namespace diskspan {

/// One random coloring of nu items with colors 1..xi.
struct Coloring {
    std::vector<int> color;  // color[i] in 1..xi
    int xi = 1;

    std::size_t size() const { return color.size(); }
};

using IndexEdge = std::pair<std::uint32_t, std::uint32_t>;  // u < v

/// Union of the consecutive-color edges of M independent colorings.
struct ConnectorGraph {
    std::size_t nu = 0;
    std::vector<IndexEdge> edges;      // sorted, unique
    std::vector<Coloring> colorings;   // the colorings that produced it
};

struct ConnectorParams {
    std::size_t nu = 0;
    std::size_t xi = 0;        // nu <= xi <= 2*nu
    std::size_t repetitions = 0;  // M
    double eps = 0.5;
    double c_exp_size = 640.0;   // size constant (nu >= c1/eps^2)
    double c_exp_rep = 2600.0;   // repetition constant (M >= c2/eps^2)
};

/// Parameters with M derived from the constants: M = ceil(c2 / eps^2).
ConnectorParams make_connector_params(std::size_t nu, std::size_t xi, double eps,
                                      double c_exp_size = 640.0,
                                      double c_exp_rep = 2600.0);

/// Independent uniform color in 1..xi per item.
Coloring random_coloring(std::size_t nu, std::size_t xi, Rng& rng);

/// All unordered pairs whose colors differ by 1 mod xi. Colors t and
/// t+1 are consecutive for t = 1..xi-1, plus the wraparound pair
/// (xi, 1) when xi >= 3; xi = 1 yields no edges and xi = 2 yields the
/// single class pair once.
std::vector<IndexEdge> consecutive_color_edges(const Coloring& c);

/// Union over params.repetitions independent colorings (substreams of
/// rng by repetition index, so the result is independent of evaluation
/// order).
ConnectorGraph build_connector(const ConnectorParams& params, const Rng& rng);

/// Exhaustive expansion check: pass iff every S with |S| >= eps*nu has
/// |N(S)| > (1-eps)*nu. Returns nullopt on pass, otherwise a violating
/// (S, T) pair with T = V \ N(S). Requires nu <= 24; larger graphs
/// signal "use monte_carlo_connector" via std::invalid_argument.
struct ConnectorViolation {
    std::vector<std::uint32_t> s;
    std::vector<std::uint32_t> t;
};
std::optional<ConnectorViolation> check_connector(const ConnectorGraph& g,
                                                  double eps);

/// Sampled violation rate: fraction of random disjoint (S, T) pairs,
/// |S| = |T| = ceil(eps*nu), with N(S) disjoint from T.
double monte_carlo_connector(const ConnectorGraph& g, double eps,
                             std::size_t trials, Rng& rng);

/// Number of distinct colors used in the subset.
std::size_t distinct_colors(const Coloring& c,
                            const std::vector<std::uint32_t>& subset);

}  // namespace diskspan
