#include "diskspan/connector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diskspan {

namespace {

// Smallest integer >= eps * nu, guarded against float noise at exact
// integer thresholds.
std::size_t ceil_fraction(double eps, std::size_t nu) {
    return static_cast<std::size_t>(
        std::ceil(eps * static_cast<double>(nu) - 1e-12));
}

std::vector<std::uint64_t> adjacency_bits(const ConnectorGraph& g) {
    const std::size_t words = (g.nu + 63) / 64;
    std::vector<std::uint64_t> adj(g.nu * words, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u * words + v / 64] |= 1ULL << (v % 64);
        adj[v * words + u / 64] |= 1ULL << (u % 64);
    }
    return adj;
}

}  // namespace

ConnectorParams make_connector_params(std::size_t nu, std::size_t xi, double eps,
                                      double c_exp_size, double c_exp_rep) {
    if (nu < 1 || xi < nu || xi > 2 * nu)
        throw std::invalid_argument("connector params: need nu <= xi <= 2*nu");
    if (eps <= 0.0 || eps >= 1.0)
        throw std::invalid_argument("connector params: eps must be in (0,1)");
    ConnectorParams p;
    p.nu = nu;
    p.xi = xi;
    p.eps = eps;
    p.c_exp_size = c_exp_size;
    p.c_exp_rep = c_exp_rep;
    p.repetitions = static_cast<std::size_t>(
        std::ceil(c_exp_rep / (eps * eps) - 1e-12));
    return p;
}

Coloring random_coloring(std::size_t nu, std::size_t xi, Rng& rng) {
    if (nu < 1 || xi < 1)
        throw std::invalid_argument("random_coloring: nu and xi must be >= 1");
    Coloring c;
    c.xi = static_cast<int>(xi);
    c.color.resize(nu);
    for (std::size_t i = 0; i < nu; ++i)
        c.color[i] = 1 + static_cast<int>(rng.uniform(xi));
    return c;
}

std::vector<IndexEdge> consecutive_color_edges(const Coloring& c) {
    const int xi = c.xi;
    std::vector<std::vector<std::uint32_t>> classes(xi + 1);
    for (std::size_t i = 0; i < c.color.size(); ++i)
        classes[c.color[i]].push_back(static_cast<std::uint32_t>(i));

    std::vector<IndexEdge> edges;
    if (xi < 2) return edges;
    // Class pairs (t, t+1) for t = 1..xi-1, plus (xi, 1) when xi >= 3.
    // xi == 2 would double-count its single pair through the wraparound.
    const int last = (xi >= 3) ? xi : xi - 1;
    for (int t = 1; t <= last; ++t) {
        const auto& lo = classes[t];
        const auto& hi = classes[t % xi + 1];
        for (std::uint32_t u : lo)
            for (std::uint32_t v : hi)
                edges.push_back(u < v ? IndexEdge{u, v} : IndexEdge{v, u});
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

ConnectorGraph build_connector(const ConnectorParams& params, const Rng& rng) {
    ConnectorGraph g;
    g.nu = params.nu;
    for (std::size_t j = 0; j < params.repetitions; ++j) {
        Rng sub = rng.substream(j + 1);
        Coloring c = random_coloring(params.nu, params.xi, sub);
        auto edges = consecutive_color_edges(c);
        g.edges.insert(g.edges.end(), edges.begin(), edges.end());
        g.colorings.push_back(std::move(c));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

std::optional<ConnectorViolation> check_connector(const ConnectorGraph& g,
                                                  double eps) {
    const std::size_t nu = g.nu;
    if (nu > 24)
        throw std::invalid_argument(
            "check_connector: nu > 24 is infeasible exhaustively; "
            "use monte_carlo_connector");

    std::vector<std::uint32_t> adj(nu, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }

    // Meet in the middle: precompute neighborhood unions for the low
    // and high halves, then scan all subsets.
    const std::size_t lo_bits = nu / 2;
    const std::size_t hi_bits = nu - lo_bits;
    std::vector<std::uint32_t> lo_union(1u << lo_bits, 0), hi_union(1u << hi_bits, 0);
    for (std::uint32_t m = 1; m < lo_union.size(); ++m) {
        const int b = __builtin_ctz(m);
        lo_union[m] = lo_union[m & (m - 1)] | adj[b];
    }
    for (std::uint32_t m = 1; m < hi_union.size(); ++m) {
        const int b = __builtin_ctz(m);
        hi_union[m] = hi_union[m & (m - 1)] | adj[lo_bits + b];
    }

    const std::size_t min_s = std::max<std::size_t>(1, ceil_fraction(eps, nu));
    const double need = (1.0 - eps) * static_cast<double>(nu) + 1e-9;

    const std::uint64_t total = 1ULL << nu;
    for (std::uint64_t s = 1; s < total; ++s) {
        const std::uint32_t slo = static_cast<std::uint32_t>(s) & ((1u << lo_bits) - 1);
        const std::uint32_t shi = static_cast<std::uint32_t>(s >> lo_bits);
        if (static_cast<std::size_t>(__builtin_popcount(slo) +
                                     __builtin_popcount(shi)) < min_s)
            continue;
        const std::uint32_t nbr = lo_union[slo] | hi_union[shi];
        if (static_cast<double>(__builtin_popcount(nbr)) > need) continue;

        ConnectorViolation v;
        for (std::size_t i = 0; i < nu; ++i) {
            if (s & (1ULL << i)) v.s.push_back(static_cast<std::uint32_t>(i));
            if (!(nbr & (1u << i))) v.t.push_back(static_cast<std::uint32_t>(i));
        }
        return v;
    }
    return std::nullopt;
}

double monte_carlo_connector(const ConnectorGraph& g, double eps,
                             std::size_t trials, Rng& rng) {
    if (trials < 1)
        throw std::invalid_argument("monte_carlo_connector: trials must be >= 1");
    const std::size_t nu = g.nu;
    const std::size_t s = std::max<std::size_t>(1, ceil_fraction(eps, nu));
    if (2 * s > nu) return 0.0;  // cannot draw disjoint S, T of this size

    const std::size_t words = (nu + 63) / 64;
    const auto adj = adjacency_bits(g);

    std::vector<std::uint32_t> perm(nu);
    std::vector<std::uint64_t> nbr(words);
    std::size_t bad = 0;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        for (std::size_t i = 0; i < nu; ++i) perm[i] = static_cast<std::uint32_t>(i);
        for (std::size_t i = 0; i < 2 * s; ++i) {
            const std::size_t j = i + rng.uniform(nu - i);
            std::swap(perm[i], perm[j]);
        }
        std::fill(nbr.begin(), nbr.end(), 0);
        for (std::size_t i = 0; i < s; ++i) {
            const std::uint32_t u = perm[i];
            for (std::size_t w = 0; w < words; ++w) nbr[w] |= adj[u * words + w];
        }
        bool hit = false;
        for (std::size_t i = s; i < 2 * s && !hit; ++i) {
            const std::uint32_t t = perm[i];
            hit = (nbr[t / 64] >> (t % 64)) & 1;
        }
        if (!hit) ++bad;
    }
    return static_cast<double>(bad) / static_cast<double>(trials);
}

std::size_t distinct_colors(const Coloring& c,
                            const std::vector<std::uint32_t>& subset) {
    if (subset.empty())
        throw std::invalid_argument("distinct_colors: subset must be nonempty");
    std::vector<bool> seen(static_cast<std::size_t>(c.xi) + 1, false);
    std::size_t count = 0;
    for (std::uint32_t v : subset) {
        const int col = c.color.at(v);
        if (!seen[col]) {
            seen[col] = true;
            ++count;
        }
    }
    return count;
}

}  // namespace diskspan
