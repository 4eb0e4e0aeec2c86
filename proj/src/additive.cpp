#include "vftem/additive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vftem/rng.hpp"

namespace vftem {

AdditiveParams additive4_params(std::size_t n, std::size_t f, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("additive params: n must be positive");
    const double fd = static_cast<double>(f), nd = static_cast<double>(n);
    AdditiveParams p;
    p.f = f;
    p.d = (fd <= std::sqrt(nd)) ? std::cbrt(fd * nd) : 2.0 * fd;
    p.p = std::min(1.0, 12.0 * p.d * std::log(nd) / nd);
    p.seed = seed;
    return p;
}

AdditiveParams additive2_params(std::size_t n, std::size_t f, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("additive params: n must be positive");
    const double fd = static_cast<double>(f), nd = static_cast<double>(n);
    AdditiveParams p;
    p.f = f;
    p.d = std::sqrt(fd * nd);
    p.p = std::min(1.0, 6.0 * p.d * std::log(nd) / nd);
    p.seed = seed;
    return p;
}

EmulatorGraph build_additive(std::shared_ptr<const WeightedGraph> g,
                             const AdditiveParams& params) {
    if (!g) throw std::invalid_argument("builder needs a base graph");
    if (!g->is_unit_weighted())
        throw std::invalid_argument("additive builders require an unweighted graph");
    const std::size_t n = g->num_vertices();
    EmulatorGraph h(g);

    // Step 1: light vertices (degree <= d) keep every incident edge.
    // Step 2: dense vertices keep edges to their ceil(d) smallest neighbors.
    // Collected as a flag per base edge so insertion stays deduplicated and
    // deterministic (base edge order; all weights are 1 so any order is
    // nondecreasing).
    std::vector<char> keep(g->num_edges(), 0);
    for (Vertex v = 0; static_cast<std::size_t>(v) < n; ++v) {
        const auto& nbs = g->neighbors(v);
        if (static_cast<double>(nbs.size()) <= params.d) {
            for (const auto& [nb, e] : nbs) {
                (void)nb;
                keep[static_cast<std::size_t>(e)] = 1;
            }
        } else {
            std::vector<std::pair<Vertex, EdgeId>> sorted(nbs.begin(), nbs.end());
            std::sort(sorted.begin(), sorted.end());
            const auto take = static_cast<std::size_t>(std::ceil(params.d));
            for (std::size_t i = 0; i < take && i < sorted.size(); ++i)
                keep[static_cast<std::size_t>(sorted[i].second)] = 1;
        }
    }
    for (EdgeId e = 0; static_cast<std::size_t>(e) < g->num_edges(); ++e) {
        if (!keep[static_cast<std::size_t>(e)]) continue;
        const Edge& edge = g->edge(e);
        h.add_spanner_edge(edge.u, edge.v, edge.w, FaultSet{});
    }

    // Step 3: every unordered pair becomes an emulator edge with probability p.
    Rng rng(derive_stream(params.seed, "pairs"));
    for (Vertex s = 0; static_cast<std::size_t>(s) + 1 < n; ++s)
        for (Vertex t = s + 1; static_cast<std::size_t>(t) < n; ++t)
            if (rng.bernoulli(params.p)) h.add_emulator_edge(s, t);
    return h;
}

EmulatorGraph build_additive4(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                              std::uint64_t seed) {
    if (!g) throw std::invalid_argument("builder needs a base graph");
    const AdditiveParams params = additive4_params(g->num_vertices(), f, seed);
    return build_additive(std::move(g), params);
}

EmulatorGraph build_additive2(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                              std::uint64_t seed) {
    if (!g) throw std::invalid_argument("builder needs a base graph");
    const AdditiveParams params = additive2_params(g->num_vertices(), f, seed);
    return build_additive(std::move(g), params);
}

}  // namespace vftem
