#pragma once

// Small graph constructors shared by the test files.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <vector>

#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"
#include "vftem/rng.hpp"

namespace testutil {

using vftem::Edge;
using vftem::Vertex;
using vftem::WeightedGraph;

inline WeightedGraph path_graph(std::size_t n, double w = 1.0) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < n; ++i)
        es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), w});
    return WeightedGraph::from_edges(n, es);
}

inline WeightedGraph cycle_graph(std::size_t n, double w = 1.0) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i)
        es.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), w});
    return WeightedGraph::from_edges(n, es);
}

inline WeightedGraph complete_graph(std::size_t n, double w = 1.0) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            es.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), w});
    return WeightedGraph::from_edges(n, es);
}

// Center 0, leaves 1..m.
inline WeightedGraph star_graph(std::size_t leaves, double w = 1.0) {
    std::vector<Edge> es;
    for (std::size_t i = 1; i <= leaves; ++i) es.push_back({0, static_cast<Vertex>(i), w});
    return WeightedGraph::from_edges(leaves + 1, es);
}

inline WeightedGraph petersen_graph() {
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) es.push_back({i, (i + 1) % 5, 1.0});
    for (int i = 0; i < 5; ++i) es.push_back({5 + i, 5 + (i + 2) % 5, 1.0});
    for (int i = 0; i < 5; ++i) es.push_back({i, i + 5, 1.0});
    return WeightedGraph::from_edges(10, es);
}

// Base edge ids sorted by (weight, id) — the insertion order spanner parts
// must follow.
inline std::vector<vftem::EdgeId> weight_order(const WeightedGraph& g) {
    std::vector<vftem::EdgeId> order(g.num_edges());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<vftem::EdgeId>(i);
    std::sort(order.begin(), order.end(), [&](vftem::EdgeId a, vftem::EdgeId b) {
        if (g.edge(a).w != g.edge(b).w) return g.edge(a).w < g.edge(b).w;
        return a < b;
    });
    return order;
}

// A random "half-built" emulator: roughly every other base edge (in weight
// order) as a spanner edge, plus a few random emulator pairs.
inline vftem::EmulatorGraph random_partial_emulator(
    const std::shared_ptr<const WeightedGraph>& g, std::uint64_t seed) {
    vftem::EmulatorGraph h(g);
    vftem::Rng rng(vftem::derive_stream(seed, "test-partial"));
    for (vftem::EdgeId id : weight_order(*g)) {
        if (rng.bernoulli(0.55)) {
            const Edge& e = g->edge(id);
            h.add_spanner_edge(e.u, e.v, e.w, {});
        }
    }
    const std::size_t n = g->num_vertices();
    for (int tries = 0; tries < 4; ++tries) {
        const Vertex s = static_cast<Vertex>(rng.below(n));
        const Vertex t = static_cast<Vertex>(rng.below(n));
        if (s != t) h.add_emulator_edge(s, t);
    }
    return h;
}

}  // namespace testutil
