#pragma once

// Brute-force reference implementations used only by the tests.  These are
// deliberately independent of the library's algorithms: shortest paths by
// exhaustive simple-path DFS instead of Dijkstra/BFS, fault-set scans by
// bitmask loops instead of recursive enumeration, path censuses by whole-walk
// generation instead of incremental counting.  Exponential everywhere —
// intended for n <= ~12.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "vftem/distances.hpp"
#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"

namespace oracle {

using vftem::Dist;
using vftem::Edge;
using vftem::EmulatorGraph;
using vftem::FaultSet;
using vftem::kInfDist;
using vftem::Vertex;
using vftem::WeightedGraph;

struct WEdge {
    Vertex a, b;
    double w;
};

namespace detail {

inline void dfs_best(const std::vector<std::vector<std::pair<Vertex, double>>>& adj, Vertex cur,
                     Vertex goal, double len, std::vector<char>& used, double& best) {
    if (cur == goal) {
        best = std::min(best, len);
        return;
    }
    if (len >= best) return;
    used[static_cast<std::size_t>(cur)] = 1;
    for (const auto& [nb, w] : adj[static_cast<std::size_t>(cur)])
        if (!used[static_cast<std::size_t>(nb)]) dfs_best(adj, nb, goal, len + w, used, best);
    used[static_cast<std::size_t>(cur)] = 0;
}

}  // namespace detail

// Shortest u-v distance over an explicit edge list with the faulty vertices
// removed, by enumerating every simple path.
inline Dist dist_over_edges(std::size_t n, const std::vector<WEdge>& edges, const FaultSet& f,
                            Vertex u, Vertex v) {
    if (u == v) return 0.0;
    std::vector<std::vector<std::pair<Vertex, double>>> adj(n);
    for (const WEdge& e : edges) {
        if (f.contains(e.a) || f.contains(e.b)) continue;
        adj[static_cast<std::size_t>(e.a)].emplace_back(e.b, e.w);
        adj[static_cast<std::size_t>(e.b)].emplace_back(e.a, e.w);
    }
    std::vector<char> used(n, 0);
    double best = kInfDist;
    detail::dfs_best(adj, u, v, 0.0, used, best);
    return best;
}

inline Dist graph_dist(const WeightedGraph& g, const FaultSet& f, Vertex u, Vertex v) {
    std::vector<WEdge> es;
    es.reserve(g.num_edges());
    for (const Edge& e : g.edges()) es.push_back({e.u, e.v, e.w});
    return dist_over_edges(g.num_vertices(), es, f, u, v);
}

// Weight-updating emulator distance: surviving spanner edges keep their
// weight, surviving emulator pairs weigh the surviving-base-graph distance
// between their endpoints.
inline Dist emulator_dist(const EmulatorGraph& h, const FaultSet& f, Vertex u, Vertex v) {
    std::vector<WEdge> es;
    for (const Edge& e : h.spanner_edges()) es.push_back({e.u, e.v, e.w});
    for (const auto& [s, t] : h.emulator_edges()) {
        if (f.contains(s) || f.contains(t)) continue;
        const Dist w = oracle::graph_dist(h.base(), f, s, t);
        if (!vftem::is_inf(w)) es.push_back({s, t, w});
    }
    return dist_over_edges(h.num_vertices(), es, f, u, v);
}

// Unweighted view: spanner edges cost 1, emulator pairs cost the surviving
// hop count between their endpoints in the base graph.
inline Dist hop_dist(const EmulatorGraph& h, const WeightedGraph& g, const FaultSet& f, Vertex u,
                     Vertex v) {
    const WeightedGraph unit = g.unit_weighted_view();
    std::vector<WEdge> es;
    for (const Edge& e : h.spanner_edges()) es.push_back({e.u, e.v, 1.0});
    for (const auto& [s, t] : h.emulator_edges()) {
        if (f.contains(s) || f.contains(t)) continue;
        const Dist w = oracle::graph_dist(unit, f, s, t);
        if (!vftem::is_inf(w)) es.push_back({s, t, w});
    }
    return dist_over_edges(h.num_vertices(), es, f, u, v);
}

// Every fault set of size <= f over [0, n) avoiding `skip`, by bitmask scan
// (n <= 20).  Order is by mask value, not the library's lexicographic
// subset order — only membership matters to the oracles.
inline std::vector<FaultSet> all_fault_sets(std::size_t n, std::size_t f,
                                            const std::vector<Vertex>& skip = {}) {
    std::uint32_t skip_mask = 0;
    for (Vertex s : skip) skip_mask |= 1u << s;
    std::vector<FaultSet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask & skip_mask) continue;
        if (static_cast<std::size_t>(__builtin_popcount(mask)) > f) continue;
        std::vector<Vertex> vs;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) vs.push_back(static_cast<Vertex>(i));
        out.emplace_back(std::move(vs));
    }
    return out;
}

// First fault set (in bitmask-scan order) under which the weighted emulator
// distance exceeds the bound; the YES/NO answer is order-independent.
inline std::optional<FaultSet> weighted_witness(const EmulatorGraph& h, Vertex u, Vertex v,
                                                std::size_t f, Dist bound) {
    for (const FaultSet& fs : all_fault_sets(h.num_vertices(), f, {u, v}))
        if (oracle::emulator_dist(h, fs, u, v) > bound) return fs;
    return std::nullopt;
}

// Same search over the unweighted view (the fault-set-search setting).
inline std::optional<FaultSet> hop_witness(const EmulatorGraph& h, const WeightedGraph& g,
                                           Vertex u, Vertex v, std::size_t f, double bound) {
    for (const FaultSet& fs : all_fault_sets(h.num_vertices(), f, {u, v}))
        if (oracle::hop_dist(h, g, fs, u, v) > bound) return fs;
    return std::nullopt;
}

// Middle-heavy 3-path census by scanning all ordered vertex quadruples
// (s, a, b, t); each undirected path is seen in both orientations, so the
// total halves.  Heaviness in the spanner part is insertion order (weights
// arrive nondecreasing, ties broken by arrival).
inline std::uint64_t middle_heavy_count(const EmulatorGraph& h) {
    const std::size_t n = h.num_vertices();
    // (min,max) -> spanner insertion id
    std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < h.num_spanner_edges(); ++i) {
        const Edge& e = h.spanner_edge(static_cast<int>(i));
        id[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = static_cast<int>(i);
        id[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = static_cast<int>(i);
    }
    std::uint64_t directed = 0;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t t = 0; t < n; ++t) {
                    if (s == a || s == b || s == t || a == b || a == t || b == t) continue;
                    const int e1 = id[s][a], e2 = id[a][b], e3 = id[b][t];
                    if (e1 < 0 || e2 < 0 || e3 < 0) continue;
                    if (e2 > e1 && e2 > e3) ++directed;
                }
    return directed / 2;
}

// Alternating k-path census by generating whole walks and canonicalizing:
// a qualifying walk and its reverse collapse to one set entry, so each
// undirected path is counted once regardless of which orientations qualify.
inline std::uint64_t alternating_count(const WeightedGraph& g, int k, bool edge_simple) {
    const std::size_t n = g.num_vertices();
    const auto heavier = [&](vftem::EdgeId x, vftem::EdgeId y) {
        const Edge& ex = g.edge(x);
        const Edge& ey = g.edge(y);
        if (ex.w != ey.w) return ex.w > ey.w;
        return x > y;
    };
    std::set<std::vector<Vertex>> canon;
    std::vector<Vertex> verts;
    std::vector<vftem::EdgeId> eids;
    std::vector<char> vused(n, 0);
    std::vector<char> eused(g.num_edges(), 0);

    const std::function<void(Vertex)> grow = [&](Vertex cur) {
        if (static_cast<int>(eids.size()) == k) {
            bool ok = true;
            for (int pos = 2; pos <= k && ok; pos += 2) {
                if (!heavier(eids[static_cast<std::size_t>(pos - 1)],
                             eids[static_cast<std::size_t>(pos - 2)]))
                    ok = false;
                if (pos < k && !heavier(eids[static_cast<std::size_t>(pos - 1)],
                                        eids[static_cast<std::size_t>(pos)]))
                    ok = false;
            }
            if (ok) {
                std::vector<Vertex> rev(verts.rbegin(), verts.rend());
                canon.insert(std::min(verts, rev));
            }
            return;
        }
        for (const auto& [nb, e] : g.neighbors(cur)) {
            if (edge_simple ? eused[static_cast<std::size_t>(e)] != 0
                            : vused[static_cast<std::size_t>(nb)] != 0)
                continue;
            eused[static_cast<std::size_t>(e)] = 1;
            vused[static_cast<std::size_t>(nb)] = 1;
            verts.push_back(nb);
            eids.push_back(e);
            grow(nb);
            eids.pop_back();
            verts.pop_back();
            vused[static_cast<std::size_t>(nb)] = 0;
            eused[static_cast<std::size_t>(e)] = 0;
        }
    };

    for (std::size_t s = 0; s < n; ++s) {
        const Vertex v = static_cast<Vertex>(s);
        vused[s] = 1;
        verts = {v};
        grow(v);
        vused[s] = 0;
    }
    return canon.size();
}

// Independent full stretch scan; `allow` maps a finite graph distance to the
// largest admissible emulator distance.
struct ScanResult {
    bool passed = true;
    std::uint64_t violations = 0;
    double worst_stretch = 0.0;
};

inline ScanResult verify_scan(const WeightedGraph& g, const EmulatorGraph& h, std::size_t f,
                              const std::function<double(double)>& allow) {
    ScanResult r;
    const std::size_t n = g.num_vertices();
    for (const FaultSet& fs : all_fault_sets(n, f)) {
        for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
            if (fs.contains(u)) continue;
            for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
                if (fs.contains(v)) continue;
                const Dist dg = oracle::graph_dist(g, fs, u, v);
                if (vftem::is_inf(dg)) continue;
                const Dist dh = oracle::emulator_dist(h, fs, u, v);
                if (dh < dg || dh > allow(dg)) {
                    ++r.violations;
                    r.passed = false;
                }
                if (!vftem::is_inf(dh) && dg > 0)
                    r.worst_stretch = std::max(r.worst_stretch, dh / dg);
            }
        }
    }
    return r;
}

}  // namespace oracle
