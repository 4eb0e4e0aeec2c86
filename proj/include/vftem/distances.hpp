#pragma once

#include <vector>

#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"

namespace vftem {

// Shortest-path distance between u and v in G with the vertices of F
// removed.  kInfDist when disconnected.  Throws std::out_of_range for bad
// ids and std::invalid_argument when u or v is itself faulty.
Dist graph_dist(const WeightedGraph& g, const FaultSet& f, Vertex u, Vertex v);

// Single-source distances from src in g with masked vertices removed
// (mask[v] != 0 means v is deleted).  dist must have size n; masked and
// unreachable vertices end up at kInfDist.
void sssp_masked(const WeightedGraph& g, const std::vector<char>& mask, Vertex src,
                 std::vector<Dist>& dist);

// Single-source hop counts (every edge weight 1), same masking contract;
// entries are -1 for masked/unreachable vertices.
void bfs_hops_masked(const WeightedGraph& g, const std::vector<char>& mask, Vertex src,
                     std::vector<int>& hops);

// A fault set applied to an emulator: resolves every surviving emulator
// edge's weight against the surviving base graph once, then answers
// shortest-path queries over the surviving spanner+emulator edges.
//
// Weighted mode gives the weight-updating semantics (emulator edge (s,t)
// costs dist_{G\F}(s,t)); hop mode treats every spanner edge as weight 1 and
// every emulator edge as the hop count of the shortest surviving underlying
// path (the view used by the approximate fault-set search).
class FaultedView {
public:
    enum class Mode { Weighted, Hops };

    FaultedView(const EmulatorGraph& h, const FaultSet& f, Mode mode = Mode::Weighted);

    // Distance from u to v through surviving edges; kInfDist if disconnected.
    Dist dist(Vertex u, Vertex v) const;
    // All distances from u (kInfDist for faulty/unreachable vertices).
    std::vector<Dist> dists_from(Vertex u) const;

    // Resolved weight of emulator edge index i (kInfDist when an endpoint is
    // faulty or the endpoints are disconnected in the surviving base graph).
    Dist emulator_edge_weight(int i) const { return em_weight_[static_cast<std::size_t>(i)]; }

private:
    void run_dijkstra(Vertex src, std::vector<Dist>& dist) const;

    const EmulatorGraph& h_;
    std::vector<char> fault_mask_;
    std::vector<Dist> em_weight_;
    bool hop_mode_ = false;
};

// Def.-style emulator distance: dist_{H\F}(u,v) where emulator edges weigh
// dist_{G\F} between their endpoints.  Same error contract as graph_dist.
Dist emulator_dist(const EmulatorGraph& h, const FaultSet& f, Vertex u, Vertex v);

// Unweighted-view emulator distance: spanner edges cost 1, emulator edges
// cost their surviving hop count in g.  g must be the emulator's base graph
// (checked by size).
Dist hop_dist(const EmulatorGraph& h, const WeightedGraph& g, const FaultSet& f, Vertex u,
              Vertex v);

}  // namespace vftem
