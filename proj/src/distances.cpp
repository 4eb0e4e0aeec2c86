#include "vftem/distances.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace vftem {

namespace {

void check_query(std::size_t n, const FaultSet& f, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw std::out_of_range("query vertex out of range");
    if (f.contains(u) || f.contains(v))
        throw std::invalid_argument("query endpoint " +
                                    std::to_string(f.contains(u) ? u : v) + " is faulty");
}

using HeapEntry = std::pair<Dist, Vertex>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

}  // namespace

void sssp_masked(const WeightedGraph& g, const std::vector<char>& mask, Vertex src,
                 std::vector<Dist>& dist) {
    const std::size_t n = g.num_vertices();
    dist.assign(n, kInfDist);
    if (mask[static_cast<std::size_t>(src)]) return;
    MinHeap heap;
    dist[static_cast<std::size_t>(src)] = 0;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(x)]) continue;
        for (const auto& [y, e] : g.neighbors(x)) {
            if (mask[static_cast<std::size_t>(y)]) continue;
            const Dist nd = d + g.edge(e).w;
            if (nd < dist[static_cast<std::size_t>(y)]) {
                dist[static_cast<std::size_t>(y)] = nd;
                heap.emplace(nd, y);
            }
        }
    }
}

void bfs_hops_masked(const WeightedGraph& g, const std::vector<char>& mask, Vertex src,
                     std::vector<int>& hops) {
    const std::size_t n = g.num_vertices();
    hops.assign(n, -1);
    if (mask[static_cast<std::size_t>(src)]) return;
    std::vector<Vertex> queue;
    queue.reserve(n);
    hops[static_cast<std::size_t>(src)] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (const auto& [y, e] : g.neighbors(x)) {
            (void)e;
            if (mask[static_cast<std::size_t>(y)] || hops[static_cast<std::size_t>(y)] >= 0)
                continue;
            hops[static_cast<std::size_t>(y)] = hops[static_cast<std::size_t>(x)] + 1;
            queue.push_back(y);
        }
    }
}

Dist graph_dist(const WeightedGraph& g, const FaultSet& f, Vertex u, Vertex v) {
    check_query(g.num_vertices(), f, u, v);
    if (u == v) return 0;
    const std::vector<char> mask = f.mask(g.num_vertices());
    std::vector<Dist> dist;
    sssp_masked(g, mask, u, dist);
    return dist[static_cast<std::size_t>(v)];
}

// --- FaultedView ---------------------------------------------------------------

FaultedView::FaultedView(const EmulatorGraph& h, const FaultSet& f, Mode mode)
    : h_(h), fault_mask_(f.mask(h.num_vertices())) {
    // Resolve every surviving emulator edge's weight against the surviving
    // base graph: one single-source pass per distinct surviving endpoint.
    const auto& em = h.emulator_edges();
    em_weight_.assign(em.size(), kInfDist);
    const std::size_t n = h.num_vertices();
    std::vector<char> needed(n, 0);
    for (const auto& [s, t] : em)
        if (!fault_mask_[static_cast<std::size_t>(s)] && !fault_mask_[static_cast<std::size_t>(t)])
            needed[static_cast<std::size_t>(s)] = 1;
    std::vector<Dist> dist;
    std::vector<int> hops;
    for (Vertex s = 0; static_cast<std::size_t>(s) < n; ++s) {
        if (!needed[static_cast<std::size_t>(s)]) continue;
        if (mode == Mode::Weighted) {
            sssp_masked(h.base(), fault_mask_, s, dist);
        } else {
            bfs_hops_masked(h.base(), fault_mask_, s, hops);
        }
        for (std::size_t i = 0; i < em.size(); ++i) {
            if (em[i].first != s) continue;
            const Vertex t = em[i].second;
            if (fault_mask_[static_cast<std::size_t>(t)]) continue;
            if (mode == Mode::Weighted) {
                em_weight_[i] = dist[static_cast<std::size_t>(t)];
            } else {
                const int ht = hops[static_cast<std::size_t>(t)];
                em_weight_[i] = ht < 0 ? kInfDist : static_cast<Dist>(ht);
            }
        }
    }
    hop_mode_ = (mode == Mode::Hops);
}

void FaultedView::run_dijkstra(Vertex src, std::vector<Dist>& dist) const {
    const std::size_t n = h_.num_vertices();
    dist.assign(n, kInfDist);
    if (fault_mask_[static_cast<std::size_t>(src)]) return;
    MinHeap heap;
    dist[static_cast<std::size_t>(src)] = 0;
    heap.emplace(0.0, src);
    while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(x)]) continue;
        for (const auto& [y, e] : h_.spanner_neighbors(x)) {
            if (fault_mask_[static_cast<std::size_t>(y)]) continue;
            const Dist w = hop_mode_ ? 1.0 : h_.spanner_edge(e).w;
            const Dist nd = d + w;
            if (nd < dist[static_cast<std::size_t>(y)]) {
                dist[static_cast<std::size_t>(y)] = nd;
                heap.emplace(nd, y);
            }
        }
        for (const auto& [y, i] : h_.emulator_neighbors(x)) {
            if (fault_mask_[static_cast<std::size_t>(y)]) continue;
            const Dist w = em_weight_[static_cast<std::size_t>(i)];
            if (is_inf(w)) continue;
            const Dist nd = d + w;
            if (nd < dist[static_cast<std::size_t>(y)]) {
                dist[static_cast<std::size_t>(y)] = nd;
                heap.emplace(nd, y);
            }
        }
    }
}

Dist FaultedView::dist(Vertex u, Vertex v) const {
    if (u == v) return 0;
    std::vector<Dist> d;
    run_dijkstra(u, d);
    return d[static_cast<std::size_t>(v)];
}

std::vector<Dist> FaultedView::dists_from(Vertex u) const {
    std::vector<Dist> d;
    run_dijkstra(u, d);
    return d;
}

Dist emulator_dist(const EmulatorGraph& h, const FaultSet& f, Vertex u, Vertex v) {
    check_query(h.num_vertices(), f, u, v);
    if (u == v) return 0;
    return FaultedView(h, f, FaultedView::Mode::Weighted).dist(u, v);
}

Dist hop_dist(const EmulatorGraph& h, const WeightedGraph& g, const FaultSet& f, Vertex u,
              Vertex v) {
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.base().num_edges())
        throw std::invalid_argument("hop_dist: g does not match the emulator's base graph");
    check_query(h.num_vertices(), f, u, v);
    if (u == v) return 0;
    return FaultedView(h, f, FaultedView::Mode::Hops).dist(u, v);
}

}  // namespace vftem
