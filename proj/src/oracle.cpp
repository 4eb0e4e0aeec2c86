#include "vftem/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "vftem/errors.hpp"

namespace vftem {

namespace {

void check_pair(std::size_t n, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
        throw std::out_of_range("candidate endpoint out of range");
    if (u == v) throw std::invalid_argument("candidate endpoints coincide");
}

// Recursive lexicographic enumeration of fault subsets of V \ {u,v}: a set is
// visited before its supersets and before any set that is lexicographically
// larger as a sorted sequence, so the first hit is the lexicographically
// smallest qualifying fault set.
struct SubsetSearch {
    const EmulatorGraph& h;
    Vertex u, v;
    std::size_t f;
    Dist bound;
    std::uint64_t cap;
    std::uint64_t visited = 0;
    std::vector<Vertex> cur = {};

    std::optional<FaultSet> run() {
        cur.clear();
        return visit();
    }

    std::optional<FaultSet> visit() {
        if (++visited > cap)
            throw BudgetExceeded("exhaustive witness: fault-subset cap of " +
                                 std::to_string(cap) + " exceeded; use the approximate mode");
        FaultSet fs(cur);
        if (FaultedView(h, fs).dist(u, v) > bound) return fs;
        if (cur.size() < f) {
            const Vertex n = static_cast<Vertex>(h.num_vertices());
            for (Vertex x = cur.empty() ? 0 : cur.back() + 1; x < n; ++x) {
                if (x == u || x == v) continue;
                cur.push_back(x);
                if (auto hit = visit()) return hit;
                cur.pop_back();
            }
        }
        return std::nullopt;
    }
};

}  // namespace

WitnessResult exhaustive_witness(const EmulatorGraph& h, Vertex u, Vertex v, std::size_t f,
                                 Dist bound, std::uint64_t subset_cap) {
    check_pair(h.num_vertices(), u, v);
    SubsetSearch search{.h = h, .u = u, .v = v, .f = f, .bound = bound, .cap = subset_cap};
    WitnessResult res;
    res.method = WitnessMethod::Exhaustive;
    if (auto hit = search.run()) {
        res.forced = true;
        res.fault_set = std::move(*hit);
    }
    return res;
}

// --- greedy polynomial fault-set search ----------------------------------------

namespace {

constexpr int kUnreach = std::numeric_limits<int>::max() / 4;

// Per-iteration machinery for the unweighted view of H minus the current
// fault mask: emulator edge weights are surviving hop counts in the base
// graph, computed lazily (one BFS per touched endpoint, memoized until the
// fault set grows again).
struct HopSearch {
    const WeightedGraph& g;
    const EmulatorGraph& h;
    const std::vector<char>& fmask;
    std::unordered_map<Vertex, std::vector<int>> bfs_memo;

    const std::vector<int>& hops_from(Vertex s) {
        auto it = bfs_memo.find(s);
        if (it != bfs_memo.end()) return it->second;
        std::vector<int> hops;
        bfs_hops_masked(g, fmask, s, hops);
        return bfs_memo.emplace(s, std::move(hops)).first->second;
    }

    // Hop weight of emulator edge (x, y), reusing whichever endpoint's BFS
    // already exists; kUnreach when disconnected.
    int emulator_hops(Vertex x, Vertex y) {
        if (bfs_memo.find(x) == bfs_memo.end()) {
            auto jt = bfs_memo.find(y);
            if (jt != bfs_memo.end()) {
                const int w = jt->second[static_cast<std::size_t>(x)];
                return w < 0 ? kUnreach : w;
            }
        }
        const int w = hops_from(x)[static_cast<std::size_t>(y)];
        return w < 0 ? kUnreach : w;
    }

    // Dijkstra over surviving H-edges under hop semantics, pruned at `cap`
    // (labels beyond cap are reported as kUnreach; exact values below it).
    void capped_dists(Vertex src, int cap, std::vector<int>& dist) {
        const std::size_t n = h.num_vertices();
        dist.assign(n, kUnreach);
        if (fmask[static_cast<std::size_t>(src)]) return;
        using Entry = std::pair<int, Vertex>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
        dist[static_cast<std::size_t>(src)] = 0;
        heap.emplace(0, src);
        while (!heap.empty()) {
            auto [d, x] = heap.top();
            heap.pop();
            if (d > dist[static_cast<std::size_t>(x)]) continue;
            for (const auto& [y, e] : h.spanner_neighbors(x)) {
                (void)e;
                if (fmask[static_cast<std::size_t>(y)]) continue;
                const int nd = d + 1;
                if (nd <= cap && nd < dist[static_cast<std::size_t>(y)]) {
                    dist[static_cast<std::size_t>(y)] = nd;
                    heap.emplace(nd, y);
                }
            }
            for (const auto& [y, i] : h.emulator_neighbors(x)) {
                (void)i;
                if (fmask[static_cast<std::size_t>(y)]) continue;
                const int w = emulator_hops(x, y);
                if (w >= kUnreach) continue;
                const int nd = d + w;
                if (nd <= cap && nd < dist[static_cast<std::size_t>(y)]) {
                    dist[static_cast<std::size_t>(y)] = nd;
                    heap.emplace(nd, y);
                }
            }
        }
    }
};

}  // namespace

WitnessResult find_fault_set(const WeightedGraph& g, const EmulatorGraph& h, Vertex u, Vertex v,
                             int k, std::size_t f) {
    if (k < 1) throw std::invalid_argument("find_fault_set: k must be >= 1");
    if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.base().num_edges())
        throw std::invalid_argument("find_fault_set: g does not match the emulator's base graph");
    check_pair(g.num_vertices(), u, v);

    WitnessResult res;
    res.method = WitnessMethod::Approximate;
    if (h.has_edge(u, v)) return res;  // NO: H already covers the pair

    const int cap = 2 * k - 1;
    const std::size_t n = g.num_vertices();
    std::vector<char> fmask(n, 0);
    FaultSet faults;

    for (;;) {
        HopSearch search{g, h, fmask, {}};
        std::vector<int> dv;
        search.capped_dists(v, cap, dv);
        const int total = dv[static_cast<std::size_t>(u)];
        if (total > cap) break;  // surviving hop distance exceeds 2k-1

        // Extract the lexicographically smallest shortest u-v path: from the
        // current vertex, the smallest-id neighbor consistent with dv stays
        // on a shortest path, and dv strictly decreases so the walk is simple
        // and ends at v.
        struct Step {
            Vertex from, to;
            bool via_emulator;
        };
        std::vector<Step> steps;
        Vertex cur = u;
        int walked = 0;
        while (cur != v) {
            Vertex best = -1;
            bool best_em = false;
            for (const auto& [y, e] : h.spanner_neighbors(cur)) {
                (void)e;
                if (fmask[static_cast<std::size_t>(y)]) continue;
                if (dv[static_cast<std::size_t>(y)] >= kUnreach) continue;
                if (walked + 1 + dv[static_cast<std::size_t>(y)] != total) continue;
                if (best < 0 || y < best) {
                    best = y;
                    best_em = false;
                }
            }
            for (const auto& [y, i] : h.emulator_neighbors(cur)) {
                (void)i;
                if (fmask[static_cast<std::size_t>(y)]) continue;
                if (dv[static_cast<std::size_t>(y)] >= kUnreach) continue;
                const int w = search.emulator_hops(cur, y);
                if (w >= kUnreach) continue;
                if (walked + w + dv[static_cast<std::size_t>(y)] != total) continue;
                if (best < 0 || y < best) {
                    best = y;
                    best_em = true;
                }
            }
            if (best < 0) throw std::logic_error("find_fault_set: shortest-path walk stuck");
            steps.push_back({cur, best, best_em});
            walked = total - dv[static_cast<std::size_t>(best)];
            cur = best;
        }

        // Replace emulator edges by their (lexicographically smallest)
        // shortest surviving underlying paths.  All expansions are computed
        // against the iteration-start fault set; the collected internal
        // vertices (everything but u and v, duplicates collapsed) become
        // faults only once the whole path is expanded.
        std::vector<Vertex> collected;
        for (std::size_t si = 0; si < steps.size(); ++si) {
            const Step& st = steps[si];
            if (st.via_emulator) {
                // Walk from st.from toward st.to along decreasing hop counts.
                const std::vector<int>& db = search.hops_from(st.to);
                Vertex c = st.from;
                while (c != st.to) {
                    Vertex next = -1;
                    for (const auto& [y, e] : g.neighbors(c)) {
                        (void)e;
                        if (fmask[static_cast<std::size_t>(y)]) continue;
                        if (db[static_cast<std::size_t>(y)] !=
                            db[static_cast<std::size_t>(c)] - 1)
                            continue;
                        if (next < 0 || y < next) next = y;
                    }
                    if (next < 0)
                        throw std::logic_error("find_fault_set: underlying-path walk stuck");
                    if (next != st.to) collected.push_back(next);
                    c = next;
                }
            }
            // Internal vertices of the H-path itself.
            if (si + 1 < steps.size()) collected.push_back(st.to);
        }
        bool grew = false;
        for (Vertex x : collected) {
            if (x == u || x == v || fmask[static_cast<std::size_t>(x)]) continue;
            fmask[static_cast<std::size_t>(x)] = 1;
            faults.insert(x);
            grew = true;
        }
        if (!grew)
            throw std::logic_error("find_fault_set: no progress (degenerate emulator edge)");
        if (faults.size() > n - 2)
            throw std::logic_error("find_fault_set: fault set exceeded n-2 vertices");
        ++res.iterations;
    }

    const std::size_t budget = static_cast<std::size_t>(2 * k - 2) * f;
    if (faults.size() <= budget) {
        res.forced = true;
        res.fault_set = std::move(faults);
    }
    return res;
}

}  // namespace vftem
