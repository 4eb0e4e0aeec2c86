#include "vftem/builder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "vftem/errors.hpp"
#include "vftem/rng.hpp"

namespace vftem {

BuildParams choose_params(std::size_t n, std::size_t f, int k, double polylog_constant, double c,
                          double c_b, CheckMode mode, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("choose_params: n must be positive");
    if (k < 2) throw std::invalid_argument("choose_params: k must be >= 2");
    const double fd = static_cast<double>(f);
    const double f_exponent = (k % 2 == 1) ? 0.5 - 1.0 / (2.0 * k) : 0.5;
    double d = std::max(polylog_constant * std::log(static_cast<double>(n)) *
                            std::pow(fd, f_exponent) *
                            std::pow(static_cast<double>(n), 1.0 / k),
                        c * fd);
    if (mode == CheckMode::Approximate) d *= 2.0 * k - 2.0;
    d = std::max(d, 1.0);

    BuildParams p;
    p.f = f;
    p.k = k;
    p.d = d;
    p.b = std::max(1, static_cast<int>(std::ceil(c_b * k * d)));
    p.check_mode = mode;
    p.seed = seed;
    p.polylog_constant = polylog_constant;
    p.c = c;
    p.c_b = c_b;
    return p;
}

namespace {

void validate_build_args(const std::shared_ptr<const WeightedGraph>& g, std::size_t f,
                         const BuildParams& params) {
    if (!g) throw std::invalid_argument("builder needs a base graph");
    if (params.f != f) throw std::invalid_argument("params.f disagrees with the f argument");
    if (params.d < 1.0) throw std::invalid_argument("params.d must be >= 1");
    if (params.b < 1) throw std::invalid_argument("params.b must be >= 1");
}

// Base edge ids in nondecreasing (weight, id) order: the greedy consideration order.
std::vector<EdgeId> greedy_order(const WeightedGraph& g) {
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return g.edge(a).w < g.edge(b).w; });
    return order;
}

WitnessResult forced_check(const WeightedGraph& g, const EmulatorGraph& h, Vertex u, Vertex v,
                           double w, std::size_t f, int k, const BuildParams& params) {
    if (params.check_mode == CheckMode::Exhaustive) {
        const Dist bound = (2.0 * k - 1.0) * w;
        return exhaustive_witness(h, u, v, f, bound, params.subset_cap);
    }
    return find_fault_set(g, h, u, v, k, f);
}

enum class Sampling { None, Neighborhood, LocalPaths };

EmulatorGraph run_greedy(std::shared_ptr<const WeightedGraph> g, std::size_t f, int k,
                         const BuildParams& params, Sampling sampling,
                         const BuildObserver& observer) {
    validate_build_args(g, f, params);
    EmulatorGraph h(g, params.b);
    Rng rng(derive_stream(params.seed, "build"));
    const double pair_prob = 1.0 / (params.d * params.d);

    for (EdgeId e : greedy_order(*g)) {
        const Edge& edge = g->edge(e);
        const Vertex u = edge.u, v = edge.v;
        WitnessResult wr = forced_check(*g, h, u, v, edge.w, f, k, params);
        if (!wr.forced) continue;
        const FaultSet& faults = *wr.fault_set;
        if (observer) observer(h, u, v, edge.w, faults);
        const EdgeId id = h.add_spanner_edge(u, v, edge.w, faults);

        switch (sampling) {
            case Sampling::None:
                break;
            case Sampling::Neighborhood:
                // One coin per surviving spanner-neighbor pair (s of u, t of
                // v): the 3-paths s-u-v-t the new edge completes.
                for (const auto& [s, es] : h.spanner_neighbors(u)) {
                    (void)es;
                    if (s == v || faults.contains(s)) continue;
                    for (const auto& [t, et] : h.spanner_neighbors(v)) {
                        (void)et;
                        if (t == u || t == s || faults.contains(t)) continue;
                        if (rng.bernoulli(pair_prob)) h.add_emulator_edge(s, t);
                    }
                }
                break;
            case Sampling::LocalPaths:
                // One coin per local path of j <= k edges the new edge
                // completes, at probability d^-(j-1); the 1-edge path is
                // skipped (it would only re-add the spanner edge itself).
                for (const LocalPath& path : enumerate_local_paths_through(
                         h, id, k, params.path_cap, params.include_non_simple)) {
                    const std::size_t j = path.num_edges();
                    if (j < 2) continue;
                    const double pr = std::pow(params.d, -static_cast<double>(j - 1));
                    const bool take = rng.bernoulli(pr);
                    if (take && path.front() != path.back())
                        h.add_emulator_edge(path.front(), path.back());
                }
                break;
        }
    }
    return h;
}

}  // namespace

EmulatorGraph build_vft_5_emulator(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                                   const BuildParams& params, const BuildObserver& observer) {
    if (params.k != 3)
        throw std::invalid_argument("stretch-5 builder requires k = 3 parameters");
    return run_greedy(std::move(g), f, 3, params, Sampling::Neighborhood, observer);
}

EmulatorGraph build_vft_emulator(std::shared_ptr<const WeightedGraph> g, std::size_t f, int k,
                                 const BuildParams& params, const BuildObserver& observer) {
    if (k < 2) throw std::invalid_argument("emulator builder requires k >= 2");
    if (params.k != k) throw std::invalid_argument("params.k disagrees with the k argument");
    return run_greedy(std::move(g), f, k, params, Sampling::LocalPaths, observer);
}

EmulatorGraph build_vft_spanner_greedy(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                                       int k, const BuildParams& params,
                                       const BuildObserver& observer) {
    if (k < 2) throw std::invalid_argument("spanner builder requires k >= 2");
    if (params.k != k) throw std::invalid_argument("params.k disagrees with the k argument");
    return run_greedy(std::move(g), f, k, params, Sampling::None, observer);
}

// --- local-path enumeration -------------------------------------------------

namespace {

struct PathEnumerator {
    const EmulatorGraph& h;
    EdgeId e;
    int max_edges;
    std::uint64_t path_cap;
    bool include_non_simple;

    Vertex u = 0, v = 0;
    std::vector<char> vertex_used = {};  // simple mode
    std::vector<char> edge_used = {};    // non-simple (edge-simple) mode
    std::vector<Vertex> left_verts = {}, right_verts = {};
    std::vector<EdgeId> left_edges = {}, right_edges = {};
    std::vector<LocalPath> out = {};

    void run() {
        u = h.spanner_edge(e).u;
        v = h.spanner_edge(e).v;
        if (include_non_simple) {
            edge_used.assign(h.num_spanner_edges(), 0);
            edge_used[static_cast<std::size_t>(e)] = 1;
        } else {
            vertex_used.assign(h.num_vertices(), 0);
            vertex_used[static_cast<std::size_t>(u)] = 1;
            vertex_used[static_cast<std::size_t>(v)] = 1;
        }
        dfs_left(u, e);
    }

    bool usable(Vertex nb, EdgeId g) const {
        return include_non_simple ? !edge_used[static_cast<std::size_t>(g)]
                                  : !vertex_used[static_cast<std::size_t>(nb)];
    }

    void mark(Vertex nb, EdgeId g) {
        if (include_non_simple)
            edge_used[static_cast<std::size_t>(g)] = 1;
        else
            vertex_used[static_cast<std::size_t>(nb)] = 1;
    }

    void unmark(Vertex nb, EdgeId g) {
        if (include_non_simple)
            edge_used[static_cast<std::size_t>(g)] = 0;
        else
            vertex_used[static_cast<std::size_t>(nb)] = 0;
    }

    // Every node of the left DFS tree is one u-side extension; for each, the
    // right DFS enumerates all compatible v-side extensions, so each path
    // through e is produced exactly once.
    void dfs_left(Vertex cur, EdgeId in_edge) {
        dfs_right(v, e);
        if (static_cast<int>(left_edges.size()) + 1 >= max_edges) return;
        const int want = h.bucket_of(cur, in_edge);
        for (const auto& [nb, g] : h.spanner_neighbors(cur)) {
            if (g == in_edge || !usable(nb, g)) continue;
            if (h.bucket_of(cur, g) != want) continue;
            mark(nb, g);
            left_verts.push_back(nb);
            left_edges.push_back(g);
            dfs_left(nb, g);
            left_edges.pop_back();
            left_verts.pop_back();
            unmark(nb, g);
        }
    }

    void dfs_right(Vertex cur, EdgeId in_edge) {
        emit();
        if (static_cast<int>(left_edges.size() + right_edges.size()) + 1 >= max_edges) return;
        const int want = h.bucket_of(cur, in_edge);
        for (const auto& [nb, g] : h.spanner_neighbors(cur)) {
            if (g == in_edge || !usable(nb, g)) continue;
            if (h.bucket_of(cur, g) != want) continue;
            mark(nb, g);
            right_verts.push_back(nb);
            right_edges.push_back(g);
            dfs_right(nb, g);
            right_edges.pop_back();
            right_verts.pop_back();
            unmark(nb, g);
        }
    }

    void emit() {
        if (out.size() >= path_cap)
            throw BudgetExceeded("local-path enumeration cap of " + std::to_string(path_cap) +
                                 " exceeded");
        LocalPath p;
        p.vertices.reserve(left_verts.size() + right_verts.size() + 2);
        p.edges.reserve(left_edges.size() + right_edges.size() + 1);
        for (auto it = left_verts.rbegin(); it != left_verts.rend(); ++it)
            p.vertices.push_back(*it);
        p.vertices.push_back(u);
        p.vertices.push_back(v);
        p.vertices.insert(p.vertices.end(), right_verts.begin(), right_verts.end());
        for (auto it = left_edges.rbegin(); it != left_edges.rend(); ++it)
            p.edges.push_back(*it);
        p.edges.push_back(e);
        p.edges.insert(p.edges.end(), right_edges.begin(), right_edges.end());
        if (p.vertices.front() > p.vertices.back()) {
            std::reverse(p.vertices.begin(), p.vertices.end());
            std::reverse(p.edges.begin(), p.edges.end());
        }
        out.push_back(std::move(p));
    }
};

}  // namespace

std::vector<LocalPath> enumerate_local_paths_through(const EmulatorGraph& h, EdgeId e,
                                                     int max_edges, std::uint64_t path_cap,
                                                     bool include_non_simple) {
    if (!h.has_buckets())
        throw std::logic_error("local-path enumeration requires a bucketed emulator");
    if (e < 0 || static_cast<std::size_t>(e) >= h.num_spanner_edges())
        throw std::out_of_range("spanner edge id out of range");
    if (max_edges < 1) return {};
    PathEnumerator en{.h = h,
                      .e = e,
                      .max_edges = max_edges,
                      .path_cap = path_cap,
                      .include_non_simple = include_non_simple};
    en.run();
    return std::move(en.out);
}

}  // namespace vftem
