#include "vftem/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vftem {

WeightedGraph blow_up(const WeightedGraph& g, int t) {
    if (t < 1) throw std::invalid_argument("blow_up: t must be >= 1");
    const std::size_t n = g.num_vertices();
    const std::uint64_t nt = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(t);
    const std::uint64_t mt = static_cast<std::uint64_t>(g.num_edges()) *
                             static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(t);
    if (nt > 100'000'000ull || mt > 500'000'000ull)
        throw std::overflow_error("blow_up: result size out of range");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(mt));
    for (const Edge& e : g.edges())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                edges.push_back(Edge{e.u * t + i, e.v * t + j, 1.0});
    return WeightedGraph::from_edges(static_cast<std::size_t>(nt), std::move(edges));
}

WeightedGraph lb_instance_stretch3(std::size_t f, const WeightedGraph& base) {
    if (f < 4) throw std::invalid_argument("stretch-3 family requires f >= 4");
    const auto gi = girth(base);
    if (gi.has_value() && *gi < 6)
        throw std::invalid_argument("stretch-3 family requires a base of girth >= 6, got " +
                                    std::to_string(*gi));
    const int t = static_cast<int>(f / 4);
    WeightedGraph out = blow_up(base, t);
    out.set_comment("stretch3 lower-bound instance f=" + std::to_string(f) +
                    " t=" + std::to_string(t));
    return out;
}

WeightedGraph lb_instance_stretch2k1(std::size_t f, const WeightedGraph& base, int k) {
    if (f < 1) throw std::invalid_argument("stretch-(2k-1) family requires f >= 1");
    if (k < 2) throw std::invalid_argument("stretch-(2k-1) family requires k >= 2");
    const std::size_t need = 2 * static_cast<std::size_t>(k) + 2;
    const auto gi = girth(base);
    if (gi.has_value() && *gi < need)
        throw std::invalid_argument("stretch-(2k-1) family requires base girth >= " +
                                    std::to_string(need) + ", got " + std::to_string(*gi));
    int t = 1;
    while (static_cast<std::size_t>(t) * static_cast<std::size_t>(t) < f) ++t;
    WeightedGraph out = blow_up(base, t);
    out.set_comment("stretch" + std::to_string(2 * k - 1) + " lower-bound instance f=" +
                    std::to_string(f) + " t=" + std::to_string(t));
    return out;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

}  // namespace

WeightedGraph projective_plane_incidence(int q) {
    if (!is_prime(q))
        throw std::invalid_argument("projective plane order must be prime, got " +
                                    std::to_string(q));
    // Canonical representatives of the projective plane over F_q, in a fixed
    // enumeration order: (1,a,b), then (0,1,c), then (0,0,1).
    struct Triple {
        int x, y, z;
    };
    std::vector<Triple> reps;
    reps.reserve(static_cast<std::size_t>(q) * q + q + 1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (int c = 0; c < q; ++c) reps.push_back({0, 1, c});
    reps.push_back({0, 0, 1});

    const int npts = static_cast<int>(reps.size());  // q^2 + q + 1
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(npts) * (q + 1));
    // Vertices: points 0..npts-1, lines npts..2*npts-1 (same representative
    // enumeration, dual coordinates); point i and line j are adjacent when
    // their dot product vanishes mod q.
    for (int i = 0; i < npts; ++i)
        for (int j = 0; j < npts; ++j) {
            const int dot = reps[i].x * reps[j].x + reps[i].y * reps[j].y + reps[i].z * reps[j].z;
            if (dot % q == 0) edges.push_back(Edge{i, npts + j, 1.0});
        }
    WeightedGraph out =
        WeightedGraph::from_edges(static_cast<std::size_t>(2 * npts), std::move(edges));
    out.set_comment("projective plane incidence q=" + std::to_string(q));
    return out;
}

WeightedGraph heawood_graph() {
    WeightedGraph g = projective_plane_incidence(2);
    g.set_comment("heawood");
    return g;
}

std::optional<std::size_t> girth(const WeightedGraph& g) {
    const std::size_t n = g.num_vertices();
    std::size_t best = SIZE_MAX;
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex r = 0; static_cast<std::size_t>(r) < n; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        dist[static_cast<std::size_t>(r)] = 0;
        queue.push_back(r);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (const auto& [y, e] : g.neighbors(x)) {
                (void)e;
                if (dist[static_cast<std::size_t>(y)] >= 0) continue;
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
        // Every reachable non-tree edge closes a cycle through its BFS paths.
        for (const Edge& e : g.edges()) {
            const auto du = dist[static_cast<std::size_t>(e.u)];
            const auto dv = dist[static_cast<std::size_t>(e.v)];
            if (du < 0 || dv < 0) continue;
            if (parent[static_cast<std::size_t>(e.u)] == e.v ||
                parent[static_cast<std::size_t>(e.v)] == e.u)
                continue;
            best = std::min(best, static_cast<std::size_t>(du) + static_cast<std::size_t>(dv) + 1);
        }
    }
    if (best == SIZE_MAX) return std::nullopt;
    return best;
}

namespace {

void assign_weights(std::vector<Edge>& edges, WeightMode mode, Rng& rng, int max_weight) {
    switch (mode) {
        case WeightMode::Unit:
            for (Edge& e : edges) e.w = 1.0;
            break;
        case WeightMode::UniformInt:
            if (max_weight < 1) throw std::invalid_argument("max_weight must be >= 1");
            for (Edge& e : edges)
                e.w = static_cast<double>(1 + rng.below(static_cast<std::uint64_t>(max_weight)));
            break;
        case WeightMode::DistinctInt: {
            // A random permutation of 1..m: strict weight order, no ties.
            std::vector<double> w(edges.size());
            std::iota(w.begin(), w.end(), 1.0);
            for (std::size_t i = w.size(); i > 1; --i)
                std::swap(w[i - 1], w[rng.below(i)]);
            for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = w[i];
            break;
        }
    }
}

}  // namespace

WeightedGraph random_gnp(std::size_t n, double p, WeightMode mode, std::uint64_t seed,
                         int max_weight) {
    if (p < 0 || p > 1) throw std::invalid_argument("edge probability must be in [0,1]");
    Rng rng(derive_stream(seed, "gen"));
    std::vector<Edge> edges;
    for (Vertex u = 0; static_cast<std::size_t>(u) + 1 < n; ++u)
        for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v)
            if (rng.bernoulli(p)) edges.push_back(Edge{u, v, 1.0});
    assign_weights(edges, mode, rng, max_weight);
    return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph random_gnm(std::size_t n, std::size_t m, WeightMode mode, std::uint64_t seed,
                         int max_weight) {
    const std::uint64_t all = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > all)
        throw std::invalid_argument("requested " + std::to_string(m) + " edges but only " +
                                    std::to_string(all) + " pairs exist");
    if (all > 50'000'000ull) throw std::overflow_error("pair universe too large");
    Rng rng(derive_stream(seed, "gen"));
    // Partial Fisher-Yates over the pair universe, then lexicographic order.
    std::vector<std::uint64_t> idx(static_cast<std::size_t>(all));
    std::iota(idx.begin(), idx.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(all - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(m);
    std::sort(idx.begin(), idx.end());
    std::vector<Edge> edges;
    edges.reserve(m);
    std::uint64_t row_start = 0;
    Vertex u = 0;
    for (std::uint64_t key : idx) {
        // Decode key into the pair (u, v): rows of decreasing length.
        while (row_start + (n - 1 - static_cast<std::uint64_t>(u)) <= key) {
            row_start += n - 1 - static_cast<std::uint64_t>(u);
            ++u;
        }
        const Vertex v = static_cast<Vertex>(static_cast<std::uint64_t>(u) + 1 + (key - row_start));
        edges.push_back(Edge{u, v, 1.0});
    }
    assign_weights(edges, mode, rng, max_weight);
    return WeightedGraph::from_edges(n, std::move(edges));
}

}  // namespace vftem
