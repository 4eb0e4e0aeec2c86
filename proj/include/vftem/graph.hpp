#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace vftem {

using Vertex = int;
using EdgeId = int;

// Distances are 64-bit floats.  For integer-weight inputs (all shipped test
// graphs) every computed distance is an exact integer, so comparisons against
// bounds like 5*w need no tolerance.  Unreachable = kInfDist; dist_add
// saturates so infinity propagates through relaxations.
using Dist = double;
inline constexpr Dist kInfDist = std::numeric_limits<double>::infinity();

inline bool is_inf(Dist d) { return d == kInfDist; }
inline Dist dist_add(Dist a, Dist b) { return (is_inf(a) || is_inf(b)) ? kInfDist : a + b; }

struct Edge {
    Vertex u;
    Vertex v;
    double w;
};

// A set of faulty vertices: sorted, duplicate-free vertex ids.
class FaultSet {
public:
    FaultSet() = default;
    FaultSet(std::initializer_list<Vertex> vs);
    explicit FaultSet(std::vector<Vertex> vs);  // sorts and dedupes

    bool contains(Vertex v) const;
    void insert(Vertex v);  // no-op if already present

    std::size_t size() const { return vs_.size(); }
    bool empty() const { return vs_.empty(); }
    const std::vector<Vertex>& vertices() const { return vs_; }
    auto begin() const { return vs_.begin(); }
    auto end() const { return vs_.end(); }

    // Membership mask over [0, n); entries are 1 for faulty vertices.
    std::vector<char> mask(std::size_t n) const;

    friend bool operator==(const FaultSet&, const FaultSet&) = default;

private:
    std::vector<Vertex> vs_;
};

// Undirected weighted graph with vertex ids 0..n-1.  No self-loops, no
// parallel edges, strictly positive finite weights.  Immutable once built;
// edge ids index the construction-order edge list (the tie-break order for
// everything downstream).
class WeightedGraph {
public:
    WeightedGraph() = default;

    // Validates and indexes the edge list; throws std::invalid_argument on
    // out-of-range ids, self-loops, non-positive/non-finite weights, or
    // duplicate edges (in either orientation).
    static WeightedGraph from_edges(std::size_t n, std::vector<Edge> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    // Neighbors of v as (neighbor, edge id) pairs, in edge-list order.
    const std::vector<std::pair<Vertex, EdgeId>>& neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }

    // Edge id of {u, v}, or -1 when absent.
    EdgeId find_edge(Vertex u, Vertex v) const;

    bool is_unit_weighted() const;
    // Copy with every weight set to 1 (same structure and edge order).
    WeightedGraph unit_weighted_view() const;

    // Free-form annotation carried into the '#' comment line on save.
    const std::string& comment() const { return comment_; }
    void set_comment(std::string c) { comment_ = std::move(c); }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj_;
    std::string comment_;
};

// Edge-list text format: first non-comment line is the vertex count n;
// every following line is "u v w" (or "u v" for an implied weight 1);
// lines starting with '#' are comments.  Throws ParseError with a line
// number on malformed input.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(const std::string& text);
WeightedGraph load_graph(const std::string& path);
void save_graph(const WeightedGraph& g, std::ostream& out);
void save_graph(const WeightedGraph& g, const std::string& path);

// Weight formatting shared by graph and emulator serialization: integral
// values print without a decimal point, everything else round-trips via
// max-precision %g.  Deterministic for golden-file comparisons.
std::string format_weight(double w);

}  // namespace vftem
