#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vftem/graph.hpp"

namespace vftem {

// A fault-tolerant emulator under construction or finished: a spanner part
// (real graph edges, fixed weights) plus an emulator part (weightless vertex
// pairs whose effective weight under a fault set F is the surviving-graph
// distance between the endpoints).  Spanner edges carry the fault-set witness
// that forced them; per-vertex incidence arrival order drives the bucket
// (locality) structure used by local-path enumeration.
class EmulatorGraph {
public:
    EmulatorGraph() = default;
    // bucket_size = 0 disables bucketing (bucket queries then throw).
    explicit EmulatorGraph(std::shared_ptr<const WeightedGraph> base, int bucket_size = 0);

    const WeightedGraph& base() const { return *base_; }
    const std::shared_ptr<const WeightedGraph>& base_ptr() const { return base_; }

    // --- construction ------------------------------------------------------

    // Appends a spanner edge.  The edge must exist in the base graph with the
    // same weight, must not repeat, and weights must arrive in nondecreasing
    // order (insertion index is the global tie-break).  Returns its id.
    EdgeId add_spanner_edge(Vertex u, Vertex v, double w, FaultSet witness);

    // Appends an emulator pair (stored with smaller endpoint first).
    // Returns false when the pair is already present (deduplicated no-op).
    bool add_emulator_edge(Vertex s, Vertex t);

    // --- structure queries --------------------------------------------------

    std::size_t num_vertices() const { return base_ ? base_->num_vertices() : 0; }
    std::size_t num_spanner_edges() const { return spanner_edges_.size(); }
    std::size_t num_emulator_edges() const { return emulator_edges_.size(); }
    std::size_t num_edges() const { return spanner_edges_.size() + emulator_edges_.size(); }

    const std::vector<Edge>& spanner_edges() const { return spanner_edges_; }
    const Edge& spanner_edge(EdgeId e) const { return spanner_edges_[static_cast<std::size_t>(e)]; }
    const std::vector<std::pair<Vertex, Vertex>>& emulator_edges() const { return emulator_edges_; }
    const std::vector<FaultSet>& witnesses() const { return witnesses_; }
    const FaultSet& witness(EdgeId spanner_edge) const {
        return witnesses_[static_cast<std::size_t>(spanner_edge)];
    }

    bool has_spanner_edge(Vertex u, Vertex v) const;
    bool has_emulator_edge(Vertex u, Vertex v) const;
    // Any H-edge between u and v, spanner or emulator.
    bool has_edge(Vertex u, Vertex v) const;

    // Spanner incidences of v as (neighbor, spanner edge id), arrival order.
    const std::vector<std::pair<Vertex, EdgeId>>& spanner_neighbors(Vertex v) const {
        return sp_adj_[static_cast<std::size_t>(v)];
    }
    // Emulator incidences of v as (other endpoint, emulator edge index).
    const std::vector<std::pair<Vertex, int>>& emulator_neighbors(Vertex v) const {
        return em_adj_[static_cast<std::size_t>(v)];
    }

    // --- buckets ------------------------------------------------------------

    int bucket_size() const { return bucket_size_; }
    bool has_buckets() const { return bucket_size_ > 0; }

    // Bucket index (0-based) of spanner edge e at its endpoint v: the i-th
    // arriving incidence at v (0-based) lies in bucket i / bucket_size.
    // Slots are permanent once assigned.  Throws std::logic_error when
    // bucketing is disabled, std::invalid_argument when e is not incident
    // to v.
    int bucket_of(Vertex v, EdgeId e) const;

    // --- serialization -------------------------------------------------------

    // Text form with stable ordering: sections SPANNER ("u v w", insertion
    // order, smaller endpoint first), EMULATOR ("s t", insertion order),
    // WITNESS ("u v : f1 f2 ...", per spanner edge, fault ids ascending),
    // BUCKETS ("b <bucket_size>", omitted when bucketing is disabled).
    void serialize(std::ostream& out) const;
    std::string serialize() const;

    // Inverse of serialize against a given base graph.  Validates spanner
    // edges against the base and witness/endpoint ranges; throws ParseError
    // on malformed text.
    static EmulatorGraph parse(std::shared_ptr<const WeightedGraph> base, std::istream& in);
    static EmulatorGraph parse(std::shared_ptr<const WeightedGraph> base, const std::string& text);
    static EmulatorGraph load(std::shared_ptr<const WeightedGraph> base, const std::string& path);
    void save(const std::string& path) const;

private:
    std::uint64_t pair_key(Vertex u, Vertex v) const;

    std::shared_ptr<const WeightedGraph> base_;
    std::vector<Edge> spanner_edges_;  // insertion order = nondecreasing (w, id)
    std::vector<FaultSet> witnesses_;  // parallel to spanner_edges_
    std::vector<std::pair<Vertex, Vertex>> emulator_edges_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> sp_adj_;
    std::vector<std::vector<std::pair<Vertex, int>>> em_adj_;
    // Arrival position of each spanner edge at each endpoint (u-side, v-side).
    std::vector<std::pair<int, int>> sp_pos_;
    std::unordered_set<std::uint64_t> sp_keys_;
    std::unordered_set<std::uint64_t> em_keys_;
    int bucket_size_ = 0;
};

// A path in the spanner part of an emulator: vertices v0..vj joined by
// spanner edge ids e1..ej (edge ei connects v_{i-1} and v_i).
struct LocalPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;

    std::size_t num_edges() const { return edges.size(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

}  // namespace vftem
