#pragma once

#include <cstdint>
#include <optional>

#include "vftem/graph.hpp"
#include "vftem/rng.hpp"

namespace vftem {

// t-fold blow-up: vertex (u,i) gets id u*t + i for i in [0,t); every base
// edge {u,v} becomes the complete bipartite set {(u,i),(v,j)} (all unit
// weight), so the result has n*t vertices and t^2 * m edges.  Edge order:
// base edge order, then i, then j.  Throws std::invalid_argument for t < 1
// and std::overflow_error when n*t or t^2*m would not fit.
WeightedGraph blow_up(const WeightedGraph& g, int t);

// Lower-bound family for stretch 3: blow-up of a girth->=6 base with
// t = floor(f/4).  Requires f >= 4.  The result's comment records f and t.
WeightedGraph lb_instance_stretch3(std::size_t f, const WeightedGraph& base);

// Lower-bound family for stretch 2k-1: blow-up of a girth >= 2k+2 base with
// t = ceil(sqrt(f)).  Requires f >= 1 and k >= 2; validates the base girth.
WeightedGraph lb_instance_stretch2k1(std::size_t f, const WeightedGraph& base, int k);

// Point-line incidence graph of the projective plane of prime order q:
// 2*(q^2+q+1) vertices (points first, then lines), (q+1)*(q^2+q+1) edges,
// (q+1)-regular, bipartite, girth exactly 6.  Throws std::invalid_argument
// when q is not prime.
WeightedGraph projective_plane_incidence(int q);

// The q=2 incidence graph (14 vertices, 21 edges, girth 6): the Heawood
// graph, the standard girth-6 base shipped for the lower-bound families.
WeightedGraph heawood_graph();

// Length of a shortest cycle under hop semantics (weights ignored);
// nullopt for forests.
std::optional<std::size_t> girth(const WeightedGraph& g);

enum class WeightMode {
    Unit,         // all weights 1
    UniformInt,   // independent uniform integers in [1, max_weight]
    DistinctInt,  // a random permutation of 1..m (strict weight order)
};

// G(n, p): each pair independently with probability p, then weights per
// mode.  Deterministic for a fixed (n, p, mode, seed).
WeightedGraph random_gnp(std::size_t n, double p, WeightMode mode, std::uint64_t seed,
                         int max_weight = 100);

// G(n, m): m distinct pairs sampled uniformly, listed in lexicographic
// order, then weights per mode.
WeightedGraph random_gnm(std::size_t n, std::size_t m, WeightMode mode, std::uint64_t seed,
                         int max_weight = 100);

}  // namespace vftem
