#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"
#include "vftem/oracle.hpp"

namespace vftem {

// How builders decide whether a candidate edge is forced: Exhaustive
// enumerates every fault set up to size f against the exact weighted
// distance; Approximate runs the greedy polynomial fault-set search over
// the unweighted view (witnesses may then have up to (2k-2)*f vertices).
enum class CheckMode { Exhaustive, Approximate };

struct BuildParams {
    std::size_t f = 0;    // faults tolerated
    int k = 3;            // stretch parameter (stretch 2k-1)
    double d = 1.0;       // sampling degree parameter (>= 1)
    int b = 1;            // bucket size (>= 1)
    CheckMode check_mode = CheckMode::Exhaustive;
    std::uint64_t seed = 0;

    // Constants behind d and b; kept so a params value is self-describing.
    double polylog_constant = 1.0;  // multiplier on the log(n) factor of d
    double c = 1.0;                 // d is also >= c * f
    double c_b = 1.0;               // b = ceil(c_b * k * d)

    // Work budgets for the exhaustive oracle and local-path enumeration.
    std::uint64_t subset_cap = kDefaultSubsetCap;
    std::uint64_t path_cap = 100'000'000;

    // Admit edge-simple walks (repeated vertices) in local-path sampling.
    bool include_non_simple = false;
};

// Standard parameter choice:
//   k odd:  d = max(polylog_constant * ln(n) * f^(1/2 - 1/(2k)) * n^(1/k), c*f)
//   k even: d = max(polylog_constant * ln(n) * f^(1/2)          * n^(1/k), c*f)
// clamped to >= 1; in Approximate mode d is additionally multiplied by
// (2k-2).  b = ceil(c_b * k * d).  Throws std::invalid_argument for n = 0 or
// k < 2.
BuildParams choose_params(std::size_t n, std::size_t f, int k, double polylog_constant = 1.0,
                          double c = 1.0, double c_b = 1.0,
                          CheckMode mode = CheckMode::Exhaustive, std::uint64_t seed = 0);

// Test hook: called for every forced candidate edge just before it is
// inserted, with the pre-insertion emulator, the edge, and the witness the
// oracle produced.
using BuildObserver =
    std::function<void(const EmulatorGraph& pre, Vertex u, Vertex v, double w, const FaultSet&)>;

// Greedy 5-emulator tolerating f vertex faults (stretch-5 semantics, k = 3):
// edges in nondecreasing (weight, id) order; a candidate (u,v) is added as a
// spanner edge when some fault set F makes the current emulator distance
// exceed 5*w(u,v); then every pair (s,t) with s a surviving spanner neighbor
// of u and t one of v (s != v, t != u, s != t, both outside F) becomes an
// emulator edge with probability d^-2.  params.k must be 3.
EmulatorGraph build_vft_5_emulator(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                                   const BuildParams& params, const BuildObserver& observer = {});

// Greedy (2k-1)-emulator tolerating f vertex faults: same forced-edge rule
// with bound (2k-1)*w(u,v); each inserted spanner edge takes the next bucket
// slot at both endpoints, and every local path of j <= k edges through it
// (j >= 2; the 1-edge path would just re-add the spanner edge) contributes
// its endpoint pair as an emulator edge with probability d^-(j-1).
EmulatorGraph build_vft_emulator(std::shared_ptr<const WeightedGraph> g, std::size_t f, int k,
                                 const BuildParams& params, const BuildObserver& observer = {});

// The same greedy loop with the sampling step removed: a plain fault-
// tolerant (2k-1)-spanner.  Output has no emulator edges.
EmulatorGraph build_vft_spanner_greedy(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                                       int k, const BuildParams& params,
                                       const BuildObserver& observer = {});

// All paths of at most max_edges spanner edges that contain spanner edge e
// and are local: at every internal vertex the two incident path edges lie in
// the same bucket of that vertex.  Simple paths only unless
// include_non_simple, which admits edge-simple walks.  Each path is reported
// once, oriented with its lexicographically smaller endpoint first;
// enumeration order is deterministic.  Throws BudgetExceeded past path_cap
// and std::logic_error when the emulator has no buckets.
std::vector<LocalPath> enumerate_local_paths_through(const EmulatorGraph& h, EdgeId e,
                                                     int max_edges,
                                                     std::uint64_t path_cap = 100'000'000,
                                                     bool include_non_simple = false);

}  // namespace vftem
