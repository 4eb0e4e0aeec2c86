#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"

namespace vftem {

// One stretch violation: under fault set f, the emulator distance `got`
// between u and v exceeded `allowed` (or fell below the graph distance).
struct Violation {
    FaultSet faults;
    Vertex u = 0;
    Vertex v = 0;
    Dist got = 0;
    Dist allowed = 0;
};

struct VerificationReport {
    bool passed = false;
    std::uint64_t checked_pairs = 0;     // (F, u<v) combinations examined
    std::uint64_t violation_count = 0;   // full count; `violations` keeps <= 100
    double worst_stretch = 0.0;          // max emulator/graph ratio over finite pairs
    std::vector<Violation> violations;   // first kMaxStoredViolations, scan order

    static constexpr std::size_t kMaxStoredViolations = 100;

    // Compact JSON rendering (infinities as the string "inf").
    std::string to_json() const;
};

inline constexpr std::uint64_t kDefaultVerifyBudget = 1'000'000'000;

// Exhaustive stretch check: for every fault set F with |F| <= f and every
// surviving pair u < v, requires
//   graph_dist(g,F,u,v) <= emulator_dist(h,F,u,v) <= t * graph_dist(g,F,u,v).
// Pairs whose graph distance is infinite impose no requirement.  Refuses
// instances whose work estimate C(n,<=f) * n^2 exceeds budget by throwing
// BudgetExceeded.  The scan always completes (the stored violation list is
// merely truncated), so `passed` reflects every combination.
VerificationReport verify_multiplicative(const WeightedGraph& g, const EmulatorGraph& h,
                                         std::size_t f, double t,
                                         std::uint64_t budget = kDefaultVerifyBudget);

// Same scan with the additive allowance graph_dist + c.
VerificationReport verify_additive(const WeightedGraph& g, const EmulatorGraph& h, std::size_t f,
                                   double c, std::uint64_t budget = kDefaultVerifyBudget);

// Number of 3-edge paths (s,u,v,t) in the spanner part whose middle edge is
// strictly heaviest under the tie-broken order (weight, then insertion id).
// Each undirected path is counted once.
std::uint64_t count_middle_heavy_3paths(const EmulatorGraph& h);

// Number of k-edge alternating paths in g: walks v0..vk whose even-numbered
// edges (1-based positions 2, 4, ...) are strictly heavier than both
// neighboring path edges under the tie-broken order (for even k the last
// edge only has its predecessor to beat).  With edge_simple, walks may not
// repeat edges (vertices may repeat); without it, vertex-simple paths only.
// Each path is counted once (orientation-independent).
std::uint64_t count_alternating_kpaths(const WeightedGraph& g, int k, bool edge_simple);

// True when every pair of consecutive path edges shares a bucket at their
// common vertex.  Requires a bucketed emulator; path edges must be spanner
// edges of h.
bool is_local(const LocalPath& path, const EmulatorGraph& h);

// Simple + Alternating + Local + Avoids-faults: the path repeats no vertex,
// alternates as above (spanner tie-broken order), is local, and no path
// vertex lies in the recorded witness of any path edge.
bool is_sala(const LocalPath& path, const EmulatorGraph& h);

}  // namespace vftem
