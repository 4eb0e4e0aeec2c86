#pragma once

#include <cstdint>
#include <optional>

#include "vftem/distances.hpp"
#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"

namespace vftem {

enum class WitnessMethod { Exhaustive, Approximate };

// Outcome of a fault-set search for a candidate edge (u,v): YES means a
// fault set was found under which the current emulator stretches (u,v)
// beyond the bound, and fault_set holds it; NO means none was found.
struct WitnessResult {
    bool forced = false;                  // YES/NO
    std::optional<FaultSet> fault_set;    // present iff forced
    WitnessMethod method = WitnessMethod::Exhaustive;
    int iterations = 0;                   // greedy rounds (approximate method only)
};

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

// Exhaustive oracle: enumerates fault sets F ⊆ V \ {u,v} with |F| <= f in
// lexicographic order (as sorted sequences: {} before {0} before {0,1}
// before {1}) and returns YES with the first F whose emulator distance
// dist_{H\F}(u,v) exceeds bound; NO when none qualifies.  Throws
// BudgetExceeded once subset_cap candidate sets have been examined.
WitnessResult exhaustive_witness(const EmulatorGraph& h, Vertex u, Vertex v, std::size_t f,
                                 Dist bound, std::uint64_t subset_cap = kDefaultSubsetCap);

// Greedy polynomial-time fault-set search over the unweighted view.
//
// Returns NO immediately when (u,v) is an H-edge.  Otherwise repeatedly
// takes the shortest surviving u-v path in H (hop semantics; ties broken
// toward the lexicographically smallest vertex sequence), replaces emulator
// edges by shortest surviving underlying paths in g (lexicographically
// smallest; possibly revisiting vertices, duplicates collapse), and faults
// every internal vertex — until the surviving hop distance exceeds 2k-1.
// YES iff the accumulated fault set has size <= (2k-2)*f.
//
// Guarantees: if some F' ⊆ V \ {u,v} with |F'| <= f makes the hop distance
// exceed 2k-1 the answer is YES; if no F' of size <= (2k-2)*f does, the
// answer is NO.
WitnessResult find_fault_set(const WeightedGraph& g, const EmulatorGraph& h, Vertex u, Vertex v,
                             int k, std::size_t f);

}  // namespace vftem
