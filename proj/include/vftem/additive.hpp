#pragma once

#include <cstdint>
#include <memory>

#include "vftem/emulator.hpp"
#include "vftem/graph.hpp"

namespace vftem {

// Parameters of the additive builders for unweighted graphs.
struct AdditiveParams {
    std::size_t f = 0;
    double d = 1.0;  // light/dense degree threshold
    double p = 1.0;  // per-pair emulator sampling probability (capped at 1)
    std::uint64_t seed = 0;
};

// +4 builder: d = (f*n)^(1/3) when f <= sqrt(n), else 2f;
// p = min(1, 12 * d * ln(n) / n).
AdditiveParams additive4_params(std::size_t n, std::size_t f, std::uint64_t seed = 0);

// +2 builder: d = (f*n)^(1/2); p = min(1, 6 * d * ln(n) / n).
AdditiveParams additive2_params(std::size_t n, std::size_t f, std::uint64_t seed = 0);

// Shared additive construction on an unweighted graph g:
//   1. every vertex of degree <= d keeps all incident edges,
//   2. every denser vertex keeps edges to its ceil(d) smallest-id neighbors,
//   3. every unordered vertex pair becomes an emulator edge independently
//      with probability p.
// Throws std::invalid_argument when g has a non-unit weight.
EmulatorGraph build_additive(std::shared_ptr<const WeightedGraph> g, const AdditiveParams& params);

// Convenience wrappers choosing the parameters above: emulators with additive
// stretch +4 and +2 respectively, tolerating f vertex faults.
EmulatorGraph build_additive4(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                              std::uint64_t seed = 0);
EmulatorGraph build_additive2(std::shared_ptr<const WeightedGraph> g, std::size_t f,
                              std::uint64_t seed = 0);

}  // namespace vftem
