#ifndef TICC_CHANNEL_HPP
#define TICC_CHANNEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ticc/tanner.hpp"

namespace ticc {

// One binary-erasure-channel realization over a graph's payload variables.
// Only erased/known flags are stored: with the all-zero codeword, peeling
// depends on nothing else. Seeded variables are never erased.
struct ErasurePattern {
    std::vector<std::uint8_t> erased; // indexed by VarId
    double epsilon = -1.0;            // -1 for synthetic patterns
    std::uint64_t seed = 0;
    std::uint64_t erased_count = 0;
};

/// Erase each payload variable independently with probability epsilon.
/// Deterministic in (graph, epsilon, seed).
ErasurePattern erase(const TannerGraph& graph, double epsilon, std::uint64_t seed);

/// Synthetic pattern with exactly the given payload variables erased.
/// Throws errc::invalid_id on out-of-range or seeded ids.
ErasurePattern pattern_from_set(const TannerGraph& graph, std::span<const VarId> erased_vars);

} // namespace ticc

#endif
