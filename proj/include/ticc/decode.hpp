#ifndef TICC_DECODE_HPP
#define TICC_DECODE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ticc/channel.hpp"
#include "ticc/tanner.hpp"

namespace ticc {

struct DecodeResult {
    std::vector<VarId> residual; // still-erased variables, ascending id
    std::uint64_t resolved_count = 0;
    bool success = false;
    std::uint32_t peel_rounds = 0; // cascade depth (waves of resolutions)
};

/// Worklist scheduling for the peeling decoder. The residual is
/// order-independent (confluence); the knob exists so tests can prove it.
enum class PeelOrder { forward, reverse };

/// Peeling decoder: repeatedly resolve the lone erased neighbor of any
/// check instance with exactly one erased neighbor. The residual is the
/// unique maximal stopping set contained in the erased set.
DecodeResult peel(const TannerGraph& graph, const ErasurePattern& pattern,
                  PeelOrder order = PeelOrder::forward);

/// Value-tracking variant for encode round-trips: `values` holds the
/// received bit per variable (entries under erased positions are ignored
/// and overwritten as the decoder resolves them).
DecodeResult peel_values(const TannerGraph& graph, const ErasurePattern& pattern,
                         std::vector<std::uint8_t>& values);

/// True iff no check instance adjacent to `vars` has exactly one member.
/// The empty set is a stopping set. Members must be payload variables.
bool is_stopping_set(const TannerGraph& graph, std::span<const VarId> vars);

enum class OracleVerdict { unique, ambiguous };

/// Exact erasure-decoding oracle: builds the check/variable incidence
/// restricted to erased columns and reports `unique` iff those columns are
/// linearly independent over GF(2) (bit-packed Gaussian elimination).
/// Throws errc::budget_exceeded if the erased count exceeds the budget.
OracleVerdict map_oracle(const TannerGraph& graph, const ErasurePattern& pattern,
                         std::uint64_t budget = 5000);

} // namespace ticc

#endif
