#include "ticc/channel.hpp"

#include <string>

#include "ticc/errors.hpp"
#include "ticc/rng.hpp"

namespace ticc {

ErasurePattern erase(const TannerGraph& graph, double epsilon, std::uint64_t seed) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw error(errc::invalid_parameters, "epsilon must be in [0, 1]");
    ErasurePattern pat;
    pat.epsilon = epsilon;
    pat.seed = seed;
    pat.erased.assign(graph.num_variables(), 0);
    Rng rng(seed);
    const int n = graph.spec().n;
    const int w = graph.spec().w;
    const int payload_end = graph.stream_len() + w;
    // Payload variables in id order (position-major); one draw per variable.
    for (int p = w; p < payload_end; ++p) {
        const std::size_t base = static_cast<std::size_t>(p) * n;
        for (int j = 0; j < n; ++j)
            if (rng.uniform_real() < epsilon) {
                pat.erased[base + j] = 1;
                ++pat.erased_count;
            }
    }
    return pat;
}

ErasurePattern pattern_from_set(const TannerGraph& graph, std::span<const VarId> erased_vars) {
    ErasurePattern pat;
    pat.erased.assign(graph.num_variables(), 0);
    for (VarId v : erased_vars) {
        if (v >= graph.num_variables())
            throw error(errc::invalid_id, "variable id " + std::to_string(v) + " out of range");
        if (graph.is_seeded(v))
            throw error(errc::invalid_id, "variable id " + std::to_string(v) + " is seeded, cannot erase");
        if (!pat.erased[v]) {
            pat.erased[v] = 1;
            ++pat.erased_count;
        }
    }
    return pat;
}

} // namespace ticc
