#ifndef TICC_STOPPING_HPP
#define TICC_STOPPING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ticc/decode.hpp"
#include "ticc/tanner.hpp"

namespace ticc {

/// Lower bound ceil(3^(n-k) / sqrt(2(n-k))) on the minimum stopping-set
/// size of a typical ensemble code. Integer-exact: the ceiling is taken by
/// comparing 2(n-k)*m^2 against 9^(n-k), no floating-point boundaries.
std::uint64_t lemma_bound(int n, int k);

/// Search window over absolute positions; trimmed to the payload region.
struct SearchScope {
    int lo = -1; // -1: payload start
    int hi = -1; // -1: payload end
};

struct StoppingSearchResult {
    /// A minimum-size stopping set over the searched scope, if one of size
    /// <= max_size exists; sorted variable ids.
    std::optional<std::vector<VarId>> found;
    /// No nonempty stopping set of size < this exists within the scope.
    int size_bound_proved = 0;
    std::uint64_t nodes_expanded = 0;
    /// True when the anchored search also proves absence everywhere in the
    /// payload: anchors sit at the scope start, adjacency over payload
    /// variables is translation invariant (every adjacent check instance
    /// exists because W > M), and a minimum set is connected through shared
    /// checks, so its width is below (max_size-1)*M and any such set shifts
    /// onto an anchor. Requires room: scope width >= (max_size-1)*M + 1.
    bool exhaustive = false;
};

/// Exact branch-and-bound search for a minimum nonempty stopping set.
///
/// Seeds one anchor per stream at the scope start; repeatedly picks a check
/// instance with exactly one member and branches on every way to give it a
/// second member (fail-first: fewest candidates first), pruning at
/// max_size. If `found` is empty, no nonempty stopping set of size
/// <= max_size contains an anchored variable.
///
/// Throws errc::budget_exceeded when node expansions hit the cap; that is
/// distinct from an exhausted ("not found") search.
StoppingSearchResult search_min_stopping_set(const TannerGraph& graph, int max_size,
                                             SearchScope scope = {},
                                             std::uint64_t node_budget = 50'000'000);

/// Stochastic complement to the exact search: peel `trials` random patterns
/// at a high erasure rate and collect the nonempty residual sizes
/// (ascending). The minimum observed is an upper bound on the code's
/// minimum stopping-set size.
std::vector<std::uint64_t> sample_stopping_sets(const TannerGraph& graph, double epsilon_high,
                                                int trials, std::uint64_t seed);

} // namespace ticc

#endif
