#include "ticc/stopping.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ticc/channel.hpp"
#include "ticc/errors.hpp"
#include "ticc/rng.hpp"

namespace ticc {

std::uint64_t lemma_bound(int n, int k) {
    if (k <= 0 || k >= n) throw error(errc::invalid_parameters, "require 0 < k < n");
    const int c = n - k;
    if (c > 40) throw error(errc::invalid_parameters, "n-k too large for exact integer bound");
    unsigned __int128 pow9 = 1;
    for (int i = 0; i < c; ++i) pow9 *= 9;
    const unsigned __int128 two_c = static_cast<unsigned>(2 * c);

    const auto holds = [&](std::uint64_t m) {
        return two_c * m * static_cast<unsigned __int128>(m) >= pow9;
    };
    // Smallest m with 2c*m^2 >= 9^c, located from a float guess and fixed
    // up exactly.
    std::uint64_t m = static_cast<std::uint64_t>(
        std::ceil(std::pow(3.0L, c) / std::sqrt(2.0L * c)));
    if (m == 0) m = 1;
    while (!holds(m)) ++m;
    while (m > 1 && holds(m - 1)) --m;
    return m;
}

namespace {

struct SearchState {
    const TannerGraph& graph;
    int target = 0;
    int window_lo = 0;
    int window_hi = 0;
    std::uint64_t node_budget = 0;
    std::uint64_t nodes = 0;

    std::vector<VarId> members;
    std::vector<std::uint8_t> is_member;
    std::vector<std::uint8_t> is_excluded;
    std::optional<std::vector<VarId>> found;

    explicit SearchState(const TannerGraph& g)
        : graph(g), is_member(g.num_variables(), 0), is_excluded(g.num_variables(), 0) {}

    bool candidate_ok(VarId v) const {
        if (is_member[v] || is_excluded[v]) return false;
        const int p = graph.position_of(v);
        return p >= window_lo && p < window_hi;
    }

    // Returns true once a stopping set is found (unwinds the recursion).
    bool dfs() {
        if (++nodes > node_budget)
            throw error(errc::budget_exceeded,
                        "stopping-set search expanded " + std::to_string(nodes) + " nodes");

        // Violated check = adjacent instance with exactly one member. All
        // must gain a second member; branch on the one with the fewest ways
        // to do so.
        CheckId branch_check = 0;
        int best_candidates = -1;
        bool any_violated = false;
        for (VarId v : members) {
            for (CheckId c : graph.co_checks(v)) {
                int count = 0;
                for (VarId u : graph.neighbors(c)) count += is_member[u];
                if (count != 1) continue;
                any_violated = true;
                int cands = 0;
                for (VarId u : graph.neighbors(c))
                    if (candidate_ok(u)) ++cands;
                if (cands == 0) return false; // dead branch
                if (best_candidates < 0 || cands < best_candidates) {
                    best_candidates = cands;
                    branch_check = c;
                }
            }
        }
        if (!any_violated) {
            found = members;
            std::sort(found->begin(), found->end());
            return true;
        }
        if (static_cast<int>(members.size()) >= target) return false;

        std::vector<VarId> cands;
        cands.reserve(graph.spec().n);
        for (VarId u : graph.neighbors(branch_check))
            if (candidate_ok(u)) cands.push_back(u);

        // Sibling branches exclude earlier candidates so each extension set
        // is explored exactly once.
        bool ok = false;
        for (std::size_t i = 0; i < cands.size() && !ok; ++i) {
            const VarId v = cands[i];
            is_member[v] = 1;
            members.push_back(v);
            ok = dfs();
            members.pop_back();
            is_member[v] = 0;
            is_excluded[v] = 1;
        }
        for (VarId v : cands) is_excluded[v] = 0;
        return ok;
    }
};

} // namespace

StoppingSearchResult search_min_stopping_set(const TannerGraph& graph, int max_size,
                                             SearchScope scope, std::uint64_t node_budget) {
    if (max_size < 1) throw error(errc::invalid_parameters, "max_size must be >= 1");
    const int W = graph.spec().w;
    const int payload_lo = W;
    const int payload_hi = graph.stream_len() + W;
    const int lo = scope.lo < 0 ? payload_lo : scope.lo;
    const int hi = scope.hi < 0 ? payload_hi : scope.hi;
    if (lo < payload_lo || hi > payload_hi || lo >= hi)
        throw error(errc::invalid_parameters, "scope must be a nonempty window inside the payload");

    StoppingSearchResult result;
    result.exhaustive =
        static_cast<long long>(hi - lo) >= static_cast<long long>(max_size - 1) * memory(graph.spec()) + 1;

    SearchState state(graph);
    state.window_lo = lo;
    state.window_hi = hi;
    state.node_budget = node_budget;

    // Singletons are never stopping sets (every payload variable has n-k
    // co-checks seeing only it), so sizes start at 2. Iterative deepening
    // makes the first hit a minimum-size set.
    for (int target = 2; target <= max_size; ++target) {
        state.target = target;
        for (int stream = 1; stream <= graph.spec().n; ++stream) {
            const VarId anchor = graph.variable_id(stream, lo);
            state.members.assign(1, anchor);
            state.is_member[anchor] = 1;
            const bool hit = state.dfs();
            state.is_member[anchor] = 0;
            if (hit) {
                result.found = state.found;
                result.size_bound_proved = target;
                result.nodes_expanded = state.nodes;
                return result;
            }
        }
    }
    result.size_bound_proved = max_size + 1;
    result.nodes_expanded = state.nodes;
    return result;
}

std::vector<std::uint64_t> sample_stopping_sets(const TannerGraph& graph, double epsilon_high,
                                                int trials, std::uint64_t seed) {
    if (trials < 1) throw error(errc::invalid_parameters, "trials must be >= 1");
    std::vector<std::uint64_t> sizes;
    for (int t = 0; t < trials; ++t) {
        ErasurePattern pat = erase(graph, epsilon_high, derive_seed(seed, "ss-sample", t));
        DecodeResult res = peel(graph, pat);
        if (!res.success) sizes.push_back(res.residual.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace ticc
