#include "ticc/encode.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ticc/errors.hpp"

namespace ticc {

bool is_causal_order(const CodeSpec& spec, const EncodeOrder& order) {
    const int c = spec.checks();
    if (static_cast<int>(order.check_of_stream.size()) != c) return false;
    std::vector<bool> used(c, false);
    for (int t : order.check_of_stream) {
        if (t < 0 || t >= c || used[t]) return false;
        used[t] = true;
    }
    for (int i = 0; i < c; ++i) {
        const int t = order.check_of_stream[i];
        const int solved = spec.delay(t, i);
        for (int j = 0; j < c; ++j) {
            if (j == i) continue;
            const int o = spec.delay(t, j);
            if (o > solved || (o == solved && j > i)) return false;
        }
    }
    return true;
}

std::optional<EncodeOrder> find_staircase(const CodeSpec& spec) {
    validate(spec);
    const int c = spec.checks();
    // Enumerate check-to-stream maps in lexicographic order; with c small
    // the factorial search is immediate.
    std::vector<int> stream_of_check(c);
    std::iota(stream_of_check.begin(), stream_of_check.end(), 0);
    do {
        EncodeOrder order;
        order.check_of_stream.assign(c, -1);
        for (int t = 0; t < c; ++t) order.check_of_stream[stream_of_check[t]] = t;
        if (is_causal_order(spec, order)) return order;
    } while (std::next_permutation(stream_of_check.begin(), stream_of_check.end()));
    return std::nullopt;
}

std::vector<std::uint8_t> encode(const TannerGraph& graph, const EncodeOrder& order,
                                 const std::vector<std::uint8_t>& info_bits) {
    const CodeSpec& spec = graph.spec();
    if (!is_causal_order(spec, order))
        throw error(errc::invalid_parameters, "encode order is not a valid staircase for this spec");
    const int n = spec.n;
    const int c = spec.checks();
    const int L = graph.stream_len();
    const int W = spec.w;
    const int T = graph.positions_per_stream();
    if (info_bits.size() != static_cast<std::size_t>(spec.k) * L)
        throw error(errc::invalid_parameters, "info_bits must hold k*stream_len bits");

    std::vector<std::uint8_t> bits(graph.num_variables(), 0);
    for (int r = 0; r < spec.k; ++r)
        for (int t = 0; t < L; ++t)
            bits[graph.variable_id(c + 1 + r, W + t)] = info_bits[static_cast<std::size_t>(r) * L + t] & 1;

    // Scan positions left to right; within a position, parity streams in
    // ascending index. Each payload parity bit is solved from the unique
    // check instance whose tap on that stream sits at the current position;
    // causality guarantees every other tap of that instance is already
    // fixed. Parity positions inside the seeded zones stay zero.
    for (int p = 0; p < T; ++p) {
        const bool payload = p >= W && p < L + W;
        if (!payload) continue;
        for (int i = 0; i < c; ++i) {
            const int t = order.check_of_stream[i];
            const int s = p - spec.delay(t, i);
            if (s < graph.shift_min(t + 1) || s > graph.shift_max(t + 1)) continue;
            std::uint8_t acc = 0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                acc ^= bits[graph.variable_id(j + 1, s + spec.delay(t, j))];
            }
            bits[graph.variable_id(i + 1, p)] = acc;
        }
    }

    // Instances not used to solve a payload parity bit constrain bits that
    // are all already fixed; any violated one means the given info bits do
    // not extend to a codeword of the terminated graph.
    for (CheckId ch = 0; ch < graph.num_checks(); ++ch) {
        std::uint8_t acc = 0;
        for (VarId v : graph.neighbors(ch)) acc ^= bits[v];
        if (acc)
            throw error(errc::inconsistent_boundary,
                        "check type " + std::to_string(graph.check_type(ch)) + " at shift " +
                            std::to_string(graph.check_shift(ch)) +
                            " is violated by the seeded boundary; these info bits do not "
                            "extend to a codeword");
    }
    return bits;
}

} // namespace ticc
