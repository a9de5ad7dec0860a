#include "ticc/decode.hpp"

#include <algorithm>
#include <string>

#include "ticc/errors.hpp"

namespace ticc {

namespace {

DecodeResult peel_impl(const TannerGraph& graph, const ErasurePattern& pattern, PeelOrder order,
                       std::vector<std::uint8_t>* values) {
    if (pattern.erased.size() != graph.num_variables())
        throw error(errc::invalid_parameters, "pattern does not match graph");

    std::vector<std::uint8_t> erased(pattern.erased);
    std::vector<std::uint32_t> deg(graph.num_checks(), 0);
    std::uint64_t initially_erased = 0;
    for (VarId v = 0; v < graph.num_variables(); ++v)
        if (erased[v]) {
            ++initially_erased;
            for (CheckId c : graph.co_checks(v)) ++deg[c];
        }

    // Worklist of check instances whose erased degree reached one. A check
    // may be enqueued once per degree change; stale entries are skipped by
    // re-testing the counter on pop.
    std::vector<CheckId> queue;
    queue.reserve(1024);
    for (CheckId c = 0; c < graph.num_checks(); ++c)
        if (deg[c] == 1) queue.push_back(c);

    DecodeResult result;
    std::size_t head = 0;                       // forward: FIFO cursor
    std::size_t wave_end = queue.size();        // forward: wave boundary
    const bool forward = order == PeelOrder::forward;
    if (forward && !queue.empty()) result.peel_rounds = 1;

    while (forward ? head < queue.size() : !queue.empty()) {
        CheckId c;
        if (forward) {
            if (head == wave_end) {
                ++result.peel_rounds;
                wave_end = queue.size();
            }
            c = queue[head++];
        } else {
            c = queue.back();
            queue.pop_back();
        }
        if (deg[c] != 1) continue;

        auto nbrs = graph.neighbors(c);
        VarId lone = 0;
        for (VarId v : nbrs)
            if (erased[v]) {
                lone = v;
                break;
            }
        if (values) {
            std::uint8_t bit = 0;
            for (VarId v : nbrs)
                if (v != lone) bit ^= (*values)[v];
            (*values)[lone] = bit;
        }
        erased[lone] = 0;
        ++result.resolved_count;
        if (!forward) ++result.peel_rounds;
        for (CheckId c2 : graph.co_checks(lone)) {
            if (--deg[c2] == 1) queue.push_back(c2);
        }
    }

    result.residual.reserve(initially_erased - result.resolved_count);
    for (VarId v = 0; v < graph.num_variables(); ++v)
        if (erased[v]) result.residual.push_back(v);
    result.success = result.residual.empty();
    return result;
}

} // namespace

DecodeResult peel(const TannerGraph& graph, const ErasurePattern& pattern, PeelOrder order) {
    return peel_impl(graph, pattern, order, nullptr);
}

DecodeResult peel_values(const TannerGraph& graph, const ErasurePattern& pattern,
                         std::vector<std::uint8_t>& values) {
    if (values.size() != graph.num_variables())
        throw error(errc::invalid_parameters, "values vector does not match graph");
    return peel_impl(graph, pattern, PeelOrder::forward, &values);
}

bool is_stopping_set(const TannerGraph& graph, std::span<const VarId> vars) {
    if (vars.empty()) return true;
    std::vector<std::uint8_t> member(graph.num_variables(), 0);
    for (VarId v : vars) {
        if (v >= graph.num_variables())
            throw error(errc::invalid_id, "variable id " + std::to_string(v) + " out of range");
        if (graph.is_seeded(v))
            throw error(errc::invalid_id, "variable id " + std::to_string(v) + " is seeded");
        member[v] = 1;
    }
    for (VarId v : vars)
        for (CheckId c : graph.co_checks(v)) {
            int count = 0;
            for (VarId u : graph.neighbors(c)) count += member[u];
            if (count == 1) return false;
        }
    return true;
}

OracleVerdict map_oracle(const TannerGraph& graph, const ErasurePattern& pattern,
                         std::uint64_t budget) {
    if (pattern.erased.size() != graph.num_variables())
        throw error(errc::invalid_parameters, "pattern does not match graph");

    std::vector<VarId> cols;
    for (VarId v = 0; v < graph.num_variables(); ++v)
        if (pattern.erased[v]) cols.push_back(v);
    if (cols.empty()) return OracleVerdict::unique;
    if (cols.size() > budget)
        throw error(errc::budget_exceeded, "oracle budget " + std::to_string(budget) +
                                               " exceeded: " + std::to_string(cols.size()) +
                                               " erased variables");

    std::vector<std::uint32_t> col_of(graph.num_variables(), 0);
    for (std::uint32_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;

    // Rows = check instances touching at least one erased variable,
    // restricted to erased columns. The right-hand side is identically zero
    // (known neighbors carry the all-zero codeword), so decoding is unique
    // iff the erased columns are linearly independent.
    const std::size_t words = (cols.size() + 63) / 64;
    std::vector<std::uint8_t> row_seen(graph.num_checks(), 0);
    std::vector<std::uint64_t> basis;                       // reduced rows, one per pivot
    std::vector<std::int64_t> basis_row_of_col(cols.size(), -1);
    std::vector<std::uint64_t> row(words);
    std::size_t rank = 0;

    for (VarId v : cols) {
        for (CheckId c : graph.co_checks(v)) {
            if (row_seen[c]) continue;
            row_seen[c] = 1;
            std::fill(row.begin(), row.end(), 0);
            for (VarId u : graph.neighbors(c))
                if (pattern.erased[u]) {
                    const std::uint32_t col = col_of[u];
                    row[col >> 6] |= 1ull << (col & 63);
                }
            // Reduce against the basis, then adopt the remainder as a pivot.
            for (;;) {
                std::uint32_t lead = 0;
                bool found = false;
                for (std::size_t wi = 0; wi < words; ++wi)
                    if (row[wi]) {
                        lead = static_cast<std::uint32_t>(wi * 64 + __builtin_ctzll(row[wi]));
                        found = true;
                        break;
                    }
                if (!found) break;
                const std::int64_t r = basis_row_of_col[lead];
                if (r < 0) {
                    basis_row_of_col[lead] = static_cast<std::int64_t>(rank);
                    basis.insert(basis.end(), row.begin(), row.end());
                    ++rank;
                    break;
                }
                const std::uint64_t* b = basis.data() + static_cast<std::size_t>(r) * words;
                for (std::size_t wi = 0; wi < words; ++wi) row[wi] ^= b[wi];
            }
            if (rank == cols.size()) return OracleVerdict::unique;
        }
    }
    return rank == cols.size() ? OracleVerdict::unique : OracleVerdict::ambiguous;
}

} // namespace ticc
