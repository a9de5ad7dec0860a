#ifndef TICC_ENCODE_HPP
#define TICC_ENCODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ticc/code_spec.hpp"
#include "ticc/tanner.hpp"

namespace ticc {

// Assignment of the n-k check types to the n-k parity streams (streams
// 1..n-k by convention) so that parity bits can be computed sequentially:
// the check assigned to parity stream i solves its tap on stream i, and
// every other parity tap of that check lands strictly earlier in the
// (position, stream index) scan order.
struct EncodeOrder {
    // check_of_stream[i] = 0-based check type assigned to parity stream i+1.
    std::vector<int> check_of_stream;

    int stream_of_check(int check) const {
        for (int i = 0; i < static_cast<int>(check_of_stream.size()); ++i)
            if (check_of_stream[i] == check) return i + 1;
        return 0;
    }

    bool operator==(const EncodeOrder&) const = default;
};

/// True iff the assignment satisfies the causal condition for spec.
bool is_causal_order(const CodeSpec& spec, const EncodeOrder& order);

/// Search all (n-k)! assignments; returns the lexicographically first valid
/// one (by the check-to-stream mapping), or nullopt if none exists.
std::optional<EncodeOrder> find_staircase(const CodeSpec& spec);

/// Sequentially encode info bits into a full variable assignment.
///
/// info_bits: row-major bits for the k information streams (streams
/// n-k+1..n) over the payload positions, i.e. info_bits[r*L + t] is the bit
/// of info stream r at payload position t. Seeded positions are zero on all
/// streams. Returns one bit per VarId with every check instance satisfied.
///
/// Throws errc::inconsistent_boundary if a check instance whose bits are
/// all already fixed (by seeding or by the termination) sums to one; random
/// info bits will generally hit this at the boundaries, since choosing tail
/// bits that terminate the parity streams is out of scope.
std::vector<std::uint8_t> encode(const TannerGraph& graph, const EncodeOrder& order,
                                 const std::vector<std::uint8_t>& info_bits);

} // namespace ticc

#endif
