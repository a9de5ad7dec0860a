#ifndef TICC_TANNER_HPP
#define TICC_TANNER_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ticc/code_spec.hpp"

namespace ticc {

using VarId = std::uint32_t;
using CheckId = std::uint32_t;

// Terminated Tanner graph of a CodeSpec unrolled over stream_len payload
// positions per stream, padded with w known-zero (seeded) positions on each
// side. Positions are absolute in [0, stream_len + 2w); payload occupies
// [w, stream_len + w). Streams are 1-based in the public interface.
//
// A check instance (type i, shift s) is adjacent to variable
// (stream j, s + d[i][j]) for every stream j; an instance exists iff all its
// taps land inside the padded range (no wraparound, no partial checks).
//
// Immutable after build(); decoding trials share it read-only.
class TannerGraph {
  public:
    static constexpr std::uint64_t kDefaultVariableBudget = 100'000'000;

    static TannerGraph build(const CodeSpec& spec, int stream_len,
                             std::uint64_t variable_budget = kDefaultVariableBudget);

    const CodeSpec& spec() const { return spec_; }
    int stream_len() const { return stream_len_; }
    int positions_per_stream() const { return positions_; }

    std::uint32_t num_variables() const { return num_variables_; }
    std::uint32_t num_checks() const { return num_checks_; }
    std::uint64_t num_edges() const { return static_cast<std::uint64_t>(num_checks_) * spec_.n; }
    std::uint64_t payload_variables() const {
        return static_cast<std::uint64_t>(spec_.n) * stream_len_;
    }

    // Variable ids interleave streams within a position: id = p*n + (j-1).
    VarId variable_id(int stream, int position) const {
        return static_cast<VarId>(position) * spec_.n + (stream - 1);
    }
    int stream_of(VarId v) const { return static_cast<int>(v % spec_.n) + 1; }
    int position_of(VarId v) const { return static_cast<int>(v / spec_.n); }

    bool is_seeded(VarId v) const {
        const int p = position_of(v);
        return p < spec_.w || p >= stream_len_ + spec_.w;
    }
    bool is_payload(VarId v) const { return !is_seeded(v); }

    int check_type(CheckId c) const;  // 1-based
    int check_shift(CheckId c) const;
    /// Instance id of (type, shift); throws errc::invalid_id if absent.
    CheckId check_id(int type, int shift) const;
    /// Number of instances of a check type (1-based type).
    std::uint32_t check_count(int type) const { return types_[type - 1].count; }
    int shift_min(int type) const { return types_[type - 1].s_min; }
    int shift_max(int type) const { return types_[type - 1].s_max; }

    /// The n neighbors of a check instance, in ascending stream order.
    std::span<const VarId> neighbors(CheckId c) const {
        if (c >= num_checks_) throw_bad_check(c);
        return {check_adj_.data() + static_cast<std::size_t>(c) * spec_.n,
                static_cast<std::size_t>(spec_.n)};
    }

    /// The check instances adjacent to a variable.
    std::span<const CheckId> co_checks(VarId v) const {
        if (v >= num_variables_) throw_bad_var(v);
        return {var_adj_.data() + var_off_[v], var_off_[v + 1] - var_off_[v]};
    }

    /// Debug adjacency listing, one check instance per line. Not a stable format.
    void dump(std::ostream& os) const;

  private:
    struct TypeInfo {
        int s_min = 0;
        int s_max = -1;
        std::uint32_t first_id = 0;
        std::uint32_t count = 0;
    };

    [[noreturn]] void throw_bad_var(VarId v) const;
    [[noreturn]] void throw_bad_check(CheckId c) const;

    CodeSpec spec_;
    int stream_len_ = 0;
    int positions_ = 0;
    std::uint32_t num_variables_ = 0;
    std::uint32_t num_checks_ = 0;
    std::vector<TypeInfo> types_;
    std::vector<VarId> check_adj_;       // num_checks * n, stride n
    std::vector<CheckId> var_adj_;       // concatenated co-check lists
    std::vector<std::uint32_t> var_off_; // num_variables + 1 offsets
};

} // namespace ticc

#endif
