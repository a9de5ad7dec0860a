#include "ticc/tanner.hpp"

#include <algorithm>
#include <ostream>

#include "ticc/errors.hpp"

namespace ticc {

TannerGraph TannerGraph::build(const CodeSpec& spec, int stream_len, std::uint64_t variable_budget) {
    validate(spec);
    if (stream_len < 1) throw error(errc::invalid_parameters, "stream_len must be >= 1");

    TannerGraph g;
    g.spec_ = spec;
    g.stream_len_ = stream_len;
    g.positions_ = stream_len + 2 * spec.w;

    const std::uint64_t vars = static_cast<std::uint64_t>(spec.n) * g.positions_;
    if (vars > variable_budget)
        throw error(errc::resource_limit, "graph would have " + std::to_string(vars) +
                                              " variables, budget is " + std::to_string(variable_budget));
    g.num_variables_ = static_cast<std::uint32_t>(vars);

    const int c = spec.checks();
    const int n = spec.n;
    g.types_.resize(c);
    std::uint32_t next_id = 0;
    for (int i = 0; i < c; ++i) {
        int dmin = spec.delay(i, 0), dmax = spec.delay(i, 0);
        for (int j = 1; j < n; ++j) {
            dmin = std::min(dmin, spec.delay(i, j));
            dmax = std::max(dmax, spec.delay(i, j));
        }
        TypeInfo& t = g.types_[i];
        t.s_min = -dmin;
        t.s_max = g.positions_ - 1 - dmax;
        t.count = static_cast<std::uint32_t>(t.s_max - t.s_min + 1); // positions - spread
        t.first_id = next_id;
        next_id += t.count;
    }
    g.num_checks_ = next_id;

    // Check-major adjacency, neighbors in ascending stream order.
    g.check_adj_.resize(static_cast<std::size_t>(g.num_checks_) * n);
    for (int i = 0; i < c; ++i) {
        const TypeInfo& t = g.types_[i];
        std::size_t cursor = static_cast<std::size_t>(t.first_id) * n;
        for (int s = t.s_min; s <= t.s_max; ++s)
            for (int j = 0; j < n; ++j)
                g.check_adj_[cursor++] =
                    static_cast<VarId>(s + spec.delay(i, j)) * n + static_cast<VarId>(j);
    }

    // Variable-major adjacency by counting sort.
    std::vector<std::uint32_t> deg(g.num_variables_, 0);
    for (VarId v : g.check_adj_) ++deg[v];
    g.var_off_.resize(g.num_variables_ + 1);
    g.var_off_[0] = 0;
    for (std::uint32_t v = 0; v < g.num_variables_; ++v) g.var_off_[v + 1] = g.var_off_[v] + deg[v];
    g.var_adj_.resize(g.var_off_.back());
    std::vector<std::uint32_t> cursor(g.var_off_.begin(), g.var_off_.end() - 1);
    for (CheckId ch = 0; ch < g.num_checks_; ++ch) {
        const std::size_t base = static_cast<std::size_t>(ch) * n;
        for (int j = 0; j < n; ++j) g.var_adj_[cursor[g.check_adj_[base + j]]++] = ch;
    }
    return g;
}

int TannerGraph::check_type(CheckId c) const {
    if (c >= num_checks_) throw_bad_check(c);
    int i = 0;
    while (c >= types_[i].first_id + types_[i].count) ++i;
    return i + 1;
}

int TannerGraph::check_shift(CheckId c) const {
    const int i = check_type(c) - 1;
    return types_[i].s_min + static_cast<int>(c - types_[i].first_id);
}

CheckId TannerGraph::check_id(int type, int shift) const {
    if (type < 1 || type > spec_.checks()) throw error(errc::invalid_id, "bad check type");
    const TypeInfo& t = types_[type - 1];
    if (shift < t.s_min || shift > t.s_max)
        throw error(errc::invalid_id, "check type " + std::to_string(type) + " has no instance at shift " +
                                          std::to_string(shift));
    return t.first_id + static_cast<std::uint32_t>(shift - t.s_min);
}

void TannerGraph::dump(std::ostream& os) const {
    for (CheckId c = 0; c < num_checks_; ++c) {
        os << "c " << check_type(c) << ' ' << check_shift(c) << ':';
        for (VarId v : neighbors(c)) os << " (" << stream_of(v) << ',' << position_of(v) << ')';
        os << '\n';
    }
}

void TannerGraph::throw_bad_var(VarId v) const {
    throw error(errc::invalid_id, "variable id " + std::to_string(v) + " out of range");
}

void TannerGraph::throw_bad_check(CheckId c) const {
    throw error(errc::invalid_id, "check id " + std::to_string(c) + " out of range");
}

} // namespace ticc
