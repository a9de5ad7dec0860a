#ifndef TICC_HARNESS_HPP
#define TICC_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ticc/code_spec.hpp"
#include "ticc/tanner.hpp"

namespace ticc {

struct SweepConfig {
    int n = 0;
    int k = 0;
    int w = 0;
    int stream_len = 0;
    std::vector<double> epsilons; // sorted and deduplicated by sweep()
    int trials = 0;
    // Default policy draws a fresh code per trial; a fixed code pins one
    // spec for floor studies. When set, it supplies n/k/w.
    std::optional<CodeSpec> fixed_code;
    std::uint64_t seed = 0;
    int workers = 1;
    std::uint64_t variable_budget = TannerGraph::kDefaultVariableBudget;
};

struct SweepRow {
    double epsilon = 0.0;
    double p_bit = 0.0; // residual_bits / payload_bits
    std::uint64_t trials = 0;
    std::uint64_t payload_bits = 0;  // total over trials
    std::uint64_t residual_bits = 0; // total over trials
    double seconds = 0.0;            // wall time; the only schedule-dependent field
    // Sum over trials of the squared per-trial residual fraction; feeds
    // binomial-style error bars. Not part of the CSV.
    double sum_sq_fraction = 0.0;
};

struct SweepReport {
    SweepConfig config;
    std::string prng;
    std::string version;
    std::string code_policy; // "fresh" or "fixed"
    std::optional<std::uint64_t> fixed_code_hash;
    std::vector<SweepRow> rows; // ascending epsilon
    std::string truncated;      // nonempty if the sweep was cut short
};

/// Runs the Monte Carlo sweep. Rows are a pure function of (config, seed):
/// per-trial sub-seeds derive from the grid index and trial index, never
/// from scheduling, so any worker count gives identical rows. `on_row`, if
/// set, fires after each grid point completes (in grid order).
SweepReport sweep(const SweepConfig& config,
                  const std::function<void(const SweepRow&)>& on_row = {});

// CSV interchange: '#'-prefixed metadata lines, one header row, then data
// rows "epsilon,p_bit,trials,payload_bits,residual_bits,seconds".
// Probabilities carry 6 significant digits; exact zero prints as "0".
void write_csv_header(const SweepReport& report, std::ostream& os);
void write_csv_row(const SweepRow& row, std::ostream& os);
void write_csv(const SweepReport& report, std::ostream& os);
SweepReport read_csv(std::istream& is, const std::string& source_name = "<input>");
SweepReport load_csv_file(const std::string& path);

struct FloorFit {
    double alpha = 0.0; // prefactor of alpha * eps^d
    double d = 0.0;     // log-log slope; the stopping-set size estimate
    double r_squared = 0.0;
    int points_used = 0;
    int zero_rows_excluded = 0;
};

/// Least-squares fit of log p_bit against log epsilon over rows with
/// eps_lo <= epsilon <= eps_hi. Zero-probability rows are excluded and
/// counted. Throws errc::insufficient_points below 3 usable rows.
FloorFit fit_floor_slope(const SweepReport& report, double eps_lo, double eps_hi);

/// Epsilon at which p_bit crosses `level`, log-linearly interpolated
/// between the first bracketing row pair (p_bit below, next above). A zero
/// lower row is treated as half an error bit over its payload. Throws
/// errc::not_bracketed when no such pair exists.
double threshold_estimate(const SweepReport& report, double level);

} // namespace ticc

#endif
