#include "ticc/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "ticc/channel.hpp"
#include "ticc/decode.hpp"
#include "ticc/errors.hpp"
#include "ticc/rng.hpp"
#include "ticc/version.hpp"

namespace ticc {

namespace {

void validate_config(SweepConfig& config) {
    if (config.fixed_code) {
        validate(*config.fixed_code);
        const CodeSpec& fc = *config.fixed_code;
        if (config.n == 0) config.n = fc.n;
        if (config.k == 0) config.k = fc.k;
        if (config.w == 0) config.w = fc.w;
        if (config.n != fc.n || config.k != fc.k || config.w != fc.w)
            throw error(errc::invalid_parameters, "config n/k/w disagree with the fixed code");
    }
    if (config.k <= 0 || config.k >= config.n)
        throw error(errc::invalid_parameters, "require 0 < k < n");
    if (config.w < 1) throw error(errc::invalid_parameters, "require w >= 1");
    if (config.stream_len < 1) throw error(errc::invalid_parameters, "stream_len must be >= 1");
    if (config.trials < 1) throw error(errc::invalid_parameters, "trials must be >= 1");
    if (config.epsilons.empty()) throw error(errc::invalid_parameters, "epsilon grid is empty");
    for (double e : config.epsilons)
        if (!(e >= 0.0 && e <= 1.0))
            throw error(errc::invalid_parameters, "epsilon grid values must be in [0, 1]");
    std::sort(config.epsilons.begin(), config.epsilons.end());
    config.epsilons.erase(std::unique(config.epsilons.begin(), config.epsilons.end()),
                          config.epsilons.end());
    if (config.workers < 1) config.workers = 1;

    const std::uint64_t vars =
        static_cast<std::uint64_t>(config.n) * (config.stream_len + 2ull * config.w);
    if (vars > config.variable_budget)
        throw error(errc::resource_limit,
                    "graph would have " + std::to_string(vars) + " variables, budget is " +
                        std::to_string(config.variable_budget));
}

std::string format_probability(double p) {
    if (p == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", p);
    return buf;
}

std::string format_eps(double e) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", e);
    return buf;
}

} // namespace

SweepReport sweep(const SweepConfig& config_in, const std::function<void(const SweepRow&)>& on_row) {
    SweepConfig config = config_in;
    validate_config(config);

    SweepReport report;
    report.config = config;
    report.prng = kPrngName;
    report.version = kVersion;
    report.code_policy = config.fixed_code ? "fixed" : "fresh";
    if (config.fixed_code) report.fixed_code_hash = spec_hash(*config.fixed_code);

    std::optional<TannerGraph> shared_graph;
    if (config.fixed_code)
        shared_graph = TannerGraph::build(*config.fixed_code, config.stream_len, config.variable_budget);

    const std::uint64_t payload_per_trial =
        static_cast<std::uint64_t>(config.n) * config.stream_len;

    for (std::size_t point = 0; point < config.epsilons.size(); ++point) {
        const double eps = config.epsilons[point];
        const auto t0 = std::chrono::steady_clock::now();

        // Workers pull trial indices from a shared counter; results land in
        // a per-trial slot, so aggregation below is schedule-independent.
        std::vector<std::uint64_t> residuals(config.trials, 0);
        std::atomic<int> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto run_trials = [&] {
            try {
                for (;;) {
                    const int t = next.fetch_add(1);
                    if (t >= config.trials || failed.load(std::memory_order_relaxed)) break;
                    const TannerGraph* graph = nullptr;
                    std::optional<TannerGraph> own;
                    if (shared_graph) {
                        graph = &*shared_graph;
                    } else {
                        CodeSpec spec = sample(config.n, config.k, config.w,
                                               derive_seed(config.seed, "code", point, t));
                        own = TannerGraph::build(spec, config.stream_len, config.variable_budget);
                        graph = &*own;
                    }
                    ErasurePattern pat =
                        erase(*graph, eps, derive_seed(config.seed, "chan", point, t));
                    DecodeResult res = peel(*graph, pat);
                    // Self-audit on a sampled subset of failing trials: a peel
                    // residual is by construction a stopping set.
                    if (!res.success && (t & 63) == 0 && !is_stopping_set(*graph, res.residual))
                        throw error(errc::invalid_parameters,
                                    "internal: peel residual is not a stopping set");
                    residuals[t] = res.residual.size();
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
            }
        };
        const int nthreads = std::min(config.workers, config.trials);
        if (nthreads <= 1) {
            run_trials();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (int i = 0; i < nthreads; ++i) pool.emplace_back(run_trials);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);

        SweepRow row;
        row.epsilon = eps;
        row.trials = config.trials;
        row.payload_bits = payload_per_trial * config.trials;
        for (int t = 0; t < config.trials; ++t) {
            row.residual_bits += residuals[t];
            const double f = static_cast<double>(residuals[t]) / payload_per_trial;
            row.sum_sq_fraction += f * f;
        }
        row.p_bit = static_cast<double>(row.residual_bits) / row.payload_bits;
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.rows.push_back(row);
        if (on_row) on_row(row);
    }
    return report;
}

void write_csv_header(const SweepReport& report, std::ostream& os) {
    os << "# ticc sweep v" << (report.version.empty() ? kVersion : report.version) << '\n';
    os << "# seed " << report.config.seed << '\n';
    os << "# prng " << (report.prng.empty() ? kPrngName : report.prng) << '\n';
    os << "# n " << report.config.n << " k " << report.config.k << " w " << report.config.w
       << " len " << report.config.stream_len << " trials " << report.config.trials
       << " workers " << report.config.workers << " code-policy "
       << (report.code_policy.empty() ? "fresh" : report.code_policy) << '\n';
    if (report.fixed_code_hash) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(*report.fixed_code_hash));
        os << "# fixed-code-hash " << buf << '\n';
    }
    os << "# eps ";
    for (std::size_t i = 0; i < report.config.epsilons.size(); ++i) {
        if (i) os << ',';
        os << format_eps(report.config.epsilons[i]);
    }
    os << '\n';
    os << "epsilon,p_bit,trials,payload_bits,residual_bits,seconds\n";
}

void write_csv_row(const SweepRow& row, std::ostream& os) {
    char seconds[64];
    std::snprintf(seconds, sizeof seconds, "%.3f", row.seconds);
    os << format_eps(row.epsilon) << ',' << format_probability(row.p_bit) << ',' << row.trials
       << ',' << row.payload_bits << ',' << row.residual_bits << ',' << seconds << '\n';
}

void write_csv(const SweepReport& report, std::ostream& os) {
    write_csv_header(report, os);
    for (const SweepRow& row : report.rows) write_csv_row(row, os);
    if (!report.truncated.empty()) os << "# truncated: " << report.truncated << '\n';
}

SweepReport read_csv(std::istream& is, const std::string& source_name) {
    SweepReport report;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        if (!header_seen) {
            if (line != "epsilon,p_bit,trials,payload_bits,residual_bits,seconds")
                throw error(errc::parse_error,
                            source_name + ":" + std::to_string(line_no) + ": unexpected header '" +
                                line + "'");
            header_seen = true;
            continue;
        }
        std::array<std::string, 6> fields;
        std::size_t start = 0;
        for (int f = 0; f < 6; ++f) {
            const std::size_t comma = line.find(',', start);
            if (f < 5 && comma == std::string::npos)
                throw error(errc::parse_error,
                            source_name + ":" + std::to_string(line_no) + ": expected 6 fields");
            fields[f] = line.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
            start = comma + 1;
        }
        try {
            SweepRow row;
            row.epsilon = std::stod(fields[0]);
            row.p_bit = std::stod(fields[1]);
            row.trials = std::stoull(fields[2]);
            row.payload_bits = std::stoull(fields[3]);
            row.residual_bits = std::stoull(fields[4]);
            row.seconds = std::stod(fields[5]);
            report.rows.push_back(row);
        } catch (const std::exception&) {
            throw error(errc::parse_error,
                        source_name + ":" + std::to_string(line_no) + ": malformed data row");
        }
    }
    if (!header_seen)
        throw error(errc::parse_error, source_name + ": no CSV header found");
    if (!std::is_sorted(report.rows.begin(), report.rows.end(),
                        [](const SweepRow& a, const SweepRow& b) { return a.epsilon < b.epsilon; }))
        throw error(errc::parse_error, source_name + ": rows are not sorted by epsilon");
    return report;
}

SweepReport load_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    return read_csv(in, path);
}

FloorFit fit_floor_slope(const SweepReport& report, double eps_lo, double eps_hi) {
    FloorFit fit;
    std::vector<double> xs, ys;
    for (const SweepRow& row : report.rows) {
        if (row.epsilon < eps_lo || row.epsilon > eps_hi) continue;
        if (row.p_bit <= 0.0) {
            ++fit.zero_rows_excluded;
            continue;
        }
        xs.push_back(std::log(row.epsilon));
        ys.push_back(std::log(row.p_bit));
    }
    if (xs.size() < 3)
        throw error(errc::insufficient_points,
                    "slope fit needs at least 3 nonzero rows in the window, found " +
                        std::to_string(xs.size()));
    const double m = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= m;
    my /= m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0)
        throw error(errc::insufficient_points, "slope fit window has a single distinct epsilon");
    fit.d = sxy / sxx;
    fit.alpha = std::exp(my - fit.d * mx);
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double pred = (my - fit.d * mx) + fit.d * xs[i];
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - my) * (ys[i] - my);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    fit.points_used = static_cast<int>(xs.size());
    return fit;
}

double threshold_estimate(const SweepReport& report, double level) {
    if (!(level > 0.0)) throw error(errc::invalid_parameters, "level must be positive");
    const auto& rows = report.rows;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double lo = rows[i].p_bit;
        const double hi = rows[i + 1].p_bit;
        if (!(lo <= level && hi > level)) continue;
        // Half an error bit over the row's payload stands in for log(0).
        double lo_eff = lo;
        if (lo_eff <= 0.0)
            lo_eff = 0.5 / static_cast<double>(std::max<std::uint64_t>(rows[i].payload_bits, 1));
        lo_eff = std::min(lo_eff, level);
        const double t = lo_eff >= level
                             ? 0.0
                             : (std::log(level) - std::log(lo_eff)) /
                                   (std::log(hi) - std::log(lo_eff));
        const double est = rows[i].epsilon + t * (rows[i + 1].epsilon - rows[i].epsilon);
        return std::clamp(est, rows[i].epsilon, rows[i + 1].epsilon);
    }
    throw error(errc::not_bracketed,
                "no adjacent row pair brackets p_bit level " + std::to_string(level));
}

} // namespace ticc
