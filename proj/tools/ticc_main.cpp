// Command-line workbench for time-invariant (n, k, W) convolutional codes
// on the binary erasure channel: sample code specs, inspect them, run
// Monte Carlo erasure sweeps, fit error-floor slopes, and search for
// minimum stopping sets.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ticc/channel.hpp"
#include "ticc/code_spec.hpp"
#include "ticc/decode.hpp"
#include "ticc/encode.hpp"
#include "ticc/errors.hpp"
#include "ticc/harness.hpp"
#include "ticc/rng.hpp"
#include "ticc/stopping.hpp"
#include "ticc/tanner.hpp"
#include "ticc/version.hpp"

namespace {

std::vector<double> parse_eps_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ticc::error(ticc::errc::invalid_parameters, "bad epsilon '" + item + "'");
        }
    }
    if (out.empty()) throw ticc::error(ticc::errc::invalid_parameters, "empty epsilon list");
    return out;
}

std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::string hash_string(std::uint64_t h) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void print_spec_summary(const ticc::CodeSpec& spec) {
    std::cout << "n " << spec.n << "\nk " << spec.k << "\nw " << spec.w << '\n';
    std::cout << "rate " << spec.k << "/" << spec.n << '\n';
    std::cout << "spec-hash " << hash_string(ticc::spec_hash(spec)) << '\n';
    std::cout << "memory " << ticc::memory(spec) << '\n';
    std::cout << "constraint-length " << ticc::constraint_length(spec) << '\n';
    if (auto order = ticc::find_staircase(spec)) {
        std::cout << "staircase";
        for (std::size_t i = 0; i < order->check_of_stream.size(); ++i)
            std::cout << ' ' << order->check_of_stream[i] + 1;
        std::cout << '\n';
    } else {
        std::cout << "staircase none\n";
    }
    std::cout << "distinct-vectors " << (ticc::has_distinct_vectors(spec) ? "true" : "false") << '\n';
    std::cout << "identical-check-rows "
              << (ticc::has_identical_check_rows(spec) ? "true" : "false") << '\n';
    std::cout << "lemma-bound " << ticc::lemma_bound(spec.n, spec.k) << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"time-invariant LDPC convolutional code workbench"};
    app.set_version_flag("--version", std::string("ticc ") + ticc::kVersion);
    app.require_subcommand(1);

    // ---- sample -------------------------------------------------------
    auto* cmd_sample = app.add_subcommand("sample", "draw a code spec from the (n, k, W) ensemble");
    int s_n = 0, s_k = 0, s_w = 0;
    std::uint64_t s_seed = 0;
    bool s_have_seed = false;
    std::string s_out;
    cmd_sample->add_option("n", s_n, "streams")->required();
    cmd_sample->add_option("k", s_k, "information streams")->required();
    cmd_sample->add_option("w", s_w, "window (delays in 0..w-1)")->required();
    cmd_sample->add_option("--seed", s_seed, "master seed (default: random)")
        ->each([&](const std::string&) { s_have_seed = true; });
    cmd_sample->add_option("-o,--output", s_out, "output spec file (default: stdout)");

    // ---- inspect ------------------------------------------------------
    auto* cmd_inspect = app.add_subcommand("inspect", "print code parameters and diagnostics");
    std::string i_path;
    bool i_dump = false;
    int i_dump_len = 12;
    cmd_inspect->add_option("spec", i_path, "code spec file")->required();
    cmd_inspect->add_flag("--dump-graph", i_dump, "also dump the unrolled graph adjacency (debug)");
    cmd_inspect->add_option("--len", i_dump_len, "stream length for --dump-graph");

    // ---- sweep --------------------------------------------------------
    auto* cmd_sweep = app.add_subcommand("sweep", "Monte Carlo erasure sweep over an epsilon grid");
    ticc::SweepConfig cfg;
    std::string sw_eps, sw_fixed, sw_out;
    std::uint64_t sw_seed = 0;
    bool sw_have_seed = false;
    cmd_sweep->add_option("--n", cfg.n, "streams");
    cmd_sweep->add_option("--k", cfg.k, "information streams");
    cmd_sweep->add_option("--w", cfg.w, "window");
    cfg.stream_len = 10000; // desk-scale defaults, both overridable
    cfg.trials = 100;
    cmd_sweep->add_option("--len", cfg.stream_len, "payload variables per stream (default 10000)");
    cmd_sweep->add_option("--eps", sw_eps, "comma-separated epsilon grid")->required();
    cmd_sweep->add_option("--trials", cfg.trials, "trials per grid point (default 100)");
    cmd_sweep->add_option("--fixed-code", sw_fixed, "pin one code spec file (default: fresh code per trial)");
    cmd_sweep->add_option("--seed", sw_seed, "master seed (default: random)")
        ->each([&](const std::string&) { sw_have_seed = true; });
    auto* sw_workers_opt =
        cmd_sweep->add_option("--workers", cfg.workers, "worker threads (default: hardware)");
    cmd_sweep->add_option("-o,--output", sw_out, "output CSV (default: stdout)");

    // ---- floor --------------------------------------------------------
    auto* cmd_floor = app.add_subcommand("floor", "fit the error-floor slope of a sweep CSV");
    std::string f_csv, f_window;
    cmd_floor->add_option("csv", f_csv, "sweep CSV file")->required();
    cmd_floor->add_option("--window", f_window, "epsilon window lo:hi")->required();

    // ---- stopping -----------------------------------------------------
    auto* cmd_stop = app.add_subcommand("stopping", "minimum stopping-set search / sampling");
    std::string st_path, st_csv;
    int st_len = 0, st_max = 0, st_trials = 1000;
    double st_eps = 0.9;
    bool st_sample = false, st_exact = false;
    std::uint64_t st_seed = 0;
    cmd_stop->add_option("spec", st_path, "code spec file")->required();
    cmd_stop->add_option("--len", st_len, "stream length")->required();
    cmd_stop->add_option("--max-size", st_max, "search bound (exact mode)");
    cmd_stop->add_flag("--exact", st_exact, "exact branch-and-bound search (default)");
    cmd_stop->add_flag("--sample", st_sample, "stochastic sampling via peeling residuals");
    cmd_stop->add_option("--eps", st_eps, "erasure rate for --sample");
    cmd_stop->add_option("--trials", st_trials, "trials for --sample");
    cmd_stop->add_option("--seed", st_seed, "seed for --sample");
    cmd_stop->add_option("--csv", st_csv, "append a summary CSV row to this file");

    // ---- oracle-check -------------------------------------------------
    auto* cmd_oracle = app.add_subcommand("oracle-check", "audit peel success against the exact decoder");
    std::string o_path;
    int o_len = 0, o_trials = 1000;
    double o_eps = 0.5;
    std::uint64_t o_seed = 0;
    std::uint64_t o_budget = 5000;
    cmd_oracle->add_option("spec", o_path, "code spec file")->required();
    cmd_oracle->add_option("--len", o_len, "stream length")->required();
    cmd_oracle->add_option("--eps", o_eps, "erasure rate")->required();
    cmd_oracle->add_option("--trials", o_trials, "number of trials");
    cmd_oracle->add_option("--seed", o_seed, "master seed");
    cmd_oracle->add_option("--budget", o_budget, "oracle erased-variable budget");

    // ---- encode (debug) -----------------------------------------------
    auto* cmd_encode = app.add_subcommand("encode", "debug: random encode round-trip through the peeler");
    cmd_encode->group(""); // hidden
    std::string e_path;
    int e_len = 0, e_trials = 10;
    double e_eps = 0.3;
    std::uint64_t e_seed = 0;
    cmd_encode->add_option("spec", e_path)->required();
    cmd_encode->add_option("--len", e_len)->required();
    cmd_encode->add_option("--eps", e_eps);
    cmd_encode->add_option("--trials", e_trials);
    cmd_encode->add_option("--seed", e_seed);

    CLI11_PARSE(app, argc, argv);

    if (cmd_sample->parsed()) {
        const std::uint64_t seed = s_have_seed ? s_seed : fresh_seed();
        ticc::CodeSpec spec = ticc::sample(s_n, s_k, s_w, seed);
        if (s_out.empty())
            std::cout << ticc::serialize(spec);
        else
            ticc::save_spec_file(spec, s_out);
        return 0;
    }

    if (cmd_inspect->parsed()) {
        ticc::CodeSpec spec = ticc::load_spec_file(i_path);
        print_spec_summary(spec);
        if (i_dump) {
            ticc::TannerGraph graph = ticc::TannerGraph::build(spec, i_dump_len);
            graph.dump(std::cout);
        }
        return 0;
    }

    if (cmd_sweep->parsed()) {
        cfg.epsilons = parse_eps_list(sw_eps);
        std::sort(cfg.epsilons.begin(), cfg.epsilons.end());
        cfg.epsilons.erase(std::unique(cfg.epsilons.begin(), cfg.epsilons.end()),
                           cfg.epsilons.end());
        cfg.seed = sw_have_seed ? sw_seed : fresh_seed();
        if (sw_workers_opt->count() == 0) {
            const unsigned hw = std::thread::hardware_concurrency();
            if (hw > 1) cfg.workers = static_cast<int>(hw);
        }
        if (!sw_fixed.empty()) {
            cfg.fixed_code = ticc::load_spec_file(sw_fixed);
            if (cfg.n == 0) cfg.n = cfg.fixed_code->n;
            if (cfg.k == 0) cfg.k = cfg.fixed_code->k;
            if (cfg.w == 0) cfg.w = cfg.fixed_code->w;
        }

        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!sw_out.empty()) {
            file.open(sw_out);
            if (!file) throw ticc::error(ticc::errc::io_error, "cannot open " + sw_out);
            os = &file;
        }
        // Rows stream out as grid points finish; a cut-short run still
        // leaves a parseable file with a truncation marker.
        bool header_done = false;
        try {
            ticc::sweep(cfg, [&](const ticc::SweepRow& row) {
                if (!header_done) {
                    ticc::SweepReport prelude;
                    prelude.config = cfg;
                    prelude.code_policy = cfg.fixed_code ? "fixed" : "fresh";
                    if (cfg.fixed_code) prelude.fixed_code_hash = ticc::spec_hash(*cfg.fixed_code);
                    ticc::write_csv_header(prelude, *os);
                    header_done = true;
                }
                ticc::write_csv_row(row, *os);
                os->flush();
            });
        } catch (const ticc::error&) {
            if (header_done) {
                *os << "# truncated: error before grid completed\n";
                os->flush();
            }
            throw;
        }
        return 0;
    }

    if (cmd_floor->parsed()) {
        const auto colon = f_window.find(':');
        if (colon == std::string::npos)
            throw ticc::error(ticc::errc::invalid_parameters, "--window must be lo:hi");
        double lo = 0.0, hi = 0.0;
        try {
            lo = std::stod(f_window.substr(0, colon));
            hi = std::stod(f_window.substr(colon + 1));
        } catch (const std::exception&) {
            throw ticc::error(ticc::errc::invalid_parameters, "--window must be lo:hi with numbers");
        }
        ticc::SweepReport report = ticc::load_csv_file(f_csv);
        ticc::FloorFit fit = ticc::fit_floor_slope(report, lo, hi);
        std::printf("alpha %.6g\n", fit.alpha);
        std::printf("d %.6g\n", fit.d);
        std::printf("r-squared %.6g\n", fit.r_squared);
        std::printf("points-used %d\n", fit.points_used);
        std::printf("zero-rows-excluded %d\n", fit.zero_rows_excluded);
        return 0;
    }

    if (cmd_stop->parsed()) {
        ticc::CodeSpec spec = ticc::load_spec_file(st_path);
        ticc::TannerGraph graph = ticc::TannerGraph::build(spec, st_len);
        const std::uint64_t bound = ticc::lemma_bound(spec.n, spec.k);
        std::cout << "spec-hash " << hash_string(ticc::spec_hash(spec)) << '\n';
        std::cout << "lemma-bound " << bound << '\n';

        if (st_sample && st_exact)
            throw ticc::error(ticc::errc::invalid_parameters, "--exact and --sample are exclusive");
        if (st_sample) {
            auto sizes = ticc::sample_stopping_sets(graph, st_eps, st_trials, st_seed);
            std::cout << "mode sample\n";
            std::cout << "trials " << st_trials << "\nnonempty-residuals " << sizes.size() << '\n';
            if (!sizes.empty()) {
                std::cout << "min-size " << sizes.front() << "\nmax-size " << sizes.back() << '\n';
            }
            return 0;
        }
        if (st_max < 1)
            throw ticc::error(ticc::errc::invalid_parameters, "--max-size is required for exact search");
        ticc::StoppingSearchResult res = ticc::search_min_stopping_set(graph, st_max);
        std::cout << "mode exact\n";
        std::cout << "proved-bound " << res.size_bound_proved << '\n';
        std::cout << "exhaustive " << (res.exhaustive ? "true" : "false") << '\n';
        std::cout << "nodes-expanded " << res.nodes_expanded << '\n';
        if (res.found) {
            std::cout << "found-size " << res.found->size() << '\n';
            std::cout << "found";
            for (ticc::VarId v : *res.found)
                std::cout << " (" << graph.stream_of(v) << ',' << graph.position_of(v) << ')';
            std::cout << '\n';
        } else {
            std::cout << "found none\n";
        }
        if (!st_csv.empty()) {
            const bool fresh = !std::ifstream(st_csv).good();
            std::ofstream csv(st_csv, std::ios::app);
            if (!csv) throw ticc::error(ticc::errc::io_error, "cannot open " + st_csv);
            if (fresh) csv << "spec_hash,lemma_bound,proved_bound,found_size,nodes_expanded\n";
            csv << hash_string(ticc::spec_hash(spec)) << ',' << bound << ',' << res.size_bound_proved
                << ',' << (res.found ? static_cast<long long>(res.found->size()) : -1) << ','
                << res.nodes_expanded << '\n';
        }
        return 0;
    }

    if (cmd_oracle->parsed()) {
        ticc::CodeSpec spec = ticc::load_spec_file(o_path);
        ticc::TannerGraph graph = ticc::TannerGraph::build(spec, o_len);
        int successes = 0, dominated = 0, violations = 0;
        for (int t = 0; t < o_trials; ++t) {
            ticc::ErasurePattern pat =
                ticc::erase(graph, o_eps, ticc::derive_seed(o_seed, "oracle-check", t));
            ticc::DecodeResult res = ticc::peel(graph, pat);
            if (!res.success) continue;
            ++successes;
            if (ticc::map_oracle(graph, pat, o_budget) == ticc::OracleVerdict::unique)
                ++dominated;
            else
                ++violations;
        }
        std::cout << "trials " << o_trials << '\n';
        std::cout << "peel-successes " << successes << '\n';
        std::cout << "oracle-unique " << dominated << '\n';
        std::cout << "violations " << violations << '\n';
        if (violations) {
            std::cerr << "error: peel succeeded where the exact decoder is ambiguous\n";
            return 1;
        }
        return 0;
    }

    if (cmd_encode->parsed()) {
        ticc::CodeSpec spec = ticc::load_spec_file(e_path);
        auto order = ticc::find_staircase(spec);
        if (!order) {
            std::cout << "staircase none; encode unavailable\n";
            return 0;
        }
        ticc::TannerGraph graph = ticc::TannerGraph::build(spec, e_len);
        const int L = graph.stream_len();
        int encoded = 0, boundary_rejects = 0, round_trips = 0;
        for (int t = 0; t < e_trials; ++t) {
            ticc::Rng rng(ticc::derive_seed(e_seed, "encode-debug", t));
            std::vector<std::uint8_t> info(static_cast<std::size_t>(spec.k) * L);
            for (auto& b : info) b = static_cast<std::uint8_t>(rng.next_u64() & 1);
            std::vector<std::uint8_t> word;
            try {
                word = ticc::encode(graph, *order, info);
            } catch (const ticc::error& e) {
                if (e.code() == ticc::errc::inconsistent_boundary) {
                    ++boundary_rejects;
                    continue;
                }
                throw;
            }
            ++encoded;
            ticc::ErasurePattern pat =
                ticc::erase(graph, e_eps, ticc::derive_seed(e_seed, "encode-debug-chan", t));
            std::vector<std::uint8_t> received = word;
            ticc::DecodeResult res = ticc::peel_values(graph, pat, received);
            if (res.success && received == word) ++round_trips;
        }
        std::cout << "trials " << e_trials << "\nencoded " << encoded << "\nboundary-rejects "
                  << boundary_rejects << "\nround-trips " << round_trips << '\n';
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ticc::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
