// landau-lab: zero tables, Landau scans, cycle sums, orbit traces, empirical
// distributions and the verification suite, over the landaulab C API.
//
// Exit codes: 0 success, 1 runtime/module error, 2 configuration error.

#include <cinttypes>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "landaulab/landaulab.h"

namespace {

using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
    throw CliError{code, message};
}

void check(ll_status status) {
    if (status != LL_OK)
        die(1, std::string(ll_status_name(status)) + ": " + ll_last_error());
}

// ----------------------------------------------------------------- options

struct ZeroSourceOptions {
    std::string path;
    std::uint64_t compute_count = 0;
    bool has_compute = false;
    double precision = 1e-8;
    std::optional<double> base;
};

struct TableHandle {
    ll_table* table = nullptr;
    ~TableHandle() { ll_table_free(table); }
};

void add_zero_source(CLI::App* cmd, ZeroSourceOptions& opts) {
    auto* zeros = cmd->add_option("--zeros", opts.path, "Zero-table file to ingest");
    auto* compute = cmd->add_option("--compute", opts.compute_count,
                                    "Compute the first <count> zeros");
    zeros->excludes(compute);
    compute->excludes(zeros);
    cmd->add_option("--precision", opts.precision,
                    "Ingest precision (absolute error bound per ordinate)")
        ->default_val(1e-8);
    cmd->add_option("--base", [&opts](const std::vector<std::string>& vals) {
        try {
            std::size_t used = 0;
            opts.base = std::stod(vals.front(), &used);
            return used == vals.front().size();
        } catch (const std::exception&) {
            return false;
        }
    }, "Offset added to every ingested ordinate");
}

ll_table* open_table(const ZeroSourceOptions& opts, CLI::App* cmd, unsigned threads) {
    const bool has_compute = cmd->count("--compute") > 0;
    const bool has_path = cmd->count("--zeros") > 0;
    if (has_compute == has_path)
        die(2, "exactly one zero source required: --zeros <path> or --compute <count>");

    ll_table* table = nullptr;
    if (has_path) {
        const double* base = opts.base ? &*opts.base : nullptr;
        check(ll_table_parse_file(opts.path.c_str(), opts.precision, base, &table));
        return table;
    }

    // Computed tables are cached under LANDAU_LAB_CACHE when set.
    const char* cache = std::getenv("LANDAU_LAB_CACHE");
    std::string cache_file;
    if (cache != nullptr && *cache != '\0') {
        cache_file = std::string(cache) + "/zeros_" + std::to_string(opts.compute_count) + ".txt";
        if (std::filesystem::exists(cache_file)) {
            if (ll_table_parse_file(cache_file.c_str(), 1e-9, nullptr, &table) == LL_OK &&
                ll_table_size(table) == opts.compute_count)
                return table;
            std::cerr << "landau-lab: ignoring unreadable cache file " << cache_file << "\n";
            ll_table_free(table);
            table = nullptr;
        }
    }
    check(ll_table_compute(opts.compute_count, threads, &table));
    if (!cache_file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(std::filesystem::path(cache_file).parent_path(), ec);
        if (ll_table_write_file(table, cache_file.c_str()) != LL_OK)
            std::cerr << "landau-lab: could not write cache file " << cache_file << "\n";
    }
    return table;
}

// Frequency syntax: --a <float> | --a "log(<int>)" | --x <int>.
ll_frequency parse_frequency_token(const std::string& token) {
    ll_frequency freq;
    if (token.rfind("log(", 0) == 0 && token.back() == ')') {
        const std::string inner = token.substr(4, token.size() - 5);
        char* end = nullptr;
        const std::uint64_t x = std::strtoull(inner.c_str(), &end, 10);
        if (end == nullptr || *end != '\0' || x < 2)
            die(2, "malformed frequency '" + token + "' (want log(<int>) with int >= 2)");
        check(ll_frequency_from_integer(x, &freq));
        return freq;
    }
    char* end = nullptr;
    const double a = std::strtod(token.c_str(), &end);
    if (end == nullptr || *end != '\0') die(2, "malformed frequency '" + token + "'");
    check(ll_frequency_from_a(a, &freq));
    return freq;
}

struct FrequencyOptions {
    std::vector<std::string> a_tokens;
    std::vector<std::uint64_t> x_values;
};

void add_frequency(CLI::App* cmd, FrequencyOptions& opts, bool single) {
    cmd->add_option("--a", opts.a_tokens, "Frequency a: <float> or log(<int>)")
        ->expected(single ? 1 : -1);
    cmd->add_option("--x", opts.x_values, "Frequency via integer x (a = log x)")
        ->expected(single ? 1 : -1);
}

std::vector<ll_frequency> resolve_frequencies(const FrequencyOptions& opts) {
    std::vector<ll_frequency> freqs;
    for (const auto& token : opts.a_tokens) freqs.push_back(parse_frequency_token(token));
    for (const auto x : opts.x_values) {
        ll_frequency freq;
        check(ll_frequency_from_integer(x, &freq));
        freqs.push_back(freq);
    }
    if (freqs.empty()) die(2, "a frequency is required (--a or --x)");
    return freqs;
}

std::pair<double, double> parse_range(const std::string& text, const char* what) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        die(2, std::string(what) + ": expected lo:hi, got '" + text + "'");
    try {
        const double lo = std::stod(text.substr(0, colon));
        const double hi = std::stod(text.substr(colon + 1));
        return {lo, hi};
    } catch (const std::exception&) {
        die(2, std::string(what) + ": expected lo:hi, got '" + text + "'");
    }
}

std::pair<std::size_t, std::size_t> parse_bins(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) die(2, "--bins: expected nx,ny, got '" + text + "'");
    try {
        const long nx = std::stol(text.substr(0, comma));
        const long ny = std::stol(text.substr(comma + 1));
        if (nx < 1 || ny < 1) die(2, "--bins: counts must be >= 1");
        return {static_cast<std::size_t>(nx), static_cast<std::size_t>(ny)};
    } catch (const CliError&) {
        throw;
    } catch (const std::exception&) {
        die(2, "--bins: expected nx,ny, got '" + text + "'");
    }
}

enum class Format { csv, json, svg_scatter };

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::csv;
    if (text == "json") return Format::json;
    if (text == "svg-scatter") return Format::svg_scatter;
    die(2, "unknown format '" + text + "' (csv | json | svg-scatter)");
}

void write_json_file(const std::string& path, const ordered_json& doc) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die(1, "cannot open for writing: " + path);
    out << doc.dump(2) << "\n";
    if (!out) die(1, "write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau exponential sums, zeta-zero cycle statistics and empirical "
                 "distributions"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help");

    ZeroSourceOptions source;
    FrequencyOptions freq_opts;
    unsigned threads = 0;
    std::string out_path;
    std::string format_text = "csv";
    double h_shift = 0.0;
    std::string n_range, tau_range, t_text, bins_text = "50,50";
    std::vector<double> t_values;
    std::uint64_t samples = 0;
    bool recenter = false;
    bool quick = false;
    std::string scratch_dir;

    auto add_common = [&](CLI::App* cmd, bool needs_out) {
        add_zero_source(cmd, source);
        cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
        auto* out = cmd->add_option("--out", out_path, "Output artifact path");
        if (needs_out) out->required();
        cmd->add_option("--format", format_text, "csv | json | svg-scatter")->default_val("csv");
    };

    auto* cmd_zeros = app.add_subcommand("zeros", "Compute or re-emit a zero table");
    add_common(cmd_zeros, true);

    auto* cmd_landau = app.add_subcommand("landau", "Landau sums lambda_a(T) and residuals");
    add_common(cmd_landau, true);
    add_frequency(cmd_landau, freq_opts, false);
    cmd_landau->add_option("--T", t_values, "Evaluation heights (ascending)")->required();

    auto* cmd_eta = app.add_subcommand("eta", "Cycle sums eta_{a,h}(n)");
    add_common(cmd_eta, true);
    add_frequency(cmd_eta, freq_opts, true);
    cmd_eta->add_option("--h", h_shift, "Height shift h")->default_val(0.0);
    cmd_eta->add_option("--n", n_range, "Cycle range lo:hi (integers, lo >= 1)")->required();

    auto* cmd_trace = app.add_subcommand("trace", "Orbit function H_a(tau) along a tau grid");
    add_common(cmd_trace, true);
    add_frequency(cmd_trace, freq_opts, true);
    cmd_trace->add_option("--tau", tau_range, "Grid range lo:hi (inclusive)")->required();
    cmd_trace->add_option("--samples", samples, "Grid size (>= 2)")->required();

    auto* cmd_hist = app.add_subcommand("hist", "2-D histogram of eta or H samples");
    add_common(cmd_hist, true);
    add_frequency(cmd_hist, freq_opts, true);
    cmd_hist->add_option("--h", h_shift, "Height shift h (eta source)")->default_val(0.0);
    cmd_hist->add_option("--n", n_range, "eta source: cycle range lo:hi");
    cmd_hist->add_option("--tau", tau_range, "H source: grid range lo:hi");
    cmd_hist->add_option("--samples", samples, "H source: grid size");
    cmd_hist->add_option("--bins", bins_text, "Bin counts nx,ny")->default_val("50,50");
    cmd_hist->add_flag("--recenter", recenter,
                       "Shift eta samples by the predicted mean before binning");

    auto* cmd_verify = app.add_subcommand("verify", "Run the verification suite");
    add_zero_source(cmd_verify, source);
    cmd_verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
    cmd_verify->add_option("--out", out_path, "Write the JSON report here");
    cmd_verify->add_flag("--quick", quick, "Quick mode: 1e4 zeros, relaxed envelopes");
    cmd_verify->add_option("--scratch", scratch_dir,
                           "Scratch directory for determinism artifacts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const Format format = parse_format(format_text);
        CLI::App* active = app.get_subcommands().front();

        // Configuration checks come before the (possibly expensive) zero
        // source is opened.
        if (active == cmd_zeros && format == Format::svg_scatter)
            die(2, "zeros: svg-scatter is not a zero-table format");
        if (active == cmd_hist) {
            if (format == Format::svg_scatter)
                die(2, "hist: svg-scatter is not a histogram format");
            const bool has_n = cmd_hist->count("--n") > 0;
            const bool has_tau = cmd_hist->count("--tau") > 0;
            if (has_n == has_tau)
                die(2, "hist: exactly one sample source required (--n lo:hi or --tau lo:hi "
                       "with --samples)");
            if (has_tau && recenter) die(2, "--recenter applies to the eta source only");
        }

        TableHandle handle;
        handle.table = open_table(source, active, threads);
        ll_table* table = handle.table;

        if (active == cmd_zeros) {
            if (format == Format::csv) {
                check(ll_table_write_file(table, out_path.c_str()));
            } else {
                ordered_json doc;
                doc["count"] = ll_table_size(table);
                doc["precision"] = ll_table_precision(table);
                doc["source"] = ll_table_is_computed(table) ? "computed" : "ingested";
                doc["ordinates"] = std::vector<double>(
                    ll_table_ordinates(table), ll_table_ordinates(table) + ll_table_size(table));
                write_json_file(out_path, doc);
            }
        } else if (active == cmd_landau) {
            const auto freqs = resolve_frequencies(freq_opts);
            for (std::size_t i = 1; i < t_values.size(); ++i)
                if (!(t_values[i] > t_values[i - 1])) die(2, "--T values must be ascending");
            std::vector<ll_scan_point> points;
            for (const auto& freq : freqs) {
                for (const double T : t_values) {
                    double lambda = 0.0;
                    check(ll_lambda_sum(table, freq.a, T, threads, &lambda));
                    ll_scan_point p;
                    p.a = freq.a;
                    p.T = T;
                    p.lambda = lambda;
                    p.normalized = lambda / (2.0 * T);
                    p.predicted = ll_predicted_landau_limit(&freq);
                    p.residual = p.normalized - p.predicted;
                    points.push_back(p);
                }
            }
            if (format == Format::csv) {
                check(ll_emit_landau_csv(points.data(), points.size(), out_path.c_str()));
            } else if (format == Format::json) {
                ordered_json rows = ordered_json::array();
                for (const auto& p : points)
                    rows.push_back({{"a", p.a},
                                    {"T", p.T},
                                    {"lambda", p.lambda},
                                    {"normalized", p.normalized},
                                    {"predicted", p.predicted},
                                    {"residual", p.residual}});
                write_json_file(out_path, rows);
            } else {
                std::vector<double> xs, ys;
                for (const auto& p : points) {
                    xs.push_back(p.a);
                    ys.push_back(p.normalized);
                }
                check(ll_emit_scatter_svg(xs.data(), ys.data(), xs.size(), out_path.c_str()));
            }
        } else if (active == cmd_eta) {
            const auto freq = resolve_frequencies(freq_opts).front();
            const auto [lo, hi] = parse_range(n_range, "--n");
            const auto n_min = static_cast<std::int64_t>(lo);
            const auto n_max = static_cast<std::int64_t>(hi);
            if (n_min < 1 || n_max < n_min) die(2, "--n: need 1 <= lo <= hi");
            std::vector<ll_cycle_sample> series(static_cast<std::size_t>(n_max - n_min + 1));
            check(ll_eta_series(table, freq.a, h_shift, n_min, n_max, threads, series.data()));
            if (format == Format::csv) {
                check(ll_emit_eta_csv(series.data(), series.size(), out_path.c_str()));
            } else if (format == Format::json) {
                ordered_json rows = ordered_json::array();
                for (const auto& s : series)
                    rows.push_back(
                        {{"n", s.n}, {"h", s.h}, {"a", s.a}, {"re", s.re}, {"im", s.im}});
                write_json_file(out_path, rows);
            } else {
                std::vector<double> xs, ys;
                for (const auto& s : series) {
                    xs.push_back(s.re);
                    ys.push_back(s.im);
                }
                check(ll_emit_scatter_svg(xs.data(), ys.data(), xs.size(), out_path.c_str()));
            }
        } else if (active == cmd_trace) {
            const auto freq = resolve_frequencies(freq_opts).front();
            const auto [lo, hi] = parse_range(tau_range, "--tau");
            if (samples < 2) die(2, "--samples must be >= 2");
            std::vector<ll_orbit_sample> trace(samples);
            check(ll_h_trace(table, freq.a, lo, hi, samples, threads, trace.data()));
            bool boundary = false;
            for (const auto& s : trace) boundary = boundary || s.boundary_hit != 0;
            if (boundary)
                std::cerr << "landau-lab: note: some samples sit within 1e-12 of the "
                             "|u| = pi window edge\n";
            if (format == Format::csv) {
                check(ll_emit_trace_csv(trace.data(), trace.size(), out_path.c_str()));
            } else if (format == Format::json) {
                ordered_json rows = ordered_json::array();
                for (const auto& s : trace)
                    rows.push_back({{"tau", s.tau},
                                    {"re", s.re},
                                    {"im", s.im},
                                    {"nu", s.nu},
                                    {"center", s.center}});
                write_json_file(out_path, rows);
            } else {
                std::vector<double> xs, ys;
                for (const auto& s : trace) {
                    xs.push_back(s.re);
                    ys.push_back(s.im);
                }
                check(ll_emit_scatter_svg(xs.data(), ys.data(), xs.size(), out_path.c_str()));
            }
        } else if (active == cmd_hist) {
            const auto freq = resolve_frequencies(freq_opts).front();
            const auto [nx, ny] = parse_bins(bins_text);
            const bool has_n = cmd_hist->count("--n") > 0;

            std::vector<double> re, im;
            if (has_n) {
                const auto [lo, hi] = parse_range(n_range, "--n");
                const auto n_min = static_cast<std::int64_t>(lo);
                const auto n_max = static_cast<std::int64_t>(hi);
                if (n_min < 1 || n_max < n_min) die(2, "--n: need 1 <= lo <= hi");
                std::vector<ll_cycle_sample> series(
                    static_cast<std::size_t>(n_max - n_min + 1));
                check(ll_eta_series(table, freq.a, h_shift, n_min, n_max, threads,
                                    series.data()));
                double shift_re = 0.0, shift_im = 0.0;
                if (recenter) {
                    ll_predicted_eta_mean(&freq, h_shift, &shift_re, &shift_im);
                    shift_re = -shift_re;  // subtract the predicted mean
                    shift_im = -shift_im;
                }
                for (const auto& s : series) {
                    re.push_back(s.re + shift_re);
                    im.push_back(s.im + shift_im);
                }
            } else {
                const auto [lo, hi] = parse_range(tau_range, "--tau");
                if (samples < 2) die(2, "--samples must be >= 2");
                std::vector<ll_orbit_sample> trace(samples);
                check(ll_h_trace(table, freq.a, lo, hi, samples, threads, trace.data()));
                for (const auto& s : trace) {
                    re.push_back(s.re);
                    im.push_back(s.im);
                }
            }

            double window[4];
            check(ll_window_from_samples(re.data(), im.data(), re.size(), window));
            ll_histogram* grid = nullptr;
            check(ll_histogram_build(re.data(), im.data(), re.size(), window,
                                     static_cast<uint32_t>(nx), static_cast<uint32_t>(ny),
                                     threads, &grid));
            if (format == Format::csv) {
                const ll_status status = ll_emit_hist_csv(grid, out_path.c_str());
                ll_histogram_free(grid);
                check(status);
            } else {
                ordered_json doc;
                doc["window"] = {window[0], window[1], window[2], window[3]};
                doc["nx"] = nx;
                doc["ny"] = ny;
                doc["total"] = ll_histogram_total(grid);
                doc["out_of_range"] = ll_histogram_out_of_range(grid);
                doc["counts"] = std::vector<double>(
                    ll_histogram_weights(grid), ll_histogram_weights(grid) + nx * ny);
                ll_histogram_free(grid);
                write_json_file(out_path, doc);
            }
        } else if (active == cmd_verify) {
            if (scratch_dir.empty()) {
                scratch_dir = (std::filesystem::temp_directory_path() /
                               "landau-lab-verify")
                                  .string();
            }
            char* report_json = nullptr;
            int all_pass = 0;
            check(ll_verify(table, quick ? 1 : 0, threads, scratch_dir.c_str(), &report_json,
                            &all_pass));
            const std::string report = report_json == nullptr ? "{}" : report_json;
            ll_string_free(report_json);

            const auto doc = nlohmann::json::parse(report);
            for (const auto& criterion : doc["criteria"]) {
                const bool skipped = criterion["skipped"].get<bool>();
                const bool pass = criterion["pass"].get<bool>();
                std::printf("%s criterion %d (%s): measured %.6g threshold %.6g\n",
                            skipped ? "SKIP" : (pass ? "PASS" : "FAIL"),
                            criterion["id"].get<int>(),
                            criterion["name"].get<std::string>().c_str(),
                            criterion["measured"].get<double>(),
                            criterion["threshold"].get<double>());
            }
            std::printf("verify: %s (%" PRIu64 " zeros, %s mode)\n",
                        all_pass ? "all criteria passed" : "NOT passing",
                        ll_table_size(table), quick ? "quick" : "full");
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) die(1, "cannot open for writing: " + out_path);
                out << report;
            }
            return all_pass ? 0 : 1;
        }
        return 0;
    } catch (const CliError& e) {
        std::cerr << "landau-lab: " << e.message << "\n";
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "landau-lab: " << e.what() << "\n";
        return 1;
    }
}
