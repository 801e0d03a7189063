// C ABI over the landaulab core. Exceptions are mapped to status codes at
// this boundary; the message of the most recent failure is stored per thread.

#include "landaulab/landaulab.h"

#include <complex>
#include <cstring>
#include <exception>
#include <new>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "core/arithmetic.hpp"
#include "core/cycles.hpp"
#include "core/distributions.hpp"
#include "core/emit.hpp"
#include "core/errors.hpp"
#include "core/landau.hpp"
#include "core/verify.hpp"
#include "core/zeros.hpp"

namespace {

thread_local std::string g_last_error;

ll_status set_error(landaulab::Status status, const char* what) {
    g_last_error = what == nullptr ? "" : what;
    return static_cast<ll_status>(status);
}

template <typename Fn>
ll_status guarded(Fn&& fn) {
    try {
        fn();
        return LL_OK;
    } catch (const landaulab::Error& e) {
        return set_error(e.status(), e.what());
    } catch (const std::bad_alloc& e) {
        return set_error(landaulab::Status::internal_error, "out of memory");
    } catch (const std::exception& e) {
        return set_error(landaulab::Status::internal_error, e.what());
    }
}

ll_status require(bool ok, const char* what) {
    if (ok) return LL_OK;
    return set_error(landaulab::Status::invalid_argument, what);
}

const landaulab::ZeroTable* unwrap(const ll_table* table) {
    return reinterpret_cast<const landaulab::ZeroTable*>(table);
}

const landaulab::HistogramGrid* unwrap(const ll_histogram* grid) {
    return reinterpret_cast<const landaulab::HistogramGrid*>(grid);
}

landaulab::Frequency unwrap(const ll_frequency& f) {
    landaulab::Frequency out;
    out.a = f.a;
    out.x = f.x;
    out.lambda_x = f.lambda_x;
    out.prime_power = f.prime_power != 0;
    out.p = f.p;
    out.k = f.k;
    return out;
}

ll_frequency wrap(const landaulab::Frequency& f) {
    return {f.a, f.x, f.lambda_x, f.prime_power ? 1 : 0, f.p, f.k};
}

std::vector<std::complex<double>> zip_complex(const double* re, const double* im, uint64_t n) {
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (uint64_t i = 0; i < n; ++i) out.emplace_back(re[i], im[i]);
    return out;
}

ll_orbit_sample wrap(const landaulab::OrbitSample& s) {
    return {s.tau, s.a, s.value.real(), s.value.imag(), s.nu, s.center,
            s.boundary_hit ? 1 : 0};
}

template <typename WriteFn>
ll_status emit_to_path(const char* path, WriteFn&& write) {
    return guarded([&] {
        std::ostringstream out;
        write(out);
        landaulab::write_text_file(path, out.str());
    });
}

}  // namespace

extern "C" {

const char* ll_status_name(ll_status status) {
    return landaulab::status_name(static_cast<landaulab::Status>(status));
}

const char* ll_last_error(void) { return g_last_error.c_str(); }

/* --------------------------------------------------------------- zeros */

ll_status ll_table_compute(uint64_t count, unsigned threads, ll_table** out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] {
        auto table = new landaulab::ZeroTable(
            landaulab::ZeroTable::compute(static_cast<std::size_t>(count), threads));
        *out = reinterpret_cast<ll_table*>(table);
    });
}

ll_status ll_table_parse_file(const char* path, double precision, const double* base_offset,
                              ll_table** out) {
    if (auto bad = require(out != nullptr && path != nullptr, "path/out must not be NULL"))
        return bad;
    return guarded([&] {
        landaulab::ParseOptions options;
        options.precision = precision;
        if (base_offset != nullptr) options.base_offset = *base_offset;
        auto table =
            new landaulab::ZeroTable(landaulab::ZeroTable::parse_file(path, options));
        *out = reinterpret_cast<ll_table*>(table);
    });
}

ll_status ll_table_parse_text(const char* text, double precision, const double* base_offset,
                              ll_table** out) {
    if (auto bad = require(out != nullptr && text != nullptr, "text/out must not be NULL"))
        return bad;
    return guarded([&] {
        landaulab::ParseOptions options;
        options.precision = precision;
        if (base_offset != nullptr) options.base_offset = *base_offset;
        std::istringstream in{std::string(text)};
        auto table = new landaulab::ZeroTable(landaulab::ZeroTable::parse(in, options));
        *out = reinterpret_cast<ll_table*>(table);
    });
}

ll_status ll_table_write_file(const ll_table* table, const char* path) {
    if (auto bad = require(table != nullptr && path != nullptr, "table/path must not be NULL"))
        return bad;
    return guarded([&] { unwrap(table)->write_file(path); });
}

void ll_table_free(ll_table* table) {
    delete reinterpret_cast<landaulab::ZeroTable*>(table);
}

uint64_t ll_table_size(const ll_table* table) {
    return table == nullptr ? 0 : unwrap(table)->size();
}

double ll_table_precision(const ll_table* table) {
    return table == nullptr ? 0.0 : unwrap(table)->precision();
}

int ll_table_is_computed(const ll_table* table) {
    return table != nullptr && unwrap(table)->source() == landaulab::ZeroSource::computed;
}

const double* ll_table_ordinates(const ll_table* table) {
    return table == nullptr ? nullptr : unwrap(table)->ordinates().data();
}

ll_status ll_table_count_below(const ll_table* table, double T, uint64_t* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] { *out = unwrap(table)->count_below(T); });
}

double ll_main_term(double T) { return landaulab::main_term(T); }

ll_status ll_riemann_siegel_theta(double t, double* out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] { *out = landaulab::riemann_siegel_theta(t); });
}

ll_status ll_riemann_siegel_z(double t, double* out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] { *out = landaulab::riemann_siegel_z(t); });
}

ll_status ll_gram_point(int64_t n, double* out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] { *out = landaulab::gram_point(n); });
}

/* ---------------------------------------------------------- arithmetic */

ll_status ll_frequency_from_a(double a, ll_frequency* out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] { *out = wrap(landaulab::frequency_from_a(a)); });
}

ll_status ll_frequency_from_prime_power(uint64_t p, unsigned k, ll_frequency* out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] { *out = wrap(landaulab::frequency_from_prime_power(p, k)); });
}

ll_status ll_frequency_from_integer(uint64_t x, ll_frequency* out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] { *out = wrap(landaulab::frequency_from_integer(x)); });
}

ll_status ll_von_mangoldt(uint64_t m, double* out) {
    if (auto bad = require(out != nullptr, "out must not be NULL")) return bad;
    return guarded([&] { *out = landaulab::von_mangoldt(m); });
}

double ll_predicted_landau_limit(const ll_frequency* freq) {
    return freq == nullptr ? 0.0 : landaulab::predicted_landau_limit(unwrap(*freq));
}

void ll_predicted_eta_mean(const ll_frequency* freq, double h, double* re, double* im) {
    const auto mean =
        freq == nullptr ? std::complex<double>{} : landaulab::predicted_eta_mean(unwrap(*freq), h);
    if (re != nullptr) *re = mean.real();
    if (im != nullptr) *im = mean.imag();
}

/* --------------------------------------------------------- landau sums */

ll_status ll_lambda_sum(const ll_table* table, double a, double T, unsigned threads,
                        double* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] { *out = landaulab::lambda_sum(*unwrap(table), a, T, threads); });
}

ll_status ll_landau_scan(const ll_table* table, const double* a_grid, uint64_t n_a, double T,
                         unsigned threads, ll_scan_point* out) {
    if (auto bad = require(table != nullptr && a_grid != nullptr && out != nullptr,
                           "table/a_grid/out must not be NULL"))
        return bad;
    return guarded([&] {
        const auto points = landaulab::landau_scan(
            *unwrap(table), std::span<const double>(a_grid, n_a), T, threads);
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            out[i] = {p.a, p.T, p.lambda, p.normalized, p.predicted, p.residual};
        }
    });
}

ll_status ll_landau_convergence(const ll_table* table, const ll_frequency* freq,
                                const double* t_list, uint64_t n_t, unsigned threads,
                                double* residuals, double* slope) {
    if (auto bad = require(table != nullptr && freq != nullptr &&
                               (t_list != nullptr || n_t == 0) &&
                               (residuals != nullptr || n_t == 0),
                           "table/freq/t_list/residuals must not be NULL"))
        return bad;
    return guarded([&] {
        const auto result = landaulab::landau_convergence(
            *unwrap(table), unwrap(*freq), std::span<const double>(t_list, n_t), threads);
        for (std::size_t i = 0; i < result.points.size(); ++i)
            residuals[i] = result.points[i].residual;
        if (slope != nullptr) *slope = result.slope_valid ? result.slope : 0.0;
    });
}

/* --------------------------------------------------------- cycle stats */

ll_status ll_eta_series(const ll_table* table, double a, double h, int64_t n_min,
                        int64_t n_max, unsigned threads, ll_cycle_sample* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] {
        const auto series = landaulab::eta_series(*unwrap(table), a, h, n_min, n_max, threads);
        for (std::size_t i = 0; i < series.size(); ++i) {
            const auto& s = series[i];
            out[i] = {s.n, s.a, s.h, s.value.real(), s.value.imag()};
        }
    });
}

ll_status ll_h_sample(const ll_table* table, double a, double tau, ll_orbit_sample* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] { *out = wrap(landaulab::h_sample(*unwrap(table), a, tau)); });
}

ll_status ll_h_trace(const ll_table* table, double a, double tau_start, double tau_end,
                     uint64_t samples, unsigned threads, ll_orbit_sample* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] {
        const auto trace = landaulab::h_trace(*unwrap(table), a, tau_start, tau_end,
                                              static_cast<std::size_t>(samples), threads);
        for (std::size_t i = 0; i < trace.size(); ++i) out[i] = wrap(trace[i]);
    });
}

ll_status ll_nu_count(const ll_table* table, double a, double tau, int64_t* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] { *out = landaulab::nu_count(*unwrap(table), a, tau); });
}

ll_status ll_eta_h_gap(const ll_table* table, double a, double h, int64_t n, double* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] { *out = landaulab::eta_h_gap(*unwrap(table), a, h, n); });
}

ll_status ll_nu_integral(const ll_table* table, double a, double T, double* out) {
    if (auto bad = require(table != nullptr && out != nullptr, "table/out must not be NULL"))
        return bad;
    return guarded([&] { *out = landaulab::nu_integral(*unwrap(table), a, T); });
}

/* ------------------------------------------------------- distributions */

ll_status ll_window_from_samples(const double* re, const double* im, uint64_t n,
                                 double window[4]) {
    if (auto bad = require(re != nullptr && im != nullptr && window != nullptr,
                           "re/im/window must not be NULL"))
        return bad;
    return guarded([&] {
        const auto samples = zip_complex(re, im, n);
        const auto w = landaulab::window_from_samples(samples);
        window[0] = w.re_lo;
        window[1] = w.re_hi;
        window[2] = w.im_lo;
        window[3] = w.im_hi;
    });
}

ll_status ll_histogram_build(const double* re, const double* im, uint64_t n,
                             const double window[4], uint32_t nx, uint32_t ny,
                             unsigned threads, ll_histogram** out) {
    if (auto bad = require((re != nullptr && im != nullptr) || n == 0,
                           "re/im must not be NULL"))
        return bad;
    if (auto bad = require(window != nullptr && out != nullptr, "window/out must not be NULL"))
        return bad;
    return guarded([&] {
        const auto samples = zip_complex(re, im, n);
        const landaulab::Window w{window[0], window[1], window[2], window[3]};
        auto grid = new landaulab::HistogramGrid(
            landaulab::build_histogram(samples, w, nx, ny, threads));
        *out = reinterpret_cast<ll_histogram*>(grid);
    });
}

ll_status ll_histogram_convolve(const ll_histogram* grid, double radius, uint32_t steps,
                                ll_histogram** out) {
    if (auto bad = require(grid != nullptr && out != nullptr, "grid/out must not be NULL"))
        return bad;
    return guarded([&] {
        auto result = new landaulab::HistogramGrid(
            landaulab::angular_convolve(*unwrap(grid), radius, static_cast<int>(steps)));
        *out = reinterpret_cast<ll_histogram*>(result);
    });
}

ll_status ll_histogram_distance(const ll_histogram* g1, const ll_histogram* g2, double* out) {
    if (auto bad = require(g1 != nullptr && g2 != nullptr && out != nullptr,
                           "g1/g2/out must not be NULL"))
        return bad;
    return guarded([&] { *out = landaulab::histogram_distance(*unwrap(g1), *unwrap(g2)); });
}

void ll_histogram_free(ll_histogram* grid) {
    delete reinterpret_cast<landaulab::HistogramGrid*>(grid);
}

uint32_t ll_histogram_nx(const ll_histogram* grid) {
    return grid == nullptr ? 0 : static_cast<uint32_t>(unwrap(grid)->nx);
}

uint32_t ll_histogram_ny(const ll_histogram* grid) {
    return grid == nullptr ? 0 : static_cast<uint32_t>(unwrap(grid)->ny);
}

void ll_histogram_window(const ll_histogram* grid, double window[4]) {
    if (grid == nullptr || window == nullptr) return;
    const auto& w = unwrap(grid)->window;
    window[0] = w.re_lo;
    window[1] = w.re_hi;
    window[2] = w.im_lo;
    window[3] = w.im_hi;
}

double ll_histogram_total(const ll_histogram* grid) {
    return grid == nullptr ? 0.0 : unwrap(grid)->total;
}

double ll_histogram_out_of_range(const ll_histogram* grid) {
    return grid == nullptr ? 0.0 : unwrap(grid)->out_of_range;
}

const double* ll_histogram_weights(const ll_histogram* grid) {
    return grid == nullptr ? nullptr : unwrap(grid)->weights.data();
}

ll_status ll_stationarity_split(const double* re, const double* im, uint64_t n, int k,
                                uint32_t nx, uint32_t ny, unsigned threads, double* out) {
    if (auto bad = require(re != nullptr && im != nullptr && out != nullptr,
                           "re/im/out must not be NULL"))
        return bad;
    return guarded([&] {
        const auto samples = zip_complex(re, im, n);
        const auto distances =
            landaulab::stationarity_split_test(samples, k, nx, ny, threads);
        std::copy(distances.begin(), distances.end(), out);
    });
}

/* ------------------------------------------------- artifact emission */

ll_status ll_emit_landau_csv(const ll_scan_point* points, uint64_t n, const char* path) {
    if (auto bad = require((points != nullptr || n == 0) && path != nullptr,
                           "points/path must not be NULL"))
        return bad;
    return emit_to_path(path, [&](std::ostream& out) {
        std::vector<landaulab::LandauScanPoint> rows(n);
        for (uint64_t i = 0; i < n; ++i) {
            const auto& p = points[i];
            rows[i] = {p.a, p.T, p.lambda, p.normalized, p.predicted, p.residual};
        }
        landaulab::write_landau_csv(out, rows);
    });
}

ll_status ll_emit_eta_csv(const ll_cycle_sample* samples, uint64_t n, const char* path) {
    if (auto bad = require((samples != nullptr || n == 0) && path != nullptr,
                           "samples/path must not be NULL"))
        return bad;
    return emit_to_path(path, [&](std::ostream& out) {
        std::vector<landaulab::CycleSample> rows(n);
        for (uint64_t i = 0; i < n; ++i) {
            const auto& s = samples[i];
            rows[i] = {s.n, s.a, s.h, {s.re, s.im}};
        }
        landaulab::write_eta_csv(out, rows);
    });
}

ll_status ll_emit_trace_csv(const ll_orbit_sample* samples, uint64_t n, const char* path) {
    if (auto bad = require((samples != nullptr || n == 0) && path != nullptr,
                           "samples/path must not be NULL"))
        return bad;
    return emit_to_path(path, [&](std::ostream& out) {
        std::vector<landaulab::OrbitSample> rows(n);
        for (uint64_t i = 0; i < n; ++i) {
            const auto& s = samples[i];
            rows[i] = {s.tau, s.a, {s.re, s.im}, s.nu, s.center, s.boundary_hit != 0};
        }
        landaulab::write_trace_csv(out, rows);
    });
}

ll_status ll_emit_hist_csv(const ll_histogram* grid, const char* path) {
    if (auto bad = require(grid != nullptr && path != nullptr, "grid/path must not be NULL"))
        return bad;
    return emit_to_path(path,
                        [&](std::ostream& out) { landaulab::write_hist_csv(out, *unwrap(grid)); });
}

ll_status ll_emit_scatter_svg(const double* x, const double* y, uint64_t n, const char* path) {
    if (auto bad = require((x != nullptr && y != nullptr) || n == 0, "x/y must not be NULL"))
        return bad;
    if (auto bad = require(path != nullptr, "path must not be NULL")) return bad;
    return emit_to_path(path, [&](std::ostream& out) {
        std::vector<std::pair<double, double>> points;
        points.reserve(n);
        for (uint64_t i = 0; i < n; ++i) points.emplace_back(x[i], y[i]);
        landaulab::write_svg_scatter(out, points);
    });
}

/* --------------------------------------------------------------- verify */

ll_status ll_verify(const ll_table* table, int quick, unsigned threads,
                    const char* scratch_dir, char** json_report, int* all_pass) {
    if (auto bad = require(table != nullptr, "table must not be NULL")) return bad;
    return guarded([&] {
        const auto report = landaulab::run_verify(
            *unwrap(table), quick != 0, threads,
            scratch_dir == nullptr ? std::string() : std::string(scratch_dir));
        if (json_report != nullptr) {
            const std::string json = landaulab::report_to_json(report);
            char* buffer = new char[json.size() + 1];
            std::memcpy(buffer, json.c_str(), json.size() + 1);
            *json_report = buffer;
        }
        if (all_pass != nullptr) *all_pass = report.all_pass ? 1 : 0;
    });
}

void ll_string_free(char* text) { delete[] text; }

}  // extern "C"
