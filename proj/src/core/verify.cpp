// The verification suite. Thresholds marked "envelope" are empirical: the
// statements they check are asymptotic with no effective rate, so the bounds
// were recorded from full-table runs of this code base (with margin) and are
// meaningful as regression tripwires, not as proofs.

#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <functional>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "core/arithmetic.hpp"
#include "core/cycles.hpp"
#include "core/distributions.hpp"
#include "core/emit.hpp"
#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/landau.hpp"
#include "core/reference.hpp"

namespace landaulab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Build-time envelopes for criterion 4. With h = 0 the cycle sum and the
// window sum cancel termwise, so n*gap approaches 1/(2a) from below plus a
// small boundary correction; the margin above 1/(2a) covers it.
constexpr double kGapEnvelopeA1 = 0.55;
constexpr double kGapEnvelopeALog2 = 0.78;

// Quick-mode scale factors, from the O(log T/T) and O(log M/M) rates at the
// smaller ranges (T and M shrink ~7.6x).
constexpr double kQuickLandauFactor = 7.0;
constexpr double kQuickCesaroFactor = 6.0;

struct Context {
    const ZeroTable& table;
    bool quick;
    unsigned threads;
    std::string scratch_dir;
    double coverage;  // max ordinate, 0 when empty

    bool covered(double height) const { return coverage >= height; }
};

CriterionResult skip(int id, std::string name, std::string why) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.skipped = true;
    r.detail = std::move(why);
    return r;
}

std::string fmt(double v) { return format_significant(v, 6); }

// --- criterion 1: zero engine ------------------------------------------------

CriterionResult criterion_zero_engine(const Context& ctx) {
    CriterionResult r;
    r.id = 1;
    r.name = "zero_engine";
    r.threshold = 1e-6;

    const std::size_t need = ctx.quick ? 10000 : 100000;
    ZeroTable computed;
    const ZeroTable* engine = nullptr;
    if (ctx.table.source() == ZeroSource::computed && ctx.table.size() >= need) {
        engine = &ctx.table;
    } else {
        computed = ZeroTable::compute(need, ctx.threads);
        engine = &computed;
    }

    const auto oracle = reference::find_zeros(100);
    double max_dev = 0.0;
    for (std::size_t i = 0; i < 100; ++i)
        max_dev = std::max(max_dev, std::abs(engine->ordinates()[i] - oracle[i]));

    // Cross-check of the Z evaluator itself against the independent route.
    double max_z_dev = 0.0;
    const double top = std::min(engine->max_ordinate(), 100000.0);
    for (int i = 0; i < 48; ++i) {
        const double t = 12.0 * std::pow(top / 12.0, i / 47.0);
        max_z_dev = std::max(max_z_dev,
                             std::abs(riemann_siegel_z(t) - reference::z_reference(t)));
    }

    const std::size_t n100 = engine->count_below(100.0);
    const double elapsed = engine->compute_seconds();
    const bool runtime_ok = elapsed < 120.0;

    r.measured = max_dev;
    r.passed = max_dev <= r.threshold && max_z_dev <= 1e-6 && n100 == 29 && runtime_ok;
    std::ostringstream detail;
    detail << "max |ordinate - oracle| over first 100 = " << fmt(max_dev)
           << "; max |Z - Z_ref| on 48-point grid = " << fmt(max_z_dev)
           << "; N(100) = " << n100 << " (want 29)"
           << "; Gram-block certificate enforced during computation of " << engine->size()
           << " zeros; compute time " << fmt(elapsed) << " s (limit 120)";
    r.detail = detail.str();
    return r;
}

// --- criterion 2: Landau residuals -------------------------------------------

CriterionResult criterion_landau(const Context& ctx) {
    CriterionResult r;
    r.id = 2;
    r.name = "landau_residuals";
    const double tol = 0.005 * (ctx.quick ? kQuickLandauFactor : 1.0);
    r.threshold = tol;

    const std::vector<double> t_list = ctx.quick
                                           ? std::vector<double>{1171.0, 2341.0, 4682.0, 9365.0}
                                           : std::vector<double>{9365.0, 18730.0, 37460.0, 74920.0};
    if (!ctx.covered(t_list.back()))
        return skip(2, r.name, "needs ordinates up to " + fmt(t_list.back()));

    std::vector<Frequency> freqs;
    for (std::uint64_t x : {2ull, 3ull, 4ull, 5ull}) freqs.push_back(frequency_from_integer(x));
    freqs.push_back(frequency_from_a(1.0));
    freqs.push_back(frequency_from_a(std::sqrt(2.0)));

    double worst_final = 0.0;
    double worst_decay = 0.0;  // |r(T_last)| / |r(T_first)| over prime-power scans
    std::ostringstream detail;
    for (const auto& freq : freqs) {
        const auto conv = landau_convergence(ctx.table, freq, t_list, ctx.threads);
        const double final_res = std::abs(conv.points.back().residual);
        worst_final = std::max(worst_final, final_res);
        if (freq.prime_power) {
            // Decrease across the T list within a factor-3 tolerance. A
            // per-step ratio would be meaningless here: the terminal
            // residuals sit at the fluctuation floor (~1e-5), where sign
            // changes make successive magnitudes incomparable.
            const double first_res = std::abs(conv.points.front().residual);
            if (first_res > 0.0)
                worst_decay = std::max(worst_decay, final_res / first_res);
        }
        detail << "a=" << fmt(freq.a) << ": |residual(T_max)|=" << fmt(final_res)
               << " slope=" << fmt(conv.slope) << "; ";
    }

    r.measured = worst_final;
    r.passed = worst_final <= tol && worst_decay <= 3.0;
    detail << "max end-to-end residual ratio over prime powers = " << fmt(worst_decay)
           << " (limit 3)";
    r.detail = detail.str();
    return r;
}

// --- criterion 3: Cesaro means of eta ----------------------------------------

CriterionResult criterion_cesaro(const Context& ctx) {
    CriterionResult r;
    r.id = 3;
    r.name = "eta_cesaro_mean";
    const double tol = 0.02 * (ctx.quick ? kQuickCesaroFactor : 1.0);
    r.threshold = tol;
    const std::int64_t m = ctx.quick ? 1089 : 8264;

    const Frequency f2 = frequency_from_prime_power(2, 1);
    const double need = kTwoPi * static_cast<double>(m) / f2.a + 1.0;
    if (!ctx.covered(need)) return skip(3, r.name, "needs ordinates up to " + fmt(need));

    double worst = 0.0;
    std::ostringstream detail;
    for (const double h : {0.0, 1.0}) {
        const auto series = eta_series(ctx.table, f2.a, h, 1, m - 1, ctx.threads);
        std::complex<double> mean{0.0, 0.0};
        for (const auto& s : series) mean += s.value;
        mean /= static_cast<double>(series.size());
        const double dev = std::abs(mean - predicted_eta_mean(f2, h));
        worst = std::max(worst, dev);
        detail << "a=log2 h=" << fmt(h) << ": |mean - predicted| = " << fmt(dev) << "; ";
    }
    {
        const auto series = eta_series(ctx.table, 1.0, 0.0, 1, m - 1, ctx.threads);
        std::complex<double> mean{0.0, 0.0};
        for (const auto& s : series) mean += s.value;
        mean /= static_cast<double>(series.size());
        const double dev = std::abs(mean);  // predicted mean is 0
        worst = std::max(worst, dev);
        detail << "a=1 h=0: |mean| = " << fmt(dev);
    }

    r.measured = worst;
    r.passed = worst <= tol;
    r.detail = detail.str();
    return r;
}

// --- criterion 4: eta-H gap decay ----------------------------------------------

CriterionResult criterion_gap(const Context& ctx) {
    CriterionResult r;
    r.id = 4;
    r.name = "eta_h_relation";
    r.threshold = 1.0;  // normalized: max n*gap / envelope

    struct Case {
        Frequency freq;
        double envelope;
    };
    const std::vector<Case> cases = {{frequency_from_a(1.0), kGapEnvelopeA1},
                                     {frequency_from_prime_power(2, 1), kGapEnvelopeALog2}};

    double worst_norm = 0.0;
    bool medians_ok = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const double a = c.freq.a;
        const std::int64_t n_top =
            ctx.quick
                ? std::min<std::int64_t>(
                      8000, static_cast<std::int64_t>(ctx.coverage * a / kTwoPi) - 2)
                : 8000;
        if (!ctx.covered(kTwoPi * static_cast<double>(n_top + 1) / a + 1.0) || n_top < 400)
            return skip(4, r.name, "insufficient coverage for the gap scan");

        const auto series = eta_series(ctx.table, a, 0.0, 100, n_top, ctx.threads);
        std::vector<double> low_band, high_band;
        double max_scaled = 0.0;
        const std::int64_t high_lo = ctx.quick ? n_top / 2 : 4000;
        for (const auto& s : series) {
            const double tau = (2.0 * static_cast<double>(s.n) + 1.0) * kPi;
            const double gap = std::abs(s.value - h_sample(ctx.table, a, tau).value);
            max_scaled = std::max(max_scaled, static_cast<double>(s.n) * gap);
            if (s.n <= 500) low_band.push_back(gap);
            if (s.n >= high_lo) high_band.push_back(gap);
        }
        auto median = [](std::vector<double>& v) {
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        const double med_low = median(low_band);
        const double med_high = median(high_band);
        medians_ok = medians_ok && med_high < med_low;
        worst_norm = std::max(worst_norm, max_scaled / c.envelope);
        detail << "a=" << fmt(a) << ": median gap " << fmt(med_high) << " (high band) vs "
               << fmt(med_low) << " (low band); max n*gap = " << fmt(max_scaled)
               << " envelope " << fmt(c.envelope) << "; ";
    }

    r.measured = worst_norm;
    r.passed = medians_ok && worst_norm <= 1.0;
    r.detail = detail.str();
    return r;
}

// --- criterion 5: exact nu bracket ---------------------------------------------

CriterionResult criterion_nu_bracket(const Context& ctx) {
    CriterionResult r;
    r.id = 5;
    r.name = "nu_integral_bracket";
    r.threshold = 1e-6;

    const double t_base = ctx.quick ? 9000.0 : 74000.0;
    double worst = 0.0;
    std::ostringstream detail;
    for (const double a : {0.5, 1.0, std::log(2.0)}) {
        const double T = a * t_base;
        if (!ctx.covered((T + kPi) / a))
            return skip(5, r.name, "needs ordinates up to " + fmt((T + kPi) / a));
        const double integral = nu_integral(ctx.table, a, T);
        const double lo = kTwoPi * static_cast<double>(ctx.table.count_below((T - kPi) / a));
        const double hi = kTwoPi * static_cast<double>(ctx.table.count_below((T + kPi) / a));
        const double violation = std::max({0.0, lo - integral, integral - hi});
        worst = std::max(worst, violation);
        detail << "a=" << fmt(a) << ": integral/2pi = " << fmt(integral / kTwoPi) << " in ["
               << fmt(lo / kTwoPi) << ", " << fmt(hi / kTwoPi) << "]; ";
    }

    r.measured = worst;
    r.passed = worst <= r.threshold;
    r.detail = detail.str();
    return r;
}

// --- criteria 6/7: distribution statistics -------------------------------------

struct FigureStreams {
    std::vector<std::complex<double>> h1, h_half, h_log2, eta1, eta_log2;
};

std::vector<std::complex<double>> orbit_values(const std::vector<OrbitSample>& samples) {
    std::vector<std::complex<double>> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.value);
    return out;
}

std::vector<std::complex<double>> cycle_values(const std::vector<CycleSample>& samples,
                                               std::complex<double> shift) {
    std::vector<std::complex<double>> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.value + shift);
    return out;
}

CriterionResult criterion_stationarity(const Context& ctx, const FigureStreams& streams) {
    CriterionResult r;
    r.id = 6;
    r.name = "h_stationarity";
    r.threshold = ctx.quick ? 0.30 : 0.15;

    double worst = 0.0;
    std::ostringstream detail;
    const char* names[] = {"a=1", "a=1/2", "a=log2"};
    const std::vector<std::complex<double>>* sets[] = {&streams.h1, &streams.h_half,
                                                       &streams.h_log2};
    const std::size_t bins = ctx.quick ? 25 : 50;
    for (int i = 0; i < 3; ++i) {
        const auto distances = stationarity_split_test(*sets[i], 2, bins, bins, ctx.threads);
        const double d = *std::max_element(distances.begin(), distances.end());
        worst = std::max(worst, d);
        detail << names[i] << ": split TV = " << fmt(d) << "; ";
    }
    detail << "(" << bins << "x" << bins << " bins; empirical envelope threshold)";

    r.measured = worst;
    r.passed = worst <= r.threshold;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_convolution(const Context& ctx, const FigureStreams& streams) {
    CriterionResult r;
    r.id = 7;
    r.name = "f_F_convolution";
    // Quick mode has only ~1100 eta samples for a=1 against 40x40 bins, so
    // its envelopes are wide.
    const double tol_log2 = ctx.quick ? 0.35 : 0.20;
    const double tol_1 = ctx.quick ? 0.35 : 0.15;
    r.threshold = tol_log2;

    const std::size_t bins = 40;
    const Frequency f2 = frequency_from_prime_power(2, 1);

    // a = log 2: H histogram vs angular convolution of the recentered eta
    // histogram, radius (Lambda(e^a)/a) e^{-a/2}.
    const Window window_log2 = window_from_samples(streams.h_log2);
    const auto hist_h = build_histogram(streams.h_log2, window_log2, bins, bins, ctx.threads);
    const auto hist_eta =
        build_histogram(streams.eta_log2, window_log2, bins, bins, ctx.threads);
    const double radius = f2.lambda_x / f2.a * std::exp(-0.5 * f2.a);
    const auto convolved = angular_convolve(hist_eta, radius, 256);
    const double d_log2 = histogram_distance(hist_h, convolved);

    // a = 1: the two densities coincide outside prime-power frequencies.
    const Window window_1 = window_from_samples(streams.h1);
    const auto hist_h1 = build_histogram(streams.h1, window_1, bins, bins, ctx.threads);
    const auto hist_eta1 = build_histogram(streams.eta1, window_1, bins, bins, ctx.threads);
    const double d_1 = histogram_distance(hist_h1, hist_eta1);

    r.measured = d_log2;
    r.passed = d_log2 <= tol_log2 && d_1 <= tol_1;
    std::ostringstream detail;
    detail << "a=log2: TV(H-hist, convolve(eta-hist, r=" << fmt(radius) << ")) = "
           << fmt(d_log2) << " (limit " << fmt(tol_log2) << "); a=1: TV(H-hist, eta-hist) = "
           << fmt(d_1) << " (limit " << fmt(tol_1) << "); 40x40 bins, empirical envelopes";
    r.detail = detail.str();
    return r;
}

// --- criterion 8: deterministic figure artifacts -------------------------------

struct FigureRecipe {
    std::string name;
    std::function<std::string(unsigned)> render;  // threads -> artifact bytes
};

CriterionResult criterion_figures(const Context& ctx) {
    CriterionResult r;
    r.id = 8;
    r.name = "figure_artifacts";
    r.threshold = 0.0;

    if (ctx.scratch_dir.empty())
        return skip(8, r.name, "no scratch directory provided");

    const double log2 = std::log(2.0);
    const ZeroTable& table = ctx.table;
    auto trace_csv = [&table](double a, double lo, double hi, std::size_t n, unsigned threads) {
        const auto samples = h_trace(table, a, lo, hi, n, threads);
        std::ostringstream out;
        write_trace_csv(out, samples);
        return out.str();
    };
    // Quick mode exercises the same determinism property on range-scaled
    // recipes; the caption-exact parameters need the full table.
    const bool q = ctx.quick;
    const double cov = q ? 9870.0 : 74920.0;
    const std::size_t n_samp = q ? 10000 : 50000;
    const std::int64_t eta_top = q ? 1086 : 8264;
    const std::vector<FigureRecipe> figures = {
        {"fig1",
         [&, q](unsigned th) {
             return q ? trace_csv(1.0, 5000.0, 5600.0, 600, th)
                      : trace_csv(1.0, 50000.0, 50600.0, 600, th);
         }},
        {"fig2", [&](unsigned th) { return trace_csv(1.0, kPi, cov - kPi, n_samp, th); }},
        {"fig3",
         [&](unsigned th) { return trace_csv(0.5, kPi, 0.5 * cov - kPi, n_samp, th); }},
        {"fig4",
         [&](unsigned th) { return trace_csv(log2, kPi, cov * log2 - kPi, n_samp, th); }},
        {"fig5", [&](unsigned th) {
             const auto series = eta_series(table, log2, 0.0, 4, eta_top, th);
             std::ostringstream out;
             write_eta_csv(out, series);
             return out.str();
         }}};

    std::filesystem::create_directories(ctx.scratch_dir);
    int mismatches = 0;
    std::ostringstream detail;
    for (const auto& figure : figures) {
        const std::string bytes_a = figure.render(1);
        const std::string bytes_b = figure.render(1);            // run-to-run
        const std::string bytes_c = figure.render(ctx.threads ? ctx.threads : 4);  // threads
        write_text_file(ctx.scratch_dir + "/" + figure.name + ".csv", bytes_a);
        if (bytes_a != bytes_b || bytes_a != bytes_c) {
            ++mismatches;
            detail << figure.name << ": MISMATCH; ";
        }
    }
    detail << "5 artifacts rendered twice and across thread counts into " << ctx.scratch_dir;

    r.measured = mismatches;
    r.passed = mismatches == 0;
    r.detail = detail.str();
    return r;
}

}  // namespace

VerifyReport run_verify(const ZeroTable& table, bool quick, unsigned threads,
                        const std::string& scratch_dir) {
    VerifyReport report;
    report.quick = quick;
    report.zero_count = table.size();

    Context ctx{table, quick, threads, scratch_dir,
                table.empty() ? 0.0 : table.max_ordinate()};

    const double full_need = quick ? 9877.0 : 74920.0;
    auto guarded = [&](int id, const char* name, auto&& fn) {
        if (!ctx.covered(full_need)) {
            report.criteria.push_back(
                skip(id, name, std::string("table does not reach T=") + fmt(full_need)));
            return;
        }
        try {
            report.criteria.push_back(fn());
        } catch (const Error& e) {
            report.criteria.push_back(skip(id, name, std::string("error: ") + e.what()));
        }
    };

    guarded(1, "zero_engine", [&] { return criterion_zero_engine(ctx); });
    guarded(2, "landau_residuals", [&] { return criterion_landau(ctx); });
    guarded(3, "eta_cesaro_mean", [&] { return criterion_cesaro(ctx); });
    guarded(4, "eta_h_relation", [&] { return criterion_gap(ctx); });
    guarded(5, "nu_integral_bracket", [&] { return criterion_nu_bracket(ctx); });

    if (ctx.covered(full_need)) {
        // Shared sample streams for the distribution criteria (figure recipes,
        // scaled down in quick mode).
        const double log2 = std::log(2.0);
        const double t_cov = quick ? 9870.0 : 74920.0;
        const std::size_t n_samples = quick ? 10000 : 50000;
        const std::int64_t eta_top =
            quick ? static_cast<std::int64_t>(t_cov * log2 / kTwoPi) - 2 : 8264;
        FigureStreams streams;
        try {
            streams.h1 = orbit_values(
                h_trace(table, 1.0, kPi, t_cov - kPi, n_samples, threads));
            streams.h_half = orbit_values(
                h_trace(table, 0.5, kPi, 0.5 * t_cov - kPi, n_samples, threads));
            streams.h_log2 = orbit_values(
                h_trace(table, log2, kPi, log2 * t_cov - kPi, n_samples, threads));
            const Frequency f2 = frequency_from_prime_power(2, 1);
            streams.eta_log2 = cycle_values(eta_series(table, log2, 0.0, 4, eta_top, threads),
                                            -predicted_eta_mean(f2, 0.0));
            streams.eta1 = cycle_values(eta_series(table, 1.0, 0.0, 4, eta_top, threads),
                                        {0.0, 0.0});
            guarded(6, "h_stationarity", [&] { return criterion_stationarity(ctx, streams); });
            guarded(7, "f_F_convolution", [&] { return criterion_convolution(ctx, streams); });
        } catch (const Error& e) {
            report.criteria.push_back(skip(6, "h_stationarity", e.what()));
            report.criteria.push_back(skip(7, "f_F_convolution", e.what()));
        }
    } else {
        report.criteria.push_back(skip(6, "h_stationarity", "insufficient coverage"));
        report.criteria.push_back(skip(7, "f_F_convolution", "insufficient coverage"));
    }

    guarded(8, "figure_artifacts", [&] { return criterion_figures(ctx); });

    report.all_pass = true;
    for (const auto& criterion : report.criteria)
        if (criterion.skipped || !criterion.passed) report.all_pass = false;
    return report;
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["quick"] = report.quick;
    doc["zero_count"] = report.zero_count;
    doc["all_pass"] = report.all_pass;
    doc["thresholds_note"] =
        "thresholds marked as envelopes are empirical bounds recorded from "
        "full-table runs, not proved rates";
    doc["criteria"] = nlohmann::ordered_json::array();
    for (const auto& criterion : report.criteria) {
        nlohmann::ordered_json entry;
        entry["id"] = criterion.id;
        entry["name"] = criterion.name;
        entry["skipped"] = criterion.skipped;
        entry["pass"] = criterion.passed;
        entry["measured"] = criterion.measured;
        entry["threshold"] = criterion.threshold;
        entry["detail"] = criterion.detail;
        doc["criteria"].push_back(entry);
    }
    return doc.dump(2) + "\n";
}

}  // namespace landaulab
