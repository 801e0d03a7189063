#include "core/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/parallel.hpp"
#include "core/summation.hpp"

namespace landaulab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_coverage(const ZeroTable& table, double height, const char* what) {
    if (table.empty() || table.max_ordinate() < height)
        fail(Status::coverage_error,
             std::string(what) + ": requires ordinates up to " + format_significant(height, 12) +
                 (table.empty() ? " but the table is empty"
                                : " but the table ends at " +
                                      format_significant(table.max_ordinate(), 12)));
}

}  // namespace

std::vector<CycleSample> eta_series(const ZeroTable& table, double a, double h,
                                    std::int64_t n_min, std::int64_t n_max,
                                    unsigned threads) {
    if (!(a > 0.0)) fail(Status::domain_error, "eta_series: a must be positive");
    if (n_min < 1) fail(Status::domain_error, "eta_series: n_min must be >= 1");
    if (n_max < n_min) fail(Status::domain_error, "eta_series: n_max must be >= n_min");
    require_coverage(table, kTwoPi * static_cast<double>(n_max + 1) / a + h, "eta_series");
    if (h < 0.0) {
        // Mirrored ordinates -s - h land in positive cycles once h < -14;
        // the table must cover the reflected range as well.
        const double mirror_top = -h - kTwoPi * static_cast<double>(n_min) / a;
        if (mirror_top > 0.0) require_coverage(table, mirror_top, "eta_series");
    }

    const auto count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<CycleSample> out(count);

    // Cycles are disjoint ordinate slices, so n-ranges parallelize cleanly;
    // each chunk locates its own slice by binary search.
    constexpr std::size_t kCycleChunk = 2048;
    const std::size_t chunks = (count + kCycleChunk - 1) / kCycleChunk;
    const auto& ts = table.ordinates();
    parallel_chunks(threads, chunks, [&](std::size_t c) {
        const std::int64_t lo_n = n_min + static_cast<std::int64_t>(c * kCycleChunk);
        const std::int64_t hi_n =
            std::min<std::int64_t>(n_max, lo_n + static_cast<std::int64_t>(kCycleChunk) - 1);

        for (std::int64_t n = lo_n; n <= hi_n; ++n) {
            auto& sample = out[static_cast<std::size_t>(n - n_min)];
            sample.n = n;
            sample.a = a;
            sample.h = h;
            sample.value = std::log(static_cast<double>(n) / a) / a;
        }

        // Ordinates s with floor(a(s-h)/2pi) in [lo_n, hi_n]; the shifted
        // variable t = s - h is the summation variable. The scan range is
        // widened by an ulp-scale margin and membership decided by the floor
        // itself, so chunk edges cannot drop or double-count a term.
        const double s_lo = h + kTwoPi * static_cast<double>(lo_n) / a;
        const double s_hi = h + kTwoPi * static_cast<double>(hi_n + 1) / a;
        const double slack = 1e-9 * (1.0 + std::abs(s_hi));
        auto it = std::lower_bound(ts.begin(), ts.end(), s_lo - slack);
        for (; it != ts.end() && *it < s_hi + slack; ++it) {
            const double t = *it - h;
            const auto n = static_cast<std::int64_t>(std::floor(a * t / kTwoPi));
            if (n < lo_n || n > hi_n) continue;  // floor straddles the chunk edge
            const double phase = a * t;
            out[static_cast<std::size_t>(n - n_min)].value +=
                std::complex<double>(std::cos(phase) - 1.0, std::sin(phase));
        }

        // Mirrored ordinates t = -s - h can only reach positive cycles when
        // h < -s for some table entry; real tables never trigger this.
        if (h < 0.0) {
            const double m_lo = -h - kTwoPi * static_cast<double>(hi_n + 1) / a;
            const double m_hi = -h - kTwoPi * static_cast<double>(lo_n) / a;
            auto mit = std::upper_bound(ts.begin(), ts.end(), m_lo - slack);
            for (; mit != ts.end() && *mit <= m_hi + slack; ++mit) {
                const double t = -*mit - h;
                if (t <= 0.0) continue;
                const auto n = static_cast<std::int64_t>(std::floor(a * t / kTwoPi));
                if (n < lo_n || n > hi_n) continue;
                const double phase = a * t;
                out[static_cast<std::size_t>(n - n_min)].value +=
                    std::complex<double>(std::cos(phase) - 1.0, std::sin(phase));
            }
        }
    });
    return out;
}

OrbitSample h_sample(const ZeroTable& table, double a, double tau) {
    if (!(a > 0.0)) fail(Status::domain_error, "h_sample: a must be positive");
    if (!(tau > 0.0)) fail(Status::domain_error, "h_sample: tau must be positive");
    require_coverage(table, (tau + kPi) / a, "h_sample");

    OrbitSample sample;
    sample.tau = tau;
    sample.a = a;

    const auto& ts = table.ordinates();
    std::complex<double> window_sum{0.0, 0.0};

    // Positive ordinates with |tau - a t| <= pi, both edges inclusive. The
    // binary search is widened slightly and membership decided on u itself.
    const double slack = 1e-9 * (1.0 + tau) / a;
    auto lo = std::lower_bound(ts.begin(), ts.end(), (tau - kPi) / a - slack);
    auto hi = std::upper_bound(ts.begin(), ts.end(), (tau + kPi) / a + slack);
    for (auto it = lo; it != hi; ++it) {
        const double u = tau - a * *it;
        if (std::abs(u) > kPi) continue;
        window_sum += std::complex<double>(1.0 + std::cos(u), -std::sin(u));
        ++sample.nu;
        if (std::abs(std::abs(u) - kPi) <= 1e-12) sample.boundary_hit = true;
    }

    // Mirrored ordinates enter only while tau <= pi - a t_1 (near tau = 0).
    if (tau <= kPi) {
        auto mhi = std::upper_bound(ts.begin(), ts.end(), (kPi - tau) / a + slack);
        for (auto it = ts.begin(); it != mhi; ++it) {
            const double u = tau + a * *it;
            if (std::abs(u) > kPi) continue;
            window_sum += std::complex<double>(1.0 + std::cos(u), -std::sin(u));
            ++sample.nu;
            if (std::abs(std::abs(u) - kPi) <= 1e-12) sample.boundary_hit = true;
        }
    }

    const double drift = std::log(tau / (kTwoPi * a)) / a;
    sample.value = drift - window_sum;
    sample.center = drift - static_cast<double>(sample.nu);
    return sample;
}

std::vector<OrbitSample> h_trace(const ZeroTable& table, double a, double tau_start,
                                 double tau_end, std::size_t samples, unsigned threads) {
    if (!(tau_start >= kPi)) fail(Status::domain_error, "h_trace: tau_start must be >= pi");
    if (!(tau_end > tau_start)) fail(Status::domain_error, "h_trace: tau_end must exceed tau_start");
    if (samples < 2) fail(Status::domain_error, "h_trace: at least 2 samples");
    require_coverage(table, (tau_end + kPi) / a, "h_trace");

    std::vector<OrbitSample> out(samples);
    const double span = tau_end - tau_start;
    constexpr std::size_t kTraceChunk = 1024;
    const std::size_t chunks = (samples + kTraceChunk - 1) / kTraceChunk;
    parallel_chunks(threads, chunks, [&](std::size_t c) {
        const std::size_t begin = c * kTraceChunk;
        const std::size_t end = std::min(begin + kTraceChunk, samples);
        for (std::size_t i = begin; i < end; ++i) {
            // Endpoints land exactly on tau_start/tau_end.
            const double tau =
                i + 1 == samples
                    ? tau_end
                    : tau_start + span * static_cast<double>(i) /
                                      static_cast<double>(samples - 1);
            out[i] = h_sample(table, a, tau);
        }
    });
    return out;
}

std::int64_t nu_count(const ZeroTable& table, double a, double tau) {
    return h_sample(table, a, tau).nu;
}

double eta_h_gap(const ZeroTable& table, double a, double h, std::int64_t n) {
    if (n < 1) fail(Status::domain_error, "eta_h_gap: n must be >= 1");
    const auto eta = eta_series(table, a, h, n, n, 1);
    const double tau = (2.0 * static_cast<double>(n) + 1.0) * kPi + a * h;
    const OrbitSample orbit = h_sample(table, a, tau);
    return std::abs(eta.front().value - orbit.value);
}

double nu_integral(const ZeroTable& table, double a, double T) {
    if (!(a > 0.0)) fail(Status::domain_error, "nu_integral: a must be positive");
    if (!(T > 0.0)) fail(Status::domain_error, "nu_integral: T must be positive");
    require_coverage(table, (T + kPi) / a, "nu_integral");

    const auto& ts = table.ordinates();
    // Zeros with window [at-pi, at+pi] fully inside [0, T]; each contributes
    // exactly 2pi (counting the mirror overlap when at < pi).
    const auto full_begin = std::lower_bound(ts.begin(), ts.end(), kPi / a);
    const auto full_end = std::upper_bound(ts.begin(), ts.end(), (T - kPi) / a);

    KahanAccumulator<double> partial;
    // Left edge: at < pi. Window clipped at 0, mirror window contributes the
    // complement pi - at.
    for (auto it = ts.begin(); it != full_begin; ++it) {
        const double at = a * *it;
        const double direct = std::max(0.0, std::min(at + kPi, T) - std::max(at - kPi, 0.0));
        const double mirror = std::max(0.0, std::min(kPi - at, T));
        partial.add(direct + mirror);
    }
    // Right edge: at in (T-pi, T+pi).
    for (auto it = std::max(full_end, full_begin); it != ts.end(); ++it) {
        const double at = a * *it;
        if (at - kPi >= T) break;
        partial.add(std::max(0.0, T - (at - kPi)));
    }

    const double full_count =
        static_cast<double>(full_end > full_begin ? full_end - full_begin : 0);
    return kTwoPi * full_count + partial.value();
}

}  // namespace landaulab
