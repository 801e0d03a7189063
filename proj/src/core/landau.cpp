#include "core/landau.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/parallel.hpp"
#include "core/summation.hpp"

namespace landaulab {

double lambda_sum(const ZeroTable& table, double a, double T, unsigned threads) {
    if (!(a > 0.0)) fail(Status::domain_error, "lambda_sum: a must be positive");
    if (!(T > 0.0)) fail(Status::domain_error, "lambda_sum: T must be positive");
    if (table.empty()) return 0.0;
    if (T > table.max_ordinate())
        fail(Status::coverage_error,
             "lambda_sum: T=" + format_significant(T, 12) + " exceeds table coverage " +
                 format_significant(table.max_ordinate(), 12));

    const auto& ts = table.ordinates();
    const auto n = static_cast<std::size_t>(
        std::upper_bound(ts.begin(), ts.end(), T) - ts.begin());
    if (n == 0) return 0.0;

    const std::size_t chunks = (n + kSumChunk - 1) / kSumChunk;
    std::vector<double> partial(chunks, 0.0);
    parallel_chunks(threads, chunks, [&](std::size_t c) {
        const std::size_t begin = c * kSumChunk;
        const std::size_t end = std::min(begin + kSumChunk, n);
        KahanAccumulator<double> acc;
        for (std::size_t i = begin; i < end; ++i) acc.add(std::cos(a * ts[i]));
        partial[c] = acc.value();
    });
    return 2.0 * pairwise_reduce<double>(partial);
}

LandauScanPoint landau_point(const ZeroTable& table, const Frequency& freq, double T,
                             unsigned threads) {
    LandauScanPoint point;
    point.a = freq.a;
    point.T = T;
    point.lambda = lambda_sum(table, freq.a, T, threads);
    point.normalized = point.lambda / (2.0 * T);
    point.predicted = predicted_landau_limit(freq);
    point.residual = point.normalized - point.predicted;
    return point;
}

std::vector<LandauScanPoint> landau_scan(const ZeroTable& table,
                                         std::span<const double> a_grid, double T,
                                         unsigned threads) {
    if (a_grid.empty()) fail(Status::invalid_argument, "landau_scan: empty frequency grid");
    for (std::size_t i = 1; i < a_grid.size(); ++i)
        if (!(a_grid[i] > a_grid[i - 1]))
            fail(Status::invalid_argument, "landau_scan: grid must be strictly ascending");

    std::vector<LandauScanPoint> points;
    points.reserve(a_grid.size());
    for (const double a : a_grid)
        points.push_back(landau_point(table, frequency_from_a(a), T, threads));
    return points;
}

ConvergenceResult landau_convergence(const ZeroTable& table, const Frequency& freq,
                                     std::span<const double> T_list, unsigned threads) {
    ConvergenceResult result;
    result.points.reserve(T_list.size());
    for (const double T : T_list) {
        const LandauScanPoint point = landau_point(table, freq, T, threads);
        result.points.push_back({T, point.residual});
    }

    // Decay-rate report: least squares on (log T, log |residual|), skipping
    // exact zeros (possible only on synthetic tables).
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    std::size_t m = 0;
    for (const auto& point : result.points) {
        if (point.residual == 0.0) continue;
        const double x = std::log(point.T);
        const double y = std::log(std::abs(point.residual));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m >= 2) {
        const double denom = static_cast<double>(m) * sxx - sx * sx;
        if (denom != 0.0) {
            result.slope = (static_cast<double>(m) * sxy - sx * sy) / denom;
            result.slope_valid = true;
        }
    }
    return result;
}

}  // namespace landaulab
