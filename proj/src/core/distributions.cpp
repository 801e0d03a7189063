#include "core/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/summation.hpp"

namespace landaulab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_window(const Window& window) {
    if (!(window.re_hi > window.re_lo) || !(window.im_hi > window.im_lo))
        fail(Status::geometry_error, "histogram window must be nondegenerate");
}

}  // namespace

bool HistogramGrid::same_geometry(const HistogramGrid& other) const {
    return nx == other.nx && ny == other.ny && window.re_lo == other.window.re_lo &&
           window.re_hi == other.window.re_hi && window.im_lo == other.window.im_lo &&
           window.im_hi == other.window.im_hi;
}

Window window_from_samples(std::span<const std::complex<double>> samples) {
    if (samples.empty())
        fail(Status::invalid_argument, "window_from_samples: no samples");
    KahanAccumulator<double> sum_re, sum_im;
    for (const auto& z : samples) {
        sum_re.add(z.real());
        sum_im.add(z.imag());
    }
    const double n = static_cast<double>(samples.size());
    const double mean_re = sum_re.value() / n;
    const double mean_im = sum_im.value() / n;

    KahanAccumulator<double> var_re, var_im;
    for (const auto& z : samples) {
        var_re.add((z.real() - mean_re) * (z.real() - mean_re));
        var_im.add((z.imag() - mean_im) * (z.imag() - mean_im));
    }
    const double denom = samples.size() > 1 ? n - 1.0 : 1.0;
    // Floor keeps the window nondegenerate for constant streams.
    const double half_re = std::max(4.0 * std::sqrt(var_re.value() / denom), 1e-6);
    const double half_im = std::max(4.0 * std::sqrt(var_im.value() / denom), 1e-6);
    return {mean_re - half_re, mean_re + half_re, mean_im - half_im, mean_im + half_im};
}

HistogramGrid build_histogram(std::span<const std::complex<double>> samples,
                              const Window& window, std::size_t nx, std::size_t ny,
                              unsigned threads) {
    if (nx < 1 || ny < 1) fail(Status::geometry_error, "histogram needs nx, ny >= 1");
    require_window(window);

    HistogramGrid grid;
    grid.window = window;
    grid.nx = nx;
    grid.ny = ny;
    grid.weights.assign(nx * ny, 0.0);
    grid.total = static_cast<double>(samples.size());

    const double sx = static_cast<double>(nx) / (window.re_hi - window.re_lo);
    const double sy = static_cast<double>(ny) / (window.im_hi - window.im_lo);

    // Sharded accumulation: integer counts merge exactly, so the merge order
    // cannot change the result.
    constexpr std::size_t kShardChunk = 1 << 16;
    const std::size_t chunks = (samples.size() + kShardChunk - 1) / kShardChunk;
    std::vector<std::vector<double>> shard(chunks);
    std::vector<double> shard_out(chunks, 0.0);
    parallel_chunks(threads, chunks, [&](std::size_t c) {
        auto& local = shard[c];
        local.assign(nx * ny, 0.0);
        const std::size_t begin = c * kShardChunk;
        const std::size_t end = std::min(begin + kShardChunk, samples.size());
        for (std::size_t i = begin; i < end; ++i) {
            const double fx = (samples[i].real() - window.re_lo) * sx;
            const double fy = (samples[i].imag() - window.im_lo) * sy;
            if (fx < 0.0 || fy < 0.0 || fx >= static_cast<double>(nx) ||
                fy >= static_cast<double>(ny)) {
                shard_out[c] += 1.0;
                continue;
            }
            const auto ix = static_cast<std::size_t>(fx);
            const auto iy = static_cast<std::size_t>(fy);
            local[ix + nx * iy] += 1.0;
        }
    });
    for (std::size_t c = 0; c < chunks; ++c) {
        grid.out_of_range += shard_out[c];
        for (std::size_t i = 0; i < grid.weights.size(); ++i) grid.weights[i] += shard[c][i];
    }
    return grid;
}

HistogramGrid angular_convolve(const HistogramGrid& grid, double radius, int steps) {
    if (steps < 8) fail(Status::invalid_argument, "angular_convolve: steps must be >= 8");
    if (radius < 0.0) fail(Status::invalid_argument, "angular_convolve: radius must be >= 0");
    if (radius == 0.0) return grid;

    HistogramGrid out;
    out.window = grid.window;
    out.nx = grid.nx;
    out.ny = grid.ny;
    out.weights.assign(grid.nx * grid.ny, 0.0);
    out.total = grid.total;

    const double dx = (grid.window.re_hi - grid.window.re_lo) / static_cast<double>(grid.nx);
    const double dy = (grid.window.im_hi - grid.window.im_lo) / static_cast<double>(grid.ny);
    const double inv_steps = 1.0 / static_cast<double>(steps);

    double leaked = 0.0;
    for (int s = 0; s < steps; ++s) {
        const double angle = kTwoPi * s / steps;
        // Shift in bin units; the grid is uniform, so the bilinear weights are
        // shared by every source bin at this angle.
        const double ux = radius * std::cos(angle) / dx;
        const double uy = radius * std::sin(angle) / dy;
        const auto bx = static_cast<long>(std::floor(ux));
        const auto by = static_cast<long>(std::floor(uy));
        const double wx = ux - static_cast<double>(bx);
        const double wy = uy - static_cast<double>(by);
        const double w[2][2] = {{(1.0 - wx) * (1.0 - wy), (1.0 - wx) * wy},
                                {wx * (1.0 - wy), wx * wy}};

        for (std::size_t iy = 0; iy < grid.ny; ++iy) {
            for (std::size_t ix = 0; ix < grid.nx; ++ix) {
                const double mass = grid.at(ix, iy) * inv_steps;
                if (mass == 0.0) continue;
                for (int cx = 0; cx < 2; ++cx) {
                    for (int cy = 0; cy < 2; ++cy) {
                        const long tx = static_cast<long>(ix) + bx + cx;
                        const long ty = static_cast<long>(iy) + by + cy;
                        const double part = mass * w[cx][cy];
                        if (part == 0.0) continue;
                        if (tx < 0 || ty < 0 || tx >= static_cast<long>(grid.nx) ||
                            ty >= static_cast<long>(grid.ny)) {
                            leaked += part;
                        } else {
                            out.at(static_cast<std::size_t>(tx), static_cast<std::size_t>(ty)) +=
                                part;
                        }
                    }
                }
            }
        }
    }
    out.out_of_range = grid.out_of_range + leaked;
    return out;
}

double histogram_distance(const HistogramGrid& g1, const HistogramGrid& g2) {
    if (!g1.same_geometry(g2))
        fail(Status::geometry_error, "histogram_distance: window/bin geometry differs");
    const double m1 = g1.in_window_mass();
    const double m2 = g2.in_window_mass();
    if (m1 <= 0.0 && m2 <= 0.0) return 0.0;
    if (m1 <= 0.0 || m2 <= 0.0) return 1.0;
    KahanAccumulator<double> acc;
    for (std::size_t i = 0; i < g1.weights.size(); ++i)
        acc.add(std::abs(g1.weights[i] / m1 - g2.weights[i] / m2));
    return 0.5 * acc.value();
}

std::vector<double> stationarity_split_test(std::span<const std::complex<double>> samples,
                                            int k, std::size_t nx, std::size_t ny,
                                            unsigned threads) {
    if (k < 2) fail(Status::invalid_argument, "stationarity_split_test: k must be >= 2");
    if (samples.size() / static_cast<std::size_t>(k) < 1000)
        fail(Status::invalid_argument,
             "stationarity_split_test: needs at least 1000 samples per split, have " +
                 std::to_string(samples.size()) + " for k=" + std::to_string(k));

    const Window window = window_from_samples(samples);
    std::vector<HistogramGrid> grids;
    grids.reserve(static_cast<std::size_t>(k));
    for (int block = 0; block < k; ++block) {
        const std::size_t begin = samples.size() * static_cast<std::size_t>(block) /
                                  static_cast<std::size_t>(k);
        const std::size_t end = samples.size() * static_cast<std::size_t>(block + 1) /
                                static_cast<std::size_t>(k);
        grids.push_back(
            build_histogram(samples.subspan(begin, end - begin), window, nx, ny, threads));
    }

    std::vector<double> distances;
    distances.reserve(static_cast<std::size_t>(k) * (static_cast<std::size_t>(k) - 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            distances.push_back(histogram_distance(grids[static_cast<std::size_t>(i)],
                                                   grids[static_cast<std::size_t>(j)]));
    return distances;
}

}  // namespace landaulab
