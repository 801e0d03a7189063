#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace landaulab {

struct Window {
    double re_lo = 0.0, re_hi = 0.0;
    double im_lo = 0.0, im_hi = 0.0;
};

// 2-D binned density over a complex-plane window. Bins are half-open
// [lo, hi) on both axes. Weights are reals so that the angular convolution
// can carry fractional mass; build_histogram itself produces integer counts.
// The conservation invariant is: sum(weights) + out_of_range == total.
struct HistogramGrid {
    Window window;
    std::size_t nx = 0, ny = 0;
    std::vector<double> weights;  // [ix + nx * iy]
    double total = 0.0;
    double out_of_range = 0.0;

    double in_window_mass() const { return total - out_of_range; }
    bool same_geometry(const HistogramGrid& other) const;
    double& at(std::size_t ix, std::size_t iy) { return weights[ix + nx * iy]; }
    double at(std::size_t ix, std::size_t iy) const { return weights[ix + nx * iy]; }
};

// Deterministic default window: mean +- 4 sample standard deviations per axis.
Window window_from_samples(std::span<const std::complex<double>> samples);

HistogramGrid build_histogram(std::span<const std::complex<double>> samples,
                              const Window& window, std::size_t nx, std::size_t ny,
                              unsigned threads = 1);

// Average of the density over shifts radius * e^{i theta}, theta discretized
// into `steps` equal angles (>= 8), with bilinear bin resampling. Mass pushed
// outside the window accumulates in out_of_range rather than disappearing.
HistogramGrid angular_convolve(const HistogramGrid& grid, double radius, int steps);

// Total-variation distance between the normalized in-window densities, in
// [0, 1]. Requires identical geometry.
double histogram_distance(const HistogramGrid& g1, const HistogramGrid& g2);

// Splits the ordered stream into k contiguous blocks, bins each on the common
// default window, and returns all pairwise TV distances (i < j, lexicographic).
std::vector<double> stationarity_split_test(std::span<const std::complex<double>> samples,
                                            int k, std::size_t nx, std::size_t ny,
                                            unsigned threads = 1);

}  // namespace landaulab
