#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "core/distributions.hpp"
#include "core/errors.hpp"

using namespace landaulab;

namespace {
std::vector<std::complex<double>> gaussian_cloud(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::complex<double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(g(rng), g(rng));
    return out;
}
}  // namespace

TEST_CASE("build_histogram: placement and conservation") {
    const Window window{0.0, 2.0, 0.0, 2.0};

    SUBCASE("single sample at the window center") {
        const std::vector<std::complex<double>> samples = {{1.0, 1.0}};
        const auto grid = build_histogram(samples, window, 4, 4, 1);
        CHECK(grid.total == 1.0);
        CHECK(grid.out_of_range == 0.0);
        CHECK(grid.at(2, 2) == 1.0);  // boundary goes to the higher bin
    }
    SUBCASE("bin-boundary samples take the higher bin") {
        const std::vector<std::complex<double>> samples = {{1.0, 0.5}};
        const auto grid = build_histogram(samples, window, 2, 2, 1);
        CHECK(grid.at(1, 0) == 1.0);
    }
    SUBCASE("window edge is half-open") {
        const std::vector<std::complex<double>> samples = {{2.0, 1.0}, {0.0, 0.0}};
        const auto grid = build_histogram(samples, window, 2, 2, 1);
        CHECK(grid.out_of_range == 1.0);
        CHECK(grid.at(0, 0) == 1.0);
    }
    SUBCASE("empty input is a valid zero grid") {
        const auto grid = build_histogram({}, window, 3, 3, 1);
        CHECK(grid.total == 0.0);
        CHECK(grid.in_window_mass() == 0.0);
    }
    SUBCASE("degenerate geometry is rejected") {
        CHECK_THROWS_AS((void)build_histogram({}, Window{1.0, 1.0, 0.0, 1.0}, 2, 2, 1),
                        Error);
        CHECK_THROWS_AS((void)build_histogram({}, window, 0, 2, 1), Error);
    }
}

TEST_CASE("conservation invariant on random clouds, any thread count") {
    const auto samples = gaussian_cloud(40000, 99);
    const Window window{-2.0, 2.0, -2.0, 2.0};  // clips the tails
    const auto serial = build_histogram(samples, window, 31, 17, 1);
    const auto parallel = build_histogram(samples, window, 31, 17, 4);
    double mass = 0.0;
    for (const double w : serial.weights) mass += w;
    CHECK(mass + serial.out_of_range == serial.total);
    CHECK(serial.out_of_range > 0.0);
    CHECK(serial.weights == parallel.weights);
    CHECK(serial.out_of_range == parallel.out_of_range);
}

TEST_CASE("window_from_samples: mean +- 4 sigma") {
    const std::vector<std::complex<double>> samples = {{1.0, -1.0}, {3.0, 1.0}};
    const auto w = window_from_samples(samples);  // means (2, 0), sd (sqrt2, sqrt2)
    CHECK(w.re_lo == doctest::Approx(2.0 - 4.0 * std::sqrt(2.0)));
    CHECK(w.re_hi == doctest::Approx(2.0 + 4.0 * std::sqrt(2.0)));
    CHECK(w.im_lo == doctest::Approx(-4.0 * std::sqrt(2.0)));
    CHECK_THROWS_AS((void)window_from_samples({}), Error);

    // constant stream still yields a usable window
    const std::vector<std::complex<double>> flat(10, {0.5, 0.5});
    const auto wf = window_from_samples(flat);
    CHECK(wf.re_hi > wf.re_lo);
}

TEST_CASE("angular_convolve: identity, conservation, leakage") {
    const auto samples = gaussian_cloud(20000, 5);
    const auto window = window_from_samples(samples);
    const auto grid = build_histogram(samples, window, 40, 40, 2);

    SUBCASE("radius 0 is the identity") {
        const auto same = angular_convolve(grid, 0.0, 64);
        CHECK(same.weights == grid.weights);
        CHECK(same.out_of_range == grid.out_of_range);
    }
    SUBCASE("steps below 8 are rejected") {
        CHECK_THROWS_AS((void)angular_convolve(grid, 0.5, 4), Error);
        CHECK_THROWS_AS((void)angular_convolve(grid, -0.1, 64), Error);
    }
    SUBCASE("mass is conserved: in-window plus reported leakage") {
        const auto conv = angular_convolve(grid, 0.9, 128);
        double mass = 0.0;
        for (const double w : conv.weights) mass += w;
        CHECK(mass + conv.out_of_range == doctest::Approx(conv.total).epsilon(1e-12));
        CHECK(conv.out_of_range >= grid.out_of_range);  // leakage only adds
    }
    SUBCASE("halving the theta resolution changes the result by < 1e-3 TV") {
        const auto c256 = angular_convolve(grid, 0.7071, 256);
        const auto c128 = angular_convolve(grid, 0.7071, 128);
        CHECK(histogram_distance(c256, c128) < 1e-3);
    }
}

TEST_CASE("histogram_distance") {
    const Window window{0.0, 1.0, 0.0, 1.0};
    const std::vector<std::complex<double>> a = {{0.1, 0.1}};
    const std::vector<std::complex<double>> b = {{0.9, 0.9}};
    const auto ga = build_histogram(a, window, 4, 4, 1);
    const auto gb = build_histogram(b, window, 4, 4, 1);

    CHECK(histogram_distance(ga, ga) == 0.0);
    CHECK(histogram_distance(ga, gb) == 1.0);  // disjoint single-bin masses

    const auto other = build_histogram(a, window, 5, 4, 1);
    CHECK_THROWS_AS((void)histogram_distance(ga, other), Error);

    const auto empty = build_histogram({}, window, 4, 4, 1);
    CHECK(histogram_distance(empty, empty) == 0.0);
    CHECK(histogram_distance(ga, empty) == 1.0);
}

TEST_CASE("stationarity_split_test") {
    SUBCASE("identical repeated sample gives zero distances") {
        const std::vector<std::complex<double>> flat(4000, {0.25, -0.75});
        const auto distances = stationarity_split_test(flat, 4, 10, 10, 2);
        REQUIRE(distances.size() == 6);  // 4 choose 2
        for (const double d : distances) CHECK(d == 0.0);
    }
    SUBCASE("stationary noise splits are close; disjoint halves are far") {
        auto cloud = gaussian_cloud(8000, 17);
        const auto close = stationarity_split_test(cloud, 2, 20, 20, 2);
        REQUIRE(close.size() == 1);
        CHECK(close[0] < 0.25);

        for (std::size_t i = 4000; i < 8000; ++i) cloud[i] += 50.0;  // shifted half
        const auto far = stationarity_split_test(cloud, 2, 20, 20, 2);
        CHECK(far[0] > 0.9);
    }
    SUBCASE("too few samples per split") {
        const std::vector<std::complex<double>> small(1500, {0.0, 0.0});
        CHECK_THROWS_AS((void)stationarity_split_test(small, 2, 10, 10, 1), Error);
    }
}
