#include <doctest.h>

#include <cmath>
#include <vector>

#include "core/errors.hpp"
#include "core/landau.hpp"
#include "test_helpers.hpp"

using namespace landaulab;
using landaulab::testing::table2000;
using landaulab::testing::synthetic_table;

TEST_CASE("lambda_sum basics") {
    const auto& table = table2000();
    CHECK(lambda_sum(table, 1.0, 14.0) == 0.0);  // empty sum below the first zero

    // Single-zero table, T at the coverage edge: the sum has exactly one
    // term, 2 cos(14.134725). Heights beyond coverage are an error.
    const auto single = synthetic_table({14.134725});
    CHECK(lambda_sum(single, 1.0, 14.134725) ==
          doctest::Approx(0.00488387745431321).epsilon(1e-12));
    CHECK_THROWS_AS((void)lambda_sum(single, 1.0, 20.0), Error);

    CHECK_THROWS_AS((void)lambda_sum(table, -1.0, 100.0), Error);
    CHECK_THROWS_AS((void)lambda_sum(table, 0.0, 100.0), Error);
    CHECK_THROWS_AS((void)lambda_sum(table, 1.0, table.max_ordinate() + 5.0), Error);
}

TEST_CASE("lambda is a step function changing only at ordinates") {
    const auto& table = table2000();
    const auto& ts = table.ordinates();
    for (std::size_t i = 10; i < 60; i += 7) {
        const double mid = 0.5 * (ts[i] + ts[i + 1]);
        const double just_after = ts[i] * (1.0 + 1e-12);
        CHECK(lambda_sum(table, 0.7, mid) == lambda_sum(table, 0.7, just_after));
        CHECK(lambda_sum(table, 0.7, mid) != lambda_sum(table, 0.7, ts[i + 1] + 1e-9));
    }
}

TEST_CASE("compensated sum stays near a long-double reference") {
    const auto& table = table2000();
    for (double a : {0.3, 1.0, std::log(2.0), 2.2}) {
        const double T = table.max_ordinate();
        long double naive = 0.0L;
        for (const double t : table.ordinates()) naive += std::cos(a * t);
        const double reference = 2.0 * static_cast<double>(naive);
        CHECK(std::abs(lambda_sum(table, a, T) - reference) <= 1e-6);
    }
}

TEST_CASE("lambda_sum is identical across thread counts") {
    const auto& table = table2000();
    const double T = table.max_ordinate();
    for (double a : {0.5, 1.0, 3.1}) {
        const double one = lambda_sum(table, a, T, 1);
        CHECK(one == lambda_sum(table, a, T, 2));
        CHECK(one == lambda_sum(table, a, T, 7));
    }
}

TEST_CASE("landau_scan classifies the grid") {
    const auto& table = table2000();
    const double T = 2000.0;
    const std::vector<double> grid = {std::log(2.0), 1.0, std::log(4.0)};
    const auto points = landau_scan(table, grid, T);
    REQUIRE(points.size() == 3);
    CHECK(points[0].predicted == doctest::Approx(-0.0780064645195518).epsilon(1e-12));
    CHECK(points[1].predicted == 0.0);
    CHECK(points[2].predicted == doctest::Approx(-0.0551589000381629).epsilon(1e-12));
    for (const auto& p : points) {
        CHECK(p.T == T);
        CHECK(p.normalized == p.lambda / (2.0 * T));
        CHECK(p.residual == p.normalized - p.predicted);
    }

    const std::vector<double> unsorted = {1.0, 0.5};
    CHECK_THROWS_AS((void)landau_scan(table, unsorted, T), Error);
    CHECK_THROWS_AS((void)landau_scan(table, std::vector<double>{}, T), Error);
}

TEST_CASE("tiny table: empty sum leaves the predicted limit as residual") {
    const auto single = synthetic_table({14.134725});
    const auto point = landau_point(single, frequency_from_prime_power(2, 1), 14.0);
    CHECK(point.normalized == 0.0);
    CHECK(point.residual == doctest::Approx(0.0780064645195518).epsilon(1e-12));
}

TEST_CASE("landau_convergence") {
    const auto& table = table2000();
    const Frequency f2 = frequency_from_prime_power(2, 1);

    const auto empty = landau_convergence(table, f2, std::vector<double>{});
    CHECK(empty.points.empty());
    CHECK_FALSE(empty.slope_valid);

    const std::vector<double> t_list = {300.0, 600.0, 1200.0, 2400.0};
    const auto conv = landau_convergence(table, f2, t_list);
    REQUIRE(conv.points.size() == 4);
    CHECK(conv.slope_valid);
    for (std::size_t i = 0; i < t_list.size(); ++i) {
        const auto point = landau_point(table, f2, t_list[i]);
        CHECK(conv.points[i].residual == point.residual);
    }
}

TEST_CASE("residual envelope |r| T / log T stays under the recorded constant") {
    const auto& table = table2000();
    for (std::uint64_t x : {2ull, 3ull, 4ull, 5ull}) {
        const Frequency freq = frequency_from_integer(x);
        for (int i = 0; i <= 25; ++i) {
            const double T = 1000.0 + (table.max_ordinate() - 1000.0) * i / 25.0;
            const auto point = landau_point(table, freq, T);
            CHECK(std::abs(point.residual) * T / std::log(T) <= 50.0);
        }
    }
}
