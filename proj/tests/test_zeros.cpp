#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "core/errors.hpp"
#include "core/reference.hpp"
#include "core/zeros.hpp"
#include "test_helpers.hpp"

using namespace landaulab;
using landaulab::testing::table2000;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// First zeros from the bisection oracle (frozen; the oracle reproduces them
// below).
constexpr double kZero1 = 14.1347251417346938;
constexpr double kZero2 = 21.022039638771555;
constexpr double kZero3 = 25.0108575801456888;
constexpr double kGram0 = 17.8455995404108608;
}  // namespace

TEST_CASE("theta: asymptotic expansion against the Stirling-route oracle") {
    for (double t : {10.0, 14.0, 17.8455995, 50.0, 100.0, 1234.5, 74920.0}) {
        CHECK(std::abs(riemann_siegel_theta(t) - reference::theta_stirling(t)) <= 1e-10);
    }
    CHECK(std::abs(riemann_siegel_theta(kGram0)) <= 1e-9);        // theta(g0) = 0
    CHECK(gram_point(0) == doctest::Approx(kGram0).epsilon(1e-12));
    // round(theta(t)/pi) + 1 counts zeros at t = 100
    CHECK(std::lround(riemann_siegel_theta(100.0) / kPi) + 1 == 29);
    CHECK_THROWS_AS((void)riemann_siegel_theta(-1.0), Error);
    CHECK_THROWS_AS((void)riemann_siegel_theta(5.0), Error);
}

TEST_CASE("Z: zero at the first ordinate, sign agreement with the oracle") {
    CHECK(std::abs(riemann_siegel_z(14.134725)) <= 1e-5);
    const bool sign_impl = riemann_siegel_z(20.0) < 0.0;
    const bool sign_oracle = reference::z_reference(20.0) < 0.0;
    CHECK(sign_impl == sign_oracle);
    // no ordinate lies in [17, 18]
    CHECK(riemann_siegel_z(17.0) * riemann_siegel_z(18.0) > 0.0);
    CHECK_THROWS_AS((void)riemann_siegel_z(0.0), Error);
}

TEST_CASE("Z: dual-route agreement across the full evaluation range") {
    // Log-spaced grid straddling the Euler-Maclaurin / Riemann-Siegel
    // crossover at t = 400; contract is 1e-6 absolute, typically ~1e-9.
    for (int i = 0; i <= 40; ++i) {
        const double t = 10.5 * std::pow(74900.0 / 10.5, i / 40.0);
        CHECK(std::abs(riemann_siegel_z(t) - reference::z_reference(t)) <= 1e-6);
    }
    for (double t : {399.0, 399.999, 400.0, 400.001, 401.0}) {
        CHECK(std::abs(riemann_siegel_z(t) - reference::z_reference(t)) <= 1e-8);
    }
}

TEST_CASE("compute: first ordinates match the independent oracle") {
    const auto& table = table2000();
    const auto oracle = reference::find_zeros(100);
    REQUIRE(table.size() == 2000);
    CHECK(oracle[0] == doctest::Approx(kZero1).epsilon(1e-10));
    CHECK(oracle[1] == doctest::Approx(kZero2).epsilon(1e-10));
    CHECK(oracle[2] == doctest::Approx(kZero3).epsilon(1e-10));
    for (std::size_t i = 0; i < oracle.size(); ++i)
        CHECK(std::abs(table.ordinates()[i] - oracle[i]) <= 1e-6);
}

TEST_CASE("compute: edge counts") {
    CHECK(ZeroTable::compute(0).empty());
    const auto one = ZeroTable::compute(1);
    REQUIRE(one.size() == 1);
    CHECK(one.ordinates()[0] == doctest::Approx(kZero1).epsilon(1e-9));
    CHECK_THROWS_AS((void)ZeroTable::compute(2000000), Error);
}

TEST_CASE("compute: Gram-block certificate holds at good Gram points") {
    const auto& table = table2000();
    for (long n = 3; n < 1900; n += 57) {
        const double g = gram_point(n);
        const double z = riemann_siegel_z(g);
        const bool good = (n % 2 == 0 ? z : -z) > 1e-6;
        if (!good) continue;
        CHECK(table.count_below(g) == static_cast<std::size_t>(n) + 1);
    }
}

TEST_CASE("count_below and main_term") {
    const auto& table = table2000();
    CHECK(table.count_below(14.0) == 0);
    CHECK(table.count_below(15.0) == 1);
    CHECK(table.count_below(100.0) == 29);
    CHECK_THROWS_AS((void)table.count_below(table.max_ordinate() + 1.0), Error);

    CHECK(main_term(kTwoPi) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(std::abs(main_term(kTwoPi * std::exp(1.0))) <= 1e-12);
    CHECK(std::abs(29.0 - main_term(100.0)) <= 3.0 * std::log(100.0));
    CHECK_THROWS_AS((void)main_term(0.0), Error);

    // empty table: N(T) = 0 for every T
    CHECK(ZeroTable().count_below(1234.5) == 0);
}

TEST_CASE("count envelope holds on a 1000-point grid") {
    const auto& table = table2000();
    const double top = table.max_ordinate();
    for (int i = 0; i < 1000; ++i) {
        const double T = 100.0 + (top - 100.0) * i / 999.0;
        const double count = static_cast<double>(table.count_below(T));
        CHECK(std::abs(count - main_term(T)) <= 3.0 * std::log(T));
    }
}

TEST_CASE("parse: basic forms") {
    ParseOptions opts;
    SUBCASE("two ordinates") {
        std::istringstream in("14.134725142\n21.022039639\n");
        const auto table = ZeroTable::parse(in, opts);
        REQUIRE(table.size() == 2);
        CHECK(table.ordinates()[0] == doctest::Approx(14.134725142).epsilon(1e-12));
        CHECK(table.source() == ZeroSource::ingested);
        CHECK(table.precision() == 1e-8);
    }
    SUBCASE("empty file") {
        std::istringstream in("");
        CHECK(ZeroTable::parse(in, opts).empty());
    }
    SUBCASE("comments and blank lines are skipped") {
        std::istringstream in("# header\n\n14.134725142\n  \n# tail\n21.022039639\n");
        CHECK(ZeroTable::parse(in, opts).size() == 2);
    }
    SUBCASE("first ordinate must exceed 14") {
        std::istringstream in("5.0\n");
        CHECK_THROWS_WITH_AS((void)ZeroTable::parse(in, opts),
                             doctest::Contains("not > 14"), Error);
    }
    SUBCASE("non-numeric line reports its number") {
        std::istringstream in("14.134725142\nnot-a-number\n");
        try {
            (void)ZeroTable::parse(in, opts);
            FAIL("expected parse error");
        } catch (const Error& e) {
            CHECK(e.status() == Status::parse_error);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
    }
    SUBCASE("non-monotone input is a validation error") {
        std::istringstream in("21.0\n14.5\n");
        try {
            (void)ZeroTable::parse(in, opts);
            FAIL("expected validation error");
        } catch (const Error& e) {
            CHECK(e.status() == Status::validation_error);
        }
    }
}

TEST_CASE("parse rejects non-finite ordinates; strips a UTF-8 BOM") {
    ParseOptions opts;
    std::istringstream inf_in("14.5\ninf\n");
    CHECK_THROWS_AS((void)ZeroTable::parse(inf_in, opts), Error);
    std::istringstream nan_in("14.5\nnan\n");
    CHECK_THROWS_AS((void)ZeroTable::parse(nan_in, opts), Error);

    std::istringstream bom_in("\xEF\xBB\xBF# table\n14.5\n");
    CHECK(ZeroTable::parse(bom_in, opts).size() == 1);
}

TEST_CASE("parse: BASE line and base_offset flag compose") {
    ParseOptions opts;
    opts.base_offset = 10.0;
    std::istringstream in("BASE 5.0\n0.5\n1.5\n");
    const auto table = ZeroTable::parse(in, opts);
    REQUIRE(table.size() == 2);
    CHECK(table.ordinates()[0] == doctest::Approx(15.5));
    CHECK(table.ordinates()[1] == doctest::Approx(16.5));

    std::istringstream bad("BASE xyz\n");
    CHECK_THROWS_AS((void)ZeroTable::parse(bad, opts), Error);
}

TEST_CASE("parse: offset windows skip the counting-function envelope") {
    // A thinned high window is a legal table: it starts far above the first
    // zero, so no initial-segment invariant applies.
    ParseOptions opts;
    std::istringstream in("BASE 100000\n1.0\n2.5\n7.25\n");
    const auto table = ZeroTable::parse(in, opts);
    CHECK(table.size() == 3);
}

TEST_CASE("validation rejects a table with a missing stretch") {
    auto ordinates = table2000().ordinates();
    ordinates.erase(ordinates.begin() + 500, ordinates.begin() + 620);
    CHECK_THROWS_AS(
        (void)ZeroTable::from_ordinates(std::move(ordinates), ZeroSource::ingested, 1e-9, ""),
        Error);
}

TEST_CASE("serialize/parse round trip") {
    const auto& table = table2000();
    std::ostringstream first;
    table.write(first);

    std::istringstream back(first.str());
    ParseOptions opts;
    opts.precision = table.precision();
    const auto reparsed = ZeroTable::parse(back, opts);
    REQUIRE(reparsed.size() == table.size());

    // Values agree to the 12-significant-digit serialization resolution,
    // which is finer than the combined ingest+compute precision here.
    for (std::size_t i = 0; i < table.size(); ++i)
        CHECK(std::abs(reparsed.ordinates()[i] - table.ordinates()[i]) <=
              1e-8 + 1e-9);

    // Re-serialization is byte-identical: the canonical form is a fixed point.
    std::ostringstream second;
    reparsed.write(second);
    std::istringstream again(second.str());
    const auto reparsed2 = ZeroTable::parse(again, opts);
    std::ostringstream third;
    reparsed2.write(third);
    CHECK(second.str() == third.str());
}

TEST_CASE("compute merges identically for every thread count") {
    const auto serial = ZeroTable::compute(500, 1);
    const auto parallel = ZeroTable::compute(500, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial.ordinates()[i] == parallel.ordinates()[i]);
}

TEST_CASE("computed tables carry their timing and metadata") {
    const auto& table = table2000();
    CHECK(table.source() == ZeroSource::computed);
    CHECK(table.precision() == 1e-9);
    CHECK(table.compute_seconds() > 0.0);
    CHECK(table.compute_seconds() < 120.0);
}
