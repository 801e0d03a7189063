#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "core/zeros.hpp"

namespace landaulab {

// One cycle sum eta_{a,h}(n): the logarithmic drift term plus
// sum of (e^{iat} - 1) over shifted ordinates t with floor(at/2pi) = n.
struct CycleSample {
    std::int64_t n = 0;
    double a = 0.0;
    double h = 0.0;
    std::complex<double> value{0.0, 0.0};
};

// One sample of the continuous orbit function H_a(tau), with the window
// count nu_a(tau) and the orbit center. boundary_hit marks the measure-zero
// event of an ordinate landing within 1e-12 of the window edge |u| = pi.
struct OrbitSample {
    double tau = 0.0;
    double a = 0.0;
    std::complex<double> value{0.0, 0.0};
    std::int64_t nu = 0;
    double center = 0.0;
    bool boundary_hit = false;
};

// Cycle sums for n in [n_min, n_max]; requires n_min >= 1 (the n = 0 cycle
// has an ill-posed drift term) and table coverage up to 2pi(n_max+1)/a + h.
std::vector<CycleSample> eta_series(const ZeroTable& table, double a, double h,
                                    std::int64_t n_min, std::int64_t n_max,
                                    unsigned threads = 1);

OrbitSample h_sample(const ZeroTable& table, double a, double tau);

// Equally spaced tau grid, both endpoints included; tau_start >= pi.
std::vector<OrbitSample> h_trace(const ZeroTable& table, double a, double tau_start,
                                 double tau_end, std::size_t samples,
                                 unsigned threads = 1);

std::int64_t nu_count(const ZeroTable& table, double a, double tau);

// |eta_{a,h}(n) - H_a((2n+1)pi + ah)|; decays like 1/n.
double eta_h_gap(const ZeroTable& table, double a, double h, std::int64_t n);

// Exact integral of nu_a over [0, T] as a sum of window-overlap lengths;
// every zero whose window lies inside [0, T] contributes exactly 2pi.
double nu_integral(const ZeroTable& table, double a, double T);

}  // namespace landaulab
