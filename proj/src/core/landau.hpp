#pragma once

#include <span>
#include <vector>

#include "core/arithmetic.hpp"
#include "core/zeros.hpp"

namespace landaulab {

struct LandauScanPoint {
    double a = 0.0;
    double T = 0.0;
    double lambda = 0.0;      // lambda_a(T)
    double normalized = 0.0;  // lambda / (2T)
    double predicted = 0.0;   // -(1/2pi) Lambda(x) x^{-1/2}
    double residual = 0.0;    // normalized - predicted
};

struct ConvergencePoint {
    double T = 0.0;
    double residual = 0.0;
};

struct ConvergenceResult {
    std::vector<ConvergencePoint> points;
    double slope = 0.0;  // least-squares slope of log|residual| vs log T
    bool slope_valid = false;
};

// lambda_a(T) = 2 sum_{0 < t <= T} cos(a t), by symmetry of the zero set.
// Compensated chunked summation, deterministic across thread counts.
double lambda_sum(const ZeroTable& table, double a, double T, unsigned threads = 1);

std::vector<LandauScanPoint> landau_scan(const ZeroTable& table,
                                         std::span<const double> a_grid, double T,
                                         unsigned threads = 1);

LandauScanPoint landau_point(const ZeroTable& table, const Frequency& freq, double T,
                             unsigned threads = 1);

ConvergenceResult landau_convergence(const ZeroTable& table, const Frequency& freq,
                                     std::span<const double> T_list, unsigned threads = 1);

}  // namespace landaulab
