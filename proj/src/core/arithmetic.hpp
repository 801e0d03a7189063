#pragma once

#include <complex>
#include <cstdint>

namespace landaulab {

// Frequency parameter a = log x with exact prime-power classification.
// For prime-power input a is k*log(p) by construction; for numeric input the
// prime-power flag fires only when a matches some k*log(p) to 1e-9 relative.
struct Frequency {
    double a = 0.0;         // radians per unit height
    double x = 0.0;         // e^a
    double lambda_x = 0.0;  // von Mangoldt value at x
    bool prime_power = false;
    std::uint64_t p = 0;
    unsigned k = 0;
};

bool is_prime(std::uint64_t n);

// log p if m = p^k, 0 otherwise; exact integer test, m >= 2.
double von_mangoldt(std::uint64_t m);

Frequency frequency_from_prime_power(std::uint64_t p, unsigned k);
Frequency frequency_from_integer(std::uint64_t x);
Frequency frequency_from_a(double a);

// -(1/2pi) Lambda(x) x^{-1/2}: the linear-growth rate of lambda_a(T)/(2T).
double predicted_landau_limit(const Frequency& freq);

// -(Lambda(x)/log x) x^{-(1/2+ih)}: the Cesaro-mean limit of the cycle sums.
std::complex<double> predicted_eta_mean(const Frequency& freq, double h);

}  // namespace landaulab
