#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace landaulab::reference {

// Independent cross-check routines. These deliberately share no code or
// parameter choices with the primary evaluators in zeros.cpp: the phase comes
// from a shifted Stirling series for log Gamma instead of the asymptotic
// theta expansion, the zeta values from a differently truncated
// Euler-Maclaurin sum, and zeros from a plain dense scan instead of
// Gram-block bookkeeping. verify and the test suites compare the primary
// implementation against these.

// arg Gamma(1/4 + it/2) - (t/2) log pi on the continuous branch, valid for
// every t > 0.
double theta_stirling(double t);

// zeta(1/2 + it).
std::complex<double> zeta_euler_maclaurin(double t);

// e^{i theta(t)} zeta(1/2 + it), real up to roundoff.
double z_reference(double t);

// First `count` zero ordinates by dense sign scan plus bisection on
// z_reference. Intended for modest counts (the acceptance suite uses 100).
std::vector<double> find_zeros(std::size_t count);

}  // namespace landaulab::reference
