#include "core/reference.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace landaulab::reference {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// B_{2k} / (2k (2k-1)) for the Stirling series, k = 1..8.
constexpr double kStirling[8] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

std::complex<double> log_gamma(std::complex<double> z) {
    // Shift into |z| >= 32, where eight Stirling terms are exact to double
    // precision, then undo the recurrence. Re(z) > 0 throughout our use.
    std::complex<double> shift_log{0.0, 0.0};
    while (std::abs(z) < 32.0) {
        shift_log += std::log(z);
        z += 1.0;
    }
    const std::complex<double> inv = 1.0 / z;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> series{0.0, 0.0};
    std::complex<double> power = inv;
    for (const double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi) + series - shift_log;
}

}  // namespace

double theta_stirling(double t) {
    if (!(t > 0.0)) fail(Status::domain_error, "theta_stirling: t must be positive");
    const std::complex<double> lg = log_gamma({0.25, 0.5 * t});
    return lg.imag() - 0.5 * t * std::log(kPi);
}

std::complex<double> zeta_euler_maclaurin(double t) {
    const int n_cut = static_cast<int>(std::ceil(3.0 * t / kTwoPi)) + 28;
    const std::complex<double> s{0.5, t};

    std::complex<double> sum{0.0, 0.0};
    for (int n = 1; n < n_cut; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const double amp = 1.0 / std::sqrt(static_cast<double>(n));
        sum += std::complex<double>(amp * std::cos(t * ln), -amp * std::sin(t * ln));
    }
    const double logN = std::log(static_cast<double>(n_cut));
    const double ampN = 1.0 / std::sqrt(static_cast<double>(n_cut));
    const std::complex<double> n_pow_minus_s{ampN * std::cos(t * logN),
                                             -ampN * std::sin(t * logN)};
    sum += static_cast<double>(n_cut) * n_pow_minus_s / (s - 1.0);
    sum += 0.5 * n_pow_minus_s;

    // Bernoulli weights from the same exact constants as the Stirling series:
    // B_{2k} = kStirling[k-1] * 2k * (2k-1).
    const double inv_n = 1.0 / n_cut;
    std::complex<double> q = s * inv_n * inv_n;
    double factorial = 2.0;  // (2k)!
    for (int k = 1; k <= 8; ++k) {
        const double b2k = kStirling[k - 1] * (2.0 * k) * (2.0 * k - 1.0);
        sum += (b2k / factorial) * q * (static_cast<double>(n_cut) * n_pow_minus_s);
        q *= (s + static_cast<double>(2 * k - 1)) * inv_n;
        q *= (s + static_cast<double>(2 * k)) * inv_n;
        factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    }
    return sum;
}

double z_reference(double t) {
    const std::complex<double> zeta = zeta_euler_maclaurin(t);
    const double theta = theta_stirling(t);
    return std::cos(theta) * zeta.real() - std::sin(theta) * zeta.imag();
}

std::vector<double> find_zeros(std::size_t count) {
    std::vector<double> zeros;
    zeros.reserve(count);
    double t = 10.0;
    double z = z_reference(t);
    while (zeros.size() < count) {
        // Step well below the local mean zero spacing 2pi / log(t/2pi).
        const double step = kTwoPi / std::log(t / kTwoPi) / 16.0;
        const double t_next = t + step;
        const double z_next = z_reference(t_next);
        if ((z_next < 0.0) != (z < 0.0)) {
            double lo = t, hi = t_next, z_lo = z;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double z_mid = z_reference(mid);
                if ((z_mid < 0.0) == (z_lo < 0.0)) {
                    lo = mid;
                    z_lo = z_mid;
                } else {
                    hi = mid;
                }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        t = t_next;
        z = z_next;
    }
    return zeros;
}

}  // namespace landaulab::reference
