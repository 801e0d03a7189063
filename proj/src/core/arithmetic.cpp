#include "core/arithmetic.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/format.hpp"

namespace landaulab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Smallest prime factor by trial division; sufficient for the desk-scale
// x values here (factors up to 1e6, i.e. n up to 1e12).
std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t d = 3; d <= 1000000 && d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    return smallest_prime_factor(n) == n;
}

double von_mangoldt(std::uint64_t m) {
    if (m < 2) fail(Status::domain_error, "von_mangoldt: m must be >= 2");
    const std::uint64_t p = smallest_prime_factor(m);
    std::uint64_t q = m;
    while (q % p == 0) q /= p;
    return q == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

Frequency frequency_from_prime_power(std::uint64_t p, unsigned k) {
    if (!is_prime(p))
        fail(Status::domain_error, "frequency: " + std::to_string(p) + " is not prime");
    if (k < 1) fail(Status::domain_error, "frequency: exponent must be >= 1");
    Frequency f;
    f.p = p;
    f.k = k;
    f.prime_power = true;
    f.lambda_x = std::log(static_cast<double>(p));
    f.a = static_cast<double>(k) * f.lambda_x;
    f.x = std::exp(f.a);
    return f;
}

Frequency frequency_from_integer(std::uint64_t x) {
    if (x < 2) fail(Status::domain_error, "frequency: integer x must be >= 2");
    const std::uint64_t p = smallest_prime_factor(x);
    std::uint64_t q = x;
    unsigned k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q == 1) return frequency_from_prime_power(p, k);
    Frequency f;
    f.a = std::log(static_cast<double>(x));
    f.x = static_cast<double>(x);
    f.lambda_x = 0.0;
    return f;
}

Frequency frequency_from_a(double a) {
    if (!(a > 0.0)) fail(Status::domain_error, "frequency: a must be positive");
    Frequency f;
    f.a = a;
    f.x = std::exp(a);

    // Numeric prime-power detection: a = k log p to 1e-9 relative, with
    // p^k <= e^a (1 + 1e-9). Candidates come from rounding e^{a/k}; beyond
    // 1e12 the trial-division primality test no longer certifies, so the
    // value is left unclassified (symbolic input is the recommended path).
    const unsigned k_max = static_cast<unsigned>(a / std::log(2.0)) + 1;
    for (unsigned k = 1; k <= k_max; ++k) {
        const double root = std::exp(a / k);
        if (root > 1e12) continue;
        for (std::int64_t delta = -1; delta <= 1; ++delta) {
            const double cand = std::nearbyint(root) + static_cast<double>(delta);
            if (cand < 2.0) continue;
            const auto c = static_cast<std::uint64_t>(cand);
            if (!is_prime(c)) continue;
            const double log_c = std::log(static_cast<double>(c));
            if (std::abs(a - k * log_c) <= 1e-9 * a &&
                std::pow(static_cast<double>(c), static_cast<double>(k)) <=
                    f.x * (1.0 + 1e-9)) {
                f.prime_power = true;
                f.p = c;
                f.k = k;
                f.lambda_x = log_c;
                return f;
            }
        }
    }
    return f;
}

double predicted_landau_limit(const Frequency& freq) {
    if (freq.lambda_x == 0.0) return 0.0;
    return -freq.lambda_x * std::exp(-0.5 * freq.a) / kTwoPi;
}

std::complex<double> predicted_eta_mean(const Frequency& freq, double h) {
    if (freq.lambda_x == 0.0) return {0.0, 0.0};
    const double modulus = freq.lambda_x / freq.a * std::exp(-0.5 * freq.a);
    const double phase = -h * freq.a;
    return {-modulus * std::cos(phase), -modulus * std::sin(phase)};
}

}  // namespace landaulab
