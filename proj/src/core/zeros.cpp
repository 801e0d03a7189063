// Zero ordinates of the Riemann zeta function on the critical line.
//
// Z(t) is evaluated two ways, switched at t = 400:
//   t >= 400   Riemann-Siegel main sum plus correction terms C0..C4. The
//              correction coefficients are functions of p = frac(sqrt(t/2pi))
//              built from derivatives of Psi(p) = cos(2pi(p^2-p-1/16))/cos(2pi p);
//              the derivatives are taken by Cauchy contour integrals and the
//              resulting coefficient functions stored as Chebyshev fits, so no
//              hand-copied coefficient tables are involved.
//   t <  400   Euler-Maclaurin evaluation of zeta(1/2+it) rotated by the
//              phase theta(t). The Riemann-Siegel expansion alone cannot reach
//              the required absolute error near t = 10.
//
// Zero isolation follows Gram-block scanning: Z is evaluated at every Gram
// point, blocks run between consecutive "good" Gram points (where
// (-1)^n Z(g_n) is safely positive), and each block must produce exactly as
// many sign changes as it has Gram intervals, subdividing dyadically up to
// depth 12 before declaring the table incomplete. Each bracket is refined by
// bisection to 1e-9.

#include "core/zeros.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <istream>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/parallel.hpp"
#include "core/summation.hpp"

namespace landaulab {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Crossover between the Euler-Maclaurin and Riemann-Siegel branches of Z.
constexpr double kZCrossover = 400.0;

// ---------------------------------------------------------------------------
// Riemann-Siegel correction coefficients C0..C4.

std::complex<double> psi_complex(std::complex<double> z) {
    const std::complex<double> num =
        std::cos(kTwoPi * (z * z - z - std::complex<double>(1.0 / 16.0)));
    std::complex<double> den = std::cos(kTwoPi * z);
    if (std::abs(den) < 1e-9) {
        // Removable singularity of the quotient form; nudge off the zero of
        // the denominator. The contour integration below averages 512 nodes,
        // so the perturbation is far below the target accuracy.
        z += std::complex<double>(3e-9, 3e-9);
        den = std::cos(kTwoPi * z);
        return std::cos(kTwoPi * (z * z - z - std::complex<double>(1.0 / 16.0))) / den;
    }
    return num / den;
}

// Psi^(k)(p) for all k in `orders`, by trapezoidal Cauchy integrals on a
// circle of radius r around p. Spectrally accurate since Psi is entire.
std::array<double, 13> psi_derivatives(double p) {
    constexpr int kNodes = 512;
    constexpr double kRadius = 0.5;
    std::array<std::complex<double>, kNodes> values;
    for (int j = 0; j < kNodes; ++j) {
        const double angle = kTwoPi * j / kNodes;
        values[j] = psi_complex({p + kRadius * std::cos(angle),
                                 kRadius * std::sin(angle)});
    }
    std::array<double, 13> deriv{};
    double factorial_over_rk = 1.0;  // k! / r^k
    for (int k = 0; k <= 12; ++k) {
        if (k > 0) factorial_over_rk *= k / kRadius;
        std::complex<double> acc{0.0, 0.0};
        for (int j = 0; j < kNodes; ++j) {
            const double angle = -kTwoPi * k * j / kNodes;
            acc += values[j] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        deriv[k] = factorial_over_rk * acc.real() / kNodes;
    }
    return deriv;
}

struct ChebyshevFit {
    std::array<double, 96> coeff{};

    // Evaluate at p in [0,1] (Clenshaw).
    double operator()(double p) const {
        const double x = 2.0 * p - 1.0;
        double b1 = 0.0, b2 = 0.0;
        for (int k = static_cast<int>(coeff.size()) - 1; k >= 1; --k) {
            const double b0 = 2.0 * x * b1 - b2 + coeff[static_cast<std::size_t>(k)];
            b2 = b1;
            b1 = b0;
        }
        return x * b1 - b2 + coeff[0] * 0.5;
    }
};

struct RsCoefficients {
    std::array<ChebyshevFit, 5> c;
};

RsCoefficients build_rs_coefficients() {
    constexpr int kN = 96;
    const double pi2 = kPi * kPi;
    const double pi4 = pi2 * pi2;
    const double pi6 = pi4 * pi2;
    const double pi8 = pi4 * pi4;

    std::array<std::array<double, kN>, 5> samples{};
    for (int i = 0; i < kN; ++i) {
        const double x = std::cos(kPi * (i + 0.5) / kN);
        const double p = 0.5 * (x + 1.0);
        const auto d = psi_derivatives(p);
        samples[0][static_cast<std::size_t>(i)] = d[0];
        samples[1][static_cast<std::size_t>(i)] = -d[3] / (96.0 * pi2);
        samples[2][static_cast<std::size_t>(i)] =
            d[2] / (64.0 * pi2) + d[6] / (18432.0 * pi4);
        samples[3][static_cast<std::size_t>(i)] =
            -d[1] / (64.0 * pi2) - d[5] / (3840.0 * pi4) - d[9] / (5308416.0 * pi6);
        samples[4][static_cast<std::size_t>(i)] =
            d[0] / (128.0 * pi2) + 19.0 * d[4] / (24576.0 * pi4) +
            11.0 * d[8] / (5898240.0 * pi6) + d[12] / (2038431744.0 * pi8);
    }

    RsCoefficients out;
    for (int j = 0; j < 5; ++j) {
        for (int k = 0; k < kN; ++k) {
            double acc = 0.0;
            for (int i = 0; i < kN; ++i)
                acc += samples[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                       std::cos(kPi * k * (i + 0.5) / kN);
            out.c[static_cast<std::size_t>(j)].coeff[static_cast<std::size_t>(k)] =
                2.0 * acc / kN;
        }
    }
    return out;
}

const RsCoefficients& rs_coefficients() {
    static const RsCoefficients table = build_rs_coefficients();
    return table;
}

// log n and 1/sqrt(n) for the Riemann-Siegel main sum. The desk-scale cap of
// 1e6 zeros keeps the sum length m below ~320 terms.
constexpr int kMainSumTable = 1024;

struct MainSumTable {
    std::array<double, kMainSumTable + 1> log_n{};
    std::array<double, kMainSumTable + 1> rsqrt_n{};

    MainSumTable() {
        for (int n = 1; n <= kMainSumTable; ++n) {
            log_n[static_cast<std::size_t>(n)] = std::log(static_cast<double>(n));
            rsqrt_n[static_cast<std::size_t>(n)] = 1.0 / std::sqrt(static_cast<double>(n));
        }
    }
};

const MainSumTable& main_sum_table() {
    static const MainSumTable table;
    return table;
}

double z_riemann_siegel(double t) {
    const double theta = riemann_siegel_theta(t);
    const double scaled = t / kTwoPi;
    const double root = std::sqrt(scaled);
    const int m = static_cast<int>(root);
    const double p = root - m;

    const auto& tab = main_sum_table();
    KahanAccumulator<double> main;
    for (int n = 1; n <= m; ++n) {
        double ln, rs;
        if (n <= kMainSumTable) {
            ln = tab.log_n[static_cast<std::size_t>(n)];
            rs = tab.rsqrt_n[static_cast<std::size_t>(n)];
        } else {
            ln = std::log(static_cast<double>(n));
            rs = 1.0 / std::sqrt(static_cast<double>(n));
        }
        main.add(rs * std::cos(theta - t * ln));
    }

    const auto& coeff = rs_coefficients();
    const double q = 1.0 / root;  // (t/2pi)^{-1/2}
    double correction = 0.0;
    double qj = 1.0;
    for (int j = 0; j < 5; ++j) {
        correction += coeff.c[static_cast<std::size_t>(j)](p) * qj;
        qj *= q;
    }
    const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    return 2.0 * main.value() + sign * std::pow(scaled, -0.25) * correction;
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin branch.

constexpr int kEmBernoulliTerms = 16;

// zeta at even integers: closed forms where slow to sum, direct summation
// where the tail is already below double rounding.
double zeta_even(int k) {
    const double pi2 = kPi * kPi;
    if (k == 1) return pi2 / 6.0;
    if (k == 2) return pi2 * pi2 / 90.0;
    if (k == 3) return pi2 * pi2 * pi2 / 945.0;
    double sum = 1.0;
    for (int n = 2; n <= 512; ++n) sum += std::pow(static_cast<double>(n), -2.0 * k);
    return sum;
}

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2pi)^{2k}
std::array<double, kEmBernoulliTerms + 1> build_em_bernoulli() {
    std::array<double, kEmBernoulliTerms + 1> out{};
    for (int k = 1; k <= kEmBernoulliTerms; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        out[static_cast<std::size_t>(k)] =
            sign * 2.0 * zeta_even(k) / std::pow(kTwoPi, 2.0 * k);
    }
    return out;
}

std::complex<double> zeta_euler_maclaurin(double t, int n_cut, int bernoulli_terms) {
    static const auto bern = build_em_bernoulli();
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

    // q_k = prod_{j=0}^{2k-2} (s+j) / N^{2k}, built incrementally so no
    // intermediate overflows even with |s| ~ t.
    const double inv_n = 1.0 / n_cut;
    std::complex<double> q = s * inv_n * inv_n;
    for (int k = 1; k <= bernoulli_terms; ++k) {
        sum += bern[static_cast<std::size_t>(k)] * q *
               (static_cast<double>(n_cut) * n_pow_minus_s);
        q *= (s + static_cast<double>(2 * k - 1)) * inv_n;
        q *= (s + static_cast<double>(2 * k)) * inv_n;
    }
    return sum;
}

double z_euler_maclaurin(double t) {
    const int n_cut = static_cast<int>(std::ceil(2.0 * t / kTwoPi)) + 20;
    const std::complex<double> zeta = zeta_euler_maclaurin(t, n_cut, kEmBernoulliTerms);
    const double theta = riemann_siegel_theta(t);
    // Z(t) = e^{i theta} zeta(1/2+it); the imaginary part vanishes identically.
    return std::cos(theta) * zeta.real() - std::sin(theta) * zeta.imag();
}

// ---------------------------------------------------------------------------
// Gram-block zero isolation.

constexpr int kMaxSubdivisionDepth = 12;
constexpr double kGoodGramTolerance = 1e-6;
constexpr double kBisectionWidth = 2e-9;

double bisect_zero(double lo, double hi, double z_lo) {
    // Invariant: sign(Z(lo)) == sign(z_lo) != sign(Z(hi)).
    for (int iter = 0; iter < 80 && hi - lo > kBisectionWidth; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double z_mid = riemann_siegel_z(mid);
        if ((z_mid < 0.0) == (z_lo < 0.0)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct Block {
    long first_index;   // Gram index of the left boundary; -1 for the t=10 anchor
    long last_index;    // Gram index of the right boundary (a good Gram point)
    double lo, hi;      // t-range
    double z_lo, z_hi;
    long expected;      // number of zeros the certificate demands
};

// Finds exactly block.expected zeros, subdividing dyadically until the sign
// changes appear. Throws incomplete_error when the depth limit is reached.
void scan_block(const Block& block, std::vector<double>& out) {
    const long intervals = std::max<long>(1, block.last_index - std::max<long>(block.first_index, -1));
    for (int depth = 0; depth <= kMaxSubdivisionDepth; ++depth) {
        const long per_interval = 1L << depth;
        const long segments = intervals * per_interval;
        std::vector<double> ts, zs;
        ts.reserve(static_cast<std::size_t>(segments) + 1);
        zs.reserve(static_cast<std::size_t>(segments) + 1);
        ts.push_back(block.lo);
        zs.push_back(block.z_lo);
        for (long i = 1; i < segments; ++i) {
            const double t = block.lo + (block.hi - block.lo) *
                                            static_cast<double>(i) / static_cast<double>(segments);
            ts.push_back(t);
            zs.push_back(riemann_siegel_z(t));
        }
        ts.push_back(block.hi);
        zs.push_back(block.z_hi);

        long changes = 0;
        for (std::size_t i = 1; i < zs.size(); ++i)
            if ((zs[i] < 0.0) != (zs[i - 1] < 0.0)) ++changes;

        if (changes > block.expected) {
            fail(Status::incomplete_error,
                 "gram block [" + std::to_string(block.first_index) + ", " +
                     std::to_string(block.last_index) + "] produced " +
                     std::to_string(changes) + " sign changes, expected " +
                     std::to_string(block.expected));
        }
        if (changes == block.expected) {
            for (std::size_t i = 1; i < zs.size(); ++i) {
                if ((zs[i] < 0.0) != (zs[i - 1] < 0.0))
                    out.push_back(bisect_zero(ts[i - 1], ts[i], zs[i - 1]));
            }
            return;
        }
    }
    fail(Status::incomplete_error,
         "gram block [" + std::to_string(block.first_index) + ", " +
             std::to_string(block.last_index) + "] (t in [" + format_significant(block.lo, 12) +
             ", " + format_significant(block.hi, 12) +
             "]) still misses sign changes at subdivision depth " +
             std::to_string(kMaxSubdivisionDepth));
}

}  // namespace

// ---------------------------------------------------------------------------

double main_term(double T) {
    if (!(T > 0.0)) fail(Status::domain_error, "main_term: T must be positive");
    const double w = T / kTwoPi;
    return w * std::log(w) - w;
}

double riemann_siegel_theta(double t) {
    if (!(t > 0.0)) fail(Status::domain_error, "riemann_siegel_theta: t must be positive");
    if (t < 10.0)
        fail(Status::domain_error, "riemann_siegel_theta: t must be >= 10");
    const double t2 = t * t;
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 +
           1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t * t2 * t2);
}

double riemann_siegel_theta_deriv(double t) {
    const double t2 = t * t;
    return 0.5 * std::log(t / kTwoPi) - 1.0 / (48.0 * t2) - 21.0 / (5760.0 * t2 * t2) -
           155.0 / (80640.0 * t2 * t2 * t2);
}

double riemann_siegel_z(double t) {
    if (!(t > 0.0)) fail(Status::domain_error, "riemann_siegel_z: t must be positive");
    if (t < 10.0) fail(Status::domain_error, "riemann_siegel_z: t must be >= 10");
    return t < kZCrossover ? z_euler_maclaurin(t) : z_riemann_siegel(t);
}

double gram_point(long n) {
    if (n < 0) fail(Status::domain_error, "gram_point: index must be >= 0");
    // Seed from w (log w - 1) = n + 1/8 with w = t/2pi, then polish on theta.
    const double c = static_cast<double>(n) + 0.125;
    double w = std::max(2.0, c / std::max(1.0, std::log(std::max(c, 3.0))));
    for (int i = 0; i < 64; ++i) {
        const double h = w * (std::log(w) - 1.0) - c;
        const double step = h / std::log(w);
        w -= step;
        if (w < 1.5) w = 1.5;
        if (std::abs(step) < 1e-12 * w) break;
    }
    double t = std::max(kTwoPi * w, 10.5);
    const double target = static_cast<double>(n) * kPi;
    for (int i = 0; i < 32; ++i) {
        const double step = (riemann_siegel_theta(t) - target) / riemann_siegel_theta_deriv(t);
        t -= step;
        if (std::abs(step) < 1e-11) break;
    }
    return t;
}

// ---------------------------------------------------------------------------

double ZeroTable::max_ordinate() const {
    if (ordinates_.empty()) fail(Status::coverage_error, "zero table is empty");
    return ordinates_.back();
}

std::size_t ZeroTable::count_below(double T) const {
    if (!(T > 0.0)) fail(Status::domain_error, "count_below: T must be positive");
    if (ordinates_.empty()) return 0;  // empty table: N(T) = 0 for all T
    if (T > ordinates_.back())
        fail(Status::coverage_error,
             "count_below: T=" + format_significant(T, 12) + " exceeds table coverage " +
                 format_significant(ordinates_.back(), 12));
    return static_cast<std::size_t>(
        std::upper_bound(ordinates_.begin(), ordinates_.end(), T) - ordinates_.begin());
}

void ZeroTable::validate() const {
    if (ordinates_.empty()) return;
    if (!(ordinates_.front() > 14.0))
        fail(Status::validation_error,
             "zero table: first ordinate " + format_significant(ordinates_.front(), 12) +
                 " is not > 14");
    for (std::size_t i = 0; i < ordinates_.size(); ++i) {
        if (!std::isfinite(ordinates_[i]))
            fail(Status::validation_error,
                 "zero table: non-finite ordinate at entry " + std::to_string(i));
        if (i > 0 && !(ordinates_[i] > ordinates_[i - 1]))
            fail(Status::validation_error,
                 "zero table: ordinates not strictly increasing at entry " + std::to_string(i));
    }
    // Counting-function envelope, applicable only when the table starts at the
    // bottom of the critical line (offset windows are legitimate tables but
    // count from an unknown base).
    if (ordinates_.front() < 15.0 && ordinates_.back() >= 100.0) {
        const double t_max = ordinates_.back();
        for (int i = 0; i < 1000; ++i) {
            const double T = 100.0 + (t_max - 100.0) * i / 999.0;
            const auto count = static_cast<double>(
                std::upper_bound(ordinates_.begin(), ordinates_.end(), T) - ordinates_.begin());
            if (std::abs(count - main_term(T)) > 3.0 * std::log(T))
                fail(Status::validation_error,
                     "zero table: zero count at T=" + format_significant(T, 12) +
                         " is inconsistent with the counting function (missing or spurious "
                         "ordinates?)");
        }
    }
}

ZeroTable ZeroTable::from_ordinates(std::vector<double> ordinates, ZeroSource source,
                                    double precision, std::string label) {
    if (!(precision > 0.0))
        fail(Status::invalid_argument, "zero table precision must be positive");
    ZeroTable table;
    table.ordinates_ = std::move(ordinates);
    table.source_ = source;
    table.precision_ = precision;
    table.label_ = std::move(label);
    table.validate();
    return table;
}

ZeroTable ZeroTable::parse(std::istream& in, const ParseOptions& options) {
    std::vector<double> values;
    double offset = options.base_offset.value_or(0.0);
    std::string line;
    std::size_t line_number = 0;
    bool seen_value = false;

    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view(line);
        if (line_number == 1 && view.starts_with("\xEF\xBB\xBF")) view.remove_prefix(3);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ' || view.back() == '\t'))
            view.remove_suffix(1);
        while (!view.empty() && (view.front() == ' ' || view.front() == '\t'))
            view.remove_prefix(1);
        if (view.empty() || view.front() == '#') continue;

        if (!seen_value && view.starts_with("BASE")) {
            std::string_view rest = view.substr(4);
            while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
                rest.remove_prefix(1);
            double base = 0.0;
            const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), base);
            if (ec != std::errc{} || ptr != rest.data() + rest.size())
                fail(Status::parse_error,
                     "line " + std::to_string(line_number) + ": malformed BASE line");
            offset += base;
            continue;
        }

        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
        if (ec != std::errc{} || ptr != view.data() + view.size())
            fail(Status::parse_error,
                 "line " + std::to_string(line_number) + ": not a decimal ordinate: '" +
                     std::string(view) + "'");
        values.push_back(value + offset);
        seen_value = true;
    }
    return from_ordinates(std::move(values), ZeroSource::ingested, options.precision,
                          options.label);
}

ZeroTable ZeroTable::parse_file(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) fail(Status::io_error, "cannot open zero file: " + path);
    ParseOptions opts = options;
    if (opts.label.empty()) opts.label = path;
    return parse(in, opts);
}

void ZeroTable::write(std::ostream& out) const {
    out << "# zeros: " << ordinates_.size() << " ordinates, source="
        << (source_ == ZeroSource::computed ? "computed" : "ingested")
        << ", precision=" << format_significant(precision_, 3);
    if (!label_.empty()) out << ", label=" << label_;
    out << "\n";
    for (const double t : ordinates_) out << format_significant(t, 12) << "\n";
}

void ZeroTable::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Status::io_error, "cannot open for writing: " + path);
    write(out);
    if (!out) fail(Status::io_error, "write failed: " + path);
}

ZeroTable ZeroTable::compute(std::size_t count, unsigned threads) {
    if (count > 1000000)
        fail(Status::domain_error, "compute: at most 1e6 zeros (desk-scale guard)");
    const auto t_begin = std::chrono::steady_clock::now();

    ZeroTable table;
    table.source_ = ZeroSource::computed;
    table.precision_ = 1e-9;
    table.label_ = "computed:first-" + std::to_string(count);
    if (count == 0) return table;

    rs_coefficients();  // build coefficient tables before the parallel phase

    // Gram points and Z values up to a slack margin beyond the requested
    // count; |N(g_n) - (n+1)| stays far below the margin at desk scale.
    const long margin = 64;
    long top = static_cast<long>(count) + margin;
    std::vector<double> gram(static_cast<std::size_t>(top) + 1);
    std::vector<double> z_gram(static_cast<std::size_t>(top) + 1);
    {
        constexpr std::size_t kChunk = 512;
        const std::size_t chunks = (gram.size() + kChunk - 1) / kChunk;
        parallel_chunks(threads, chunks, [&](std::size_t c) {
            const std::size_t begin = c * kChunk;
            const std::size_t end = std::min(begin + kChunk, gram.size());
            for (std::size_t i = begin; i < end; ++i) {
                gram[i] = gram_point(static_cast<long>(i));
                z_gram[i] = riemann_siegel_z(gram[i]);
            }
        });
    }

    auto is_good = [&](long n) {
        const double v = (n % 2 == 0) ? z_gram[static_cast<std::size_t>(n)]
                                      : -z_gram[static_cast<std::size_t>(n)];
        return v > kGoodGramTolerance;
    };

    // Left anchor at t = 10: below the first Gram point and below every zero,
    // with round(theta(10)/pi) + 1 == 0 zeros expected underneath.
    const double t_anchor = 10.0;
    const double z_anchor = riemann_siegel_z(t_anchor);

    std::vector<Block> blocks;
    long prev_index = -1;
    double prev_t = t_anchor;
    double prev_z = z_anchor;
    long certified = 0;  // zeros below the last good Gram point
    for (long n = 0; n <= top && certified < static_cast<long>(count); ++n) {
        if (!is_good(n)) continue;
        Block block;
        block.first_index = prev_index;
        block.last_index = n;
        block.lo = prev_t;
        block.hi = gram[static_cast<std::size_t>(n)];
        block.z_lo = prev_z;
        block.z_hi = z_gram[static_cast<std::size_t>(n)];
        block.expected = (n + 1) - (certified);
        blocks.push_back(block);
        certified = n + 1;
        prev_index = n;
        prev_t = block.hi;
        prev_z = block.z_hi;
    }
    if (certified < static_cast<long>(count))
        fail(Status::incomplete_error,
             "compute: no good Gram point found above index " + std::to_string(top) +
                 "; cannot certify " + std::to_string(count) + " zeros");

    // Scan blocks in parallel; each block owns an output slot, so the merge
    // is a deterministic concatenation regardless of thread count.
    std::vector<std::vector<double>> found(blocks.size());
    parallel_chunks(threads, blocks.size(), [&](std::size_t b) {
        scan_block(blocks[b], found[b]);
    });

    std::vector<double>& zeros = table.ordinates_;
    zeros.reserve(count);
    for (const auto& block_zeros : found) {
        for (const double z : block_zeros) {
            if (zeros.size() == count) break;
            zeros.push_back(z);
        }
    }
    table.validate();
    table.compute_seconds_ =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
    return table;
}

}  // namespace landaulab
