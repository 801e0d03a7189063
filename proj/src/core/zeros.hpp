#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace landaulab {

enum class ZeroSource { computed, ingested };

struct ParseOptions {
    double precision = 1e-8;                 // absolute error bound per ordinate
    std::optional<double> base_offset{};     // added to every value; a BASE line in the file wins
    std::string label;
};

// Ordered positive ordinates of the non-trivial zeros (the positive half of
// the zero set; the negative half is implicit by symmetry). Immutable after
// construction and safe to share across threads.
class ZeroTable {
public:
    ZeroTable() = default;

    // Validates ordering, the first-ordinate bound and, for tables that start
    // at the bottom of the critical line, the counting-function envelope.
    static ZeroTable from_ordinates(std::vector<double> ordinates, ZeroSource source,
                                    double precision, std::string label);

    // One decimal ordinate per non-comment line, '#' comments, optional
    // "BASE <decimal>" first data line. Whitespace-only lines are skipped.
    static ZeroTable parse(std::istream& in, const ParseOptions& options);
    static ZeroTable parse_file(const std::string& path, const ParseOptions& options);

    // First `count` ordinates via Gram-block scanning of the Riemann-Siegel Z
    // function, each refined by bisection to 1e-9. Throws incomplete_error if
    // a block fails its sign-change certificate after subdivision to the
    // depth limit.
    static ZeroTable compute(std::size_t count, unsigned threads = 0);

    const std::vector<double>& ordinates() const { return ordinates_; }
    std::size_t size() const { return ordinates_.size(); }
    bool empty() const { return ordinates_.empty(); }
    double max_ordinate() const;  // throws if empty

    // N(T) restricted to the table; T beyond coverage is a coverage error
    // (the count would only be a lower bound).
    std::size_t count_below(double T) const;

    // Same format as parse(), 12 significant digits.
    void write(std::ostream& out) const;
    void write_file(const std::string& path) const;

    ZeroSource source() const { return source_; }
    double precision() const { return precision_; }
    const std::string& label() const { return label_; }
    double compute_seconds() const { return compute_seconds_; }

private:
    std::vector<double> ordinates_;
    ZeroSource source_ = ZeroSource::ingested;
    double precision_ = 0.0;
    std::string label_;
    double compute_seconds_ = 0.0;  // set by compute()

    void validate() const;
};

// Main term of the zero counting function: (T/2pi) log(T/2pi) - T/2pi.
double main_term(double T);

// Riemann-Siegel phase theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi,
// continuous branch, asymptotic expansion through t^-5. Requires t >= 10.
double riemann_siegel_theta(double t);
double riemann_siegel_theta_deriv(double t);

// Real function with Z(t) = 0 iff zeta(1/2 + it) = 0. Riemann-Siegel main
// sum plus correction terms for large t, Euler-Maclaurin evaluation of zeta
// below the crossover. Requires t >= 10.
double riemann_siegel_z(double t);

// Gram point g_n: the unique solution of theta(t) = n*pi, n >= 0.
double gram_point(long n);

}  // namespace landaulab
