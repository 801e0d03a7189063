#include "core/emit.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "core/errors.hpp"
#include "core/format.hpp"

namespace landaulab {
namespace {

const char* kSep = ",";

std::string f12(double v) { return format_significant(v, 12); }

}  // namespace

void write_landau_csv(std::ostream& out, std::span<const LandauScanPoint> points) {
    out << "a,T,lambda,normalized,predicted,residual\n";
    for (const auto& p : points) {
        out << f12(p.a) << kSep << f12(p.T) << kSep << f12(p.lambda) << kSep
            << f12(p.normalized) << kSep << f12(p.predicted) << kSep << f12(p.residual)
            << "\n";
    }
}

void write_eta_csv(std::ostream& out, std::span<const CycleSample> samples) {
    out << "n,h,a,re,im\n";
    for (const auto& s : samples) {
        out << s.n << kSep << f12(s.h) << kSep << f12(s.a) << kSep << f12(s.value.real())
            << kSep << f12(s.value.imag()) << "\n";
    }
}

void write_trace_csv(std::ostream& out, std::span<const OrbitSample> samples) {
    out << "tau,re,im,nu,center\n";
    for (const auto& s : samples) {
        out << f12(s.tau) << kSep << f12(s.value.real()) << kSep << f12(s.value.imag())
            << kSep << s.nu << kSep << f12(s.center) << "\n";
    }
}

void write_hist_csv(std::ostream& out, const HistogramGrid& grid) {
    out << "window," << f12(grid.window.re_lo) << kSep << f12(grid.window.re_hi) << kSep
        << f12(grid.window.im_lo) << kSep << f12(grid.window.im_hi) << "\n";
    out << "bins," << grid.nx << kSep << grid.ny << kSep << f12(grid.total) << kSep
        << f12(grid.out_of_range) << "\n";
    out << "ix,iy,count\n";
    for (std::size_t iy = 0; iy < grid.ny; ++iy)
        for (std::size_t ix = 0; ix < grid.nx; ++ix)
            out << ix << kSep << iy << kSep << f12(grid.at(ix, iy)) << "\n";
}

HistogramGrid parse_hist_csv(std::istream& in) {
    HistogramGrid grid;
    std::string line;
    if (!std::getline(in, line) || line.rfind("window,", 0) != 0)
        fail(Status::parse_error, "histogram csv: missing window header");
    {
        std::istringstream fields(line.substr(7));
        char comma = 0;
        if (!(fields >> grid.window.re_lo >> comma >> grid.window.re_hi >> comma >>
              grid.window.im_lo >> comma >> grid.window.im_hi))
            fail(Status::parse_error, "histogram csv: malformed window header");
    }
    if (!std::getline(in, line) || line.rfind("bins,", 0) != 0)
        fail(Status::parse_error, "histogram csv: missing bins header");
    {
        std::istringstream fields(line.substr(5));
        char comma = 0;
        if (!(fields >> grid.nx >> comma >> grid.ny >> comma >> grid.total >> comma >>
              grid.out_of_range))
            fail(Status::parse_error, "histogram csv: malformed bins header");
    }
    if (!std::getline(in, line) || line != "ix,iy,count")
        fail(Status::parse_error, "histogram csv: missing column header");
    grid.weights.assign(grid.nx * grid.ny, 0.0);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::size_t ix = 0, iy = 0;
        double count = 0.0;
        char comma = 0;
        if (!(fields >> ix >> comma >> iy >> comma >> count) || ix >= grid.nx || iy >= grid.ny)
            fail(Status::parse_error, "histogram csv: malformed row " + std::to_string(rows));
        grid.at(ix, iy) = count;
        ++rows;
    }
    if (rows != grid.nx * grid.ny)
        fail(Status::parse_error, "histogram csv: expected " +
                                      std::to_string(grid.nx * grid.ny) + " rows, got " +
                                      std::to_string(rows));
    return grid;
}

void write_svg_scatter(std::ostream& out, std::span<const std::pair<double, double>> points) {
    constexpr int kSize = 800;
    constexpr int kMargin = 40;

    double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
    if (!points.empty()) {
        x_lo = x_hi = points.front().first;
        y_lo = y_hi = points.front().second;
        for (const auto& [x, y] : points) {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    if (y_hi == y_lo) y_hi = y_lo + 1.0;

    const double span = kSize - 2.0 * kMargin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "<rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";
    for (const auto& [x, y] : points) {
        const double cx = kMargin + (x - x_lo) / (x_hi - x_lo) * span;
        const double cy = kSize - kMargin - (y - y_lo) / (y_hi - y_lo) * span;
        out << "<rect x=\"" << format_significant(cx, 8) << "\" y=\""
            << format_significant(cy, 8) << "\" width=\"1\" height=\"1\"/>\n";
    }
    out << "</svg>\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(Status::io_error, "cannot open for writing: " + path);
    out << content;
    if (!out) fail(Status::io_error, "write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Status::io_error, "cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace landaulab
