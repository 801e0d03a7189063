#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core/cycles.hpp"
#include "core/distributions.hpp"
#include "core/landau.hpp"

namespace landaulab {

// Deterministic artifact writers: 12 significant digits, byte-stable across
// runs and thread counts. The CLI and the verification suite share these.

void write_landau_csv(std::ostream& out, std::span<const LandauScanPoint> points);
void write_eta_csv(std::ostream& out, std::span<const CycleSample> samples);
void write_trace_csv(std::ostream& out, std::span<const OrbitSample> samples);
void write_hist_csv(std::ostream& out, const HistogramGrid& grid);

// Minimal static scatter rendering: fixed viewport from the data bounds,
// 1px markers. The CSVs are the authoritative artifacts.
void write_svg_scatter(std::ostream& out, std::span<const std::pair<double, double>> points);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

HistogramGrid parse_hist_csv(std::istream& in);

}  // namespace landaulab
