#pragma once

#include <cstdio>
#include <string>

namespace landaulab {

// Fixed-significant-digit formatting for every emitted artifact. snprintf
// with the "C" numeric locale (never changed by this library), so output is
// byte-stable across runs and thread counts.
inline std::string format_significant(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
    return buf;
}

}  // namespace landaulab
