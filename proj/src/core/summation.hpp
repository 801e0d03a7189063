#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace landaulab {

// Compensated accumulator (Kahan). Used for the per-chunk partial sums of
// the large oscillatory series, where cancellation leaves a result that is
// orders of magnitude below the term magnitudes.
template <typename T>
struct KahanAccumulator {
    T sum{};
    T compensation{};

    void add(T value) {
        const T y = value - compensation;
        const T t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    T value() const { return sum; }
};

// Deterministic pairwise reduction of partials, independent of how the
// partials were produced (thread count, scheduling). Plain binary tree in
// index order.
template <typename T>
T pairwise_reduce(std::span<const T> parts) {
    if (parts.empty()) return T{};
    std::vector<T> level(parts.begin(), parts.end());
    while (level.size() > 1) {
        std::size_t half = (level.size() + 1) / 2;
        for (std::size_t i = 0; i < level.size() / 2; ++i)
            level[i] = level[2 * i] + level[2 * i + 1];
        if (level.size() % 2 != 0) level[half - 1] = level.back();
        level.resize(half);
    }
    return level[0];
}

// Fixed chunk size for all deterministic reductions over ordinates.
inline constexpr std::size_t kSumChunk = 4096;

}  // namespace landaulab
