#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace landaulab {

inline unsigned default_thread_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(chunk_index) for chunk_index in [0, chunk_count). Each chunk writes
// only to its own output slot, so the result is identical for every thread
// count; only wall time changes.
void parallel_chunks(unsigned threads, std::size_t chunk_count,
                     const std::function<void(std::size_t)>& fn);

}  // namespace landaulab
