#include "core/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>

namespace landaulab {

void parallel_chunks(unsigned threads, std::size_t chunk_count,
                     const std::function<void(std::size_t)>& fn) {
    if (chunk_count == 0) return;
    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, chunk_count));

    if (threads <= 1) {
        for (std::size_t i = 0; i < chunk_count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= chunk_count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(chunk_count, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned i = 0; i + 1 < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace landaulab
