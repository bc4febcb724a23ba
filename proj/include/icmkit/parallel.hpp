#ifndef ICMKIT_PARALLEL_HPP
#define ICMKIT_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace icmkit {

/// Worker count: hardware concurrency, capped by the ICMKIT_THREADS
/// environment variable when set to a positive integer.
inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("ICMKIT_THREADS")) {
        try {
            int requested = std::stoi(env);
            if (requested >= 1) hw = std::min(hw, requested);
            else hw = 1;
        } catch (const std::exception&) {
            // Ignore unparsable values; fall back to hardware concurrency.
        }
    }
    return hw;
}

/// Runs fn(index) for index in [begin, end) across workers. Results must be
/// written into per-index slots by the callers themselves so the outcome is
/// identical no matter the worker count.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn&& fn) {
    std::size_t span = end > begin ? end - begin : 0;
    int workers = worker_count();
    if (workers <= 1 || span < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    if (static_cast<std::size_t>(workers) > span) workers = static_cast<int>(span);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = begin + static_cast<std::size_t>(w); i < end;
                     i += static_cast<std::size_t>(workers))
                    fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> hold(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace icmkit

#endif
