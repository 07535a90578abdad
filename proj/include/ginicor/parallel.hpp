#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ginicor {

/// Caps the number of worker threads used by the estimators. 0 selects the
/// hardware concurrency. The setting is process-wide.
void set_max_threads(unsigned count);
unsigned max_threads();
unsigned thread_setting();  // raw value last passed to set_max_threads

namespace detail {
inline bool& inside_parallel_region() {
    thread_local bool inside = false;
    return inside;
}
}  // namespace detail

/// Runs body(i) for i in [0, count). Work is split into contiguous index
/// blocks; callers write results by index and reduce in index order, so output
/// never depends on the thread count.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t min_block = 1) {
    std::size_t workers = max_threads();
    if (min_block == 0) min_block = 1;
    if (workers > count / min_block) workers = count / min_block;
    if (detail::inside_parallel_region()) workers = 1;  // no nested fan-out
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * block;
        const std::size_t end = begin + block < count ? begin + block : count;
        if (begin >= end) break;
        threads.emplace_back([&, begin, end] {
            detail::inside_parallel_region() = true;
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
}

/// RAII override of the thread cap, restored on scope exit.
class ScopedThreadLimit {
public:
    explicit ScopedThreadLimit(unsigned count) : previous_(thread_setting()) {
        set_max_threads(count);
    }
    ~ScopedThreadLimit() { set_max_threads(previous_); }
    ScopedThreadLimit(const ScopedThreadLimit&) = delete;
    ScopedThreadLimit& operator=(const ScopedThreadLimit&) = delete;

private:
    unsigned previous_;
};

}  // namespace ginicor
