#include "ginicor/parallel.hpp"

#include <atomic>

namespace ginicor {

namespace {
std::atomic<unsigned> g_thread_setting{0};
}

void set_max_threads(unsigned count) { g_thread_setting.store(count); }

unsigned thread_setting() { return g_thread_setting.load(); }

unsigned max_threads() {
    const unsigned setting = g_thread_setting.load();
    if (setting != 0) return setting;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace ginicor
