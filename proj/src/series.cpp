#include "mockmod/series.hpp"

#include <atomic>

namespace mockmod {

namespace {
std::atomic<int> g_series_threads{1};
}

void set_series_threads(int n) {
    if (n < 1) throw DomainError("thread count must be >= 1");
    g_series_threads.store(n);
}

int series_threads() { return g_series_threads.load(); }

} // namespace mockmod
