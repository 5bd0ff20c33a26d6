#include "latwce/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace latwce {

namespace {

int default_threads() {
    if (const char* env = std::getenv("LATWCE_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::atomic<int> g_threads{0}; // 0 = unset, resolve lazily

} // namespace

int thread_count() {
    int n = g_threads.load(std::memory_order_relaxed);
    return n > 0 ? n : default_threads();
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0, std::memory_order_relaxed); }

void parallel_chunks(std::int64_t n, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (n <= 0) return;
    if (chunk_size <= 0) chunk_size = 1;
    const std::int64_t chunks = (n + chunk_size - 1) / chunk_size;
    const int workers = static_cast<int>(std::min<std::int64_t>(thread_count(), chunks));

    if (workers <= 1) {
        for (std::int64_t c = 0; c < chunks; ++c)
            fn(c * chunk_size, std::min(n, (c + 1) * chunk_size));
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto body = [&] {
        for (;;) {
            std::int64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunks) return;
            try {
                fn(c * chunk_size, std::min(n, (c + 1) * chunk_size));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace latwce
