// include/latwce/parallel.hpp — deterministic work splitting.
//
// Chunk boundaries are a function of the problem size only, never of the
// worker count, so every reduction that merges chunk results in chunk order
// produces identical bits for any --threads setting.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace latwce {

/// Current worker count (>= 1). Defaults to the hardware concurrency,
/// overridable with set_thread_count() or the LATWCE_THREADS variable.
int thread_count();
void set_thread_count(int n); // n <= 0 restores the default

/// Runs fn(begin, end) over fixed-size chunks of [0, n). fn must only touch
/// state owned by its chunk. Exceptions are captured and rethrown.
void parallel_chunks(std::int64_t n, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

/// Parallel map-reduce with a deterministic merge: partial(begin, end) is
/// evaluated per chunk, then combine(acc, part) folds the partials in chunk
/// order. The result is independent of the worker count.
template <class T, class PartialFn, class CombineFn>
T ordered_reduce(std::int64_t n, std::int64_t chunk_size, T init, PartialFn partial, CombineFn combine) {
    if (n <= 0) return init;
    std::int64_t chunks = (n + chunk_size - 1) / chunk_size;
    std::vector<T> parts(static_cast<std::size_t>(chunks), init);
    parallel_chunks(n, chunk_size, [&](std::int64_t b, std::int64_t e) {
        parts[static_cast<std::size_t>(b / chunk_size)] = partial(b, e);
    });
    T acc = init;
    for (auto& p : parts) acc = combine(acc, p);
    return acc;
}

/// Pairwise (cascade) summation; deterministic and much better conditioned
/// than a left fold for long tables.
double pairwise_sum(std::span<const double> xs);

} // namespace latwce
