// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hyperwalk {

/// Default number of final states buffered per parallel batch.
inline constexpr std::size_t kBatchSize = 4096;

/**
 * Drains `range` in batches, evaluates `compute(item)` for each item using
 * up to `workers` threads, and calls `emit(item, result)` strictly in range
 * order. Output is therefore identical for every worker count. The first
 * exception thrown by any worker is rethrown on the calling thread.
 */
template <class Range, class Compute, class Emit>
void ordered_parallel_map(const Range& range, unsigned workers, Compute compute, Emit emit) {
    using Item = std::decay_t<decltype(*std::begin(range))>;
    using Result = std::decay_t<decltype(compute(std::declval<const Item&>()))>;

    workers = std::max(1u, workers);
    std::vector<Item> batch;
    std::vector<Result> results;
    batch.reserve(kBatchSize);

    auto flush = [&] {
        results.assign(batch.size(), Result{});
        if (workers == 1 || batch.size() < 2) {
            for (std::size_t i = 0; i < batch.size(); ++i) results[i] = compute(batch[i]);
        } else {
            const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, batch.size()));
            std::vector<std::exception_ptr> errors(used);
            std::vector<std::thread> pool;
            pool.reserve(used);
            for (unsigned w = 0; w < used; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        for (std::size_t i = w; i < batch.size(); i += used) results[i] = compute(batch[i]);
                    } catch (...) {
                        errors[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        }
        for (std::size_t i = 0; i < batch.size(); ++i) emit(batch[i], results[i]);
        batch.clear();
    };

    for (const auto& item : range) {
        batch.push_back(item);
        if (batch.size() == kBatchSize) flush();
    }
    flush();
}

}  // namespace hyperwalk
