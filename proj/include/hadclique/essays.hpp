#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "hadclique/report.hpp"

namespace hadclique {

using SteadyClock = std::chrono::steady_clock;

inline double seconds_since(SteadyClock::time_point start)
{
    return std::chrono::duration<double>(SteadyClock::now() - start).count();
}

/// Runs `essay(index)` for index in [0, count) on up to `jobs` threads and
/// returns the records in index order. Essays not started within
/// `time_limit_seconds` (if positive) are dropped. The first exception thrown
/// by an essay is rethrown after all workers stop.
template <class EssayFn>
std::vector<EssayRecord> run_essays(int count, unsigned jobs, double time_limit_seconds, EssayFn&& essay)
{
    const auto start = SteadyClock::now();
    std::vector<std::optional<EssayRecord>> slots(static_cast<std::size_t>(std::max(count, 0)));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= count)
                return;
            if (time_limit_seconds > 0.0 && seconds_since(start) > time_limit_seconds)
                return;
            try {
                EssayRecord record = essay(i);
                record.index = i;
                slots[static_cast<std::size_t>(i)] = std::move(record);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };

    const unsigned n = std::max(1U, std::min(jobs, static_cast<unsigned>(std::max(count, 1))));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned j = 0; j < n; ++j)
            threads.emplace_back(worker);
        for (auto& th : threads)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<EssayRecord> out;
    for (auto& slot : slots) {
        if (slot)
            out.push_back(std::move(*slot));
    }
    return out;
}

} // namespace hadclique
