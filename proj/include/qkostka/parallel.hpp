#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace qkostka {

/// Worker count from QKOSTKA_JOBS, else the hardware concurrency.
inline int default_jobs() {
    if (const char* env = std::getenv("QKOSTKA_JOBS")) {
        try {
            int j = std::stoi(env);
            if (j >= 1)
                return j;
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(0..count-1) on `jobs` workers; results are stored by index,
/// so the output does not depend on scheduling. The first exception thrown
/// by any task is rethrown after all workers stop.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn, int jobs) -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    struct Slot {
        Result value{};
    };
    std::vector<Slot> slots(count);
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i)
            slots[i].value = fn(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto worker = [&] {
            while (!failed) {
                std::size_t i = next++;
                if (i >= count)
                    return;
                try {
                    slots[i].value = fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }
    std::vector<Result> out;
    out.reserve(count);
    for (auto& slot : slots)
        out.push_back(std::move(slot.value));
    return out;
}

} // namespace qkostka
