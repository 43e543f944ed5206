#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tcorr::detail {

/// Runs body(begin, end) over [0, count) in fixed-size blocks pulled by up to
/// `workers` threads. Each index is visited exactly once, so results written
/// per index do not depend on scheduling. The first exception is rethrown.
template <typename Body>
void parallel_blocks(std::uint64_t count, unsigned workers, Body&& body,
                     const std::function<void(std::uint64_t, std::uint64_t)>& progress = {})
{
    constexpr std::uint64_t kBlock = 512;
    const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> done{0};
    std::mutex mu;
    std::exception_ptr failure;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= blocks)
                return;
            const std::uint64_t begin = b * kBlock;
            const std::uint64_t end = std::min(count, begin + kBlock);
            try {
                body(begin, end);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
                next.store(blocks);
                return;
            }
            const std::uint64_t finished = done.fetch_add(end - begin) + (end - begin);
            if (progress) {
                std::lock_guard lock(mu);
                progress(finished, count);
            }
        }
    };

    const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(blocks, 1))));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace tcorr::detail
