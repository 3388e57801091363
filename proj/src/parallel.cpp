#include "tropimpl/parallel.hpp"

#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

namespace tropimpl {

namespace {
std::atomic<std::size_t> configured_threads{1};
}

void set_thread_count(std::size_t n) {
    if (n == 0) n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    configured_threads = n;
}

std::size_t thread_count() { return configured_threads; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto run = [&] {
        for (;;) {
            std::size_t i = next++;
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace tropimpl
