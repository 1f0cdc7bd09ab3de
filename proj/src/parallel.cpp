#include "autoseq/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace autoseq {

namespace {
std::atomic<unsigned> g_threads{0};
}

void set_max_threads(unsigned n) { g_threads = n; }

unsigned max_threads() {
    unsigned n = g_threads.load();
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    unsigned workers = static_cast<unsigned>(std::min<std::size_t>(max_threads(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (!err) err = std::current_exception();
                next = n;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace autoseq
