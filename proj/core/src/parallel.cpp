#include "toric/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace toric {

namespace {
std::atomic<unsigned> g_jobs{0};
thread_local bool t_inside_worker = false;  // nested loops run inline
}

void set_default_jobs(unsigned n) { g_jobs.store(n); }

unsigned default_jobs() {
    const unsigned j = g_jobs.load();
    if (j > 0) return j;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn, unsigned jobs) {
    if (jobs == 0) jobs = default_jobs();
    const std::size_t workers = std::min<std::size_t>(jobs, count);
    if (workers <= 1 || t_inside_worker) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        t_inside_worker = true;
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace toric
