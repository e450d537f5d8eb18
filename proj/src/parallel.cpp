#include "shrinker/parallel.hpp"

#include <exception>
#include <utility>

namespace shrinker {

ThreadPool::ThreadPool(unsigned threads) {
    if (threads == 0) threads = 1;
    for (unsigned i = 1; i < threads; ++i) workers_.emplace_back([this] { worker_loop(); });
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard lock(mu_);
        stop_ = true;
    }
    wake_.notify_all();
    for (auto& t : workers_) t.join();
}

void ThreadPool::drain() {
    for (;;) {
        std::size_t i;
        const std::function<void(std::size_t)>* body;
        {
            std::lock_guard lock(mu_);
            if (next_ >= total_) break;
            i = next_++;
            body = body_;
        }
        std::exception_ptr err;
        try {
            (*body)(i);
        } catch (...) {
            err = std::current_exception();
        }
        std::lock_guard lock(mu_);
        if (err && !error_) error_ = err;
        if (++finished_ == total_) done_.notify_all();
    }
}

void ThreadPool::worker_loop() {
    std::size_t seen = 0;
    for (;;) {
        {
            std::unique_lock lock(mu_);
            wake_.wait(lock, [&] { return stop_ || generation_ != seen; });
            if (stop_) return;
            seen = generation_;
        }
        drain();
    }
}

void ThreadPool::parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    {
        std::lock_guard lock(mu_);
        body_ = &body;
        next_ = 0;
        total_ = n;
        finished_ = 0;
        error_ = nullptr;
        ++generation_;
    }
    wake_.notify_all();
    drain();
    std::unique_lock lock(mu_);
    done_.wait(lock, [&] { return finished_ == total_; });
    body_ = nullptr;
    if (error_) std::rethrow_exception(std::exchange(error_, nullptr));
}

void parallel_for(ThreadPool* pool, std::size_t n, const std::function<void(std::size_t)>& body) {
    if (pool && pool->size() > 1) {
        pool->parallel_for(n, body);
        return;
    }
    for (std::size_t i = 0; i < n; ++i) body(i);
}

double pairwise_sum(const double* x, std::size_t n) {
    if (n <= 8) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

}  // namespace shrinker
