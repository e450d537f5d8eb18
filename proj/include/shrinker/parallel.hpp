#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace shrinker {

// Fixed worker pool. parallel_for hands out indices dynamically; callers write
// results into per-index slots and reduce them in index order afterwards, so
// output never depends on the thread count.
class ThreadPool {
public:
    explicit ThreadPool(unsigned threads = std::thread::hardware_concurrency());
    ~ThreadPool();
    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    unsigned size() const { return static_cast<unsigned>(workers_.size()) + 1; }
    void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

private:
    void worker_loop();
    void drain();

    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable wake_, done_;
    const std::function<void(std::size_t)>* body_ = nullptr;
    std::size_t next_ = 0, total_ = 0, finished_ = 0;
    std::size_t generation_ = 0;
    bool stop_ = false;
    std::exception_ptr error_;
};

// Runs on `pool` when given, serially otherwise.
void parallel_for(ThreadPool* pool, std::size_t n, const std::function<void(std::size_t)>& body);

// Sum in a fixed binary-tree order.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace shrinker
