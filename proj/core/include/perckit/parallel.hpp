#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace perckit {

// Runs `work` over the items of a pull-based producer on `threads` worker
// threads and hands results to `emit` strictly in input order, from the
// calling thread.  A bounded reorder window keeps memory flat when one
// item is slow.  With threads <= 1 everything runs inline, so parallel
// and serial runs produce identical output.
//
//   produce: () -> std::optional<Item>   (exhausted on nullopt)
//   work:    (Item) -> Result            (pure; called concurrently)
//   emit:    (Result) -> void            (called in input order)
//
// The first exception from any of the three callables is rethrown on the
// calling thread after the workers wind down.
template <typename Item, typename Result, typename Produce, typename Work, typename Emit>
void ordered_parallel_map(int threads, Produce&& produce, Work&& work, Emit&& emit) {
    if (threads <= 1) {
        while (std::optional<Item> item = produce()) emit(work(std::move(*item)));
        return;
    }

    struct Shared {
        std::mutex mu;
        std::condition_variable can_pull;  // workers wait: window space or input
        std::condition_variable can_emit;  // emitter waits: next result ready
        std::uint64_t next_seq = 0;        // next sequence number to hand out
        std::uint64_t next_emit = 0;       // next sequence number to emit
        std::map<std::uint64_t, Result> done;
        bool exhausted = false;
        std::exception_ptr failure;
    } shared;

    const std::uint64_t window = std::uint64_t(threads) * 4;

    auto stop_with = [&shared](std::exception_ptr failure) {
        if (!shared.failure) shared.failure = failure;
        shared.can_pull.notify_all();
        shared.can_emit.notify_all();
    };

    auto worker = [&] {
        for (;;) {
            std::uint64_t seq = 0;
            std::optional<Item> item;
            {
                std::unique_lock lock(shared.mu);
                shared.can_pull.wait(lock, [&] {
                    return shared.failure || shared.exhausted ||
                           shared.next_seq < shared.next_emit + window;
                });
                if (shared.failure || shared.exhausted) return;
                try {
                    item = produce();  // under the lock: producers need not be thread-safe
                } catch (...) {
                    stop_with(std::current_exception());
                    return;
                }
                if (!item) {
                    shared.exhausted = true;
                    shared.can_pull.notify_all();
                    shared.can_emit.notify_all();
                    return;
                }
                seq = shared.next_seq++;
            }
            try {
                Result result = work(std::move(*item));
                std::lock_guard lock(shared.mu);
                shared.done.emplace(seq, std::move(result));
                if (seq == shared.next_emit) shared.can_emit.notify_all();
            } catch (...) {
                std::lock_guard lock(shared.mu);
                stop_with(std::current_exception());
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(size_t(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

    {
        std::unique_lock lock(shared.mu);
        for (;;) {
            shared.can_emit.wait(lock, [&] {
                return shared.failure || shared.done.count(shared.next_emit) ||
                       (shared.exhausted && shared.next_emit >= shared.next_seq);
            });
            if (shared.failure) break;
            auto it = shared.done.find(shared.next_emit);
            if (it == shared.done.end()) break;  // exhausted and fully drained
            Result result = std::move(it->second);
            shared.done.erase(it);
            ++shared.next_emit;
            shared.can_pull.notify_all();
            lock.unlock();
            try {
                emit(std::move(result));
            } catch (...) {
                lock.lock();
                stop_with(std::current_exception());
                break;
            }
            lock.lock();
        }
    }

    for (std::thread& t : pool) t.join();
    if (shared.failure) std::rethrow_exception(shared.failure);
}

}  // namespace perckit
