#pragma once

#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace dlie {

inline int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Runs fn(index, out) for every index in [0, total), partitioned into
// contiguous chunks across `jobs` workers. Per-chunk results are concatenated
// in chunk order, so the output is identical for every job count.
template <typename W>
std::vector<W> parallel_sweep(long total, int jobs,
                              const std::function<void(long, std::vector<W>&)>& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs > total) jobs = total > 0 ? int(total) : 1;
    if (jobs <= 1) {
        std::vector<W> out;
        for (long i = 0; i < total; ++i) fn(i, out);
        return out;
    }
    std::vector<std::future<std::vector<W>>> parts;
    long chunk = (total + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        long lo = w * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        parts.push_back(std::async(std::launch::async, [lo, hi, &fn] {
            std::vector<W> local;
            for (long i = lo; i < hi; ++i) fn(i, local);
            return local;
        }));
    }
    std::vector<W> out;
    for (auto& p : parts) {
        auto local = p.get();
        out.insert(out.end(), std::make_move_iterator(local.begin()),
                   std::make_move_iterator(local.end()));
    }
    return out;
}

}  // namespace dlie
