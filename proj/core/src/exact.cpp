#include "kforce/exact.hpp"

#include "kforce/forcing.hpp"
#include "kforce/workers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace kforce {

std::uint64_t binomial(int n, int r)
{
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    unsigned __int128 result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
        if (result > std::numeric_limits<std::uint64_t>::max())
            return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<Vertex> unrank_combination(int n, int r, std::uint64_t index)
{
    std::vector<Vertex> out;
    out.reserve(r);
    Vertex c = 0;
    for (int i = 0; i < r; ++i) {
        while (true) {
            auto with_c = binomial(n - c - 1, r - i - 1);
            if (index < with_c)
                break;
            index -= with_c;
            ++c;
        }
        out.push_back(c++);
    }
    return out;
}

namespace {

constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();

bool next_combination(std::vector<Vertex> & idx, int n)
{
    const int r = static_cast<int>(idx.size());
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i)
        --i;
    if (i < 0)
        return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j)
        idx[j] = idx[j - 1] + 1;
    return true;
}

// Visits lexicographic ranks [0, limit) of the size-r subsets, calling
// on_hit(rank, subset) for every k-forcing subset. With stop_at_first the
// search returns the smallest successful rank (or `none`); chunks are
// claimed in order and a chunk is skipped once an earlier success is known,
// so the answer does not depend on scheduling.
template <typename OnHit>
std::uint64_t scan_size(const Graph & g, int k, int r, std::uint64_t limit, int workers, bool stop_at_first, OnHit && on_hit)
{
    const int n = g.order();
    const std::uint64_t chunk = std::max<std::uint64_t>(256, limit / (static_cast<std::uint64_t>(workers) * 64 + 1));
    const std::uint64_t chunks = (limit + chunk - 1) / chunk;
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<std::uint64_t> best{none};

    auto work = [&] {
        while (true) {
            auto c = next_chunk.fetch_add(1);
            if (c >= chunks)
                return;
            const std::uint64_t begin = c * chunk, end = std::min(limit, begin + chunk);
            if (stop_at_first && begin > best.load())
                return;
            auto idx = unrank_combination(n, r, begin);
            for (std::uint64_t rank = begin; rank < end; ++rank) {
                if (is_k_forcing_set(g, VertexSet(n, idx), k)) {
                    on_hit(rank, idx);
                    if (stop_at_first) {
                        auto seen = best.load();
                        while (rank < seen && ! best.compare_exchange_weak(seen, rank)) {
                        }
                        break;
                    }
                }
                if (rank + 1 < end)
                    next_combination(idx, n);
            }
        }
    };

    if (workers <= 1 || chunks <= 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (std::uint64_t t = 0; t < std::min<std::uint64_t>(workers, chunks); ++t)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }
    return best.load();
}

void check_input(const Graph & g, int k)
{
    if (g.order() == 0)
        throw Error(ErrorKind::EmptyGraph, "exact search on the empty graph");
    if (k < 1)
        throw Error(ErrorKind::InvalidParameters, "k must be a positive integer, got " + std::to_string(k));
}

}  // namespace

ExactResult exact_f_k(const Graph & g, int k, ExactOptions options)
{
    check_input(g, k);
    const auto start = std::chrono::steady_clock::now();
    const int workers = options.workers > 0 ? options.workers : default_worker_count();
    const int n = g.order();

    ExactResult result;
    for (int r = 1; r <= n; ++r) {
        const auto total = binomial(n, r);
        const auto remaining = options.budget - result.subsets_tested;
        const auto limit = std::min(total, remaining);
        auto hit = scan_size(g, k, r, limit, workers, true, [] (std::uint64_t, const std::vector<Vertex> &) {});
        if (hit != none) {
            result.f_k = r;
            result.witness = unrank_combination(n, r, hit);
            result.subsets_tested += hit + 1;
            result.elapsed = std::chrono::steady_clock::now() - start;
            return result;
        }
        result.subsets_tested += limit;
        if (limit < total)
            throw BudgetExceeded(r, result.subsets_tested);
    }
    // V itself is always k-forcing, so the loop returns by r = n.
    throw Error(ErrorKind::InvalidParameters, "no forcing set found");
}

std::vector<std::vector<Vertex>> exact_all_minimum_sets(const Graph & g, int k, ExactOptions options)
{
    auto best = exact_f_k(g, k, options);
    const int workers = options.workers > 0 ? options.workers : default_worker_count();
    const auto total = binomial(g.order(), best.f_k);
    const auto remaining = options.budget - best.subsets_tested;
    if (total > remaining)
        throw BudgetExceeded(best.f_k, best.subsets_tested + remaining);

    std::vector<std::pair<std::uint64_t, std::vector<Vertex>>> hits;
    std::mutex lock;
    scan_size(g, k, best.f_k, total, workers, false, [&] (std::uint64_t rank, const std::vector<Vertex> & s) {
        std::lock_guard guard(lock);
        hits.emplace_back(rank, s);
    });
    std::sort(hits.begin(), hits.end());
    std::vector<std::vector<Vertex>> out;
    out.reserve(hits.size());
    for (auto & [rank, s] : hits)
        out.push_back(std::move(s));
    return out;
}

}  // namespace kforce
