#pragma once

#include "kforce/error.hpp"
#include "kforce/graph.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace kforce {

inline constexpr std::uint64_t default_exact_budget = 100'000'000;

struct ExactOptions {
    std::uint64_t budget = default_exact_budget;  // closure evaluations
    int workers = 0;                              // 0: default_worker_count()
};

struct ExactResult {
    int f_k = 0;
    std::vector<Vertex> witness;        // lexicographically first minimum k-forcing set
    std::uint64_t subsets_tested = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Thrown when the search would need more closure evaluations than the
/// budget allows. Every subset of size <= proven_lower_bound - 1 was
/// checked, so F_k >= proven_lower_bound.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(int proven_lower_bound, std::uint64_t subsets_tested)
        : Error(ErrorKind::BudgetExceeded,
                "budget exhausted after " + std::to_string(subsets_tested) + " subsets; F_k >= "
                + std::to_string(proven_lower_bound)),
          proven_lower_bound_(proven_lower_bound), subsets_tested_(subsets_tested) {}

    int proven_lower_bound() const noexcept { return proven_lower_bound_; }
    std::uint64_t subsets_tested() const noexcept { return subsets_tested_; }

private:
    int proven_lower_bound_;
    std::uint64_t subsets_tested_;
};

/// Minimum k-forcing set by exhaustive search over sizes 1, 2, ... with
/// subsets in lexicographic order. The witness and subsets_tested are the
/// same for every worker count. Throws Error{EmptyGraph}, BudgetExceeded.
ExactResult exact_f_k(const Graph & g, int k, ExactOptions options = {});

/// Every k-forcing set of minimum size, in lexicographic order.
std::vector<std::vector<Vertex>> exact_all_minimum_sets(const Graph & g, int k, ExactOptions options = {});

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int r);

/// The index-th r-subset of {0..n-1} in lexicographic order.
std::vector<Vertex> unrank_combination(int n, int r, std::uint64_t index);

}  // namespace kforce
