#pragma once

#include "kforce/graph.hpp"
#include "kforce/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kforce {

/// Identifiers used in reports and CSV columns.
namespace bound_name {
inline constexpr const char * small_degree = "prop1_thm2";
inline constexpr const char * thm2iii = "thm2iii";
inline constexpr const char * cor1 = "cor1";
inline constexpr const char * cor2 = "cor2";
inline constexpr const char * cor3 = "cor3";
inline constexpr const char * acdp4 = "acdp4";
inline constexpr const char * acdp5 = "acdp5";
}  // namespace bound_name

struct BoundValue {
    std::string name;
    bool applicable = false;
    std::string reason;             // why not applicable; empty otherwise
    std::optional<Rational> value;  // set iff applicable
    std::int64_t floor = 0;         // floor(value) when applicable
    std::string hypotheses;         // conditions that were checked
    bool exact_value = false;       // value is F_k itself, not just an upper bound
    bool equality_candidate = false;  // cor2 only: graph is (k+2)-regular
};

/// Exact F_k for max degree <= k+1: 1 when max degree <= k or
/// min degree < max degree = k+1, and 2 when regular of degree k+1.
/// Throws Error{NotConnected, HypothesisFailed (max degree >= k+2)}.
BoundValue bound_prop1_thm2_cases(const Graph & g, int k);

/// ((D-k-1)n + max{d(k+1-D)+k, k(d-D+2)}) / (D-1) for connected g with D >= k+2.
BoundValue bound_thm2_iii(const Graph & g, int k);

/// ((D-2)n - (D-d) + 2) / (D-1), connected, D >= 3. Bounds F_1.
BoundValue bound_cor1(const Graph & g);

/// ((D-k-1)n + 2k) / (D-1), connected, D >= k+2.
BoundValue bound_cor2(const Graph & g, int k);

/// ((D-2)n + 2) / (D-1), connected, D >= 2. Bounds F_1.
BoundValue bound_cor3(const Graph & g);

/// (D-k+1)n / (D-k+1+min{d,k}) for n >= 2, D >= k, d >= 1.
BoundValue bound_acdp_thm4(const Graph & g, int k);

/// ((D-2)n + 2) / (D+k-2) for k-connected g with n > k, D >= 2.
BoundValue bound_acdp_thm5(const Graph & g, int k);

struct GraphSummary {
    int n = 0;
    int m = 0;
    int delta_min = 0;
    int delta_max = 0;
    bool connected = false;
    std::vector<int> k_connected_levels;  // every k' checked with a true result
};

struct BoundsReport {
    GraphSummary graph;
    int k = 0;
    std::vector<BoundValue> bounds;
    std::optional<int> exact_f_k;
    std::optional<int> greedy_size;
    std::vector<std::string> notes;

    const BoundValue * find(std::string_view name) const;
};

/// Evaluates every bound; failed hypotheses are recorded as not applicable.
/// cor1/cor3 only apply for k = 1.
BoundsReport all_bounds(const Graph & g, int k);

/// {graph: {...}, k, bounds: [{name, applicable, num, den, floor, reason?}], exact?, greedy?}
std::string to_json(const BoundsReport & report, int indent = 2);

}  // namespace kforce
