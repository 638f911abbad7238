#pragma once

#include "kforce/bounds.hpp"
#include "kforce/corpus.hpp"
#include "kforce/greedy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kforce {

/// One (graph, k) pair of a verification run.
struct VerifyRow {
    std::string graph_id;
    std::string family;
    std::string graph6;
    int n = 0, m = 0, delta_min = 0, delta_max = 0;
    int k = 0;
    bool regular_k_plus_2 = false;

    std::optional<int> exact;           // absent when the budget ran out
    int exact_lower_bound = 0;          // proven F_k >= this when exact is absent
    std::vector<Vertex> exact_witness;
    int greedy = 0;
    GreedyCase greedy_case = GreedyCase::Prop1;
    std::vector<Vertex> greedy_set;
    std::vector<BoundValue> bounds;

    std::vector<std::string> failures;  // invariant violations
    std::vector<std::string> notes;     // observations that are not failures

    const BoundValue * bound(std::string_view name) const;
};

/// A greedy or exact value landing exactly on an applicable bound.
struct EqualityCase {
    std::string graph_id;
    int k = 0;
    std::string source;  // "exact" or "greedy"
    std::string bound;
    Rational value;
    bool regular_k_plus_2 = false;
};

struct VerifySummary {
    int graphs = 0;
    int rows = 0;
    int failed_rows = 0;
    int budget_truncated = 0;
    int equality_cases = 0;
};

struct VerifyReport {
    std::string corpus;
    std::vector<VerifyRow> rows;  // corpus order, then k ascending
    std::vector<EqualityCase> equality_log;
    VerifySummary summary;

    bool ok() const { return summary.failed_rows == 0; }
};

struct VerifyOptions {
    int workers = 0;  // 0: default_worker_count()
    GreedyOptions greedy;
};

/// Runs exact, greedy and all bounds for every corpus graph and k,
/// recording failures of:
///   exact <= greedy, greedy is k-forcing, case sizes (1, 1, 2), greedy <=
///   floor(thm2iii), exact <= floor(every applicable upper bound), exact
///   equal to the small-degree exact value, thm2iii <= cor2, thm2iii <=
///   acdp4 and acdp5, F_{k+1} <= F_k.
/// Graphs are processed concurrently; the output does not depend on the
/// worker count.
VerifyReport verify_corpus(const CorpusSpec & corpus, VerifyOptions options = {});

/// Verifies a single graph (all of `ks`), without the cross-k check.
std::vector<VerifyRow> verify_graph(const FamilySpec & spec, const Graph & g, const std::vector<int> & ks,
        std::uint64_t budget, const GreedyOptions & greedy = {});

inline constexpr const char * verify_csv_header =
        "graph_id,family,n,m,delta,Delta,k,exact,greedy,case,thm2iii,cor1,cor2,cor3,acdp4,acdp5,flags";

std::string to_csv(const VerifyReport & report);
std::string to_json(const VerifyReport & report, int indent = 2);

/// One line per equality case: "graph_id k source bound value".
std::string format_equality_log(const VerifyReport & report);

}  // namespace kforce
