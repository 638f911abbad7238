#pragma once

#include "kforce/exact.hpp"
#include "kforce/generators.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kforce {

/// One line of a corpus file. Besides a plain FamilySpec it can describe a
/// range: `n_range` varies the order (for complete_bipartite every split
/// a <= b with a + b = n; for circulant with all_connections every
/// connection set giving a connected graph), `seed_range` varies the seed.
struct CorpusEntry {
    FamilySpec base;
    std::optional<std::pair<int, int>> n_range;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> seed_range;
    bool all_connections = false;
    // random bipartite circulants: count graphs drawn from `base.seed`
    int random_bipartite_circulants = 0;

    static CorpusEntry single(FamilySpec spec)
    {
        CorpusEntry e;
        e.base = std::move(spec);
        return e;
    }
};

struct CorpusSpec {
    std::string name;
    std::vector<CorpusEntry> entries;
    std::vector<int> ks;
    std::uint64_t budget = default_exact_budget;

    /// Deterministic, duplicate-free (by id) list in entry order.
    std::vector<FamilySpec> expand() const;
};

/// JSON corpus file; see README for the schema. Throws Error{ParseError}.
CorpusSpec parse_corpus(std::string_view json_text);

/// Every family with n <= 14 (plus Q_4), 20 seeded random regular graphs,
/// 20 seeded connected G(n,p), k in {1,2,3}.
CorpusSpec default_corpus();

/// `count` distinct connected bipartite circulants (n even, 6..14, odd
/// connections) drawn reproducibly from `seed`. k = {1}.
CorpusSpec bipartite_circulant_corpus(int count, std::uint64_t seed);

}  // namespace kforce
