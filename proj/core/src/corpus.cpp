#include "kforce/corpus.hpp"

#include "kforce/error.hpp"

#include <json.hpp>
#include <numeric>
#include <set>

namespace kforce {

namespace {

constexpr int bipartite_draw_attempts = 100000;

bool circulant_connected(int n, const std::vector<int> & s)
{
    int g = n;
    for (int d : s)
        g = std::gcd(g, d);
    return g == 1;
}

void expand_entry(const CorpusEntry & entry, std::vector<FamilySpec> & out)
{
    if (entry.random_bipartite_circulants > 0) {
        Rng rng(entry.base.seed);
        std::set<std::string> seen;
        int drawn = 0;
        for (int attempt = 0; drawn < entry.random_bipartite_circulants && attempt < bipartite_draw_attempts; ++attempt) {
            const int n = 6 + 2 * static_cast<int>(rng.below(5));
            std::vector<int> s;
            for (int d = 1; d <= n / 2; d += 2)
                if (rng.below(2))
                    s.push_back(d);
            if (s.empty() || ! circulant_connected(n, s))
                continue;
            auto spec = FamilySpec::circulant(n, s);
            if (seen.insert(spec.id()).second) {
                out.push_back(std::move(spec));
                ++drawn;
            }
        }
        if (drawn < entry.random_bipartite_circulants)
            throw Error(ErrorKind::GenerationFailed, "could not draw enough distinct bipartite circulants");
        return;
    }

    std::vector<FamilySpec> sized;
    if (! entry.n_range)
        sized.push_back(entry.base);
    else
        for (int n = entry.n_range->first; n <= entry.n_range->second; ++n) {
            FamilySpec spec = entry.base;
            switch (spec.family) {
            case Family::CompleteBipartite:
                for (int a = 1; 2 * a <= n; ++a) {
                    spec.params = {a, n - a};
                    sized.push_back(spec);
                }
                continue;
            case Family::Circulant:
                spec.params = {n};
                if (entry.all_connections) {
                    const int half = n / 2;
                    for (int mask = 1; mask < (1 << half); ++mask) {
                        std::vector<int> s;
                        for (int d = 1; d <= half; ++d)
                            if (mask & (1 << (d - 1)))
                                s.push_back(d);
                        if (circulant_connected(n, s)) {
                            spec.connections = s;
                            sized.push_back(spec);
                        }
                    }
                    continue;
                }
                break;
            default:
                if (spec.params.empty())
                    spec.params.push_back(n);
                else
                    spec.params[0] = n;
                break;
            }
            sized.push_back(spec);
        }

    for (auto & spec : sized) {
        if (! entry.seed_range)
            out.push_back(spec);
        else
            for (auto seed = entry.seed_range->first; seed <= entry.seed_range->second; ++seed) {
                spec.seed = seed;
                out.push_back(spec);
            }
    }
}

template <typename T>
std::pair<T, T> read_range(const nlohmann::json & j, const char * key)
{
    const auto & r = j.at(key);
    if (! r.is_array() || r.size() != 2)
        throw Error(ErrorKind::ParseError, std::string(key) + " must be a [lo, hi] pair");
    return {r[0].get<T>(), r[1].get<T>()};
}

}  // namespace

std::vector<FamilySpec> CorpusSpec::expand() const
{
    std::vector<FamilySpec> all;
    for (const auto & entry : entries)
        expand_entry(entry, all);
    std::vector<FamilySpec> unique;
    std::set<std::string> seen;
    for (auto & spec : all)
        if (seen.insert(spec.id()).second)
            unique.push_back(std::move(spec));
    return unique;
}

CorpusSpec parse_corpus(std::string_view json_text)
{
    try {
        auto j = nlohmann::json::parse(json_text);
        CorpusSpec corpus;
        corpus.name = j.value("name", "corpus");
        corpus.ks = j.value("k", std::vector<int>{1});
        corpus.budget = j.value("budget", default_exact_budget);
        for (int k : corpus.ks)
            if (k < 1)
                throw Error(ErrorKind::ParseError, "k values must be positive");

        for (const auto & e : j.at("entries")) {
            CorpusEntry entry;
            const auto family = e.at("family").get<std::string>();
            if (family == "random_bipartite_circulant") {
                entry.base.family = Family::Circulant;
                entry.base.seed = e.value("seed", std::uint64_t{0});
                entry.random_bipartite_circulants = e.at("count").get<int>();
                corpus.entries.push_back(std::move(entry));
                continue;
            }
            entry.base.family = parse_family(family);
            entry.base.params = e.value("params", std::vector<int>{});
            entry.base.probability = e.value("p", 0.0);
            entry.base.seed = e.value("seed", std::uint64_t{0});
            if (e.contains("n"))
                entry.n_range = read_range<int>(e, "n");
            if (e.contains("seeds"))
                entry.seed_range = read_range<std::uint64_t>(e, "seeds");
            if (e.contains("connections")) {
                if (e["connections"].is_string() && e["connections"] == "all")
                    entry.all_connections = true;
                else
                    entry.base.connections = e["connections"].get<std::vector<int>>();
            }
            corpus.entries.push_back(std::move(entry));
        }
        return corpus;
    }
    catch (const nlohmann::json::exception & e) {
        throw Error(ErrorKind::ParseError, std::string("corpus spec: ") + e.what());
    }
}

CorpusSpec default_corpus()
{
    CorpusSpec corpus;
    corpus.name = "default";
    corpus.ks = {1, 2, 3};

    auto ranged = [] (Family f, int lo, int hi) {
        CorpusEntry e;
        e.base.family = f;
        e.n_range = {lo, hi};
        return e;
    };
    corpus.entries.push_back(ranged(Family::Path, 2, 14));
    corpus.entries.push_back(ranged(Family::Cycle, 3, 14));
    corpus.entries.push_back(ranged(Family::Complete, 2, 14));
    corpus.entries.push_back(ranged(Family::CompleteBipartite, 2, 14));
    auto circulants = ranged(Family::Circulant, 5, 14);
    circulants.all_connections = true;
    corpus.entries.push_back(circulants);
    corpus.entries.push_back(CorpusEntry::single(FamilySpec::hypercube(3)));
    corpus.entries.push_back(CorpusEntry::single(FamilySpec::hypercube(4)));
    corpus.entries.push_back(CorpusEntry::single(FamilySpec::petersen()));

    // 20 random regular graphs, two per (n, d) shape
    const std::pair<int, int> shapes[] = {{8, 3}, {10, 3}, {12, 3}, {14, 3}, {9, 4}, {10, 4}, {12, 4}, {14, 4}, {12, 5}, {14, 5}};
    std::uint64_t seed = 1;
    for (auto [n, d] : shapes)
        for (int rep = 0; rep < 2; ++rep)
            corpus.entries.push_back(CorpusEntry::single(FamilySpec::random_regular(n, d, seed++)));

    // 20 connected G(n, p)
    for (int i = 0; i < 20; ++i) {
        const int n = 6 + i % 9;
        const double p = (i % 2 == 0) ? 0.3 : 0.5;
        corpus.entries.push_back(CorpusEntry::single(FamilySpec::gnp_connected(n, p, 100 + static_cast<std::uint64_t>(i))));
    }
    return corpus;
}

CorpusSpec bipartite_circulant_corpus(int count, std::uint64_t seed)
{
    CorpusSpec corpus;
    corpus.name = "bipartite-circulants";
    corpus.ks = {1};
    CorpusEntry entry;
    entry.base.family = Family::Circulant;
    entry.base.seed = seed;
    entry.random_bipartite_circulants = count;
    corpus.entries.push_back(entry);
    return corpus;
}

}  // namespace kforce
