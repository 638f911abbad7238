#include "kforce/generators.hpp"

#include "kforce/error.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace kforce {

namespace {

constexpr int regular_retries = 100000;
constexpr int gnp_retries = 10000;

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr FamilyName family_names[] = {
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Complete, "complete"},
    {Family::CompleteBipartite, "complete_bipartite"},
    {Family::Circulant, "circulant"},
    {Family::Hypercube, "hypercube"},
    {Family::Petersen, "petersen"},
    {Family::RandomRegular, "random_regular"},
    {Family::GnpConnected, "gnp_connected"},
};

[[noreturn]] void invalid(const FamilySpec & spec, const std::string & what)
{
    throw Error(ErrorKind::InvalidParameters, std::string(to_string(spec.family)) + ": " + what);
}

void expect_params(const FamilySpec & spec, std::size_t count)
{
    if (spec.params.size() != count)
        invalid(spec, "expected " + std::to_string(count) + " integer parameters, got " + std::to_string(spec.params.size()));
}

Graph path(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph cycle(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

Graph circulant(const FamilySpec & spec)
{
    const int n = spec.params[0];
    if (n < 2)
        invalid(spec, "n must be at least 2");
    if (spec.connections.empty())
        invalid(spec, "connection set must be nonempty");
    std::set<int> s(spec.connections.begin(), spec.connections.end());
    if (s.size() != spec.connections.size())
        invalid(spec, "repeated connection");
    if (*s.begin() < 1 || *s.rbegin() > n / 2)
        invalid(spec, "connections must lie in 1.." + std::to_string(n / 2));

    std::set<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int d : s) {
            int j = (i + d) % n;
            edges.emplace(std::min(i, j), std::max(i, j));
        }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph hypercube(int d)
{
    const int n = 1 << d;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b)
            if (int v = u ^ (1 << b); u < v)
                e.emplace_back(u, v);
    return Graph(n, e);
}

Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, e);
}

// Configuration model: shuffle n*d half-edges, pair them up, reject loops,
// multi-edges and disconnected results.
Graph random_regular(const FamilySpec & spec)
{
    const int n = spec.params[0], d = spec.params[1];
    if (n < 1 || d < 0 || d >= n)
        invalid(spec, "need 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        invalid(spec, "n*d must be even");

    Rng rng(spec.seed);
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i)
            points.push_back(v);

    for (int attempt = 0; attempt < regular_retries; ++attempt) {
        rng.shuffle(points);
        std::set<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            int u = points[i], v = points[i + 1];
            ok = u != v && edges.emplace(std::min(u, v), std::max(u, v)).second;
        }
        if (! ok)
            continue;
        Graph g(n, std::vector<Edge>(edges.begin(), edges.end()));
        if (is_connected(g))
            return g;
    }
    throw Error(ErrorKind::GenerationFailed, spec.id() + ": no connected simple pairing within the retry budget");
}

Graph gnp_connected(const FamilySpec & spec)
{
    const int n = spec.params[0];
    const double p = spec.probability;
    if (n < 1)
        invalid(spec, "n must be positive");
    if (! (p >= 0.0 && p <= 1.0))
        invalid(spec, "probability must lie in [0, 1]");

    Rng rng(spec.seed);
    for (int attempt = 0; attempt < gnp_retries; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.unit() < p)
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g))
            return g;
    }
    throw Error(ErrorKind::GenerationFailed, spec.id() + ": no connected sample within the retry budget");
}

int parse_int(std::string_view s)
{
    int value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size())
        throw Error(ErrorKind::ParseError, "expected an integer, got '" + std::string(s) + "'");
    return value;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        auto x = next();
        if (x < limit)
            return x % bound;
    }
}

std::string_view to_string(Family f)
{
    for (const auto & [family, name] : family_names)
        if (family == f)
            return name;
    return "?";
}

Family parse_family(std::string_view name)
{
    for (const auto & [family, known] : family_names)
        if (known == name)
            return family;
    throw Error(ErrorKind::ParseError, "unknown graph family '" + std::string(name) + "'");
}

std::string FamilySpec::id() const
{
    std::ostringstream out;
    out << to_string(family) << '(';
    for (std::size_t i = 0; i < params.size(); ++i)
        out << (i ? "," : "") << params[i];
    if (family == Family::Circulant) {
        out << ';';
        for (std::size_t i = 0; i < connections.size(); ++i)
            out << (i ? "," : "") << connections[i];
    }
    if (family == Family::GnpConnected)
        out << ";p=" << probability;
    if (family == Family::RandomRegular || family == Family::GnpConnected)
        out << ";seed=" << seed;
    out << ')';
    return out.str();
}

FamilySpec parse_family_spec(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;)
        tokens.push_back(t);
    if (tokens.empty())
        throw Error(ErrorKind::ParseError, "empty family spec");

    FamilySpec spec;
    spec.family = parse_family(tokens[0]);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        std::string_view t = tokens[i];
        if (t.starts_with("seed=")) {
            auto s = t.substr(5);
            std::uint64_t seed = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
            if (ec != std::errc{} || end != s.data() + s.size())
                throw Error(ErrorKind::ParseError, "bad seed '" + std::string(s) + "'");
            spec.seed = seed;
        }
        else if (spec.family == Family::Circulant && i == 2) {
            std::size_t pos = 0;
            while (pos <= t.size()) {
                auto comma = t.find(',', pos);
                spec.connections.push_back(parse_int(t.substr(pos, comma - pos)));
                if (comma == std::string_view::npos)
                    break;
                pos = comma + 1;
            }
        }
        else if (spec.family == Family::GnpConnected && (i == 2 || t.starts_with("p="))) {
            if (t.starts_with("p="))
                t.remove_prefix(2);
            try {
                std::size_t used = 0;
                spec.probability = std::stod(std::string(t), &used);
                if (used != t.size())
                    throw std::invalid_argument("trailing");
            }
            catch (const std::exception &) {
                throw Error(ErrorKind::ParseError, "bad probability '" + std::string(t) + "'");
            }
        }
        else
            spec.params.push_back(parse_int(t));
    }
    return spec;
}

Graph generate(const FamilySpec & spec)
{
    switch (spec.family) {
    case Family::Path:
        expect_params(spec, 1);
        if (spec.params[0] < 1)
            invalid(spec, "n must be positive");
        return path(spec.params[0]);
    case Family::Cycle:
        expect_params(spec, 1);
        if (spec.params[0] < 3)
            invalid(spec, "n must be at least 3");
        return cycle(spec.params[0]);
    case Family::Complete:
        expect_params(spec, 1);
        if (spec.params[0] < 1)
            invalid(spec, "n must be positive");
        return complete(spec.params[0]);
    case Family::CompleteBipartite:
        expect_params(spec, 2);
        if (spec.params[0] < 1 || spec.params[1] < 1)
            invalid(spec, "both sides must be nonempty");
        return complete_bipartite(spec.params[0], spec.params[1]);
    case Family::Circulant:
        expect_params(spec, 1);
        return circulant(spec);
    case Family::Hypercube:
        expect_params(spec, 1);
        if (spec.params[0] < 1 || spec.params[0] > 16)
            invalid(spec, "dimension must lie in 1..16");
        return hypercube(spec.params[0]);
    case Family::Petersen:
        expect_params(spec, 0);
        return petersen();
    case Family::RandomRegular:
        expect_params(spec, 2);
        return random_regular(spec);
    case Family::GnpConnected:
        expect_params(spec, 1);
        return gnp_connected(spec);
    }
    invalid(spec, "unknown family");
}

bool is_bipartite(const Graph & g)
{
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                }
                else if (side[w] == side[u])
                    return false;
            }
        }
    }
    return true;
}

}  // namespace kforce
