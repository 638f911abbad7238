#include "kforce/graph_io.hpp"

#include "kforce/error.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace kforce {

namespace {

constexpr int graph6_offset = 63;
constexpr int graph6_max_order = 62;

std::string_view trim(std::string_view s)
{
    auto is_space = [] (char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (! s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (! s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.empty())
        throw Error(ErrorKind::MalformedHeader, "empty graph6 string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Error(ErrorKind::BadCharacter, "byte " + std::to_string(c) + " at offset " + std::to_string(i));
    }

    const int n = static_cast<unsigned char>(text[0]) - graph6_offset;
    if (n > graph6_max_order)
        throw Error(ErrorKind::MalformedHeader, "long-form graph6 headers (n > 62) are not supported");

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t chars = (bits + 5) / 6;
    const auto body = text.substr(1);
    if (body.size() < chars)
        throw Error(ErrorKind::MalformedHeader,
                "expected " + std::to_string(chars) + " data bytes for n=" + std::to_string(n) + ", got "
                + std::to_string(body.size()));
    if (body.size() > chars)
        throw Error(ErrorKind::TrailingData, std::to_string(body.size() - chars) + " extra bytes");

    auto bit_at = [&] (std::size_t i) {
        int value = static_cast<unsigned char>(body[i / 6]) - graph6_offset;
        return (value >> (5 - i % 6)) & 1;
    };

    std::vector<Edge> edges;
    std::size_t i = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++i)
            if (bit_at(i))
                edges.emplace_back(u, v);
    for (; i < chars * 6; ++i)
        if (bit_at(i))
            throw Error(ErrorKind::TrailingData, "nonzero padding bits");

    return Graph(n, edges);
}

std::string serialize_graph6(const Graph & g)
{
    const int n = g.order();
    if (n > graph6_max_order)
        throw Error(ErrorKind::TooLarge, "graph6 short form holds at most 62 vertices, got " + std::to_string(n));

    std::string out(1, static_cast<char>(n + graph6_offset));
    int value = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(value + graph6_offset));
                value = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((value << (6 - filled)) + graph6_offset));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::vector<long long> numbers;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            ++pos;
        if (pos == text.size())
            break;
        long long value = 0;
        auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || (end != text.data() + text.size() && ! std::isspace(static_cast<unsigned char>(*end))))
            throw Error(ErrorKind::ParseError, "bad token in edge list at offset " + std::to_string(pos));
        numbers.push_back(value);
        pos = static_cast<std::size_t>(end - text.data());
    }
    if (numbers.size() < 2)
        throw Error(ErrorKind::ParseError, "edge list needs an 'n m' header");
    const auto n = numbers[0], m = numbers[1];
    if (n < 0 || m < 0)
        throw Error(ErrorKind::ParseError, "negative n or m in header");
    if (numbers.size() != static_cast<std::size_t>(2 + 2 * m))
        throw Error(ErrorKind::ParseError,
                "header announces " + std::to_string(m) + " edges, found " + std::to_string((numbers.size() - 2) / 2.0));

    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        auto u = numbers[2 + 2 * i], v = numbers[3 + 2 * i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string serialize_edge_list(const Graph & g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

GraphFormat parse_format(std::string_view name)
{
    if (name == "auto")
        return GraphFormat::Auto;
    if (name == "graph6" || name == "g6")
        return GraphFormat::Graph6;
    if (name == "edgelist" || name == "edge-list" || name == "el")
        return GraphFormat::EdgeList;
    throw Error(ErrorKind::ParseError, "unknown graph format '" + std::string(name) + "'");
}

Graph read_graph(std::string_view text, GraphFormat format)
{
    auto first_line = [] (std::string_view s) {
        s = trim(s);
        if (s.starts_with(">>graph6<<"))
            s.remove_prefix(10);
        return trim(s.substr(0, s.find('\n')));
    };

    switch (format) {
    case GraphFormat::Graph6:
        return parse_graph6(first_line(text));
    case GraphFormat::EdgeList:
        return parse_edge_list(text);
    case GraphFormat::Auto:
        break;
    }

    auto line = first_line(text);
    if (! line.empty() && static_cast<unsigned char>(line[0]) >= 63 && static_cast<unsigned char>(line[0]) <= 126) {
        try {
            return parse_graph6(line);
        }
        catch (const Error &) {
        }
    }
    return parse_edge_list(text);
}

}  // namespace kforce
