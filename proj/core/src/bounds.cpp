#include "kforce/bounds.hpp"

#include "kforce/error.hpp"

#include <algorithm>
#include <json.hpp>

namespace kforce {

namespace {

struct Params {
    std::int64_t n, d, D;
};

Params params_of(const Graph & g)
{
    auto s = degrees(g);
    return {g.order(), s.delta_min, s.delta_max};
}

void require_connected(const Graph & g)
{
    if (! is_connected(g))
        throw Error(ErrorKind::NotConnected, "bound requires a connected graph");
}

void require(bool condition, const std::string & what)
{
    if (! condition)
        throw Error(ErrorKind::HypothesisFailed, what);
}

void require_k(int k)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidParameters, "k must be a positive integer, got " + std::to_string(k));
}

BoundValue make(const char * name, Rational value, std::string hypotheses)
{
    BoundValue b;
    b.name = name;
    b.applicable = true;
    b.value = value;
    b.floor = value.floor();
    b.hypotheses = std::move(hypotheses);
    return b;
}

}  // namespace

BoundValue bound_prop1_thm2_cases(const Graph & g, int k)
{
    require_k(k);
    require_connected(g);
    auto [n, d, D] = params_of(g);
    require(D <= k + 1, "max degree " + std::to_string(D) + " >= k+2");
    BoundValue b;
    if (D <= k)
        b = make(bound_name::small_degree, 1, "connected, max degree <= k");
    else if (d < D)
        b = make(bound_name::small_degree, 1, "connected, min degree < max degree = k+1");
    else
        b = make(bound_name::small_degree, 2, "connected, min degree = max degree = k+1");
    b.exact_value = true;
    return b;
}

BoundValue bound_thm2_iii(const Graph & g, int k)
{
    require_k(k);
    require_connected(g);
    auto [n, d, D] = params_of(g);
    require(D >= k + 2, "max degree " + std::to_string(D) + " < k+2");
    const std::int64_t tail = std::max(d * (k + 1 - D) + k, k * (d - D + 2));
    return make(bound_name::thm2iii, Rational((D - k - 1) * n + tail, D - 1), "connected, max degree >= k+2");
}

BoundValue bound_cor1(const Graph & g)
{
    require_connected(g);
    auto [n, d, D] = params_of(g);
    require(D >= 3, "max degree " + std::to_string(D) + " < 3");
    return make(bound_name::cor1, Rational((D - 2) * n - (D - d) + 2, D - 1), "connected, max degree >= 3, k = 1");
}

BoundValue bound_cor2(const Graph & g, int k)
{
    require_k(k);
    require_connected(g);
    auto [n, d, D] = params_of(g);
    require(D >= k + 2, "max degree " + std::to_string(D) + " < k+2");
    auto b = make(bound_name::cor2, Rational((D - k - 1) * n + 2 * k, D - 1), "connected, max degree >= k+2");
    b.equality_candidate = (d == D && D == k + 2);
    return b;
}

BoundValue bound_cor3(const Graph & g)
{
    require_connected(g);
    auto [n, d, D] = params_of(g);
    require(D >= 2, "max degree " + std::to_string(D) + " < 2");
    return make(bound_name::cor3, Rational((D - 2) * n + 2, D - 1), "connected, max degree >= 2, k = 1");
}

BoundValue bound_acdp_thm4(const Graph & g, int k)
{
    require_k(k);
    if (g.order() == 0)
        throw Error(ErrorKind::EmptyGraph, "bound of the empty graph");
    auto [n, d, D] = params_of(g);
    require(n >= 2, "n < 2");
    require(D >= k, "max degree " + std::to_string(D) + " < k");
    require(d >= 1, "isolated vertex (min degree 0)");
    const std::int64_t lead = D - k + 1;
    return make(bound_name::acdp4, Rational(lead * n, lead + std::min<std::int64_t>(d, k)),
            "n >= 2, max degree >= k, min degree >= 1");
}

BoundValue bound_acdp_thm5(const Graph & g, int k)
{
    require_k(k);
    if (g.order() == 0)
        throw Error(ErrorKind::EmptyGraph, "bound of the empty graph");
    auto [n, d, D] = params_of(g);
    require(n > k, "n <= k");
    require(D >= 2, "max degree " + std::to_string(D) + " < 2");
    require(is_k_connected(g, k), "graph is not " + std::to_string(k) + "-connected");
    return make(bound_name::acdp5, Rational((D - 2) * n + 2, D + k - 2), "k-connected, n > k, max degree >= 2");
}

const BoundValue * BoundsReport::find(std::string_view name) const
{
    for (const auto & b : bounds)
        if (b.name == name)
            return &b;
    return nullptr;
}

BoundsReport all_bounds(const Graph & g, int k)
{
    require_k(k);
    BoundsReport report;
    report.k = k;
    auto summary = degrees(g);
    report.graph = {g.order(), g.size(), summary.delta_min, summary.delta_max, is_connected(g), {}};
    for (int level = 1; level <= k && level < g.order(); ++level)
        if (is_k_connected(g, level))
            report.graph.k_connected_levels.push_back(level);
    if (! report.graph.connected)
        report.notes.push_back(std::to_string(connected_components(g).size())
                + " components; connected-only bounds are flagged NotConnected, use per-component analysis");

    auto attempt = [&] (const char * name, auto && evaluate) {
        try {
            report.bounds.push_back(evaluate());
        }
        catch (const Error & e) {
            BoundValue b;
            b.name = name;
            b.reason = e.what();
            report.bounds.push_back(std::move(b));
        }
    };
    auto first_order_only = [&] (const char * name, auto && evaluate) {
        if (k == 1)
            attempt(name, evaluate);
        else {
            BoundValue b;
            b.name = name;
            b.reason = "HypothesisFailed: bounds F_1 only";
            report.bounds.push_back(std::move(b));
        }
    };

    attempt(bound_name::small_degree, [&] { return bound_prop1_thm2_cases(g, k); });
    attempt(bound_name::thm2iii, [&] { return bound_thm2_iii(g, k); });
    first_order_only(bound_name::cor1, [&] { return bound_cor1(g); });
    attempt(bound_name::cor2, [&] { return bound_cor2(g, k); });
    first_order_only(bound_name::cor3, [&] { return bound_cor3(g); });
    attempt(bound_name::acdp4, [&] { return bound_acdp_thm4(g, k); });
    attempt(bound_name::acdp5, [&] { return bound_acdp_thm5(g, k); });
    return report;
}

std::string to_json(const BoundsReport & report, int indent)
{
    nlohmann::ordered_json j;
    j["graph"] = {
        {"n", report.graph.n},
        {"m", report.graph.m},
        {"delta", report.graph.delta_min},
        {"Delta", report.graph.delta_max},
        {"connected", report.graph.connected},
        {"k_connected", report.graph.k_connected_levels},
    };
    j["k"] = report.k;
    auto bounds = nlohmann::ordered_json::array();
    for (const auto & b : report.bounds) {
        nlohmann::ordered_json row;
        row["name"] = b.name;
        row["applicable"] = b.applicable;
        if (b.value) {
            row["num"] = b.value->num();
            row["den"] = b.value->den();
            row["floor"] = b.floor;
            if (b.exact_value)
                row["exact_value"] = true;
            if (b.name == bound_name::cor2)
                row["regular_k_plus_2"] = b.equality_candidate;
        }
        else
            row["reason"] = b.reason;
        bounds.push_back(std::move(row));
    }
    j["bounds"] = std::move(bounds);
    if (report.exact_f_k)
        j["exact"] = *report.exact_f_k;
    if (report.greedy_size)
        j["greedy"] = *report.greedy_size;
    if (! report.notes.empty())
        j["notes"] = report.notes;
    return j.dump(indent);
}

}  // namespace kforce
