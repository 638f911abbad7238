#include "kforce/verify.hpp"

#include "kforce/error.hpp"
#include "kforce/forcing.hpp"
#include "kforce/graph_io.hpp"
#include "kforce/workers.hpp"

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <sstream>
#include <thread>

namespace kforce {

namespace {

const char * const upper_bounds[] = {
    bound_name::thm2iii, bound_name::cor1, bound_name::cor2, bound_name::cor3, bound_name::acdp4, bound_name::acdp5};

const BoundValue * find_bound(const std::vector<BoundValue> & bounds, std::string_view name)
{
    for (const auto & b : bounds)
        if (b.name == name && b.applicable)
            return &b;
    return nullptr;
}

void check_row(const Graph & g, VerifyRow & row)
{
    auto fail = [&] (std::string what) { row.failures.push_back(std::move(what)); };
    auto note = [&] (std::string what) { row.notes.push_back(std::move(what)); };

    if (! is_k_forcing_set(g, row.greedy_set, row.k))
        fail("greedy_not_forcing");
    if (row.exact && *row.exact > row.greedy)
        fail("exact_gt_greedy");

    switch (row.greedy_case) {
    case GreedyCase::Prop1:
    case GreedyCase::ThmI:
        if (row.greedy != 1)
            fail("case_size");
        break;
    case GreedyCase::ThmII:
        if (row.greedy != 2)
            fail("case_size");
        break;
    case GreedyCase::ThmIII:
        if (auto b = row.bound(bound_name::thm2iii); ! b || row.greedy > b->floor)
            fail("greedy_gt_thm2iii");
        break;
    }

    if (auto b = row.bound(bound_name::small_degree); b && row.exact && *row.exact != b->floor)
        fail("exact_ne_small_degree");

    for (auto name : upper_bounds)
        if (auto b = row.bound(name); b && row.exact && *row.exact > b->floor)
            fail(std::string("bound_violated:") + name);

    const auto * main = row.bound(bound_name::thm2iii);
    if (main) {
        if (auto cor2 = row.bound(bound_name::cor2); cor2 && *cor2->value < *main->value)
            fail("cor2_lt_thm2iii");
        if (auto acdp4 = row.bound(bound_name::acdp4); acdp4 && *main->value > *acdp4->value)
            fail("thm2iii_gt_acdp4");
        if (auto acdp5 = row.bound(bound_name::acdp5); acdp5) {
            if (*main->value > *acdp5->value)
                fail("thm2iii_gt_acdp5");
            else if (row.k == 1 && *main->value != *acdp5->value)
                note("k1_thm2iii_lt_acdp5");
        }
        if (auto cor1 = row.bound(bound_name::cor1); cor1 && *cor1->value != *main->value) {
            // cor1 keeps only the second branch of the max
            const bool first_branch = row.delta_min * (2 - row.delta_max) + 1 > row.delta_min - row.delta_max + 2;
            note(std::string("cor1_ne_thm2iii:") + (first_branch ? "first_branch" : "second_branch"));
        }
    }

    if (auto cor2 = row.bound(bound_name::cor2); cor2 && row.exact && Rational(*row.exact) == *cor2->value
            && ! row.regular_k_plus_2)
        note("cor2_equality_not_k_plus_2_regular");

    if (! row.exact)
        note("budget_truncated");
}

std::vector<std::string> csv_bound_cells(const VerifyRow & row)
{
    std::vector<std::string> cells;
    for (auto name : upper_bounds) {
        auto b = row.bound(name);
        cells.push_back(b ? b->value->to_string() : "-");
    }
    return cells;
}

std::string csv_escape(const std::string & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

const BoundValue * VerifyRow::bound(std::string_view name) const
{
    return find_bound(bounds, name);
}

std::vector<VerifyRow> verify_graph(const FamilySpec & spec, const Graph & g, const std::vector<int> & ks,
        std::uint64_t budget, const GreedyOptions & greedy)
{
    const auto summary = degrees(g);
    std::vector<VerifyRow> rows;
    for (int k : ks) {
        VerifyRow row;
        row.graph_id = spec.id();
        row.family = std::string(to_string(spec.family));
        row.graph6 = g.order() <= 62 ? serialize_graph6(g) : "";
        row.n = g.order();
        row.m = g.size();
        row.delta_min = summary.delta_min;
        row.delta_max = summary.delta_max;
        row.k = k;
        row.regular_k_plus_2 = is_regular(g, k + 2);

        try {
            auto exact = exact_f_k(g, k, ExactOptions{budget, 1});
            row.exact = exact.f_k;
            row.exact_lower_bound = exact.f_k;
            row.exact_witness = std::move(exact.witness);
        }
        catch (const BudgetExceeded & e) {
            row.exact_lower_bound = e.proven_lower_bound();
        }

        auto result = greedy_k_forcing_set(g, k, greedy);
        row.greedy = static_cast<int>(result.forcing_set.size());
        row.greedy_case = result.case_taken;
        row.greedy_set = std::move(result.forcing_set);
        row.bounds = all_bounds(g, k).bounds;

        check_row(g, row);
        rows.push_back(std::move(row));
    }
    return rows;
}

VerifyReport verify_corpus(const CorpusSpec & corpus, VerifyOptions options)
{
    auto ks = corpus.ks;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    const auto specs = corpus.expand();
    std::vector<std::vector<VerifyRow>> per_graph(specs.size());
    std::vector<std::string> errors(specs.size());

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
            try {
                per_graph[i] = verify_graph(specs[i], generate(specs[i]), ks, corpus.budget, options.greedy);
            }
            catch (const std::exception & e) {
                errors[i] = e.what();
            }
        }
    };
    const int workers = std::max(1, options.workers > 0 ? options.workers : default_worker_count());
    if (workers == 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }

    VerifyReport report;
    report.corpus = corpus.name;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (! errors[i].empty()) {
            VerifyRow row;
            row.graph_id = specs[i].id();
            row.family = std::string(to_string(specs[i].family));
            row.failures.push_back("error:" + errors[i]);
            report.rows.push_back(std::move(row));
            continue;
        }
        auto & rows = per_graph[i];
        for (std::size_t r = 0; r + 1 < rows.size(); ++r)
            if (rows[r + 1].k == rows[r].k + 1 && rows[r].exact && rows[r + 1].exact && *rows[r + 1].exact > *rows[r].exact)
                rows[r + 1].failures.push_back("exact_not_monotone_in_k");

        for (auto & row : rows) {
            for (const auto & b : row.bounds) {
                if (! b.applicable || b.exact_value)
                    continue;
                if (row.exact && Rational(*row.exact) == *b.value)
                    report.equality_log.push_back({row.graph_id, row.k, "exact", b.name, *b.value, row.regular_k_plus_2});
                if (Rational(row.greedy) == *b.value)
                    report.equality_log.push_back({row.graph_id, row.k, "greedy", b.name, *b.value, row.regular_k_plus_2});
            }
            report.rows.push_back(std::move(row));
        }
    }

    report.summary.graphs = static_cast<int>(specs.size());
    report.summary.rows = static_cast<int>(report.rows.size());
    report.summary.equality_cases = static_cast<int>(report.equality_log.size());
    for (const auto & row : report.rows) {
        report.summary.failed_rows += row.failures.empty() ? 0 : 1;
        report.summary.budget_truncated += (row.exact || ! row.failures.empty()) ? 0 : 1;
    }
    return report;
}

std::string to_csv(const VerifyReport & report)
{
    std::ostringstream out;
    out << verify_csv_header << '\n';
    for (const auto & row : report.rows) {
        std::string flags;
        for (const auto & f : row.failures)
            flags += (flags.empty() ? "" : ";") + f;
        for (const auto & note : row.notes)
            flags += (flags.empty() ? "note:" : ";note:") + note;
        if (flags.empty())
            flags = "ok";

        std::string exact = row.exact ? std::to_string(*row.exact) : ">=" + std::to_string(row.exact_lower_bound);
        out << csv_escape(row.graph_id) << ',' << row.family << ',' << row.n << ',' << row.m << ',' << row.delta_min
            << ',' << row.delta_max << ',' << row.k << ',' << exact << ',' << row.greedy << ','
            << to_string(row.greedy_case);
        for (const auto & cell : csv_bound_cells(row))
            out << ',' << cell;
        out << ',' << csv_escape(flags) << '\n';
    }
    return out.str();
}

std::string to_json(const VerifyReport & report, int indent)
{
    using json = nlohmann::ordered_json;
    json j;
    j["corpus"] = report.corpus;
    j["summary"] = {
        {"graphs", report.summary.graphs},
        {"rows", report.summary.rows},
        {"failed_rows", report.summary.failed_rows},
        {"budget_truncated", report.summary.budget_truncated},
        {"equality_cases", report.summary.equality_cases},
    };
    auto rows = json::array();
    for (const auto & row : report.rows) {
        json r;
        r["graph_id"] = row.graph_id;
        r["family"] = row.family;
        r["graph6"] = row.graph6;
        r["n"] = row.n;
        r["m"] = row.m;
        r["delta"] = row.delta_min;
        r["Delta"] = row.delta_max;
        r["k"] = row.k;
        if (row.exact) {
            r["exact"] = *row.exact;
            r["exact_witness"] = row.exact_witness;
            r["certification"] = "exhaustive";
        }
        else {
            r["exact_lower_bound"] = row.exact_lower_bound;
            r["certification"] = "budget-truncated";
        }
        r["greedy"] = row.greedy;
        r["case"] = to_string(row.greedy_case);
        r["greedy_set"] = row.greedy_set;
        auto bounds = json::array();
        for (const auto & b : row.bounds) {
            json jb;
            jb["name"] = b.name;
            jb["applicable"] = b.applicable;
            if (b.value) {
                jb["num"] = b.value->num();
                jb["den"] = b.value->den();
                jb["floor"] = b.floor;
            }
            else
                jb["reason"] = b.reason;
            bounds.push_back(std::move(jb));
        }
        r["bounds"] = std::move(bounds);
        r["failures"] = row.failures;
        r["notes"] = row.notes;
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    auto equality = json::array();
    for (const auto & e : report.equality_log)
        equality.push_back({
            {"graph_id", e.graph_id},
            {"k", e.k},
            {"source", e.source},
            {"bound", e.bound},
            {"value", e.value.to_string()},
            {"regular_k_plus_2", e.regular_k_plus_2},
        });
    j["equality_cases"] = std::move(equality);
    return j.dump(indent);
}

std::string format_equality_log(const VerifyReport & report)
{
    std::ostringstream out;
    for (const auto & e : report.equality_log)
        out << e.graph_id << ' ' << e.k << ' ' << e.source << ' ' << e.bound << ' ' << e.value.to_string()
            << (e.regular_k_plus_2 ? " regular_k_plus_2" : "") << '\n';
    return out.str();
}

}  // namespace kforce
