// kforce: k-forcing process, greedy forcing sets, exact F_k and bound
// evaluation from the command line.
//
// Exit codes: 0 success, 1 semantic negative (not a forcing set, failed
// verification), 2 usage, input or other errors.

#include "kforce/bounds.hpp"
#include "kforce/corpus.hpp"
#include "kforce/error.hpp"
#include "kforce/exact.hpp"
#include "kforce/forcing.hpp"
#include "kforce/generators.hpp"
#include "kforce/graph_io.hpp"
#include "kforce/greedy.hpp"
#include "kforce/verify.hpp"
#include "kforce/workers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace kforce;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

struct Options {
    std::string input;
    std::string format = "auto";
    int k = 1;
    bool json_output = false;
    std::uint64_t budget = default_exact_budget;
    int workers = 0;
    std::string strategy = "min-a";
    std::string set;
    bool all_minimum = false;
    bool per_component = false;
    bool with_exact = false;
    bool with_greedy = false;
    std::string corpus_file;
    bool meyer = false;
    int meyer_count = 15;
    std::optional<std::uint64_t> seed;
    std::string csv_path;
    std::string json_path;
    std::string equality_log_path;
    std::vector<std::string> family_words;
    int repeat = 100;
};

std::string read_input(const std::string & path)
{
    std::ostringstream buffer;
    if (path == "-")
        buffer << std::cin.rdbuf();
    else {
        std::ifstream in(path);
        if (! in)
            throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
        buffer << in.rdbuf();
    }
    return buffer.str();
}

Graph load_graph(const Options & o)
{
    return read_graph(read_input(o.input), parse_format(o.format));
}

void write_file(const std::string & path, const std::string & content)
{
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << content;
}

std::vector<Vertex> parse_vertex_list(const std::string & text)
{
    std::vector<Vertex> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size())
            throw Error(ErrorKind::ParseError, "bad vertex '" + token + "'");
        out.push_back(v);
    }
    return out;
}

json trace_json(const ForcingTrace & trace)
{
    json events = json::array();
    for (const auto & e : trace.events)
        events.push_back({{"round", e.round}, {"forcer", e.forcer}, {"forced", e.forced}});
    return {{"initial", trace.initial.members()}, {"rounds", trace.rounds}, {"events", std::move(events)},
            {"final", trace.final.members()}};
}

int cmd_force(const Options & o)
{
    auto g = load_graph(o);
    auto trace = closure(g, parse_vertex_list(o.set), o.k);
    const bool forcing = trace.final.is_full();
    if (o.json_output) {
        auto j = trace_json(trace);
        j["k"] = o.k;
        j["forcing"] = forcing;
        std::cout << j.dump(2) << '\n';
    }
    else {
        std::cout << format_trace(trace);
        std::cout << "rounds: " << trace.rounds << '\n'
                  << "colored: " << trace.final.size() << '/' << g.order() << '\n'
                  << "forcing: " << (forcing ? "true" : "false") << '\n';
    }
    return forcing ? exit_ok : exit_negative;
}

json greedy_json(const GreedyResult & r, const std::optional<BoundValue> & bound)
{
    json augs = json::array();
    for (const auto & a : r.augmentations)
        augs.push_back({{"u", a.u}, {"colored_neighbors", a.colored_neighbors}, {"a_u", a.a_u}});
    json j{{"case", to_string(r.case_taken)},
            {"size", r.forcing_set.size()},
            {"forcing_set", r.forcing_set},
            {"seed", r.seed},
            {"augmentations", std::move(augs)},
            {"trace", trace_json(r.trace)}};
    if (bound)
        j["bound"] = {{"name", bound->name}, {"num", bound->value->num()}, {"den", bound->value->den()},
                {"floor", bound->floor}};
    return j;
}

std::optional<BoundValue> case_bound(const Graph & g, int k, GreedyCase c)
{
    try {
        return c == GreedyCase::ThmIII ? bound_thm2_iii(g, k) : bound_prop1_thm2_cases(g, k);
    }
    catch (const Error &) {
        return std::nullopt;
    }
}

int cmd_greedy(const Options & o)
{
    auto g = load_graph(o);
    GreedyOptions options{parse_stall_strategy(o.strategy)};
    std::vector<GreedyResult> results;
    if (o.per_component || ! is_connected(g))
        results = greedy_per_component(g, o.k, options);
    else
        results.push_back(greedy_k_forcing_set(g, o.k, options));

    bool compliant = true;
    json all = json::array();
    for (const auto & r : results) {
        std::optional<BoundValue> bound;
        if (results.size() == 1)
            bound = case_bound(g, o.k, r.case_taken);
        if (bound)
            compliant &= static_cast<std::int64_t>(r.forcing_set.size()) <= bound->floor;
        if (o.json_output) {
            all.push_back(greedy_json(r, bound));
            continue;
        }
        std::cout << "case: " << to_string(r.case_taken) << '\n'
                  << "|T|: " << r.forcing_set.size() << '\n'
                  << "T: " << format_set(r.forcing_set) << '\n';
        for (const auto & a : r.augmentations)
            std::cout << "augment at " << a.u << ": " << format_set(a.colored_neighbors) << " (a=" << a.a_u << ")\n";
        if (bound)
            std::cout << "bound: " << bound->name << " = " << bound->value->to_string() << ", |T| <= " << bound->floor
                      << (static_cast<std::int64_t>(r.forcing_set.size()) <= bound->floor ? " ok" : " VIOLATED") << '\n';
    }
    if (o.json_output)
        std::cout << (results.size() == 1 ? all[0] : json{{"components", all}}).dump(2) << '\n';
    return compliant ? exit_ok : exit_negative;
}

int cmd_exact(const Options & o)
{
    auto g = load_graph(o);
    ExactOptions options{o.budget, o.workers};
    try {
        auto r = exact_f_k(g, o.k, options);
        std::vector<std::vector<Vertex>> all;
        if (o.all_minimum)
            all = exact_all_minimum_sets(g, o.k, options);
        const double ms = std::chrono::duration<double, std::milli>(r.elapsed).count();
        if (o.json_output) {
            json j{{"k", o.k}, {"f_k", r.f_k}, {"witness", r.witness}, {"subsets_tested", r.subsets_tested},
                    {"elapsed_ms", ms}, {"certification", "exhaustive"}};
            if (o.all_minimum)
                j["minimum_sets"] = all;
            std::cout << j.dump(2) << '\n';
        }
        else {
            std::cout << "F_" << o.k << ": " << r.f_k << '\n'
                      << "witness: " << format_set(r.witness) << '\n'
                      << "subsets tested: " << r.subsets_tested << '\n'
                      << "elapsed: " << std::fixed << std::setprecision(3) << ms << " ms\n";
            for (const auto & s : all)
                std::cout << "minimum set: " << format_set(s) << '\n';
        }
        return exit_ok;
    }
    catch (const BudgetExceeded & e) {
        if (o.json_output)
            std::cout << json{{"k", o.k}, {"lower_bound", e.proven_lower_bound()}, {"subsets_tested", e.subsets_tested()},
                    {"certification", "budget-truncated"}}.dump(2) << '\n';
        else
            std::cout << "budget exhausted: F_" << o.k << " >= " << e.proven_lower_bound() << " (" << e.subsets_tested()
                      << " subsets tested)\n";
        return exit_negative;
    }
}

int cmd_bounds(const Options & o)
{
    auto g = load_graph(o);
    auto report = all_bounds(g, o.k);
    if (o.with_exact) {
        try {
            report.exact_f_k = exact_f_k(g, o.k, ExactOptions{o.budget, o.workers}).f_k;
        }
        catch (const BudgetExceeded & e) {
            report.notes.push_back(e.what());
        }
    }
    if (o.with_greedy) {
        int total = 0;
        for (const auto & r : greedy_per_component(g, o.k))
            total += static_cast<int>(r.forcing_set.size());
        report.greedy_size = total;
    }

    if (o.json_output) {
        std::cout << to_json(report) << '\n';
        return exit_ok;
    }
    const auto & s = report.graph;
    std::cout << "n=" << s.n << " m=" << s.m << " delta=" << s.delta_min << " Delta=" << s.delta_max
              << " connected=" << (s.connected ? "yes" : "no") << " k=" << report.k << '\n';
    for (const auto & note : report.notes)
        std::cout << "note: " << note << '\n';
    for (const auto & b : report.bounds) {
        std::cout << std::left << std::setw(12) << b.name;
        if (b.applicable)
            std::cout << std::setw(10) << b.value->to_string() << "floor " << b.floor
                      << (b.exact_value ? " (exact value)" : "") << '\n';
        else
            std::cout << "n/a       " << b.reason << '\n';
    }
    if (report.exact_f_k)
        std::cout << std::setw(12) << "exact" << *report.exact_f_k << '\n';
    if (report.greedy_size)
        std::cout << std::setw(12) << "greedy" << *report.greedy_size << '\n';
    return exit_ok;
}

int cmd_verify(const Options & o)
{
    CorpusSpec corpus;
    if (o.meyer)
        corpus = bipartite_circulant_corpus(o.meyer_count, o.seed.value_or(2024));
    else if (! o.corpus_file.empty())
        corpus = parse_corpus(read_input(o.corpus_file));
    else
        corpus = default_corpus();
    if (o.budget != default_exact_budget)
        corpus.budget = o.budget;

    VerifyOptions options;
    options.workers = o.workers;
    options.greedy.strategy = parse_stall_strategy(o.strategy);
    auto report = verify_corpus(corpus, options);

    if (! o.csv_path.empty())
        write_file(o.csv_path, to_csv(report));
    if (! o.json_path.empty())
        write_file(o.json_path, to_json(report) + "\n");
    if (! o.equality_log_path.empty())
        write_file(o.equality_log_path, format_equality_log(report));

    const auto & s = report.summary;
    std::cerr << "corpus " << report.corpus << ": " << s.graphs << " graphs, " << s.rows << " rows, " << s.failed_rows
              << " failed, " << s.budget_truncated << " budget-truncated, " << s.equality_cases << " equality cases\n";
    for (const auto & row : report.rows)
        for (const auto & f : row.failures)
            std::cerr << "FAIL " << row.graph_id << " k=" << row.k << ": " << f << '\n';
    return report.ok() ? exit_ok : exit_negative;
}

int cmd_gen(const Options & o)
{
    std::string text;
    for (const auto & w : o.family_words)
        text += w + ' ';
    auto spec = parse_family_spec(text);
    if (o.seed)
        spec.seed = *o.seed;
    auto g = generate(spec);
    auto format = parse_format(o.format);
    if (format == GraphFormat::Graph6)
        std::cout << serialize_graph6(g) << '\n';
    else
        std::cout << serialize_edge_list(g);
    return exit_ok;
}

int cmd_bench(const Options & o)
{
    auto g = load_graph(o);
    using clock = std::chrono::steady_clock;
    auto time_it = [&] (auto && f) {
        auto start = clock::now();
        for (int i = 0; i < o.repeat; ++i)
            f();
        return std::chrono::duration<double, std::micro>(clock::now() - start).count() / o.repeat;
    };
    VertexSet first(g.order());
    first.insert(0);
    std::cout << std::fixed << std::setprecision(2);
    std::cout << "closure (trace)   " << time_it([&] { closure(g, first, o.k); }) << " us\n";
    std::cout << "closure (set)     " << time_it([&] { closed_set(g, first, o.k); }) << " us\n";
    if (is_connected(g))
        std::cout << "greedy            " << time_it([&] { greedy_k_forcing_set(g, o.k); }) << " us\n";
    auto start = clock::now();
    try {
        auto r = exact_f_k(g, o.k, ExactOptions{o.budget, o.workers});
        std::cout << "exact             " << std::chrono::duration<double, std::milli>(clock::now() - start).count()
                  << " ms (F_k=" << r.f_k << ", " << r.subsets_tested << " subsets)\n";
    }
    catch (const BudgetExceeded & e) {
        std::cout << "exact             budget exhausted (" << e.what() << ")\n";
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"k-forcing sets: propagation, greedy construction, exact search and bounds"};
    app.require_subcommand(1);
    Options o;

    auto add_graph_input = [&] (CLI::App * sub) {
        sub->add_option("input", o.input, "graph file (graph6 or edge list), '-' for stdin")->required();
        sub->add_option("--format", o.format, "auto | graph6 | edgelist")->capture_default_str();
    };
    auto add_k = [&] (CLI::App * sub) {
        sub->add_option("--k,-k", o.k, "forcing parameter k >= 1")->capture_default_str()->check(CLI::PositiveNumber);
    };
    auto add_budget = [&] (CLI::App * sub) {
        sub->add_option("--budget", o.budget, "closure evaluation budget for the exact search")->capture_default_str();
        sub->add_option("--workers", o.workers, "worker threads (default: KFORCE_WORKERS or hardware concurrency)");
    };

    auto force = app.add_subcommand("force", "run the k-forcing process from an initial set");
    add_graph_input(force);
    add_k(force);
    force->add_option("--set,-s", o.set, "initial colored vertices, comma separated")->required();
    force->add_flag("--json", o.json_output);

    auto greedy = app.add_subcommand("greedy", "greedy k-forcing set with its case and bound check");
    add_graph_input(greedy);
    add_k(greedy);
    greedy->add_option("--strategy", o.strategy, "stall selection: min-a | max-degree")->capture_default_str();
    greedy->add_flag("--per-component", o.per_component);
    greedy->add_flag("--json", o.json_output);

    auto exact = app.add_subcommand("exact", "exact k-forcing number by exhaustive search");
    add_graph_input(exact);
    add_k(exact);
    add_budget(exact);
    exact->add_flag("--all", o.all_minimum, "list every minimum k-forcing set");
    exact->add_flag("--json", o.json_output);

    auto bounds = app.add_subcommand("bounds", "evaluate every upper bound");
    add_graph_input(bounds);
    add_k(bounds);
    add_budget(bounds);
    bounds->add_flag("--exact", o.with_exact, "attach the exact value");
    bounds->add_flag("--greedy", o.with_greedy, "attach the greedy set size");
    bounds->add_flag("--json", o.json_output);

    auto verify = app.add_subcommand("verify", "check every invariant over a graph corpus");
    verify->add_option("corpus", o.corpus_file, "corpus spec (JSON); default corpus when omitted");
    verify->add_flag("--meyer", o.meyer, "random bipartite circulant corpus at k = 1");
    verify->add_option("--count", o.meyer_count, "graphs in the --meyer corpus")->capture_default_str();
    verify->add_option("--seed", o.seed, "seed for the --meyer corpus");
    verify->add_option("--csv", o.csv_path, "write the CSV report here ('-' for stdout)");
    verify->add_option("--json", o.json_path, "write the JSON report here ('-' for stdout)");
    verify->add_option("--equality-log", o.equality_log_path, "write equality cases here");
    verify->add_option("--strategy", o.strategy, "stall selection: min-a | max-degree")->capture_default_str();
    add_budget(verify);

    auto gen = app.add_subcommand("gen", "generate a graph, e.g. 'gen circulant 10 1,5'");
    gen->add_option("spec", o.family_words, "family and parameters")->required();
    gen->add_option("--format", o.format, "edgelist | graph6");
    gen->add_option("--seed", o.seed, "seed for random families");

    auto bench = app.add_subcommand("bench", "time closure, greedy and exact on one graph");
    add_graph_input(bench);
    add_k(bench);
    add_budget(bench);
    bench->add_option("--repeat", o.repeat)->capture_default_str()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (*force)
            return cmd_force(o);
        if (*greedy)
            return cmd_greedy(o);
        if (*exact)
            return cmd_exact(o);
        if (*bounds)
            return cmd_bounds(o);
        if (*verify)
            return cmd_verify(o);
        if (*gen) {
            if (o.format == "auto")
                o.format = "edgelist";
            return cmd_gen(o);
        }
        if (*bench)
            return cmd_bench(o);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}
