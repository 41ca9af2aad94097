#pragma once

#include "json_output.hpp"

#include "rtk/rtk.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rtk::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_resource = 3;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    unsigned jobs = 1;

    // construct
    std::string id;
    std::optional<std::size_t> n, k, c, i, m, f, d, l;
    std::string forest;
    std::string output;

    // search / oracle
    std::string pattern;
    std::string input;
    bool longest = false;
    std::string mode = "rainbow";
    std::uint64_t budget = 0;
    std::string emit_witness;

    // verify
    std::string check;
    std::optional<std::uint64_t> seed;
    std::size_t trials = 100;
    std::size_t n_min = 2, n_max = 12;
    double density_min = 0.1, density_max = 1.0;
    std::string palette = "recycled";
    std::string bound = "general";
    std::string archive_dir;
    std::vector<double> eps;
    std::optional<std::size_t> max_degree;

    // table
    std::string table;
    std::vector<std::string> forests;
    std::size_t n_step = 1;
};

namespace detail {
    inline auto parse_forest(const std::string & text) -> StarForest
    {
        auto p = parse_pattern(text);
        if (auto * forest = std::get_if<StarForest>(&p))
            return *forest;
        throw PatternError("'" + text + "' is a path, a star forest is required here");
    }

    template <typename T>
    auto need(const std::optional<T> & value, const char * flag, const std::string & what) -> T
    {
        if (! value)
            throw UsageError(what + " requires " + flag);
        return *value;
    }

    inline auto need_forest(const Options & o, const std::string & what) -> StarForest
    {
        if (o.forest.empty())
            throw UsageError(what + " requires --forest");
        return parse_forest(o.forest);
    }

    inline auto ci_mode() -> bool
    {
        auto * v = std::getenv("RTK_CI");
        return v && std::string(v) == "1";
    }

    inline auto harness_config(const Options & o) -> HarnessConfig
    {
        if (ci_mode() && ! o.seed)
            throw UsageError("RTK_CI=1 forbids randomized runs without --seed");
        HarnessConfig cfg;
        cfg.trials = o.trials;
        cfg.n_min = o.n_min;
        cfg.n_max = o.n_max;
        cfg.density_min = o.density_min;
        cfg.density_max = o.density_max;
        cfg.seed = o.seed.value_or(static_cast<std::uint64_t>(std::random_device{}()));
        cfg.palette = o.palette == "fresh" ? PaletteStrategy::fresh : PaletteStrategy::recycled;
        cfg.jobs = o.jobs;
        return cfg;
    }

    inline auto read_input(const std::string & path) -> ParsedGraph
    {
        if (path.empty())
            throw UsageError("--input is required");
        return parse_graph_text(read_file(path));
    }

    inline auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    inline auto archive(const std::string & dir, const std::string & name, const ColoredGraph & cg) -> std::string
    {
        std::filesystem::create_directories(dir);
        auto path = (std::filesystem::path(dir) / (name + ".cg")).string();
        write_file(path, write_colored_graph(cg));
        return path;
    }
}

struct Outcome {
    ordered_json doc;
    int code = exit_ok;
    std::optional<std::string> raw; // printed verbatim instead of rendering doc
};

inline auto run_construct(const Options & o, Format format) -> Outcome
{
    using detail::need;
    ordered_json params = ordered_json::object();
    std::optional<ColoredGraph> colored;
    std::optional<Graph> plain;
    std::optional<Count> predicted;
    const auto & id = o.id;

    if (id == "split-graph") {
        auto n = need(o.n, "--n", id), k = need(o.k, "--k", id);
        params = {{"n", n}, {"k", k}};
        plain = split_graph(n, k);
        predicted = choose2(k) + k * (n - k);
    }
    else if (id == "h") {
        auto forest = detail::need_forest(o, id);
        auto n = need(o.n, "--n", id), c = need(o.c, "--c", id);
        params = {{"forest", to_string(forest)}, {"n", n}, {"c", c}};
        colored = h_construction(forest, n, c);
        predicted = h_edge_count(forest, n, c);
    }
    else if (id == "h-prime") {
        auto forest = detail::need_forest(o, id);
        auto n = need(o.n, "--n", id), i = need(o.i, "--i", id);
        params = {{"forest", to_string(forest)}, {"n", n}, {"i", i}};
        plain = h_prime_construction(forest, n, i);
        predicted = h_prime_edge_count(forest, n, i);
    }
    else if (id == "k4-union") {
        auto n = need(o.n, "--n", id);
        params = {{"n", n}};
        colored = k4_union(n);
        predicted = 3 * n / 2;
    }
    else if (id == "k44-union") {
        auto n = need(o.n, "--n", id);
        params = {{"n", n}};
        colored = k44_union(n);
        predicted = 2 * n;
    }
    else if (id == "boolean-cube") {
        auto k = need(o.k, "--k", id);
        params = {{"k", k}};
        colored = boolean_cube_clique(k);
        predicted = k < 64 ? std::optional(choose2(Count{1} << k)) : std::nullopt;
    }
    else if (id == "rainbow-free-clique") {
        auto c = need(o.c, "--c", id), l = need(o.l, "--l", id);
        params = {{"c", c}, {"l", l}};
        SearchLimits limits;
        limits.node_budget = o.budget;
        colored = rainbow_free_clique_search(c, l, limits);
        predicted = choose2(c);
        if (! colored) {
            ordered_json doc;
            doc["id"] = id;
            doc["params"] = params;
            doc["found"] = false;
            return {doc, exit_ok, std::nullopt};
        }
    }
    else if (id == "edge-maximal-colorable") {
        auto m = need(o.m, "--m", id), f = need(o.f, "--f", id);
        params = {{"m", m}, {"f", f}};
        colored = edge_maximal_colorable(m, f);
        predicted = f * (m / 2);
    }
    else if (id == "bounded-degree") {
        auto m = need(o.m, "--m", id), d = need(o.d, "--d", id);
        params = {{"m", m}, {"d", d}};
        plain = edge_maximal_bounded_degree(m, d);
        predicted = m * d / 2;
    }
    else
        throw UsageError("unknown construction '" + id + "'");

    ordered_json sidecar;
    sidecar["id"] = id;
    sidecar["params"] = params;
    auto body = colored ? graph_json(*colored) : graph_json(*plain);
    sidecar["n"] = body["n"];
    sidecar["edges"] = body["edges"];
    sidecar["colors"] = body["colors"];
    sidecar["predicted_edge_count"] = predicted ? ordered_json(*predicted) : ordered_json(nullptr);

    auto text = colored ? write_colored_graph(*colored) : write_graph(*plain);
    if (! o.output.empty()) {
        write_file(o.output, text);
        write_file(o.output + ".json", sidecar.dump(2) + "\n");
        ordered_json summary;
        summary["id"] = id;
        summary["params"] = params;
        summary["n"] = sidecar["n"];
        summary["edge_count"] = sidecar["edges"].size();
        summary["predicted_edge_count"] = sidecar["predicted_edge_count"];
        summary["output"] = o.output;
        return {summary, exit_ok, std::nullopt};
    }
    if (format == Format::text)
        return {sidecar, exit_ok, text};
    if (format == Format::csv) {
        auto rows = ordered_json::array();
        for (std::size_t e = 0; e < sidecar["edges"].size(); ++e) {
            ordered_json row;
            row["u"] = sidecar["edges"][e][0];
            row["v"] = sidecar["edges"][e][1];
            row["color"] = colored ? ordered_json(sidecar["colors"][e]) : ordered_json(nullptr);
            rows.push_back(row);
        }
        return {rows, exit_ok, std::nullopt};
    }
    return {sidecar, exit_ok, std::nullopt};
}

inline auto run_search(const Options & o) -> Outcome
{
    auto parsed = detail::read_input(o.input);
    auto start = std::chrono::steady_clock::now();
    SearchStats stats;
    ordered_json doc;
    if (o.longest) {
        if (! parsed.colors)
            throw UsageError("--longest needs a colored input");
        auto cg = assign_general_colors(parsed.graph, *parsed.colors);
        auto best = longest_rainbow_path(cg, stats);
        doc["length"] = best.length;
        doc["witness"] = witness_json(best.witness);
        doc["nodes_expanded"] = stats.nodes_expanded;
        doc["elapsed"] = detail::seconds_since(start);
        return {doc, exit_ok, std::nullopt};
    }
    if (o.pattern.empty())
        throw UsageError("search requires --pattern or --longest");
    auto pattern = parse_pattern(o.pattern);
    std::optional<Witness> found;
    bool rainbow = parsed.colors.has_value();
    if (rainbow)
        found = find_rainbow(assign_general_colors(parsed.graph, *parsed.colors), pattern, stats);
    else
        found = find_copy(parsed.graph, pattern, stats);
    doc["pattern"] = to_string(pattern);
    doc["rainbow"] = rainbow;
    doc["found"] = found.has_value();
    if (found)
        doc["witness"] = witness_json(*found);
    doc["nodes_expanded"] = stats.nodes_expanded;
    doc["elapsed"] = detail::seconds_since(start);
    return {doc, exit_ok, std::nullopt};
}

inline auto run_oracle(const Options & o) -> Outcome
{
    if (o.mode != "rainbow" && o.mode != "classical")
        throw UsageError("--mode must be rainbow or classical");
    auto n = detail::need(o.n, "--n", "oracle");
    if (o.pattern.empty())
        throw UsageError("oracle requires --pattern");
    OracleOptions options;
    options.limits.node_budget = o.budget;
    options.jobs = o.jobs;
    auto kind = o.mode == "rainbow" ? OracleKind::rainbow : OracleKind::classical;
    auto report = ex_oracle(kind, n, parse_pattern(o.pattern), options);
    if (! o.emit_witness.empty())
        write_file(o.emit_witness, std::visit(
                                       [](const auto & g) {
                                           if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Graph>)
                                               return write_graph(g);
                                           else
                                               return write_colored_graph(g);
                                       },
                                       report.witness));
    auto doc = report_json(report);
    if (auto defect = report_defect(report)) {
        doc["witness_defect"] = *defect;
        return {doc, exit_fail, std::nullopt};
    }
    return {doc, exit_ok, std::nullopt};
}

inline auto run_verify(const Options & o) -> Outcome
{
    auto start = std::chrono::steady_clock::now();
    ordered_json doc;
    doc["check"] = o.check;
    int code = exit_ok;
    auto mark = [&](Verdict v) {
        if (v == Verdict::fail)
            code = exit_fail;
    };

    if (o.check == "two-thirds" || o.check == "theta") {
        bool theta = o.check == "theta";
        if (! o.input.empty()) {
            auto parsed = detail::read_input(o.input);
            if (! parsed.colors)
                throw UsageError(o.check + " needs a colored input");
            auto cg = theta ? assign_general_colors(parsed.graph, *parsed.colors)
                            : assign_colors(parsed.graph, *parsed.colors);
            auto report = theta ? check_theta_two_thirds(cg) : check_two_thirds(cg);
            auto body = path_check_json(report);
            for (auto & [key, value] : body.items())
                doc[key] = value;
            mark(report.verdict);
        }
        else {
            auto cfg = detail::harness_config(o);
            auto sweep = two_thirds_sweep(cfg, theta ? ColoringModel::arbitrary : ColoringModel::proper);
            doc["verdict"] = sweep.failures ? "FAIL" : "PASS";
            doc["seed"] = cfg.seed;
            doc["trials"] = sweep.trials;
            doc["failures"] = sweep.failures;
            doc["equality_cases"] = sweep.equality_cases;
            doc["flagged_equality_cases"] = sweep.flagged.size();
            doc["longest_seen"] = sweep.longest_seen;
            auto archived = ordered_json::array();
            if (! o.archive_dir.empty())
                for (const auto & one : sweep.failing)
                    archived.push_back(detail::archive(o.archive_dir, o.check + "-trial" + std::to_string(one.trial),
                                                       one.graph));
            doc["archived"] = archived;
            if (sweep.failures)
                code = exit_fail;
        }
    }
    else if (o.check == "degree-lemma") {
        auto eps = o.eps.empty() ? std::vector<double>{0, 0.5, 0.9, default_epsilon} : o.eps;
        if (! o.input.empty()) {
            auto g = detail::read_input(o.input).graph;
            auto d = detail::need(o.d, "--d", "degree-lemma with --input");
            auto max_deg = detail::need(o.max_degree, "--max-degree", "degree-lemma with --input");
            auto report = check_degree_lemma(g, d, max_deg, eps.front());
            doc["verdict"] = to_string(report.verdict);
            doc["low_degree"] = report.low_degree;
            doc["bound"] = report.bound;
            doc["detail"] = report.detail;
            mark(report.verdict);
        }
        else {
            if (o.n_max > enumeration_cap)
                throw UsageError("degree-lemma sweep supports --n-max <= " + std::to_string(enumeration_cap));
            auto sweep = degree_lemma_sweep(o.n_max, eps);
            doc["verdict"] = sweep.failures ? "FAIL" : "PASS";
            doc["n_max"] = o.n_max;
            doc["eps"] = eps;
            doc["graphs"] = sweep.graphs;
            doc["checked"] = sweep.checked;
            doc["failures"] = sweep.failures;
            if (sweep.failures)
                code = exit_fail;
        }
    }
    else if (o.check == "falsify") {
        if (o.pattern.empty())
            throw UsageError("falsify requires --pattern");
        auto n = detail::need(o.n, "--n", "falsify");
        auto cfg = detail::harness_config(o);
        auto kind = o.bound == "sharp" ? BoundKind::sharp : BoundKind::general;
        auto pattern = parse_pattern(o.pattern);
        auto report = falsify_upper_bound(pattern, n, o.trials, cfg, kind);
        doc["verdict"] = to_string(report.verdict);
        doc["pattern"] = to_string(pattern);
        doc["n"] = n;
        doc["seed"] = cfg.seed;
        doc["bound_kind"] = o.bound;
        doc["bound"] = report.bound;
        doc["edges"] = report.edges;
        doc["trials"] = report.trials;
        doc["counterexamples"] = report.counterexamples.size();
        auto archived = ordered_json::array();
        if (! o.archive_dir.empty())
            for (std::size_t t = 0; t < report.counterexamples.size(); ++t)
                archived.push_back(detail::archive(o.archive_dir,
                                                   "falsify-" + to_string(pattern) + "-trial" +
                                                       std::to_string(report.counterexample_trials[t]),
                                                   report.counterexamples[t]));
        doc["archived"] = archived;
        mark(report.verdict);
    }
    else
        throw UsageError("unknown check '" + o.check + "' (two-thirds, theta, degree-lemma, falsify)");
    doc["elapsed"] = detail::seconds_since(start);
    return {doc, code, std::nullopt};
}

inline auto run_table(const Options & o) -> Outcome
{
    std::vector<StarForest> forests;
    for (const auto & text : o.forests)
        forests.push_back(detail::parse_forest(text));
    if (forests.empty())
        forests = forest_catalog();
    if (o.n_step == 0)
        throw UsageError("--n-step must be positive");
    auto rows = ordered_json::array();

    if (o.table == "h-edge-count") {
        for (const auto & forest : forests)
            for (std::size_t n = o.n_min; n <= o.n_max; n += o.n_step)
                for (std::size_t c = 0; c < forest.components(); ++c) {
                    if (n < h_min_order(forest, c))
                        continue;
                    ordered_json row;
                    row["forest"] = to_string(forest);
                    row["n"] = n;
                    row["c"] = c;
                    row["h_edge_count"] = h_edge_count(forest, n, c);
                    rows.push_back(row);
                }
    }
    else if (o.table == "llp") {
        for (const auto & forest : forests)
            for (std::size_t n = std::max(o.n_min, forest.components()); n <= o.n_max; n += o.n_step) {
                ordered_json row;
                row["forest"] = to_string(forest);
                row["n"] = n;
                row["llp_bound"] = llp_bound(forest, n);
                row["best_h"] = h_edge_count(forest, n, best_c(forest, n));
                rows.push_back(row);
            }
    }
    else if (o.table == "best-c") {
        auto n = o.n.value_or(10000);
        for (const auto & forest : forests) {
            ordered_json row;
            row["forest"] = to_string(forest);
            row["k"] = forest.components();
            row["n"] = n;
            row["best_c"] = best_c(forest, n);
            row["predicted"] = predicted_best_c(forest, n);
            auto threshold = best_c_threshold(forest, n);
            row["threshold"] = threshold ? ordered_json(*threshold) : ordered_json(nullptr);
            rows.push_back(row);
        }
    }
    else if (o.table == "ex-rainbow") {
        if (o.pattern.empty())
            throw UsageError("table ex-rainbow requires --pattern");
        auto pattern = parse_pattern(o.pattern);
        OracleOptions options;
        options.limits.node_budget = o.budget;
        options.jobs = o.jobs;
        for (std::size_t n = std::max<std::size_t>(o.n_min, 1); n <= o.n_max; n += o.n_step) {
            ordered_json row;
            row["pattern"] = to_string(pattern);
            row["n"] = n;
            row["ex_rainbow"] = ex_rainbow(n, pattern, options).value;
            row["ex_classical"] = ex_classical(n, pattern, options).value;
            rows.push_back(row);
        }
    }
    else
        throw UsageError("unknown table '" + o.table + "' (h-edge-count, llp, best-c, ex-rainbow)");
    return {rows, exit_ok, std::nullopt};
}

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 a FAIL verdict, 2 usage or input errors, 3 resource limits and I/O failures.
inline auto dispatch(std::vector<std::string> args, std::ostream & out, std::ostream & err) -> int
{
    Options o;
    CLI::App app{"Rainbow Turan number toolkit: constructions, detectors, exact oracles and property checks"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    app.set_version_flag("--version", "rtk 1.0");
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    auto * construct = app.add_subcommand("construct", "Build a named construction");
    construct
        ->add_option("id", o.id, "split-graph | h | h-prime | k4-union | k44-union | boolean-cube | "
                                 "rainbow-free-clique | edge-maximal-colorable | bounded-degree")
        ->required();
    construct->add_option("--n", o.n, "Vertices");
    construct->add_option("--k", o.k, "Clique size (split-graph) or cube dimension (boolean-cube)");
    construct->add_option("--c", o.c, "Universal vertices (h) or clique order (rainbow-free-clique)");
    construct->add_option("--i", o.i, "Universal vertices (h-prime)");
    construct->add_option("--m", o.m, "Vertices of the inner graph");
    construct->add_option("--f", o.f, "Colors (edge-maximal-colorable)");
    construct->add_option("--d", o.d, "Degree bound (bounded-degree)");
    construct->add_option("--l", o.l, "Path length (rainbow-free-clique)");
    construct->add_option("--forest", o.forest, "Star forest, e.g. S1,2,3 or M3");
    construct->add_option("--budget", o.budget, "Node budget for searches (0 = unlimited)");
    construct->add_option("--output", o.output, "Write the graph here and a .json sidecar next to it");

    auto * search = app.add_subcommand("search", "Look for a (rainbow) pattern in a graph file");
    search->add_option("--pattern", o.pattern, "M<k> | S<a,b,...> | P<l>");
    search->add_option("--input", o.input, "Graph file; uncolored files are searched for any copy")->required();
    search->add_flag("--longest", o.longest, "Report the longest rainbow path instead");

    auto * oracle = app.add_subcommand("oracle", "Exact (rainbow) Turan number by exhaustive search");
    oracle->add_option("--mode", o.mode, "rainbow | classical")->capture_default_str();
    oracle->add_option("--n", o.n, "Vertices")->required();
    oracle->add_option("--pattern", o.pattern, "M<k> | S<a,b,...> | P<l>")->required();
    oracle->add_option("--budget", o.budget, "Node budget (0 = unlimited)");
    oracle->add_option("--emit-witness", o.emit_witness, "Write the extremal witness here");

    auto * verify = app.add_subcommand("verify", "Run a property check");
    verify->add_option("check", o.check, "two-thirds | theta | degree-lemma | falsify")->required();
    verify->add_option("--input", o.input, "Check this graph instead of random samples");
    verify->add_option("--seed", o.seed, "Random seed (mandatory when RTK_CI=1)");
    verify->add_option("--trials", o.trials, "Random samples")->capture_default_str();
    verify->add_option("--n", o.n, "Vertices (falsify)");
    verify->add_option("--n-min", o.n_min, "Smallest random order")->capture_default_str();
    verify->add_option("--n-max", o.n_max, "Largest random order, or sweep limit")->capture_default_str();
    verify->add_option("--density-min", o.density_min)->capture_default_str();
    verify->add_option("--density-max", o.density_max)->capture_default_str();
    verify->add_option("--palette", o.palette)->check(CLI::IsMember({"fresh", "recycled"}))->capture_default_str();
    verify->add_option("--pattern", o.pattern, "Pattern (falsify)");
    verify->add_option("--bound", o.bound, "general | sharp (falsify)")
        ->check(CLI::IsMember({"general", "sharp"}))
        ->capture_default_str();
    verify->add_option("--eps", o.eps, "Slack values for degree-lemma");
    verify->add_option("--d", o.d, "Degree threshold (degree-lemma with --input)");
    verify->add_option("--max-degree", o.max_degree, "Maximum degree bound (degree-lemma with --input)");
    verify->add_option("--archive-dir", o.archive_dir, "Store failing samples here");

    auto * table = app.add_subcommand("table", "Emit a regression grid");
    table->add_option("name", o.table, "h-edge-count | llp | best-c | ex-rainbow")->required();
    table->add_option("--forest", o.forests, "Star forests (default: the built-in catalog)");
    table->add_option("--pattern", o.pattern, "Pattern (ex-rainbow)");
    table->add_option("--n", o.n, "Order (best-c)");
    table->add_option("--n-min", o.n_min)->capture_default_str();
    table->add_option("--n-max", o.n_max)->capture_default_str();
    table->add_option("--n-step", o.n_step)->capture_default_str();
    table->add_option("--budget", o.budget, "Node budget (ex-rainbow)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    auto format = o.format == "csv" ? Format::csv : o.format == "text" ? Format::text : Format::json;
    try {
        Outcome outcome;
        if (*construct)
            outcome = run_construct(o, format);
        else if (*search)
            outcome = run_search(o);
        else if (*oracle)
            outcome = run_oracle(o);
        else if (*verify)
            outcome = run_verify(o);
        else
            outcome = run_table(o);
        out << (outcome.raw ? *outcome.raw : render(outcome.doc, format));
        return outcome.code;
    }
    catch (const UsageError & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::invalid_argument & e) { // PatternError, ParameterError
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const GraphError & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const ResourceLimit & e) {
        err << "error: " << e.what() << "\n";
        return exit_resource;
    }
    catch (const std::exception & e) {
        err << "error: " << e.what() << "\n";
        return exit_resource;
    }
}

inline auto dispatch(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
{
    return dispatch(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace rtk::cli
