#pragma once

#include "rtk/constructions.hpp"
#include "rtk/exact_oracle.hpp"
#include "rtk/graph.hpp"
#include "rtk/pattern.hpp"
#include "rtk/rainbow_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace rtk {

enum class PaletteStrategy {
    fresh,    // uniform over legal colors from a palette of 2*maxdeg - 1
    recycled, // smallest legal color, few colors overall
};

struct HarnessConfig {
    std::size_t trials = 1;
    std::size_t n_min = 2;
    std::size_t n_max = 12;
    double density_min = 0.1;
    double density_max = 1.0;
    std::uint64_t seed = 0;
    PaletteStrategy palette = PaletteStrategy::recycled;
    unsigned jobs = 1;
};

inline auto validate(const HarnessConfig & cfg) -> void
{
    if (cfg.trials == 0)
        throw ParameterError("harness needs trials >= 1");
    if (cfg.n_min < 2 || cfg.n_min > cfg.n_max)
        throw ParameterError("harness needs 2 <= n_min <= n_max");
    if (! (0 <= cfg.density_min && cfg.density_min <= cfg.density_max && cfg.density_max <= 1))
        throw ParameterError("harness needs 0 <= density_min <= density_max <= 1");
}

using Rng = std::mt19937_64;

inline auto trial_rng(const HarnessConfig & cfg, std::uint64_t trial) -> Rng { return Rng(cfg.seed ^ trial); }

/// Uniform over graphs on n labelled vertices with exactly m edges.
inline auto random_graph(Rng & rng, std::size_t n, std::size_t m) -> Graph
{
    if (m > choose2(n))
        throw ParameterError("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) + " vertices");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(m);
    return Graph::from_edges(n, std::move(pairs));
}

inline auto random_proper_coloring(Rng & rng, const Graph & g, PaletteStrategy strategy) -> ColoredGraph
{
    if (strategy == PaletteStrategy::recycled)
        return assign_colors(g, greedy_proper_coloring(g));
    auto palette = g.max_degree() == 0 ? std::size_t{1} : 2 * g.max_degree() - 1;
    std::vector<Color> colors(g.size());
    std::vector<std::vector<char>> taken(g.order(), std::vector<char>(palette, 0));
    std::vector<Color> legal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto [u, v] = g.edge(i);
        legal.clear();
        for (Color c = 0; c < palette; ++c)
            if (! taken[u][c] && ! taken[v][c])
                legal.push_back(c);
        // at most 2*maxdeg - 2 neighbouring edges, so `legal` is never empty
        auto c = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
        colors[i] = c;
        taken[u][c] = taken[v][c] = 1;
    }
    return assign_colors(g, colors);
}

/// Each edge independently gets one of q colors, q uniform in [1, e(G)].
inline auto random_arbitrary_coloring(Rng & rng, const Graph & g) -> ColoredGraph
{
    auto q = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, g.size()))(rng);
    std::uniform_int_distribution<Color> pick(0, static_cast<Color>(q - 1));
    std::vector<Color> colors(g.size());
    for (auto & c : colors)
        c = pick(rng);
    return assign_general_colors(g, colors);
}

namespace detail {
    inline auto random_shape(Rng & rng, const HarnessConfig & cfg) -> std::pair<std::size_t, std::size_t>
    {
        auto n = std::uniform_int_distribution<std::size_t>(cfg.n_min, cfg.n_max)(rng);
        auto density = std::uniform_real_distribution<double>(cfg.density_min, cfg.density_max)(rng);
        auto m = static_cast<std::size_t>(std::llround(density * static_cast<double>(choose2(n))));
        return {n, std::clamp<std::size_t>(m, 1, choose2(n))};
    }
}

/// Random graph shape drawn from `cfg` for trial `trial`, properly colored per
/// the palette strategy. At least one edge.
inline auto random_properly_colored_graph(const HarnessConfig & cfg, std::uint64_t trial = 0) -> ColoredGraph
{
    validate(cfg);
    auto rng = trial_rng(cfg, trial);
    auto [n, m] = detail::random_shape(rng, cfg);
    auto g = random_graph(rng, n, m);
    return random_proper_coloring(rng, g, cfg.palette);
}

inline auto random_arbitrarily_colored_graph(const HarnessConfig & cfg, std::uint64_t trial = 0) -> ColoredGraph
{
    validate(cfg);
    auto rng = trial_rng(cfg, trial);
    auto [n, m] = detail::random_shape(rng, cfg);
    auto g = random_graph(rng, n, m);
    return random_arbitrary_coloring(rng, g);
}

enum class Verdict { pass, fail, precondition_violated };

inline auto to_string(Verdict v) -> std::string
{
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::precondition_violated: return "PRECONDITION";
    }
    return "?";
}

/// Outcome of a rainbow-path-length check. `degree` is the minimum degree, or
/// the minimum color degree for the color-degree variant.
struct PathCheckReport {
    Verdict verdict = Verdict::fail;
    std::size_t degree = 0;
    std::size_t required = 0;
    std::size_t achieved = 0;
    Witness witness;
    std::optional<std::string> witness_defect;

    auto equality() const -> bool { return achieved == required; }
};

namespace detail {
    inline auto check_path_length(const ColoredGraph & cg, std::size_t degree) -> PathCheckReport
    {
        PathCheckReport report;
        report.degree = degree;
        // length is an integer, so "at least 2/3 of the degree" means this ceiling
        report.required = (2 * degree + 2) / 3;
        auto best = longest_rainbow_path(cg);
        report.achieved = best.length;
        report.witness = std::move(best.witness);
        report.witness_defect = rtk::witness_defect(cg, report.witness);
        bool ok = ! report.witness_defect && report.achieved >= report.required;
        report.verdict = ok ? Verdict::pass : Verdict::fail;
        return report;
    }
}

/// Longest rainbow path >= ceil(2 delta / 3) for a proper coloring.
inline auto check_two_thirds(const ColoredGraph & cg) -> PathCheckReport
{
    if (! cg.is_proper())
        throw GraphError("check_two_thirds needs a proper coloring");
    if (cg.size() == 0)
        throw GraphError("check_two_thirds needs at least one edge");
    return detail::check_path_length(cg, cg.graph().min_degree());
}

/// Longest rainbow path >= ceil(2 theta / 3), theta the minimum color degree;
/// any coloring.
inline auto check_theta_two_thirds(const ColoredGraph & cg) -> PathCheckReport
{
    if (cg.size() == 0)
        throw GraphError("check_theta_two_thirds needs at least one edge");
    return detail::check_path_length(cg, min_color_degree(cg, false));
}

inline constexpr double default_epsilon = 0.999;

struct DegreeLemmaReport {
    Verdict verdict = Verdict::fail;
    std::size_t low_degree = 0; // vertices of degree < d
    double bound = 0;           // (maxdeg - d + eps) / (maxdeg - d + 1) * n
    std::string detail;
};

/// Counts vertices of degree below d against (D - d + eps)/(D - d + 1) * n, for
/// graphs with average degree >= d - eps and maximum degree <= D. Unmet
/// preconditions give Verdict::precondition_violated, not a failure.
inline auto check_degree_lemma(const Graph & g, std::size_t d, std::size_t max_deg, double eps = default_epsilon)
    -> DegreeLemmaReport
{
    DegreeLemmaReport report;
    auto n = g.order();
    auto violated = [&](std::string why) {
        report.verdict = Verdict::precondition_violated;
        report.detail = std::move(why);
        return report;
    };
    if (n == 0)
        return violated("graph has no vertices");
    if (! (eps >= 0 && eps < 1))
        return violated("eps must lie in [0, 1)");
    if (d > max_deg)
        return violated("d exceeds the maximum degree bound");
    if (g.max_degree() > max_deg)
        return violated("maximum degree " + std::to_string(g.max_degree()) + " exceeds " + std::to_string(max_deg));
    // average degree 2m/n >= d - eps
    if (2.0 * static_cast<double>(g.size()) < (static_cast<double>(d) - eps) * static_cast<double>(n))
        return violated("average degree below d - eps");

    for (Vertex v = 0; v < n; ++v)
        report.low_degree += g.degree(v) < d;
    auto gap = static_cast<double>(max_deg - d);
    report.bound = (gap + eps) / (gap + 1) * static_cast<double>(n);
    // compare cross-multiplied to keep the integral cases exact
    bool ok = static_cast<double>(report.low_degree) * (gap + 1) <= (gap + eps) * static_cast<double>(n) + 1e-9;
    report.verdict = ok ? Verdict::pass : Verdict::fail;
    if (! ok)
        report.detail = std::to_string(report.low_degree) + " vertices of degree < " + std::to_string(d);
    return report;
}

struct DegreeLemmaSweep {
    std::size_t graphs = 0;
    std::size_t checked = 0; // parameter choices meeting the preconditions
    std::size_t failures = 0;
    std::vector<std::pair<Graph, std::string>> failing;
};

/// Every graph on 1..n_max vertices (up to isomorphism), every d and D with
/// d <= D <= n - 1, and every listed eps.
inline auto degree_lemma_sweep(std::size_t n_max, const std::vector<double> & epsilons) -> DegreeLemmaSweep
{
    DegreeLemmaSweep sweep;
    for (std::size_t n = 1; n <= n_max; ++n)
        for (const auto & g : enumerate_graphs(n)) {
            ++sweep.graphs;
            for (std::size_t max_deg = 0; max_deg < n; ++max_deg)
                for (std::size_t d = 0; d <= max_deg; ++d)
                    for (auto eps : epsilons) {
                        auto r = check_degree_lemma(g, d, max_deg, eps);
                        if (r.verdict == Verdict::precondition_violated)
                            continue;
                        ++sweep.checked;
                        if (r.verdict == Verdict::fail) {
                            ++sweep.failures;
                            sweep.failing.emplace_back(g, "d=" + std::to_string(d) + " D=" + std::to_string(max_deg) +
                                                              " eps=" + std::to_string(eps));
                        }
                    }
        }
    return sweep;
}

namespace detail {
    // Runs body(trial) for every trial, spread over `jobs` threads, and
    // returns results in trial order.
    template <typename Result>
    auto run_trials(std::size_t trials, unsigned jobs, const std::function<Result(std::uint64_t)> & body)
        -> std::vector<Result>
    {
        std::vector<std::optional<Result>> slots(trials);
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_lock;
        auto worker = [&] {
            for (auto i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
                try {
                    slots[i] = body(i);
                }
                catch (...) {
                    std::lock_guard guard(failure_lock);
                    if (! failure)
                        failure = std::current_exception();
                    next.store(trials);
                }
            }
        };
        if (jobs <= 1)
            worker();
        else {
            std::vector<std::thread> pool;
            for (unsigned j = 0; j < jobs; ++j)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();
        }
        if (failure)
            std::rethrow_exception(failure);
        std::vector<Result> out;
        out.reserve(trials);
        for (auto & slot : slots)
            out.push_back(std::move(*slot));
        return out;
    }
}

struct SweepCase {
    std::uint64_t trial = 0;
    ColoredGraph graph;
    PathCheckReport report;
};

/// Aggregate of a randomized two-thirds sweep. Equality cases whose degree is
/// not a multiple of 3 are kept separately for inspection.
struct TwoThirdsSweep {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::size_t equality_cases = 0;
    std::vector<SweepCase> failing;
    std::vector<SweepCase> flagged;
    std::size_t longest_seen = 0;
};

enum class ColoringModel { proper, arbitrary };

inline auto two_thirds_sweep(const HarnessConfig & cfg, ColoringModel model, std::size_t keep = 16) -> TwoThirdsSweep
{
    validate(cfg);
    auto results = detail::run_trials<SweepCase>(cfg.trials, cfg.jobs, [&](std::uint64_t trial) {
        SweepCase one;
        one.trial = trial;
        if (model == ColoringModel::proper) {
            one.graph = random_properly_colored_graph(cfg, trial);
            one.report = check_two_thirds(one.graph);
        }
        else {
            one.graph = random_arbitrarily_colored_graph(cfg, trial);
            one.report = check_theta_two_thirds(one.graph);
        }
        return one;
    });
    TwoThirdsSweep sweep;
    sweep.trials = results.size();
    for (auto & one : results) {
        sweep.longest_seen = std::max(sweep.longest_seen, one.report.achieved);
        if (one.report.verdict != Verdict::pass) {
            ++sweep.failures;
            if (sweep.failing.size() < keep)
                sweep.failing.push_back(std::move(one));
            continue;
        }
        if (one.report.equality()) {
            ++sweep.equality_cases;
            if (one.report.degree % 3 != 0 && sweep.flagged.size() < keep)
                sweep.flagged.push_back(std::move(one));
        }
    }
    return sweep;
}

enum class BoundKind {
    general, // ceil((3l - 2)/2) n for paths, n(k - 1) + (k - 1)(4k - 3) for matchings
    sharp,   // exact values for P1..P4; falls back to general elsewhere
};

/// Edge count above which every proper coloring is claimed to contain a rainbow copy.
inline auto claimed_upper_bound(const Pattern & pattern, Count n, BoundKind kind) -> Count
{
    if (auto * path = std::get_if<PathPattern>(&pattern)) {
        auto l = path->length;
        if (kind == BoundKind::sharp) {
            switch (l) {
            case 1: return 0;
            case 2: return n / 2;
            case 3: return 3 * n / 2;
            case 4: return 2 * n;
            default: break;
            }
        }
        return rainbow_path_upper(n, l);
    }
    const auto & forest = std::get<StarForest>(pattern);
    if (! forest.is_matching())
        throw ParameterError("upper-bound falsification supports paths and matchings only");
    Count k = forest.components();
    return n * (k - 1) + (k - 1) * (4 * k - 3);
}

struct FalsifyReport {
    Verdict verdict = Verdict::pass;
    Count bound = 0;
    Count edges = 0;
    std::size_t trials = 0;
    std::vector<std::uint64_t> counterexample_trials;
    std::vector<ColoredGraph> counterexamples; // rainbow-free samples above the bound
};

/// Samples proper colorings of random graphs with bound + 1 edges and reports
/// any sample without a rainbow copy of the pattern.
inline auto falsify_upper_bound(const Pattern & pattern, std::size_t n, std::size_t trials, const HarnessConfig & cfg,
                                BoundKind kind = BoundKind::general) -> FalsifyReport
{
    if (trials == 0)
        throw ParameterError("falsify_upper_bound needs trials >= 1");
    FalsifyReport report;
    report.bound = claimed_upper_bound(pattern, n, kind);
    report.edges = report.bound + 1;
    if (report.edges > choose2(n))
        throw ParameterError("n = " + std::to_string(n) + " is too small: " + std::to_string(report.edges) +
                             " edges needed, at most " + std::to_string(choose2(n)) + " fit");
    report.trials = trials;

    struct Sample {
        ColoredGraph graph;
        bool rainbow_free = false;
    };
    auto samples = detail::run_trials<Sample>(trials, cfg.jobs, [&](std::uint64_t trial) {
        auto rng = trial_rng(cfg, trial);
        auto g = random_graph(rng, n, static_cast<std::size_t>(report.edges));
        Sample s{random_proper_coloring(rng, g, cfg.palette)};
        auto found = find_rainbow(s.graph, pattern);
        // a witness must recheck before it counts as containment
        s.rainbow_free = ! found || witness_defect(s.graph, *found).has_value();
        return s;
    });
    for (std::size_t t = 0; t < samples.size(); ++t)
        if (samples[t].rainbow_free) {
            report.verdict = Verdict::fail;
            report.counterexample_trials.push_back(t);
            report.counterexamples.push_back(std::move(samples[t].graph));
        }
    return report;
}

} // namespace rtk
