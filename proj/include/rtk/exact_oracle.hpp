#pragma once

#include "rtk/canonical.hpp"
#include "rtk/coloring_search.hpp"
#include "rtk/constructions.hpp"
#include "rtk/graph.hpp"
#include "rtk/pattern.hpp"
#include "rtk/rainbow_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <variant>
#include <vector>

namespace rtk {

inline constexpr std::size_t enumeration_cap = 8;

/// One representative per isomorphism class on n vertices, in canonical
/// labeling, ordered by decreasing edge count and then by canonical key.
/// Built by adding a vertex to every class on n-1 vertices in every possible
/// way; results are cached per n.
inline auto enumerate_graphs(std::size_t n) -> const std::vector<Graph> &
{
    if (n == 0 || n > enumeration_cap)
        throw ParameterError("enumerate_graphs supports 1 <= n <= " + std::to_string(enumeration_cap) + ", got " +
                             std::to_string(n));
    static std::mutex lock;
    static std::map<std::size_t, std::vector<Graph>> cache;
    {
        std::lock_guard guard(lock);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }

    std::vector<Graph> result;
    if (n == 1)
        result.push_back(Graph::from_edges(1, {}));
    else {
        const auto & smaller = enumerate_graphs(n - 1);
        std::unordered_set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> keyed;
        auto fresh = static_cast<Vertex>(n - 1);
        for (const auto & base : smaller)
            for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                auto edges = base.edges();
                for (Vertex v = 0; v + 1 < n; ++v)
                    if (mask & (1u << v))
                        edges.push_back({v, fresh});
                auto g = Graph::from_edges(n, std::move(edges));
                auto form = canonical_form(g);
                if (! seen.insert(form.key).second)
                    continue;
                keyed.emplace_back(form.key, canonical_relabel(g));
            }
        std::sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) {
            if (a.second.size() != b.second.size())
                return a.second.size() > b.second.size();
            return a.first < b.first;
        });
        for (auto & [key, g] : keyed)
            result.push_back(std::move(g));
    }

    std::lock_guard guard(lock);
    return cache.emplace(n, std::move(result)).first->second;
}

enum class OracleKind { classical, rainbow };

inline auto to_string(OracleKind kind) -> std::string { return kind == OracleKind::rainbow ? "rainbow" : "classical"; }

/// Outcome of an exact (rainbow) Turan number computation.
struct SearchReport {
    OracleKind kind = OracleKind::classical;
    std::size_t n = 0;
    Pattern pattern = PathPattern{1};
    std::size_t value = 0;
    std::variant<Graph, ColoredGraph> witness;
    std::uint64_t graphs_enumerated = 0;
    std::uint64_t colorings_tested = 0;
    double elapsed_seconds = 0;
    std::optional<std::uint64_t> seed;
};

struct OracleOptions {
    SearchLimits limits;
    unsigned jobs = 1;
};

namespace detail {
    // Runs `test` over graphs[first, last) and returns the lowest index that
    // succeeds. Workers skip indices above the best success found so far, so the
    // answer does not depend on scheduling.
    template <typename Test>
    auto first_success(const std::vector<Graph> & graphs, std::size_t first, std::size_t last, unsigned jobs,
                       Test && test) -> std::optional<std::size_t>
    {
        std::atomic<std::size_t> best{last};
        std::atomic<std::size_t> next{first};
        std::exception_ptr failure;
        std::mutex failure_lock;
        auto worker = [&] {
            while (true) {
                auto i = next.fetch_add(1);
                if (i >= last || i > best.load())
                    return;
                try {
                    if (test(graphs[i])) {
                        auto current = best.load();
                        while (i < current && ! best.compare_exchange_weak(current, i)) {
                        }
                    }
                }
                catch (...) {
                    std::lock_guard guard(failure_lock);
                    if (! failure)
                        failure = std::current_exception();
                    best.store(0);
                    return;
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
        if (best.load() < last)
            return best.load();
        return std::nullopt;
    }

    template <typename Test>
    auto scan_levels(const std::vector<Graph> & graphs, unsigned jobs, Test && test) -> std::optional<std::size_t>
    {
        // graphs are grouped by decreasing edge count; the first level with a
        // success gives the extremal number
        std::size_t start = 0;
        while (start < graphs.size()) {
            auto stop = start;
            while (stop < graphs.size() && graphs[stop].size() == graphs[start].size())
                ++stop;
            if (auto hit = first_success(graphs, start, stop, jobs, test))
                return hit;
            start = stop;
        }
        return std::nullopt;
    }
}

/// Exact ex*(n, pattern): the most edges of an n-vertex graph admitting a
/// proper coloring with no rainbow copy.
inline auto ex_rainbow(std::size_t n, const Pattern & pattern, const OracleOptions & options = {}) -> SearchReport
{
    auto started = std::chrono::steady_clock::now();
    const auto & graphs = enumerate_graphs(n);
    SearchReport report;
    report.kind = OracleKind::rainbow;
    report.n = n;
    report.pattern = pattern;

    std::atomic<std::uint64_t> tested{0}, nodes{0};
    std::vector<std::optional<ColoredGraph>> found(graphs.size());
    auto test = [&](const Graph & g) {
        ++tested;
        SearchStats stats;
        struct Flush {
            std::atomic<std::uint64_t> & total;
            SearchStats & stats;
            ~Flush() { total += stats.nodes_expanded; }
        } flush{nodes, stats};
        auto coloring = exists_rainbow_free_coloring(g, pattern, options.limits, stats);
        if (! coloring)
            return false;
        found[static_cast<std::size_t>(&g - graphs.data())] = std::move(coloring);
        return true;
    };
    auto hit = detail::scan_levels(graphs, options.jobs, test);
    // n >= 1, so the edgeless graph is always reached and always succeeds
    report.value = graphs[*hit].size();
    report.witness = *found[*hit];
    report.graphs_enumerated = tested.load();
    report.colorings_tested = nodes.load();
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

/// Exact ex(n, pattern) with an extremal graph.
inline auto ex_classical(std::size_t n, const Pattern & pattern, const OracleOptions & options = {}) -> SearchReport
{
    auto started = std::chrono::steady_clock::now();
    const auto & graphs = enumerate_graphs(n);
    SearchReport report;
    report.kind = OracleKind::classical;
    report.n = n;
    report.pattern = pattern;

    std::atomic<std::uint64_t> tested{0}, nodes{0};
    auto test = [&](const Graph & g) {
        ++tested;
        SearchStats stats;
        bool free = ! find_copy(g, pattern, stats);
        nodes += stats.nodes_expanded;
        if (options.limits.node_budget && nodes.load() > options.limits.node_budget)
            throw ResourceLimit("classical oracle exceeded its node budget");
        return free;
    };
    auto hit = detail::scan_levels(graphs, options.jobs, test);
    report.value = graphs[*hit].size();
    report.witness = graphs[*hit];
    report.graphs_enumerated = tested.load();
    report.colorings_tested = 0;
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

inline auto ex_oracle(OracleKind kind, std::size_t n, const Pattern & pattern, const OracleOptions & options = {})
    -> SearchReport
{
    return kind == OracleKind::rainbow ? ex_rainbow(n, pattern, options) : ex_classical(n, pattern, options);
}

/// Empty when the report's witness re-validates: right edge count, and the
/// detector finds no (rainbow) copy in it.
inline auto report_defect(const SearchReport & report) -> std::optional<std::string>
{
    if (auto * cg = std::get_if<ColoredGraph>(&report.witness)) {
        if (! cg->is_proper())
            return std::string("witness coloring is not proper");
        if (cg->size() != report.value || cg->order() != report.n)
            return std::string("witness size does not match the reported value");
        if (find_rainbow(*cg, report.pattern))
            return std::string("witness contains a rainbow copy of the pattern");
    }
    else {
        const auto & g = std::get<Graph>(report.witness);
        if (g.size() != report.value || g.order() != report.n)
            return std::string("witness size does not match the reported value");
        if (find_copy(g, report.pattern))
            return std::string("witness contains a copy of the pattern");
    }
    if (report.value > choose2(report.n))
        return std::string("value exceeds C(n, 2)");
    return std::nullopt;
}

/// ceil((3l - 2) / 2) * n.
inline auto rainbow_path_upper(Count n, Count l) -> Count
{
    if (l == 0)
        throw ParameterError("rainbow_path_upper needs l >= 1");
    return (3 * l - 2 + 1) / 2 * n;
}

/// (l - 1) n / 2, valid when l divides n.
inline auto classical_path_bound(Count n, Count l) -> Count
{
    if (l == 0 || n % l != 0)
        throw ParameterError("classical_path_bound needs l to divide n");
    return (l - 1) * n / 2;
}

} // namespace rtk
