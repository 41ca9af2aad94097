#pragma once

#include "rtk/graph.hpp"
#include "rtk/pattern.hpp"
#include "rtk/rainbow_search.hpp"

#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtk {

/// Raised when a search exceeds its node budget, hard cap, or is cancelled.
/// Distinct from a negative answer: nothing may be concluded.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchLimits {
    std::uint64_t node_budget = 0; // 0 means unlimited
    const std::atomic<bool> * cancel = nullptr;
};

namespace detail {

    // Rainbow paths with `length` edges through the edge {a, b} of color c, on
    // the colored part of the graph.
    class PathThroughEdge {
    public:
        PathThroughEdge(const ColoredAdjacency & adj, std::uint64_t & nodes)
            : adj_(adj), nodes_(nodes), used_vertex_(adj.order(), 0), used_color_(adj.palette, 0)
        {
        }

        auto exists(Vertex a, Vertex b, Color c, std::size_t length) -> bool
        {
            used_vertex_[a] = used_vertex_[b] = 1;
            used_color_[c] = 1;
            bool found = false;
            for (std::size_t left = 0; left < length && ! found; ++left)
                found = grow(a, b, left, length - 1 - left);
            used_vertex_[a] = used_vertex_[b] = 0;
            used_color_[c] = 0;
            return found;
        }

    private:
        auto grow(Vertex left_end, Vertex right_end, std::size_t left, std::size_t right) -> bool
        {
            ++nodes_;
            if (left == 0 && right == 0)
                return true;
            bool on_left = left > 0;
            Vertex end = on_left ? left_end : right_end;
            for (auto [to, color] : adj_.arcs[end]) {
                if (used_vertex_[to] || used_color_[color])
                    continue;
                used_vertex_[to] = 1;
                used_color_[color] = 1;
                bool ok = on_left ? grow(to, right_end, left - 1, right) : grow(left_end, to, left, right - 1);
                used_color_[color] = 0;
                used_vertex_[to] = 0;
                if (ok)
                    return true;
            }
            return false;
        }

        const ColoredAdjacency & adj_;
        std::uint64_t & nodes_;
        std::vector<char> used_vertex_;
        std::vector<char> used_color_;
    };

    // Colors edges in lexicographic order. Edge i may take any color up to one
    // more than the largest color used so far (so each coloring is visited once
    // up to renaming colors), and a branch dies as soon as the colored part
    // contains a rainbow copy of the pattern.
    class RainbowFreeColoring {
    public:
        RainbowFreeColoring(const Graph & g, const Pattern & pattern, const SearchLimits & limits, SearchStats & stats)
            : g_(g), pattern_(pattern), limits_(limits), stats_(stats), partial_(g.order(), g.size()),
              colors_(g.size(), 0), used_at_(g.order(), std::vector<char>(g.size() + 1, 0))
        {
        }

        auto run() -> std::optional<std::vector<Color>>
        {
            if (assign(0, 0))
                return colors_;
            return std::nullopt;
        }

    private:
        auto assign(std::size_t i, Color next_fresh) -> bool
        {
            if (i == g_.size())
                return true;
            ++stats_.nodes_expanded;
            if (limits_.node_budget && stats_.nodes_expanded > limits_.node_budget)
                throw ResourceLimit("coloring search exceeded its node budget of " +
                                    std::to_string(limits_.node_budget));
            if (limits_.cancel && limits_.cancel->load(std::memory_order_relaxed))
                throw ResourceLimit("coloring search cancelled");

            auto e = g_.edge(i);
            for (Color c = 0; c <= next_fresh; ++c) {
                if (used_at_[e.u][c] || used_at_[e.v][c])
                    continue;
                colors_[i] = c;
                partial_.push_edge(e, c);
                if (! completes_rainbow(e, c)) {
                    used_at_[e.u][c] = used_at_[e.v][c] = 1;
                    bool ok = assign(i + 1, c == next_fresh ? next_fresh + 1 : next_fresh);
                    used_at_[e.u][c] = used_at_[e.v][c] = 0;
                    if (ok)
                        return true;
                }
                partial_.pop_edge(e);
            }
            return false;
        }

        // The prefix before this edge was rainbow-free, so any rainbow copy uses it.
        auto completes_rainbow(Edge e, Color c) -> bool
        {
            if (auto * path = std::get_if<PathPattern>(&pattern_))
                return PathThroughEdge(partial_, stats_.nodes_expanded).exists(e.u, e.v, c, path->length);
            SearchStats inner;
            bool found = find_rainbow_star_forest(partial_, std::get<StarForest>(pattern_), inner).has_value();
            stats_.nodes_expanded += inner.nodes_expanded;
            return found;
        }

        const Graph & g_;
        const Pattern & pattern_;
        const SearchLimits & limits_;
        SearchStats & stats_;
        ColoredAdjacency partial_;
        std::vector<Color> colors_;
        std::vector<std::vector<char>> used_at_;
    };
}

/// A proper coloring of g with no rainbow copy of the pattern, if one exists.
/// Exhaustive over colorings up to renaming colors; throws ResourceLimit when
/// the node budget runs out.
inline auto exists_rainbow_free_coloring(const Graph & g, const Pattern & pattern, const SearchLimits & limits,
                                         SearchStats & stats) -> std::optional<ColoredGraph>
{
    if (! find_copy(g, pattern))
        return assign_colors(g, greedy_proper_coloring(g));
    if (auto colors = detail::RainbowFreeColoring(g, pattern, limits, stats).run())
        return assign_colors(g, *colors);
    return std::nullopt;
}

inline auto exists_rainbow_free_coloring(const Graph & g, const Pattern & pattern, const SearchLimits & limits = {})
    -> std::optional<ColoredGraph>
{
    SearchStats stats;
    return exists_rainbow_free_coloring(g, pattern, limits, stats);
}

} // namespace rtk
