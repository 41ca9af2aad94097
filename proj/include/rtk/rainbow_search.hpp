#pragma once

#include "rtk/graph.hpp"
#include "rtk/pattern.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rtk {

/// Adjacency lists with colors, sorted by neighbour. The detectors run on this
/// so that partially colored graphs (see exact_oracle.hpp) can be searched
/// without building a ColoredGraph per node.
struct ColoredAdjacency {
    struct Arc {
        Vertex to;
        Color color;
    };

    std::size_t palette = 0;
    std::vector<std::vector<Arc>> arcs;

    ColoredAdjacency() = default;
    ColoredAdjacency(std::size_t n, std::size_t palette_size) : palette(palette_size), arcs(n) {}

    explicit ColoredAdjacency(const ColoredGraph & cg) : palette(cg.palette_size()), arcs(cg.order())
    {
        for (Vertex v = 0; v < cg.order(); ++v)
            for (auto i : cg.graph().incident(v))
                arcs[v].push_back({cg.graph().other(i, v), cg.color_of(i)});
    }

    auto order() const -> std::size_t { return arcs.size(); }

    /// Appending edges in lexicographic order keeps every list sorted.
    auto push_edge(Edge e, Color c) -> void
    {
        arcs[e.u].push_back({e.v, c});
        arcs[e.v].push_back({e.u, c});
    }

    auto pop_edge(Edge e) -> void
    {
        arcs[e.u].pop_back();
        arcs[e.v].pop_back();
    }
};

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
};

namespace detail {

    class StarForestSearch {
    public:
        StarForestSearch(const ColoredAdjacency & adj, const StarForest & forest, SearchStats & stats)
            : adj_(adj), forest_(forest), stats_(stats), used_vertex_(adj.order(), 0),
              used_color_(adj.palette, 0), stamp_(adj.palette, 0), available_degree_(adj.order(), 0)
        {
            sizes_ = forest.sizes();
            std::sort(sizes_.rbegin(), sizes_.rend());
        }

        auto run() -> std::optional<Witness>
        {
            if (place(0, std::nullopt))
                return Witness{forest_, parts_, edges_};
            return std::nullopt;
        }

    private:
        auto place(std::size_t index, std::optional<Vertex> previous_center) -> bool
        {
            if (index == sizes_.size())
                return true;
            ++stats_.nodes_expanded;
            if (! feasible(index))
                return false;

            auto size = sizes_[index];
            std::optional<Vertex> floor;
            if (index > 0 && sizes_[index - 1] == size)
                floor = previous_center;

            std::vector<Vertex> centers;
            for (Vertex v = 0; v < adj_.order(); ++v)
                if (! used_vertex_[v] && available_degree_[v] >= size && (! floor || v > *floor))
                    centers.push_back(v);
            std::stable_sort(centers.begin(), centers.end(),
                             [&](Vertex a, Vertex b) { return available_degree_[a] > available_degree_[b]; });
            for (auto center : centers) {
                used_vertex_[center] = 1;
                parts_.push_back({center});
                if (choose_leaves(index, center, size, 0))
                    return true;
                parts_.pop_back();
                used_vertex_[center] = 0;
            }
            return false;
        }

        auto choose_leaves(std::size_t index, Vertex center, std::size_t remaining, std::size_t from) -> bool
        {
            if (remaining == 0)
                return place(index + 1, center);
            const auto & arcs = adj_.arcs[center];
            for (std::size_t i = from; i < arcs.size(); ++i) {
                auto [to, color] = arcs[i];
                if (used_vertex_[to] || used_color_[color])
                    continue;
                // a single edge is recorded from its lower endpoint
                if (sizes_[index] == 1 && to < center)
                    continue;
                if (arcs.size() - i < remaining)
                    break;
                used_vertex_[to] = 1;
                used_color_[color] = 1;
                parts_.back().push_back(to);
                edges_.push_back(make_edge(center, to));
                if (choose_leaves(index, center, remaining - 1, i + 1))
                    return true;
                edges_.pop_back();
                parts_.back().pop_back();
                used_color_[color] = 0;
                used_vertex_[to] = 0;
            }
            return false;
        }

        // Necessary conditions on the still-available subgraph (unused vertices,
        // edges of unused colors). Also refreshes available_degree_.
        auto feasible(std::size_t index) -> bool
        {
            std::size_t remaining_edges = 0, remaining_vertices = 0;
            for (auto i = index; i < sizes_.size(); ++i) {
                remaining_edges += sizes_[i];
                remaining_vertices += sizes_[i] + 1;
            }
            std::size_t free_vertices = 0;
            ++epoch_;
            if (epoch_ == 0) {
                std::fill(stamp_.begin(), stamp_.end(), 0);
                epoch_ = 1;
            }
            std::size_t free_colors = 0;
            available_.clear();
            for (Vertex v = 0; v < adj_.order(); ++v) {
                available_degree_[v] = 0;
                if (used_vertex_[v])
                    continue;
                ++free_vertices;
                distinct_.clear();
                for (auto [to, color] : adj_.arcs[v]) {
                    if (used_vertex_[to] || used_color_[color])
                        continue;
                    distinct_.push_back(color);
                    if (stamp_[color] != epoch_) {
                        stamp_[color] = epoch_;
                        ++free_colors;
                    }
                    if (v < to)
                        available_.push_back({v, to, color});
                }
                std::sort(distinct_.begin(), distinct_.end());
                available_degree_[v] =
                    static_cast<std::size_t>(std::unique(distinct_.begin(), distinct_.end()) - distinct_.begin());
            }
            if (remaining_vertices > free_vertices || remaining_edges > free_colors)
                return false;

            // the j-th largest remaining star needs j candidate centers of enough color degree
            std::vector<std::size_t> degrees;
            for (Vertex v = 0; v < adj_.order(); ++v)
                if (! used_vertex_[v])
                    degrees.push_back(available_degree_[v]);
            std::sort(degrees.rbegin(), degrees.rend());
            for (auto i = index; i < sizes_.size(); ++i) {
                auto j = i - index;
                if (j >= degrees.size() || degrees[j] < sizes_[i])
                    return false;
            }

            auto components = sizes_.size() - index;
            return components <= 1 || components <= rainbow_cover_size(components);
        }

        // Greedy cover of the available edges by vertices and colors. Disjoint
        // edges of distinct colors need pairwise distinct cover elements, so the
        // cover size bounds the number of stars that can still be placed.
        auto rainbow_cover_size(std::size_t stop_at) -> std::size_t
        {
            std::size_t n = adj_.order();
            std::vector<char> covered(available_.size(), 0);
            std::size_t left = available_.size();
            std::size_t chosen = 0;
            std::vector<std::size_t> by_vertex(n), by_color(adj_.palette);
            while (left > 0) {
                if (chosen >= stop_at)
                    return chosen;
                std::fill(by_vertex.begin(), by_vertex.end(), 0);
                std::fill(by_color.begin(), by_color.end(), 0);
                for (std::size_t i = 0; i < available_.size(); ++i)
                    if (! covered[i]) {
                        ++by_vertex[available_[i].u];
                        ++by_vertex[available_[i].v];
                        ++by_color[available_[i].color];
                    }
                auto best_vertex = std::max_element(by_vertex.begin(), by_vertex.end());
                auto best_color = std::max_element(by_color.begin(), by_color.end());
                bool take_color = best_color != by_color.end() && *best_color > *best_vertex;
                for (std::size_t i = 0; i < available_.size(); ++i) {
                    if (covered[i])
                        continue;
                    auto & a = available_[i];
                    bool hit = take_color ? a.color == static_cast<Color>(best_color - by_color.begin())
                                          : (a.u == static_cast<Vertex>(best_vertex - by_vertex.begin()) ||
                                             a.v == static_cast<Vertex>(best_vertex - by_vertex.begin()));
                    if (hit) {
                        covered[i] = 1;
                        --left;
                    }
                }
                ++chosen;
            }
            return chosen;
        }

        struct AvailableEdge {
            Vertex u, v;
            Color color;
        };

        const ColoredAdjacency & adj_;
        const StarForest & forest_;
        SearchStats & stats_;
        std::vector<std::size_t> sizes_;
        std::vector<char> used_vertex_;
        std::vector<char> used_color_;
        std::vector<std::uint32_t> stamp_;
        std::uint32_t epoch_ = 0;
        std::vector<std::size_t> available_degree_;
        std::vector<Color> distinct_;
        std::vector<AvailableEdge> available_;
        std::vector<std::vector<Vertex>> parts_;
        std::vector<Edge> edges_;
    };

    class PathSearch {
    public:
        PathSearch(const ColoredAdjacency & adj, SearchStats & stats)
            : adj_(adj), stats_(stats), used_vertex_(adj.order(), 0), used_color_(adj.palette, 0)
        {
        }

        auto find(std::size_t length) -> std::optional<std::vector<Vertex>>
        {
            target_ = length;
            longest_mode_ = false;
            for (Vertex s = 0; s < adj_.order(); ++s) {
                path_ = {s};
                used_vertex_[s] = 1;
                bool found = extend();
                used_vertex_[s] = 0;
                if (found)
                    return path_;
            }
            return std::nullopt;
        }

        /// Longest rainbow path, stopping early once `ceiling` is reached.
        auto longest(std::size_t ceiling) -> std::vector<Vertex>
        {
            longest_mode_ = true;
            target_ = ceiling;
            best_.clear();
            for (Vertex s = 0; s < adj_.order() && (best_.empty() || best_.size() - 1 < ceiling); ++s) {
                if (adj_.arcs[s].empty())
                    continue;
                path_ = {s};
                used_vertex_[s] = 1;
                extend();
                used_vertex_[s] = 0;
            }
            return best_;
        }

    private:
        auto extend() -> bool
        {
            ++stats_.nodes_expanded;
            std::size_t length = path_.size() - 1;
            if (longest_mode_) {
                if (best_.empty() || length > best_.size() - 1)
                    best_ = path_;
                if (length >= target_)
                    return true;
                if (length + std::min(unused_vertices(), unused_colors()) <= best_.size() - 1)
                    return false;
            }
            else if (length == target_)
                return true;
            else if (target_ - length > unused_colors())
                return false;

            Vertex end = path_.back();
            for (auto [to, color] : adj_.arcs[end]) {
                if (used_vertex_[to] || used_color_[color])
                    continue;
                used_vertex_[to] = 1;
                used_color_[color] = 1;
                path_.push_back(to);
                ++used_color_count_;
                bool done = extend();
                --used_color_count_;
                path_.pop_back();
                used_color_[color] = 0;
                used_vertex_[to] = 0;
                if (done)
                    return true;
            }
            return false;
        }

        auto unused_vertices() const -> std::size_t { return adj_.order() - path_.size(); }
        auto unused_colors() const -> std::size_t { return adj_.palette - used_color_count_; }

        const ColoredAdjacency & adj_;
        SearchStats & stats_;
        std::vector<char> used_vertex_;
        std::vector<char> used_color_;
        std::size_t used_color_count_ = 0;
        std::vector<Vertex> path_;
        std::vector<Vertex> best_;
        std::size_t target_ = 0;
        bool longest_mode_ = false;
    };

    inline auto path_witness(std::vector<Vertex> vertices) -> Witness
    {
        Witness w;
        w.pattern = PathPattern{vertices.size() - 1};
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            w.edges.push_back(make_edge(vertices[i], vertices[i + 1]));
        w.parts = {std::move(vertices)};
        return w;
    }
}

/// Exhaustive: returns a witness iff `cg` contains a rainbow copy of `forest`.
inline auto find_rainbow_star_forest(const ColoredAdjacency & adj, const StarForest & forest, SearchStats & stats)
    -> std::optional<Witness>
{
    return detail::StarForestSearch(adj, forest, stats).run();
}

inline auto find_rainbow_star_forest(const ColoredGraph & cg, const StarForest & forest, SearchStats & stats)
    -> std::optional<Witness>
{
    return find_rainbow_star_forest(ColoredAdjacency(cg), forest, stats);
}

inline auto find_rainbow_star_forest(const ColoredGraph & cg, const StarForest & forest) -> std::optional<Witness>
{
    SearchStats stats;
    return find_rainbow_star_forest(cg, forest, stats);
}

/// Exhaustive: returns a witness iff a rainbow path with `length` edges exists.
inline auto find_rainbow_path(const ColoredAdjacency & adj, std::size_t length, SearchStats & stats)
    -> std::optional<Witness>
{
    if (length == 0)
        throw std::invalid_argument("path length must be at least 1");
    if (auto path = detail::PathSearch(adj, stats).find(length))
        return detail::path_witness(std::move(*path));
    return std::nullopt;
}

inline auto find_rainbow_path(const ColoredGraph & cg, std::size_t length, SearchStats & stats)
    -> std::optional<Witness>
{
    return find_rainbow_path(ColoredAdjacency(cg), length, stats);
}

inline auto find_rainbow_path(const ColoredGraph & cg, std::size_t length) -> std::optional<Witness>
{
    SearchStats stats;
    return find_rainbow_path(cg, length, stats);
}

inline auto find_rainbow(const ColoredAdjacency & adj, const Pattern & pattern, SearchStats & stats)
    -> std::optional<Witness>
{
    if (auto * forest = std::get_if<StarForest>(&pattern))
        return find_rainbow_star_forest(adj, *forest, stats);
    return find_rainbow_path(adj, std::get<PathPattern>(pattern).length, stats);
}

inline auto find_rainbow(const ColoredGraph & cg, const Pattern & pattern, SearchStats & stats)
    -> std::optional<Witness>
{
    return find_rainbow(ColoredAdjacency(cg), pattern, stats);
}

inline auto find_rainbow(const ColoredGraph & cg, const Pattern & pattern) -> std::optional<Witness>
{
    SearchStats stats;
    return find_rainbow(cg, pattern, stats);
}

/// Uncolored containment: a copy of the pattern exists iff a rainbow copy
/// exists when every edge has its own color.
inline auto find_copy(const Graph & g, const Pattern & pattern, SearchStats & stats) -> std::optional<Witness>
{
    return find_rainbow(distinct_coloring(g), pattern, stats);
}

inline auto find_copy(const Graph & g, const Pattern & pattern) -> std::optional<Witness>
{
    SearchStats stats;
    return find_copy(g, pattern, stats);
}

struct LongestRainbowPath {
    std::size_t length = 0;
    Witness witness;
};

/// Exact maximum rainbow path length. Ties go to the first path in
/// lexicographic order of vertex sequences. Throws on edgeless input.
inline auto longest_rainbow_path(const ColoredGraph & cg, SearchStats & stats) -> LongestRainbowPath
{
    if (cg.size() == 0)
        throw GraphError("longest rainbow path is undefined on an edgeless graph");
    auto ceiling = std::min(cg.order() - 1, cg.palette_size());
    auto best = detail::PathSearch(ColoredAdjacency(cg), stats).longest(ceiling);
    auto length = best.size() - 1;
    return {length, detail::path_witness(std::move(best))};
}

inline auto longest_rainbow_path(const ColoredGraph & cg) -> LongestRainbowPath
{
    SearchStats stats;
    return longest_rainbow_path(cg, stats);
}

/// Greedy heuristic from the matching argument: embeds the next unrealized
/// stars of `partial.pattern` (ascending size), one per center, taking at each
/// step the lowest-indexed neighbour that is unused, not a pending center, and
/// joined by an unused color. May fail where an exhaustive search succeeds.
inline auto greedy_star_extension(const ColoredGraph & cg, const std::vector<Vertex> & centers, const Witness & partial)
    -> std::optional<Witness>
{
    auto * forest = std::get_if<StarForest>(&partial.pattern);
    if (! forest)
        throw std::invalid_argument("greedy_star_extension needs a star-forest witness");
    if (auto defect = witness_defect(cg, partial, true, true))
        throw std::invalid_argument("partial witness is invalid: " + *defect);

    std::vector<char> used_vertex(cg.order(), 0);
    std::vector<char> used_color(cg.palette_size(), 0);
    for (const auto & part : partial.parts)
        for (auto v : part)
            used_vertex[v] = 1;
    for (auto e : partial.edges)
        used_color[*cg.color(e.u, e.v)] = 1;

    std::vector<char> pending(cg.order(), 0);
    for (auto c : centers) {
        if (c >= cg.order())
            throw std::invalid_argument("center " + std::to_string(c) + " not in graph");
        if (used_vertex[c])
            throw std::invalid_argument("center " + std::to_string(c) + " already used by the partial witness");
        if (pending[c])
            throw std::invalid_argument("center " + std::to_string(c) + " listed twice");
        pending[c] = 1;
    }

    // sizes not yet realized
    std::vector<std::size_t> remaining = forest->sizes();
    for (const auto & part : partial.parts)
        remaining.erase(std::find(remaining.begin(), remaining.end(), part.size() - 1));
    if (centers.size() > remaining.size())
        throw std::invalid_argument("more centers than unrealized stars");

    Witness result = partial;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        auto center = centers[i];
        pending[center] = 0;
        used_vertex[center] = 1;
        std::vector<Vertex> part{center};
        for (auto e : cg.graph().incident(center)) {
            if (part.size() == remaining[i] + 1)
                break;
            auto to = cg.graph().other(e, center);
            auto color = cg.color_of(e);
            if (used_vertex[to] || pending[to] || used_color[color])
                continue;
            used_vertex[to] = 1;
            used_color[color] = 1;
            part.push_back(to);
            result.edges.push_back(make_edge(center, to));
        }
        if (part.size() != remaining[i] + 1)
            return std::nullopt;
        result.parts.push_back(std::move(part));
    }
    return result;
}

} // namespace rtk
