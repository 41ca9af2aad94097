#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rtk {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

inline auto make_edge(Vertex a, Vertex b) -> Edge { return a < b ? Edge{a, b} : Edge{b, a}; }

inline auto to_string(const Edge & e) -> std::string { return std::to_string(e.u) + "-" + std::to_string(e.v); }

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a coloring gives two edges at the same vertex the same color.
class ImproperColoring : public GraphError {
public:
    ImproperColoring(Vertex vertex, Edge first, Edge second)
        : GraphError("improper coloring at vertex " + std::to_string(vertex) + ": edges " + rtk::to_string(first) +
                     " and " + rtk::to_string(second) + " share a color"),
          vertex_(vertex), first_(first), second_(second)
    {
    }

    auto vertex() const -> Vertex { return vertex_; }
    auto first() const -> Edge { return first_; }
    auto second() const -> Edge { return second_; }

private:
    Vertex vertex_;
    Edge first_;
    Edge second_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on self-loops, duplicates or out-of-range endpoints.
    static auto build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & pairs) -> Graph
    {
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (auto [a, b] : pairs)
            edges.push_back(Edge{a, b});
        return from_edges(n, std::move(edges));
    }

    static auto from_edges(std::size_t n, std::vector<Edge> edges) -> Graph
    {
        Graph g;
        g.n_ = n;
        for (auto & e : edges) {
            if (e.u >= n || e.v >= n)
                throw GraphError("edge " + to_string(e) + " has an endpoint outside [0, " + std::to_string(n) + ")");
            if (e.u == e.v)
                throw GraphError("self-loop at vertex " + std::to_string(e.u));
            e = make_edge(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        auto dup = std::adjacent_find(edges.begin(), edges.end());
        if (dup != edges.end())
            throw GraphError("duplicate edge " + to_string(*dup));

        g.edges_ = std::move(edges);
        g.adjacency_.assign(n, boost::dynamic_bitset<>(n));
        g.incident_.assign(n, {});
        for (std::size_t i = 0; i < g.edges_.size(); ++i) {
            auto [u, v] = g.edges_[i];
            g.adjacency_[u].set(v);
            g.adjacency_[v].set(u);
            g.incident_[u].push_back(static_cast<std::uint32_t>(i));
            g.incident_[v].push_back(static_cast<std::uint32_t>(i));
        }
        // incident_ lists come out sorted by neighbour since edges_ is lexicographic
        return g;
    }

    static auto complete(std::size_t n) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return from_edges(n, std::move(edges));
    }

    auto order() const -> std::size_t { return n_; }
    auto size() const -> std::size_t { return edges_.size(); }
    auto edges() const -> const std::vector<Edge> & { return edges_; }
    auto edge(std::size_t i) const -> Edge { return edges_[i]; }

    auto adjacent(Vertex a, Vertex b) const -> bool { return a < n_ && b < n_ && adjacency_[a].test(b); }
    auto neighbourhood(Vertex v) const -> const boost::dynamic_bitset<> & { return adjacency_[v]; }
    auto degree(Vertex v) const -> std::size_t { return incident_[v].size(); }

    /// Edge indices at v, ordered by the other endpoint.
    auto incident(Vertex v) const -> const std::vector<std::uint32_t> & { return incident_[v]; }

    auto other(std::uint32_t edge_index, Vertex v) const -> Vertex
    {
        const auto & e = edges_[edge_index];
        return e.u == v ? e.v : e.u;
    }

    auto edge_index(Vertex a, Vertex b) const -> std::optional<std::size_t>
    {
        auto e = make_edge(a, b);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return std::nullopt;
        return static_cast<std::size_t>(it - edges_.begin());
    }

    /// Throws GraphError on the vertexless graph.
    auto min_degree() const -> std::size_t
    {
        require_vertices("minimum degree");
        std::size_t d = std::numeric_limits<std::size_t>::max();
        for (Vertex v = 0; v < n_; ++v)
            d = std::min(d, degree(v));
        return d;
    }

    auto max_degree() const -> std::size_t
    {
        std::size_t d = 0;
        for (Vertex v = 0; v < n_; ++v)
            d = std::max(d, degree(v));
        return d;
    }

    auto degrees() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result(n_);
        for (Vertex v = 0; v < n_; ++v)
            result[v] = degree(v);
        return result;
    }

    auto operator==(const Graph & other) const -> bool { return n_ == other.n_ && edges_ == other.edges_; }

private:
    auto require_vertices(const char * what) const -> void
    {
        if (n_ == 0)
            throw GraphError(std::string(what) + " is undefined on the graph with no vertices");
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<boost::dynamic_bitset<>> adjacency_;
    std::vector<std::vector<std::uint32_t>> incident_;
};

/// Renames colors to 0,1,2,... in order of first appearance along the given sequence.
inline auto normalize_colors(const std::vector<Color> & colors) -> std::vector<Color>
{
    std::vector<Color> result(colors.size());
    std::unordered_map<Color, Color> renamed;
    for (std::size_t i = 0; i < colors.size(); ++i) {
        result[i] = renamed.try_emplace(colors[i], static_cast<Color>(renamed.size())).first->second;
    }
    return result;
}

/// Graph with one color per edge. Colors are stored normalized in first-use order
/// along the lexicographic edge list, so the palette is always 0..palette_size()-1.
/// Properness is checked by assign_colors; general (possibly improper) colorings
/// come from assign_general_colors.
class ColoredGraph {
public:
    ColoredGraph() = default;

    auto graph() const -> const Graph & { return graph_; }
    auto order() const -> std::size_t { return graph_.order(); }
    auto size() const -> std::size_t { return graph_.size(); }
    auto edges() const -> const std::vector<Edge> & { return graph_.edges(); }
    auto colors() const -> const std::vector<Color> & { return colors_; }
    auto color_of(std::size_t edge_index) const -> Color { return colors_[edge_index]; }
    auto palette_size() const -> std::size_t { return palette_; }
    auto is_proper() const -> bool { return proper_; }

    auto color(Vertex a, Vertex b) const -> std::optional<Color>
    {
        auto i = graph_.edge_index(a, b);
        if (! i)
            return std::nullopt;
        return colors_[*i];
    }

    auto operator==(const ColoredGraph & other) const -> bool
    {
        return graph_ == other.graph_ && colors_ == other.colors_;
    }

    friend auto assign_colors(Graph g, const std::vector<Color> & colors) -> ColoredGraph;
    friend auto assign_general_colors(Graph g, const std::vector<Color> & colors) -> ColoredGraph;

private:
    Graph graph_;
    std::vector<Color> colors_;
    std::size_t palette_ = 0;
    bool proper_ = true;
};

/// First pair of same-colored edges sharing a vertex, if any.
inline auto find_color_clash(const Graph & g, const std::vector<Color> & colors)
    -> std::optional<std::tuple<Vertex, Edge, Edge>>
{
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto & inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (colors[inc[i]] == colors[inc[j]])
                    return std::tuple{v, g.edge(inc[i]), g.edge(inc[j])};
    }
    return std::nullopt;
}

/// `colors[i]` colors `g.edge(i)`. Throws ImproperColoring naming the offending vertex.
inline auto assign_colors(Graph g, const std::vector<Color> & colors) -> ColoredGraph
{
    if (colors.size() != g.size())
        throw GraphError("coloring has " + std::to_string(colors.size()) + " entries for " +
                         std::to_string(g.size()) + " edges");
    if (auto clash = find_color_clash(g, colors))
        throw ImproperColoring(std::get<0>(*clash), std::get<1>(*clash), std::get<2>(*clash));
    ColoredGraph cg;
    cg.colors_ = normalize_colors(colors);
    cg.palette_ = cg.colors_.empty() ? 0 : *std::max_element(cg.colors_.begin(), cg.colors_.end()) + 1;
    cg.graph_ = std::move(g);
    cg.proper_ = true;
    return cg;
}

inline auto assign_general_colors(Graph g, const std::vector<Color> & colors) -> ColoredGraph
{
    if (colors.size() != g.size())
        throw GraphError("coloring has " + std::to_string(colors.size()) + " entries for " +
                         std::to_string(g.size()) + " edges");
    ColoredGraph cg;
    cg.proper_ = ! find_color_clash(g, colors).has_value();
    cg.colors_ = normalize_colors(colors);
    cg.palette_ = cg.colors_.empty() ? 0 : *std::max_element(cg.colors_.begin(), cg.colors_.end()) + 1;
    cg.graph_ = std::move(g);
    return cg;
}

/// Keyed by edge instead of by edge index.
inline auto assign_colors(Graph g, const std::vector<std::pair<Edge, Color>> & coloring) -> ColoredGraph
{
    std::vector<Color> colors(g.size());
    std::vector<bool> seen(g.size(), false);
    for (auto [e, c] : coloring) {
        auto i = g.edge_index(e.u, e.v);
        if (! i)
            throw GraphError("coloring names non-edge " + to_string(e));
        colors[*i] = c;
        seen[*i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (! seen[i])
            throw GraphError("edge " + to_string(g.edge(i)) + " has no color");
    return assign_colors(std::move(g), colors);
}

/// Every edge gets its own color. Uncolored containment questions reduce to
/// rainbow containment in this coloring.
inline auto distinct_coloring(Graph g) -> ColoredGraph
{
    std::vector<Color> colors(g.size());
    for (std::size_t i = 0; i < colors.size(); ++i)
        colors[i] = static_cast<Color>(i);
    return assign_colors(std::move(g), colors);
}

/// Smallest legal color per edge in lexicographic edge order, starting from `first_color`.
inline auto greedy_proper_coloring(const Graph & g, Color first_color = 0) -> std::vector<Color>
{
    std::vector<Color> colors(g.size());
    std::vector<std::vector<Color>> at(g.order());
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto [u, v] = g.edge(i);
        Color c = first_color;
        auto taken = [&](Color x) {
            return std::find(at[u].begin(), at[u].end(), x) != at[u].end() ||
                   std::find(at[v].begin(), at[v].end(), x) != at[v].end();
        };
        while (taken(c))
            ++c;
        colors[i] = c;
        at[u].push_back(c);
        at[v].push_back(c);
    }
    return colors;
}

/// Minimum over vertices of the number of distinct colors on incident edges.
/// With `proper_required`, improper inputs are rejected. Throws on the vertexless graph.
inline auto min_color_degree(const ColoredGraph & cg, bool proper_required) -> std::size_t
{
    if (proper_required && ! cg.is_proper())
        throw GraphError("min_color_degree: coloring is not proper");
    if (cg.order() == 0)
        throw GraphError("color degree is undefined on the graph with no vertices");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<Color> seen;
    for (Vertex v = 0; v < cg.order(); ++v) {
        seen.clear();
        for (auto i : cg.graph().incident(v))
            seen.push_back(cg.color_of(i));
        std::sort(seen.begin(), seen.end());
        auto distinct = static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
        best = std::min(best, distinct);
    }
    return best;
}

/// Induced subgraph together with the original label of each of its vertices.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> vertices;
};

inline auto induced_subgraph(const Graph & g, const std::vector<Vertex> & keep) -> InducedSubgraph
{
    std::vector<std::int64_t> position(g.order(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        position[keep[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (auto e : g.edges())
        if (position[e.u] >= 0 && position[e.v] >= 0)
            edges.push_back(make_edge(static_cast<Vertex>(position[e.u]), static_cast<Vertex>(position[e.v])));
    return {Graph::from_edges(keep.size(), std::move(edges)), keep};
}

/// Repeatedly deletes a minimum-degree vertex while that degree is at most d.
/// The survivor (possibly empty) has minimum degree >= d + 1; it is non-empty
/// whenever the average degree of g exceeds 2d.
inline auto peel_to_min_degree(const Graph & g, std::size_t d) -> InducedSubgraph
{
    std::vector<std::size_t> deg = g.degrees();
    std::vector<bool> alive(g.order(), true);
    std::size_t remaining = g.order();
    while (remaining > 0) {
        Vertex victim = 0;
        std::size_t low = std::numeric_limits<std::size_t>::max();
        for (Vertex v = 0; v < g.order(); ++v)
            if (alive[v] && deg[v] < low) {
                low = deg[v];
                victim = v;
            }
        if (low > d)
            break;
        alive[victim] = false;
        --remaining;
        for (auto i : g.incident(victim)) {
            auto w = g.other(i, victim);
            if (alive[w])
                --deg[w];
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (alive[v])
            keep.push_back(v);
    return induced_subgraph(g, keep);
}

} // namespace rtk
