#pragma once

#include "rtk/coloring_search.hpp"
#include "rtk/graph.hpp"
#include "rtk/pattern.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtk {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using Count = std::uint64_t;

inline auto choose2(Count x) -> Count { return x < 2 ? 0 : x * (x - 1) / 2; }

/// Palette budget of the inner graph: (sum of the k - c smallest star sizes) - 1.
inline auto f_value(const StarForest & forest, std::size_t c) -> Count
{
    auto k = forest.components();
    if (c >= k)
        throw ParameterError("f(c) needs 0 <= c <= k-1, got c=" + std::to_string(c) + ", k=" + std::to_string(k));
    Count sum = 0;
    for (std::size_t i = 0; i < k - c; ++i)
        sum += forest.sizes()[i];
    return sum - 1;
}

/// A k-clique completely joined to n-k independent vertices (clique on 0..k-1).
inline auto split_graph(std::size_t n, std::size_t k) -> Graph
{
    if (k > n)
        throw ParameterError("split_graph needs k <= n");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

namespace detail {
    // Rounds of the circle-method schedule on m vertices (m even: 1-factorization
    // of K_m; m odd: near-1-factorization, the bye vertex sits out).
    inline auto round_robin_rounds(std::size_t m, std::size_t rounds) -> std::vector<std::vector<Edge>>
    {
        std::size_t even = m % 2 == 0 ? m : m + 1;
        std::vector<std::vector<Edge>> result;
        if (even < 2)
            return result;
        auto fixed = static_cast<Vertex>(even - 1);
        auto ring = even - 1;
        for (std::size_t r = 0; r < rounds; ++r) {
            std::vector<Edge> matching;
            auto add = [&](std::size_t a, std::size_t b) {
                if (a < m && b < m)
                    matching.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
            };
            add(r, fixed);
            for (std::size_t i = 1; i < even / 2; ++i)
                add((r + i) % ring, (r + ring - i) % ring);
            result.push_back(std::move(matching));
        }
        return result;
    }
}

/// m vertices, f colors, each color class a maximum matching (floor(m/2) edges).
inline auto edge_maximal_colorable(std::size_t m, std::size_t f) -> ColoredGraph
{
    if (m == 0)
        throw ParameterError("edge_maximal_colorable needs m >= 1");
    if (f + 1 > m)
        throw ParameterError("edge_maximal_colorable needs f <= m-1 (m=" + std::to_string(m) + ", f=" +
                             std::to_string(f) + ")");
    std::vector<std::pair<Edge, Color>> coloring;
    std::vector<Edge> edges;
    auto rounds = detail::round_robin_rounds(m, f);
    for (std::size_t r = 0; r < rounds.size(); ++r)
        for (auto e : rounds[r]) {
            edges.push_back(e);
            coloring.emplace_back(e, static_cast<Color>(r));
        }
    return assign_colors(Graph::from_edges(m, std::move(edges)), coloring);
}

/// Circulant with floor(m*d/2) edges: d-regular when m*d is even, otherwise one
/// vertex has degree d-1.
inline auto edge_maximal_bounded_degree(std::size_t m, std::size_t d) -> Graph
{
    if (m == 0 ? d != 0 : d + 1 > m)
        throw ParameterError("edge_maximal_bounded_degree needs 0 <= d <= m-1 (m=" + std::to_string(m) + ", d=" +
                             std::to_string(d) + ")");
    std::vector<Edge> edges;
    auto reach = d / 2;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t step = 1; step <= reach; ++step) {
            auto j = (i + step) % m;
            edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)));
        }
    if (d % 2 == 1) {
        if (m % 2 == 0) {
            for (std::size_t i = 0; i < m / 2; ++i)
                edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + m / 2)));
        }
        else {
            // offset (m-1)/2 walks a Hamiltonian cycle; every other edge of it is a
            // near-perfect matching disjoint from the shorter offsets
            auto stride = (m - 1) / 2;
            for (std::size_t j = 0; j + 1 < m; j += 2)
                edges.push_back(make_edge(static_cast<Vertex>((j * stride) % m),
                                          static_cast<Vertex>(((j + 1) * stride) % m)));
        }
    }
    return Graph::from_edges(m, std::move(edges));
}

namespace detail {
    // Adds `c` universal vertices in front of `inner` (inner vertex i becomes c + i).
    // Join edges take fresh colors from `first_fresh` upward, assigned greedily.
    inline auto add_universal(const Graph & inner, const std::vector<Color> & inner_colors, std::size_t c,
                              Color first_fresh) -> std::pair<Graph, std::vector<Color>>
    {
        auto n = inner.order() + c;
        std::vector<Edge> edges;
        for (Vertex u = 0; u < c; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        std::size_t join_count = edges.size();
        for (auto e : inner.edges())
            edges.push_back({static_cast<Vertex>(e.u + c), static_cast<Vertex>(e.v + c)});

        auto join = Graph::from_edges(n, std::vector<Edge>(edges.begin(), edges.begin() + join_count));
        auto join_colors = greedy_proper_coloring(join, first_fresh);

        std::vector<Color> colors(join_colors);
        colors.insert(colors.end(), inner_colors.begin(), inner_colors.end());
        // from_edges sorts; carry colors along
        std::vector<std::pair<Edge, Color>> keyed;
        for (std::size_t i = 0; i < edges.size(); ++i)
            keyed.emplace_back(edges[i], colors[i]);
        std::sort(keyed.begin(), keyed.end());
        std::vector<Edge> sorted_edges;
        std::vector<Color> sorted_colors;
        for (auto & [e, col] : keyed) {
            sorted_edges.push_back(e);
            sorted_colors.push_back(col);
        }
        return {Graph::from_edges(n, std::move(sorted_edges)), std::move(sorted_colors)};
    }
}

/// Rainbow-F-free construction: c universal vertices (0..c-1) over an inner graph H.
/// For c <= k-2, H is edge-maximal f(c)-edge-colorable on n-c vertices; for
/// c = k-1, H is edge-maximal of maximum degree e(S_1)-1, greedily colored.
inline auto h_construction(const StarForest & forest, std::size_t n, std::size_t c) -> ColoredGraph
{
    auto k = forest.components();
    if (c >= k)
        throw ParameterError("h_construction needs 0 <= c <= k-1");
    if (n < c)
        throw ParameterError("h_construction needs n >= c");
    auto m = n - c;
    Graph inner;
    std::vector<Color> inner_colors;
    if (c + 2 <= k) {
        auto f = f_value(forest, c);
        if (m < f + 1)
            throw ParameterError("h_construction needs n - c >= f(c) + 1 = " + std::to_string(f + 1));
        auto h = edge_maximal_colorable(m, f);
        inner = h.graph();
        inner_colors = h.colors();
    }
    else {
        auto d = forest.smallest() - 1;
        if (m < d + 1 || m == 0)
            throw ParameterError("h_construction needs n - k + 1 >= e(S_1) = " + std::to_string(d + 1));
        inner = edge_maximal_bounded_degree(m, d);
        inner_colors = greedy_proper_coloring(inner);
    }
    Color fresh = inner_colors.empty() ? 0 : *std::max_element(inner_colors.begin(), inner_colors.end()) + 1;
    auto [g, colors] = detail::add_universal(inner, inner_colors, c, fresh);
    return assign_colors(std::move(g), colors);
}

/// Closed-form edge count of h_construction.
inline auto h_edge_count(const StarForest & forest, Count n, std::size_t c) -> Count
{
    auto k = forest.components();
    if (c >= k)
        throw ParameterError("h_edge_count needs 0 <= c <= k-1");
    if (n < c)
        throw ParameterError("h_edge_count needs n >= c");
    if (c + 1 == k)
        return choose2(k - 1) + (k - 1) * (n - k + 1) + (forest.smallest() - 1) * (n - k + 1) / 2;
    return choose2(c) + c * (n - c) + f_value(forest, c) * ((n - c) / 2);
}

/// Smallest n for which h_construction(forest, n, c) is defined.
inline auto h_min_order(const StarForest & forest, std::size_t c) -> Count
{
    auto k = forest.components();
    if (c + 1 == k)
        return std::max<Count>(c + forest.smallest(), c + 1);
    return c + f_value(forest, c) + 1;
}

/// The c in [0, k-1] maximizing h_edge_count; ties go to the smaller c.
inline auto best_c(const StarForest & forest, Count n) -> std::size_t
{
    std::size_t best = 0;
    Count best_count = h_edge_count(forest, n, 0);
    for (std::size_t c = 1; c < forest.components(); ++c) {
        auto count = h_edge_count(forest, n, c);
        if (count > best_count) {
            best_count = count;
            best = c;
        }
    }
    return best;
}

/// Case analysis for large n: with no star of size 1 the answer is c = 0;
/// otherwise compare twice the coefficient of n at c = 0 (e(F) - 1) against
/// c = k-1 (2(k-1) + e(S_1) - 1), falling back to the exact counts on a tie.
inline auto predicted_best_c(const StarForest & forest, Count n) -> std::size_t
{
    auto k = forest.components();
    if (forest.count_of_size_one() == 0 || k == 1)
        return 0;
    Count at_zero = forest.total_edges() - 1;
    Count at_last = 2 * (k - 1) + forest.smallest() - 1;
    if (at_zero != at_last)
        return at_last > at_zero ? k - 1 : 0;
    return h_edge_count(forest, n, k - 1) > h_edge_count(forest, n, 0) ? k - 1 : 0;
}

/// Smallest n0 <= n_max such that best_c(forest, n) is 0 or k-1 for every n in
/// [n0, n_max]; empty when it fails at n_max itself.
inline auto best_c_threshold(const StarForest & forest, Count n_max) -> std::optional<Count>
{
    auto k = forest.components();
    std::optional<Count> threshold;
    for (Count n = n_max + 1; n-- > k;) {
        auto c = best_c(forest, n);
        if (c != 0 && c + 1 != k)
            break;
        threshold = n;
    }
    return threshold;
}

/// i universal vertices joined to an edge-maximal graph of maximum degree e(S_{k-i}) - 1.
inline auto h_prime_construction(const StarForest & forest, std::size_t n, std::size_t i) -> Graph
{
    auto k = forest.components();
    if (i >= k)
        throw ParameterError("h_prime_construction needs 0 <= i <= k-1");
    auto star = forest.sizes()[k - i - 1];
    if (n < i + std::max<std::size_t>(star, 1))
        throw ParameterError("h_prime_construction needs n - i >= e(S_{k-i}) = " + std::to_string(star));
    auto inner = edge_maximal_bounded_degree(n - i, star - 1);
    auto [g, colors] = detail::add_universal(inner, std::vector<Color>(inner.size(), 0), i, 1);
    return g;
}

inline auto h_prime_edge_count(const StarForest & forest, Count n, std::size_t i) -> Count
{
    auto k = forest.components();
    if (i >= k)
        throw ParameterError("h_prime_edge_count needs 0 <= i <= k-1");
    if (n < i)
        throw ParameterError("h_prime_edge_count needs n >= i");
    Count star = forest.sizes()[k - i - 1];
    return i * (n - i) + choose2(i) + (star - 1) * (n - i) / 2;
}

inline auto h_prime_min_order(const StarForest & forest, std::size_t i) -> Count
{
    return i + std::max<Count>(forest.sizes()[forest.components() - i - 1], 1);
}

/// Maximum of the h_prime_edge_count over 0 <= i <= k-1.
inline auto llp_bound(const StarForest & forest, Count n) -> Count
{
    auto k = forest.components();
    if (n < k)
        throw ParameterError("llp_bound needs n >= k");
    Count best = 0;
    for (std::size_t i = 0; i < k; ++i)
        best = std::max(best, h_prime_edge_count(forest, n, i));
    return best;
}

/// max{ C(k-1,2) + (k-1)(n-k+1), C(2k-1,2) }.
inline auto eg_matching_bound(Count n, Count k) -> Count
{
    if (n == 0 || k == 0)
        throw ParameterError("eg_matching_bound needs n >= 1 and k >= 1");
    Count split = n + 1 >= k ? choose2(k - 1) + (k - 1) * (n - k + 1) : 0;
    return std::max(split, choose2(2 * k - 1));
}

/// n/4 disjoint K_4, each properly 3-colored by its three perfect matchings.
inline auto k4_union(std::size_t n) -> ColoredGraph
{
    if (n % 4 != 0 || n == 0)
        throw ParameterError("k4_union needs n divisible by 4");
    std::vector<std::pair<Edge, Color>> coloring;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < n / 4; ++b) {
        auto base = static_cast<Vertex>(4 * b);
        auto palette = static_cast<Color>(3 * b);
        const std::pair<Edge, Color> block[] = {
            {{0, 1}, 0}, {{2, 3}, 0}, {{0, 2}, 1}, {{1, 3}, 1}, {{0, 3}, 2}, {{1, 2}, 2}};
        for (auto [e, c] : block) {
            Edge shifted{e.u + base, e.v + base};
            edges.push_back(shifted);
            coloring.emplace_back(shifted, palette + c);
        }
    }
    return assign_colors(Graph::from_edges(n, std::move(edges)), coloring);
}

/// n/8 disjoint K_{4,4}; within a block, color(u_i, v_j) = i XOR j.
/// Block b has u_i = 8b + i and v_j = 8b + 4 + j.
inline auto k44_union(std::size_t n) -> ColoredGraph
{
    if (n % 8 != 0 || n == 0)
        throw ParameterError("k44_union needs n divisible by 8");
    std::vector<std::pair<Edge, Color>> coloring;
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < n / 8; ++b)
        for (Vertex i = 0; i < 4; ++i)
            for (Vertex j = 0; j < 4; ++j) {
                Edge e{static_cast<Vertex>(8 * b + i), static_cast<Vertex>(8 * b + 4 + j)};
                edges.push_back(e);
                coloring.emplace_back(e, static_cast<Color>(4 * b + (i ^ j)));
            }
    return assign_colors(Graph::from_edges(n, std::move(edges)), coloring);
}

/// K_{2^k} on {0,1}^k with color(u, v) = u XOR v; each class is a perfect matching.
inline auto boolean_cube_clique(std::size_t k) -> ColoredGraph
{
    if (k == 0 || k > 12)
        throw ParameterError("boolean_cube_clique needs 1 <= k <= 12");
    auto n = std::size_t{1} << k;
    auto g = Graph::complete(n);
    std::vector<Color> colors;
    for (auto e : g.edges())
        colors.push_back(static_cast<Color>((e.u ^ e.v) - 1));
    return assign_colors(std::move(g), colors);
}

/// Largest clique the exhaustive clique search accepts.
inline constexpr std::size_t rainbow_free_clique_cap = 9;

/// A proper coloring of K_c with no rainbow P_l, or empty when none exists.
/// Throws ResourceLimit above the cap or when the budget runs out.
inline auto rainbow_free_clique_search(std::size_t c, std::size_t l, const SearchLimits & limits,
                                       SearchStats & stats) -> std::optional<ColoredGraph>
{
    if (c < 2 || l < 1)
        throw ParameterError("rainbow_free_clique_search needs c >= 2 and l >= 1");
    if (c > rainbow_free_clique_cap)
        throw ResourceLimit("rainbow_free_clique_search: K_" + std::to_string(c) + " is above the cap of " +
                            std::to_string(rainbow_free_clique_cap) + " vertices");
    return exists_rainbow_free_coloring(Graph::complete(c), PathPattern{l}, limits, stats);
}

inline auto rainbow_free_clique_search(std::size_t c, std::size_t l, const SearchLimits & limits = {})
    -> std::optional<ColoredGraph>
{
    SearchStats stats;
    return rainbow_free_clique_search(c, l, limits, stats);
}

} // namespace rtk
