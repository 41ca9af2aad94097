#pragma once

#include "rtk/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rtk {

/// Canonical byte string plus the vertex order (position -> original vertex) that produced it.
struct CanonicalForm {
    std::string key;
    std::vector<Vertex> order;
};

namespace detail {

    // Dense view used by the labeller: entry[u][v] is -1 for a non-edge, otherwise
    // the edge's color (0 everywhere for uncolored graphs).
    class Labeller {
    public:
        Labeller(std::size_t n, std::vector<std::vector<int>> entry, std::vector<int> class_size, bool colored)
            : n_(n), entry_(std::move(entry)), class_size_(std::move(class_size)), colored_(colored)
        {
        }

        auto run() -> CanonicalForm
        {
            std::vector<int> cells(n_, 0);
            refine(cells);
            search(cells);
            return {header() + best_, best_order_};
        }

    private:
        auto header() const -> std::string
        {
            std::string h;
            h.push_back(colored_ ? 'c' : 'g');
            for (int shift = 24; shift >= 0; shift -= 8)
                h.push_back(static_cast<char>((n_ >> shift) & 0xff));
            return h;
        }

        // Color refinement until the number of cells is stable. Signatures only use
        // label-independent data, so the resulting ordered partition is invariant.
        auto refine(std::vector<int> & cells) const -> void
        {
            using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
            auto count = [&] { return *std::max_element(cells.begin(), cells.end()) + 1; };
            int before = n_ ? count() : 0;
            std::vector<Signature> sig(n_);
            while (true) {
                for (std::size_t v = 0; v < n_; ++v) {
                    sig[v].first = cells[v];
                    sig[v].second.clear();
                    for (std::size_t w = 0; w < n_; ++w)
                        if (entry_[v][w] >= 0)
                            sig[v].second.emplace_back(cells[w], colored_ ? class_size_[entry_[v][w]] : 0);
                    std::sort(sig[v].second.begin(), sig[v].second.end());
                }
                auto sorted = sig;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                for (std::size_t v = 0; v < n_; ++v)
                    cells[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
                int after = static_cast<int>(sorted.size());
                if (after == before)
                    return;
                before = after;
            }
        }

        auto search(const std::vector<int> & cells) -> void
        {
            std::vector<int> size(n_, 0);
            for (auto c : cells)
                ++size[c];
            int target = -1;
            for (std::size_t c = 0; c < n_; ++c)
                if (size[c] > 1) {
                    target = static_cast<int>(c);
                    break;
                }
            if (target < 0) {
                leaf(cells);
                return;
            }
            for (std::size_t v = 0; v < n_; ++v) {
                if (cells[v] != target)
                    continue;
                std::vector<int> next(n_);
                for (std::size_t w = 0; w < n_; ++w)
                    next[w] = 2 * cells[w] + ((cells[w] == target && w != v) ? 1 : 0);
                auto sorted = next;
                std::sort(sorted.begin(), sorted.end());
                sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
                for (auto & c : next)
                    c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
                refine(next);
                search(next);
            }
        }

        auto leaf(const std::vector<int> & cells) -> void
        {
            std::vector<Vertex> order(n_);
            for (std::size_t v = 0; v < n_; ++v)
                order[cells[v]] = static_cast<Vertex>(v);
            std::string code;
            code.reserve(n_ * n_);
            std::vector<int> renamed(class_size_.size(), -1);
            int next_color = 0;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j) {
                    int e = entry_[order[i]][order[j]];
                    int symbol = 0;
                    if (e >= 0) {
                        if (colored_) {
                            if (renamed[e] < 0)
                                renamed[e] = next_color++;
                            symbol = 1 + renamed[e];
                        }
                        else
                            symbol = 1;
                    }
                    code.push_back(static_cast<char>((symbol >> 8) & 0xff));
                    code.push_back(static_cast<char>(symbol & 0xff));
                }
            if (! have_best_ || code < best_) {
                best_ = std::move(code);
                best_order_ = std::move(order);
                have_best_ = true;
            }
        }

        std::size_t n_;
        std::vector<std::vector<int>> entry_;
        std::vector<int> class_size_;
        bool colored_;
        bool have_best_ = false;
        std::string best_;
        std::vector<Vertex> best_order_;
    };

    inline auto dense_entries(const Graph & g) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> entry(g.order(), std::vector<int>(g.order(), -1));
        for (auto e : g.edges())
            entry[e.u][e.v] = entry[e.v][e.u] = 0;
        return entry;
    }
}

/// Equal keys iff the graphs are isomorphic. The search explores every leaf of
/// the individualization-refinement tree, so cost grows with the size of the
/// automorphism group; intended for n up to about 10.
inline auto canonical_form(const Graph & g) -> CanonicalForm
{
    return detail::Labeller(g.order(), detail::dense_entries(g), {1}, false).run();
}

/// Equal keys iff isomorphic as colored graphs, up to relabeling vertices and
/// renaming colors.
inline auto canonical_form(const ColoredGraph & cg) -> CanonicalForm
{
    auto entry = detail::dense_entries(cg.graph());
    std::vector<int> class_size(cg.palette_size(), 0);
    for (std::size_t i = 0; i < cg.size(); ++i) {
        auto e = cg.edges()[i];
        auto c = static_cast<int>(cg.color_of(i));
        entry[e.u][e.v] = entry[e.v][e.u] = c;
        ++class_size[c];
    }
    return detail::Labeller(cg.order(), std::move(entry), std::move(class_size), true).run();
}

inline auto canonical_key(const Graph & g) -> std::string { return canonical_form(g).key; }
inline auto canonical_key(const ColoredGraph & cg) -> std::string { return canonical_form(cg).key; }

/// The isomorphic copy of g whose vertex i is the i-th vertex of the canonical order.
inline auto canonical_relabel(const Graph & g) -> Graph
{
    auto form = canonical_form(g);
    std::vector<Vertex> position(g.order());
    for (std::size_t i = 0; i < form.order.size(); ++i)
        position[form.order[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto e : g.edges())
        edges.push_back(make_edge(position[e.u], position[e.v]));
    return Graph::from_edges(g.order(), std::move(edges));
}

} // namespace rtk
