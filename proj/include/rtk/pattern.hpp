#pragma once

#include "rtk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rtk {

class PatternError : public std::invalid_argument {
public:
    explicit PatternError(const std::string & what)
        : std::invalid_argument(what + " (grammar: M<k> | S<a,b,c,...> | P<l>, e.g. M2, S1,2,3, P4)")
    {
    }
};

/// Vertex-disjoint union of stars, sizes kept in non-decreasing order.
class StarForest {
public:
    explicit StarForest(std::vector<std::size_t> sizes) : sizes_(std::move(sizes))
    {
        if (sizes_.empty())
            throw PatternError("a star forest needs at least one star");
        if (std::any_of(sizes_.begin(), sizes_.end(), [](auto s) { return s == 0; }))
            throw PatternError("star sizes must be positive");
        std::sort(sizes_.begin(), sizes_.end());
    }

    static auto matching(std::size_t k) -> StarForest { return StarForest(std::vector<std::size_t>(k, 1)); }

    auto sizes() const -> const std::vector<std::size_t> & { return sizes_; }
    auto components() const -> std::size_t { return sizes_.size(); }
    auto total_edges() const -> std::size_t { return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0}); }
    auto smallest() const -> std::size_t { return sizes_.front(); }

    auto count_of_size_one() const -> std::size_t { return static_cast<std::size_t>(std::count(sizes_.begin(), sizes_.end(), 1u)); }
    auto count_of_size_two() const -> std::size_t { return static_cast<std::size_t>(std::count(sizes_.begin(), sizes_.end(), 2u)); }
    auto count_of_size_three_plus() const -> std::size_t
    {
        return components() - count_of_size_one() - count_of_size_two();
    }

    auto is_matching() const -> bool { return sizes_.back() == 1; }

    auto operator==(const StarForest &) const -> bool = default;

private:
    std::vector<std::size_t> sizes_;
};

/// Path with `length` edges.
struct PathPattern {
    std::size_t length = 1;

    auto operator==(const PathPattern &) const -> bool = default;
};

using Pattern = std::variant<StarForest, PathPattern>;

inline auto pattern_edges(const Pattern & p) -> std::size_t
{
    if (auto * f = std::get_if<StarForest>(&p))
        return f->total_edges();
    return std::get<PathPattern>(p).length;
}

inline auto pattern_vertices(const Pattern & p) -> std::size_t
{
    if (auto * f = std::get_if<StarForest>(&p))
        return f->total_edges() + f->components();
    return std::get<PathPattern>(p).length + 1;
}

namespace detail {
    inline auto parse_count(std::string_view text, const std::string & whole) -> std::size_t
    {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
            throw PatternError("cannot read a count from '" + std::string(text) + "' in pattern '" + whole + "'");
        return value;
    }
}

inline auto parse_star_forest_sizes(std::string_view body, const std::string & whole) -> StarForest
{
    std::vector<std::size_t> sizes;
    std::size_t start = 0;
    while (true) {
        auto comma = body.find(',', start);
        sizes.push_back(detail::parse_count(body.substr(start, comma - start), whole));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return StarForest(std::move(sizes));
}

inline auto parse_pattern(const std::string & text) -> Pattern
{
    if (text.size() < 2)
        throw PatternError("malformed pattern '" + text + "'");
    auto body = std::string_view(text).substr(1);
    switch (text[0]) {
    case 'M': case 'm': {
        auto k = detail::parse_count(body, text);
        if (k == 0)
            throw PatternError("a matching needs at least one edge");
        return StarForest::matching(k);
    }
    case 'S': case 's':
        return parse_star_forest_sizes(body, text);
    case 'P': case 'p': {
        auto l = detail::parse_count(body, text);
        if (l == 0)
            throw PatternError("a path needs at least one edge");
        return PathPattern{l};
    }
    default:
        throw PatternError("unknown pattern kind '" + std::string(1, text[0]) + "'");
    }
}

inline auto to_string(const StarForest & f) -> std::string
{
    if (f.is_matching())
        return "M" + std::to_string(f.components());
    std::string out = "S";
    for (std::size_t i = 0; i < f.sizes().size(); ++i)
        out += (i ? "," : "") + std::to_string(f.sizes()[i]);
    return out;
}

inline auto to_string(const Pattern & p) -> std::string
{
    if (auto * f = std::get_if<StarForest>(&p))
        return to_string(*f);
    return "P" + std::to_string(std::get<PathPattern>(p).length);
}

/// Certificate for a (rainbow) copy of a pattern. For a star forest, `parts[i]`
/// is {center, leaves...} of the i-th embedded star, in embedding order. For a
/// path, `parts` holds the single vertex sequence.
struct Witness {
    Pattern pattern = PathPattern{1};
    std::vector<std::vector<Vertex>> parts;
    std::vector<Edge> edges;

    auto operator==(const Witness &) const -> bool = default;
};

/// Empty when the witness is a valid embedding in `host`; otherwise the first defect.
/// With `allow_prefix`, a star-forest witness may realize only some of the stars.
inline auto witness_defect(const ColoredGraph & host, const Witness & w, bool require_rainbow = true,
                           bool allow_prefix = false) -> std::optional<std::string>
{
    std::set<Vertex> vertices;
    std::vector<Edge> expected_edges;
    std::size_t vertex_count = 0;
    for (const auto & part : w.parts)
        for (auto v : part) {
            if (v >= host.order())
                return "vertex " + std::to_string(v) + " not in host";
            vertices.insert(v);
            ++vertex_count;
        }
    if (vertices.size() != vertex_count)
        return std::string("vertex map is not injective");

    if (auto * forest = std::get_if<StarForest>(&w.pattern)) {
        if (w.parts.size() > forest->components() || (! allow_prefix && w.parts.size() != forest->components()))
            return "expected " + std::to_string(forest->components()) + " stars, got " + std::to_string(w.parts.size());
        std::vector<std::size_t> got;
        for (const auto & part : w.parts) {
            if (part.size() < 2)
                return std::string("star with no leaves");
            got.push_back(part.size() - 1);
            for (std::size_t i = 1; i < part.size(); ++i)
                expected_edges.push_back(make_edge(part[0], part[i]));
        }
        // realized sizes must be a sub-multiset of the pattern's sizes
        std::sort(got.begin(), got.end());
        auto want = forest->sizes();
        std::vector<std::size_t> common;
        std::set_intersection(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(common));
        if (common.size() != got.size())
            return std::string("star sizes do not match the pattern");
    }
    else {
        auto length = std::get<PathPattern>(w.pattern).length;
        if (w.parts.size() != 1 || w.parts[0].size() != length + 1)
            return "expected one path on " + std::to_string(length + 1) + " vertices";
        for (std::size_t i = 0; i + 1 < w.parts[0].size(); ++i)
            expected_edges.push_back(make_edge(w.parts[0][i], w.parts[0][i + 1]));
    }

    auto listed = w.edges;
    std::sort(listed.begin(), listed.end());
    auto sorted_expected = expected_edges;
    std::sort(sorted_expected.begin(), sorted_expected.end());
    if (listed != sorted_expected)
        return std::string("edge list does not match the vertex map");

    std::set<Color> colors;
    for (auto e : expected_edges) {
        auto c = host.color(e.u, e.v);
        if (! c)
            return "edge " + to_string(e) + " not in host";
        colors.insert(*c);
    }
    if (require_rainbow && colors.size() != expected_edges.size())
        return std::string("edge colors are not pairwise distinct");
    return std::nullopt;
}

} // namespace rtk
