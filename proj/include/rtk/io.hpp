#pragma once

#include "rtk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtk {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string & what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    auto line() const -> std::size_t { return line_; }

private:
    std::size_t line_;
};

/// Text format, one item per line, '#' starts a comment:
///
///     n <count>
///     e <u> <v> [<color>]
///
/// The color column is either present on every edge line or on none.
struct ParsedGraph {
    Graph graph;
    std::optional<std::vector<Color>> colors;
};

inline auto parse_graph_text(const std::string & text) -> ParsedGraph
{
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::vector<Color> colors;
    std::optional<bool> colored;
    std::set<Edge> seen;

    auto read_number = [&](std::istringstream & fields, const char * what) -> unsigned long long {
        std::string token;
        if (! (fields >> token))
            throw ParseError(line_no, std::string("missing ") + what);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError(line_no, std::string("expected a non-negative integer for ") + what + ", got '" + token + "'");
        try {
            return std::stoull(token);
        }
        catch (const std::out_of_range &) {
            throw ParseError(line_no, std::string(what) + " out of range");
        }
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream fields(raw);
        std::string tag;
        if (! (fields >> tag))
            continue;
        if (tag == "n") {
            if (n)
                throw ParseError(line_no, "vertex count declared twice");
            n = read_number(fields, "vertex count");
        }
        else if (tag == "e") {
            if (! n)
                throw ParseError(line_no, "edge before the 'n' line");
            auto u = read_number(fields, "first endpoint");
            auto v = read_number(fields, "second endpoint");
            std::string rest;
            bool has_color = false;
            Color c = 0;
            if (fields >> rest) {
                std::istringstream color_field(rest);
                c = static_cast<Color>(read_number(color_field, "color"));
                has_color = true;
            }
            if (colored && *colored != has_color)
                throw ParseError(line_no, "color column must appear on every edge or on none");
            colored = has_color;
            if (fields >> rest)
                throw ParseError(line_no, "trailing field '" + rest + "'");
            if (u >= *n || v >= *n)
                throw ParseError(line_no, "endpoint outside [0, " + std::to_string(*n) + ")");
            if (u == v)
                throw ParseError(line_no, "self-loop");
            auto e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (! seen.insert(e).second)
                throw ParseError(line_no, "duplicate edge " + to_string(e));
            edges.push_back(e);
            colors.push_back(c);
        }
        else
            throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
    if (! n)
        throw ParseError(line_no, "missing 'n' line");

    // reorder colors to match the graph's sorted edge list
    std::vector<std::pair<Edge, Color>> keyed;
    for (std::size_t i = 0; i < edges.size(); ++i)
        keyed.emplace_back(edges[i], colors[i]);
    std::sort(keyed.begin(), keyed.end());
    ParsedGraph out{Graph::from_edges(*n, std::move(edges)), std::nullopt};
    if (colored.value_or(false)) {
        std::vector<Color> sorted;
        for (auto & [e, c] : keyed)
            sorted.push_back(c);
        out.colors = std::move(sorted);
    }
    return out;
}

/// Requires a color column (unless edgeless) and a proper coloring.
inline auto read_colored_graph(const std::string & text) -> ColoredGraph
{
    auto parsed = parse_graph_text(text);
    if (! parsed.colors && parsed.graph.size() > 0)
        throw ParseError(0, "colored graph expected, but edges carry no colors");
    return assign_colors(std::move(parsed.graph), parsed.colors.value_or(std::vector<Color>{}));
}

inline auto read_general_colored_graph(const std::string & text) -> ColoredGraph
{
    auto parsed = parse_graph_text(text);
    if (! parsed.colors && parsed.graph.size() > 0)
        throw ParseError(0, "colored graph expected, but edges carry no colors");
    return assign_general_colors(std::move(parsed.graph), parsed.colors.value_or(std::vector<Color>{}));
}

/// Accepts either form; colors, if present, are dropped.
inline auto read_graph(const std::string & text) -> Graph { return parse_graph_text(text).graph; }

inline auto write_colored_graph(const ColoredGraph & cg) -> std::string
{
    std::string out = "n " + std::to_string(cg.order()) + "\n";
    for (std::size_t i = 0; i < cg.size(); ++i) {
        auto e = cg.edges()[i];
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + std::to_string(cg.color_of(i)) + "\n";
    }
    return out;
}

inline auto write_graph(const Graph & g) -> std::string
{
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (auto e : g.edges())
        out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

inline auto read_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline auto write_file(const std::string & path, const std::string & contents) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

} // namespace rtk
