#pragma once

#include "rtk/exact_oracle.hpp"
#include "rtk/graph.hpp"
#include "rtk/pattern.hpp"
#include "rtk/property_harness.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace rtk::cli {

using nlohmann::ordered_json;

inline auto edges_json(const std::vector<Edge> & edges) -> ordered_json
{
    auto out = ordered_json::array();
    for (auto e : edges)
        out.push_back({e.u, e.v});
    return out;
}

inline auto graph_json(const Graph & g) -> ordered_json
{
    ordered_json out;
    out["n"] = g.order();
    out["edges"] = edges_json(g.edges());
    out["colors"] = nullptr;
    return out;
}

inline auto graph_json(const ColoredGraph & cg) -> ordered_json
{
    ordered_json out;
    out["n"] = cg.order();
    out["edges"] = edges_json(cg.edges());
    out["colors"] = cg.colors();
    return out;
}

inline auto witness_json(const Witness & w) -> ordered_json
{
    ordered_json out;
    out["pattern"] = to_string(w.pattern);
    out["parts"] = w.parts;
    out["edges"] = edges_json(w.edges);
    return out;
}

inline auto report_json(const SearchReport & r) -> ordered_json
{
    ordered_json out;
    out["kind"] = to_string(r.kind);
    out["n"] = r.n;
    out["pattern"] = to_string(r.pattern);
    out["value"] = r.value;
    out["witness"] = std::visit([](const auto & g) { return graph_json(g); }, r.witness);
    out["graphs_enumerated"] = r.graphs_enumerated;
    out["colorings_tested"] = r.colorings_tested;
    out["elapsed"] = r.elapsed_seconds;
    out["seed"] = r.seed ? ordered_json(*r.seed) : ordered_json(nullptr);
    return out;
}

inline auto path_check_json(const PathCheckReport & r) -> ordered_json
{
    ordered_json out;
    out["verdict"] = to_string(r.verdict);
    out["degree"] = r.degree;
    out["required"] = r.required;
    out["achieved"] = r.achieved;
    out["witness"] = witness_json(r.witness);
    if (r.witness_defect)
        out["witness_defect"] = *r.witness_defect;
    return out;
}

enum class Format { json, csv, text };

namespace detail {
    inline auto scalar_text(const ordered_json & v) -> std::string
    {
        if (v.is_string())
            return v.get<std::string>();
        return v.dump();
    }

    inline auto csv_cell(const ordered_json & v) -> std::string
    {
        if (v.is_null())
            return "";
        auto s = scalar_text(v);
        if (s.find_first_of(",\"\n") == std::string::npos)
            return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"')
                quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    }
}

/// JSON as is; an array of objects becomes a CSV table (columns from the first
/// row) or aligned text rows; an object becomes key/value lines.
inline auto render(const ordered_json & doc, Format format) -> std::string
{
    if (format == Format::json)
        return doc.dump(2) + "\n";
    std::ostringstream out;
    if (doc.is_array()) {
        if (doc.empty())
            return "";
        std::vector<std::string> columns;
        for (auto & [key, value] : doc.front().items())
            columns.push_back(key);
        auto separator = format == Format::csv ? "," : " ";
        for (std::size_t i = 0; i < columns.size(); ++i)
            out << (i ? separator : "") << columns[i];
        out << "\n";
        for (const auto & row : doc) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                const auto & cell = row.contains(columns[i]) ? row.at(columns[i]) : ordered_json(nullptr);
                out << (i ? separator : "") << (format == Format::csv ? detail::csv_cell(cell) : detail::scalar_text(cell));
            }
            out << "\n";
        }
        return out.str();
    }
    for (auto & [key, value] : doc.items()) {
        if (format == Format::csv)
            out << key << "," << detail::csv_cell(value) << "\n";
        else
            out << key << ": " << detail::scalar_text(value) << "\n";
    }
    return out.str();
}

/// Removes every "elapsed" member, recursively; timing is not reproducible.
inline auto strip_timing(ordered_json doc) -> ordered_json
{
    if (doc.is_object()) {
        doc.erase("elapsed");
        for (auto & [key, value] : doc.items())
            value = strip_timing(value);
    }
    else if (doc.is_array())
        for (auto & value : doc)
            value = strip_timing(value);
    return doc;
}

} // namespace rtk::cli
