#pragma once

#include "rtk/pattern.hpp"

#include <vector>

namespace rtk {

/// Star forests used for regression grids: single stars, matchings, and mixes
/// of stars of size 1, 2 and at least 3.
inline auto forest_catalog() -> std::vector<StarForest>
{
    std::vector<std::vector<std::size_t>> sizes = {
        {1},
        {2},
        {3},
        {7},
        {1, 1},
        {1, 2},
        {2, 2},
        {1, 3},
        {2, 3},
        {3, 3},
        {3, 4},
        {1, 1, 1},
        {1, 1, 2},
        {1, 2, 2},
        {1, 1, 3},
        {1, 2, 3},
        {2, 2, 2},
        {1, 1, 1, 1},
        {1, 1, 1, 2, 2},
        {1, 1, 1, 1, 1, 2},
        {1, 1, 1, 1, 1, 1, 1},
        {5, 4, 4, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1},
    };
    std::vector<StarForest> out;
    for (auto & s : sizes)
        out.emplace_back(std::move(s));
    return out;
}

} // namespace rtk
