// Walks through the extremal constructions for one star forest:
//   star_forest_tour [FOREST] [N]      e.g. star_forest_tour S1,1,2 40

#include "rtk/rtk.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

using namespace rtk;

int main(int argc, char ** argv)
{
    try {
        auto pattern = parse_pattern(argc > 1 ? argv[1] : "S1,1,2");
        auto * forest = std::get_if<StarForest>(&pattern);
        if (! forest) {
            std::fprintf(stderr, "a star forest is required, got %s\n", to_string(pattern).c_str());
            return 2;
        }
        std::size_t n = argc > 2 ? std::stoul(argv[2]) : 40;
        auto k = forest->components();
        std::printf("F = %s: k = %zu stars, e(F) = %zu, n = %zu\n\n", to_string(*forest).c_str(), k,
                    forest->total_edges(), n);

        std::printf("%4s %8s %10s   %s\n", "c", "f(c)", "e(H)", "rainbow F?");
        for (std::size_t c = 0; c < k; ++c) {
            if (n < h_min_order(*forest, c)) {
                std::printf("%4zu %8s %10s   (needs n >= %llu)\n", c, "-", "-",
                            static_cast<unsigned long long>(h_min_order(*forest, c)));
                continue;
            }
            auto h = h_construction(*forest, n, c);
            auto found = find_rainbow(h, *forest);
            auto f = c + 1 < k ? std::to_string(f_value(*forest, c)) : std::string("-");
            std::printf("%4zu %8s %10zu   %s\n", c, f.c_str(), h.size(), found ? "yes (bug!)" : "no");
        }
        auto best = best_c(*forest, n);
        std::printf("\nbest c = %zu, lower bound ex*(n,F) >= %llu\n", best,
                    static_cast<unsigned long long>(h_edge_count(*forest, n, best)));
        std::printf("uncolored benchmark (H' family): ex(n,F) >= %llu\n",
                    static_cast<unsigned long long>(llp_bound(*forest, n)));

        // below v(F) vertices both values are C(n,2); the oracle stops at n = 7 for speed
        auto first = pattern_vertices(*forest) - 1;
        std::printf("\nexact values on small orders:\n%4s %8s %8s\n", "n", "ex*", "ex");
        for (std::size_t m = first; m <= std::max<std::size_t>(first, 7); ++m)
            std::printf("%4zu %8zu %8zu\n", m, ex_rainbow(m, *forest).value, ex_classical(m, *forest).value);
    }
    catch (const std::exception & e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
