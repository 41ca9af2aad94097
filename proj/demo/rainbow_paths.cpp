// The small colored graphs behind the rainbow path bounds, with their longest rainbow paths.

#include "rtk/rtk.hpp"

#include <cstdio>
#include <string>

using namespace rtk;

namespace {

void show(const char * name, const ColoredGraph & g)
{
    auto best = longest_rainbow_path(g);
    std::string path;
    for (auto v : best.witness.parts.front())
        path += (path.empty() ? "" : "-") + std::to_string(v);
    std::printf("%-26s n=%-3zu e=%-4zu colors=%-3zu min degree=%-3zu longest rainbow path=%zu (%s)\n", name, g.order(),
                g.size(), g.palette_size(), g.graph().min_degree(), best.length, path.c_str());
}

} // namespace

int main()
{
    show("K4 union, n=8", k4_union(8));
    show("K4,4 union, n=16", k44_union(16));
    show("cube coloring of K8", boolean_cube_clique(3));

    std::printf("\nexact ex*(n, P3) against 3n/2:\n");
    for (std::size_t n = 2; n <= 8; ++n)
        std::printf("  n=%zu  ex*=%zu  3n/2=%zu\n", n, ex_rainbow(n, PathPattern{3}).value, 3 * n / 2);

    auto k4 = rainbow_free_clique_search(4, 4);
    auto k5 = rainbow_free_clique_search(5, 4);
    std::printf("\nlargest clique with a proper coloring avoiding rainbow P4: %s\n",
                k4 && ! k5 ? "K4" : "unexpected");
}
