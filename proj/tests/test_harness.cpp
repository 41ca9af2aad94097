#include "rtk/constructions.hpp"
#include "rtk/property_harness.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace rtk;

TEST(RandomColoredGraph, ProperAndDeterministic)
{
    for (auto strategy : {PaletteStrategy::fresh, PaletteStrategy::recycled}) {
        HarnessConfig cfg;
        cfg.seed = 17;
        cfg.palette = strategy;
        for (std::uint64_t trial = 0; trial < 200; ++trial) {
            auto a = random_properly_colored_graph(cfg, trial);
            EXPECT_TRUE(a.is_proper());
            EXPECT_GE(a.size(), 1u);
            EXPECT_EQ(a, random_properly_colored_graph(cfg, trial));
            EXPECT_NO_THROW(assign_colors(a.graph(), a.colors()));
        }
    }
}

TEST(RandomColoredGraph, RecycledPaletteOnK4UsesThreeColors)
{
    HarnessConfig cfg;
    cfg.n_min = cfg.n_max = 4;
    cfg.density_min = cfg.density_max = 1.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        cfg.seed = seed;
        auto cg = random_properly_colored_graph(cfg);
        EXPECT_EQ(cg.graph(), Graph::complete(4));
        EXPECT_EQ(cg.palette_size(), 3u);
    }
}

TEST(RandomColoredGraph, FreshPaletteUsesMoreColors)
{
    HarnessConfig cfg;
    cfg.n_min = cfg.n_max = 10;
    cfg.density_min = cfg.density_max = 0.8;
    std::size_t fresh = 0, recycled = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        cfg.palette = PaletteStrategy::fresh;
        fresh += random_properly_colored_graph(cfg, trial).palette_size();
        cfg.palette = PaletteStrategy::recycled;
        recycled += random_properly_colored_graph(cfg, trial).palette_size();
    }
    EXPECT_GT(fresh, recycled);
}

TEST(RandomGraph, ExactEdgeCount)
{
    Rng rng(4);
    for (std::size_t n = 1; n < 10; ++n)
        for (std::size_t m = 0; m <= choose2(n); ++m)
            EXPECT_EQ(random_graph(rng, n, m).size(), m);
    EXPECT_THROW(random_graph(rng, 4, 7), ParameterError);
}

TEST(HarnessConfig, Validation)
{
    HarnessConfig cfg;
    cfg.trials = 0;
    EXPECT_THROW(two_thirds_sweep(cfg, ColoringModel::proper), ParameterError);
    cfg = {};
    cfg.n_min = 5;
    cfg.n_max = 4;
    EXPECT_THROW(random_properly_colored_graph(cfg), ParameterError);
    cfg = {};
    cfg.density_max = 1.5;
    EXPECT_THROW(random_properly_colored_graph(cfg), ParameterError);
}

TEST(CheckTwoThirds, Examples)
{
    auto k4 = check_two_thirds(edge_maximal_colorable(4, 3));
    EXPECT_EQ(k4.verdict, Verdict::pass);
    EXPECT_EQ(k4.degree, 3u);
    EXPECT_EQ(k4.required, 2u);
    EXPECT_EQ(k4.achieved, 2u);
    EXPECT_TRUE(k4.equality());

    auto edge = check_two_thirds(assign_colors(Graph::build(2, {{0, 1}}), std::vector<Color>{0}));
    EXPECT_EQ(edge.verdict, Verdict::pass);
    EXPECT_EQ(edge.required, 1u);
    EXPECT_EQ(edge.achieved, 1u);

    EXPECT_THROW(check_two_thirds(assign_general_colors(Graph::complete(3), {0, 0, 1})), GraphError);
    EXPECT_THROW(check_two_thirds(assign_colors(Graph::build(3, {}), std::vector<Color>{})), GraphError);
}

TEST(CheckTwoThirds, RequiredLengthIsTheCeiling)
{
    // ceil(2d/3) for d = 0..9
    const std::size_t expected[] = {0, 1, 2, 2, 3, 4, 4, 5, 6, 6};
    for (std::size_t d = 0; d < 10; ++d) {
        auto g = d == 0 ? Graph::build(2, {}) : Graph::complete(d + 1);
        if (g.size() == 0)
            continue;
        auto r = check_two_thirds(assign_colors(g, greedy_proper_coloring(g)));
        EXPECT_EQ(r.required, expected[d]) << d;
    }
}

TEST(CheckTwoThirds, K4UnionsAreEqualityCases)
{
    for (std::size_t n : {4, 8, 12, 16}) {
        auto r = check_two_thirds(k4_union(n));
        EXPECT_EQ(r.verdict, Verdict::pass);
        EXPECT_TRUE(r.equality());
        EXPECT_EQ(r.degree % 3, 0u);
    }
}

TEST(CheckThetaTwoThirds, Examples)
{
    auto mono = check_theta_two_thirds(assign_general_colors(Graph::complete(3), {0, 0, 0}));
    EXPECT_EQ(mono.verdict, Verdict::pass);
    EXPECT_EQ(mono.degree, 1u);
    EXPECT_EQ(mono.achieved, 1u);

    HarnessConfig cfg;
    cfg.seed = 5;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto cg = random_properly_colored_graph(cfg, trial);
        auto a = check_two_thirds(cg);
        auto b = check_theta_two_thirds(cg);
        EXPECT_EQ(a.degree, b.degree);
        EXPECT_EQ(a.achieved, b.achieved);
        EXPECT_EQ(a.verdict, b.verdict);
    }
}

TEST(CheckDegreeLemma, Examples)
{
    auto cycle = edge_maximal_bounded_degree(7, 2);
    auto regular = check_degree_lemma(cycle, 2, 2, 0.5);
    EXPECT_EQ(regular.verdict, Verdict::pass);
    EXPECT_EQ(regular.low_degree, 0u);

    // star K_{1,5}: average degree 10/6 >= 2 - 0.4, five leaves of degree < 2
    auto star = split_graph(6, 1);
    auto r = check_degree_lemma(star, 2, 5, 0.4);
    EXPECT_EQ(r.verdict, Verdict::pass);
    EXPECT_EQ(r.low_degree, 5u);
    EXPECT_DOUBLE_EQ(r.bound, (3 + 0.4) / 4 * 6);

    EXPECT_EQ(check_degree_lemma(star, 2, 4, 0.4).verdict, Verdict::precondition_violated);
    EXPECT_EQ(check_degree_lemma(star, 3, 5, 0.4).verdict, Verdict::precondition_violated);
    EXPECT_EQ(check_degree_lemma(star, 2, 5, 1.0).verdict, Verdict::precondition_violated);
    EXPECT_EQ(check_degree_lemma(star, 6, 5, 0.4).verdict, Verdict::precondition_violated);
}

TEST(CheckDegreeLemma, ExhaustiveSmallGraphs)
{
    auto sweep = degree_lemma_sweep(6, {0.0, 0.5, 0.9, default_epsilon});
    EXPECT_EQ(sweep.graphs, 1u + 2 + 4 + 11 + 34 + 156);
    EXPECT_GT(sweep.checked, 1000u);
    EXPECT_EQ(sweep.failures, 0u);
}

TEST(Sweeps, ReproducibleAndIndependentOfWorkers)
{
    HarnessConfig cfg;
    cfg.trials = 300;
    cfg.seed = 99;
    cfg.n_max = 9;
    auto a = two_thirds_sweep(cfg, ColoringModel::proper);
    cfg.jobs = 3;
    auto b = two_thirds_sweep(cfg, ColoringModel::proper);
    EXPECT_EQ(a.failures, 0u);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.equality_cases, b.equality_cases);
    EXPECT_EQ(a.longest_seen, b.longest_seen);
    ASSERT_EQ(a.flagged.size(), b.flagged.size());
    for (std::size_t i = 0; i < a.flagged.size(); ++i) {
        EXPECT_EQ(a.flagged[i].trial, b.flagged[i].trial);
        EXPECT_EQ(a.flagged[i].graph, b.flagged[i].graph);
        EXPECT_NE(a.flagged[i].report.degree % 3, 0u);
    }
}

TEST(Sweeps, AchievedLengthsMatchBruteForce)
{
    HarnessConfig cfg;
    cfg.seed = 2;
    cfg.n_max = 8;
    cfg.palette = PaletteStrategy::fresh;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        auto cg = random_properly_colored_graph(cfg, trial);
        EXPECT_EQ(check_two_thirds(cg).achieved, oracle::brute_longest_rainbow_path(cg));
    }
}

TEST(FalsifyUpperBound, Examples)
{
    HarnessConfig cfg;
    cfg.seed = 3;
    auto p3 = falsify_upper_bound(PathPattern{3}, 12, 100, cfg);
    EXPECT_EQ(p3.bound, 48u);
    EXPECT_EQ(p3.edges, 49u);
    EXPECT_EQ(p3.verdict, Verdict::pass);

    auto m2 = falsify_upper_bound(StarForest::matching(2), 12, 100, cfg);
    EXPECT_EQ(m2.bound, 12u + 5u);
    EXPECT_EQ(m2.verdict, Verdict::pass);

    for (auto palette : {PaletteStrategy::fresh, PaletteStrategy::recycled}) {
        cfg.palette = palette;
        auto p4 = falsify_upper_bound(PathPattern{4}, 8, 200, cfg, BoundKind::sharp);
        EXPECT_EQ(p4.edges, 17u);
        EXPECT_EQ(p4.verdict, Verdict::pass);
        auto p3_sharp = falsify_upper_bound(PathPattern{3}, 12, 200, cfg, BoundKind::sharp);
        EXPECT_EQ(p3_sharp.edges, 19u);
        EXPECT_EQ(p3_sharp.verdict, Verdict::pass);
    }

    EXPECT_THROW(falsify_upper_bound(PathPattern{3}, 6, 10, cfg), ParameterError);
    EXPECT_THROW(falsify_upper_bound(StarForest({1, 2}), 12, 10, cfg), ParameterError);
    EXPECT_THROW(falsify_upper_bound(PathPattern{3}, 12, 0, cfg), ParameterError);
}

TEST(FalsifyUpperBound, ReportsRainbowFreeSamplesBelowTheTruth)
{
    // P3 at n=8: the sharp claim is 12 edges and K4 unions meet it, so a bound
    // forced lower (P2's n/2 = 4 edges) must be refuted by some sample; here we
    // sanity-check the archive path with a pattern that is rarely present.
    HarnessConfig cfg;
    cfg.seed = 1;
    auto r = falsify_upper_bound(PathPattern{1}, 4, 5, cfg, BoundKind::sharp);
    EXPECT_EQ(r.edges, 1u);
    EXPECT_EQ(r.verdict, Verdict::pass);
}
