/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <efl/solver.hh>

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace efl;

using std::map;
using std::set;
using std::string;
using std::vector;

namespace
{
    /// Plain index-order backtracking, no pruning beyond adjacency.
    auto colourable_naive(const HostGraph & g, int k) -> bool
    {
        vector<int> colour(g.vertex_count + 1, 0);
        std::function<bool (int)> go = [&] (int v) -> bool {
            if (v > g.vertex_count)
                return true;
            for (int c = 1 ; c <= k ; ++c) {
                bool ok = true;
                for (auto & [a, b] : g.edges)
                    if ((a == v && colour[b] == c) || (b == v && colour[a] == c))
                        ok = false;
                if (ok) {
                    colour[v] = c;
                    if (go(v + 1))
                        return true;
                    colour[v] = 0;
                }
            }
            return false;
        };
        return go(1);
    }

    auto chromatic_naive(const HostGraph & g) -> int
    {
        int k = g.vertex_count == 0 ? 0 : 1;
        while (! colourable_naive(g, k))
            ++k;
        return k;
    }

    auto all_edges(int n) -> CliqueDecomposition
    {
        vector<vector<int>> cliques;
        for (auto & p : oracle::all_pairs(n))
            cliques.push_back({ p.i, p.j });
        return make_decomposition(HostGraph::complete(n), cliques);
    }

    auto fano() -> CliqueDecomposition
    {
        return make_decomposition(HostGraph::complete(7), oracle::fano_lines());
    }

    auto keys(int n, int r) -> set<string>
    {
        set<string> result;
        enumerate_problem1(n, r, [&] (const CliqueDecomposition & d) {
                EXPECT_TRUE(result.insert(d.canonical_key()).second) << "duplicate " << d.canonical_key();
                });
        return result;
    }
}

TEST(SolveColoring, Basics)
{
    SearchConfig cfg;
    auto empty = solve_coloring({ { }, 0, { } }, cfg);
    EXPECT_EQ(empty.result, SearchResult::colorable);

    vector<vector<int>> triangle{ { 1, 2 }, { 0, 2 }, { 0, 1 } };
    EXPECT_EQ(solve_coloring({ triangle, 2, { } }, cfg).result, SearchResult::not_colorable);
    auto three = solve_coloring({ triangle, 3, { } }, cfg);
    ASSERT_EQ(three.result, SearchResult::colorable);
    EXPECT_EQ(three.colors, (vector<Color>{ 1, 2, 3 }));

    EXPECT_EQ(solve_coloring({ triangle, 3, { 1, 1, 0 } }, cfg).result, SearchResult::not_colorable);
    auto fixed = solve_coloring({ triangle, 3, { 3, 0, 0 } }, cfg);
    ASSERT_EQ(fixed.result, SearchResult::colorable);
    EXPECT_EQ(fixed.colors[0], 3);

    EXPECT_THROW(solve_coloring({ triangle, 65, { } }, cfg), SearchError);
    SearchConfig zero;
    zero.node_limit = 0;
    EXPECT_THROW(solve_coloring({ triangle, 3, { } }, zero), SearchError);
}

TEST(SolveColoring, AgreesWithNaiveOracle)
{
    std::mt19937 rng(41);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int size = std::uniform_int_distribution<int>(1, 10)(rng);
        double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        HostGraph g{ size, { } };
        vector<vector<int>> adj(size);
        for (int a = 1 ; a <= size ; ++a)
            for (int b = a + 1 ; b <= size ; ++b)
                if (std::bernoulli_distribution(p)(rng)) {
                    g.edges.emplace_back(a, b);
                    adj[a - 1].push_back(b - 1);
                    adj[b - 1].push_back(a - 1);
                }
        int chi = chromatic_naive(g);
        for (bool symmetry : { true, false }) {
            SearchConfig cfg;
            cfg.symmetry_fixing = symmetry;
            EXPECT_EQ(solve_coloring({ adj, chi, { } }, cfg).result, SearchResult::colorable);
            if (chi > 1)
                EXPECT_EQ(solve_coloring({ adj, chi - 1, { } }, cfg).result, SearchResult::not_colorable);
        }
    }
}

TEST(ChromaticNumber, MaximalGraphs)
{
    for (int n : { 2, 3, 4, 5, 6 }) {
        for (bool symmetry : { true, false }) {
            SearchConfig cfg;
            cfg.symmetry_fixing = symmetry;
            auto g = build_maximal(n).graph();
            auto result = chromatic_number(g, cfg);
            ASSERT_EQ(result.result, SearchResult::colorable);
            EXPECT_EQ(result.chromatic_number, n);
            EXPECT_EQ(result.lower_bound, n);
            EXPECT_TRUE(oracle::proper_by_cliques(g, result.witness));
            EXPECT_EQ(result.witness.colors.size(), g.vertex_count());
        }
    }
}

TEST(ChromaticNumber, TripleShared)
{
    vector<vector<VertexId>> cliques;
    for (int c = 1 ; c <= 4 ; ++c)
        cliques.push_back({ GeneralVertexId{ 1 }, UnsharedVertexId{ c, 1 }, UnsharedVertexId{ c, 2 }, UnsharedVertexId{ c, 3 } });
    auto g = std::get<EflGraph>(validate(cliques, 4));
    EXPECT_EQ(chromatic_number(g, { }).chromatic_number, 4);
}

TEST(ColorDecomposition, TriangleAndFano)
{
    SearchConfig cfg;
    auto k3 = all_edges(3);
    auto three = color_decomposition(k3, 3, cfg);
    ASSERT_EQ(three.result, SearchResult::colorable);
    ASSERT_TRUE(three.certificate);
    EXPECT_TRUE(check_decomposition_coloring(k3, *three.certificate));
    EXPECT_EQ(color_decomposition(k3, 2, cfg).result, SearchResult::not_colorable);
    EXPECT_FALSE(color_decomposition(k3, 2, cfg).certificate);

    auto f = fano();
    auto seven = color_decomposition(f, 7, cfg);
    ASSERT_EQ(seven.result, SearchResult::colorable);
    EXPECT_TRUE(check_decomposition_coloring(f, *seven.certificate));
    EXPECT_EQ(color_decomposition(f, 6, cfg).result, SearchResult::not_colorable);
    EXPECT_EQ(minimum_palette(f, cfg), 7);
}

TEST(ColorDecomposition, Deterministic)
{
    SearchConfig cfg;
    auto a = color_decomposition(all_edges(7), 7, cfg);
    auto b = color_decomposition(all_edges(7), 7, cfg);
    EXPECT_EQ(a.certificate, b.certificate);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(ColorDecomposition, BudgetExhaustion)
{
    SearchConfig cfg;
    cfg.node_limit = 3;
    cfg.symmetry_fixing = false;
    auto outcome = color_decomposition(fano(), 6, cfg);
    EXPECT_EQ(outcome.result, SearchResult::budget_exhausted);
    EXPECT_EQ(outcome.nodes, 3u);
    EXPECT_FALSE(outcome.certificate);
    EXPECT_EQ(minimum_palette(fano(), cfg), std::nullopt);

    auto chromatic = chromatic_number(build_maximal(6).graph(), cfg);
    EXPECT_EQ(chromatic.result, SearchResult::budget_exhausted);
}

TEST(ColorDecomposition, ProgressCallback)
{
    SearchConfig cfg;
    cfg.symmetry_fixing = false;
    cfg.progress_interval = 5;
    vector<std::uint64_t> calls;
    cfg.progress = [&] (std::uint64_t nodes) { calls.push_back(nodes); };
    auto outcome = color_decomposition(fano(), 6, cfg);
    ASSERT_EQ(outcome.result, SearchResult::not_colorable);
    ASSERT_EQ(calls.size(), outcome.nodes / 5);
    for (std::size_t i = 0 ; i < calls.size() ; ++i)
        EXPECT_EQ(calls[i], 5 * (i + 1));
}

TEST(MinimumPalette, EdgeDecompositionIsChromaticIndex)
{
    // all 2-cliques: the intersection graph is the line graph of K_n
    for (int n = 2 ; n <= 9 ; ++n)
        EXPECT_EQ(minimum_palette(all_edges(n), { }), n % 2 == 0 ? n - 1 : n) << n;
}

TEST(MinimumPalette, AgreesWithNaiveOracle)
{
    for (auto [n, r] : { std::pair{ 4, 3 }, { 5, 3 }, { 5, 4 }, { 6, 4 }, { 6, 5 } })
        enumerate_problem1(n, r, [&] (const CliqueDecomposition & d) {
                EXPECT_EQ(minimum_palette(d, { }), chromatic_naive(intersection_graph(d))) << d.canonical_key();
                });
}

TEST(GreedyBaseline, ProperAndNoBetterThanExact)
{
    for (auto [n, r] : { std::pair{ 5, 3 }, { 6, 3 }, { 6, 4 } })
        enumerate_problem1(n, r, [&] (const CliqueDecomposition & d) {
                auto g = greedy_baseline(d);
                EXPECT_TRUE(check_intersection_coloring(d, g));
                EXPECT_GE(g.palette, *minimum_palette(d, { }));
                });
    auto f = greedy_baseline(fano());
    EXPECT_EQ(f.palette, 7);
    EXPECT_EQ(greedy_baseline(all_edges(3)).colors, (vector<Color>{ 1, 2, 3 }));
}

TEST(EnumerateProblem1, MatchesBruteForce)
{
    // frozen from the brute-force oracle
    map<std::pair<int, int>, std::size_t> expected{ { { 3, 3 }, 2 }, { { 4, 3 }, 5 }, { { 4, 4 }, 2 },
        { { 5, 3 }, 26 }, { { 5, 4 }, 6 }, { { 6, 4 }, 16 }, { { 6, 5 }, 7 }, { { 6, 3 }, 271 } };
    for (auto & [nr, count] : expected) {
        auto [n, r] = nr;
        auto brute = oracle::brute_force_problem1(n, r);
        EXPECT_EQ(brute.size(), count) << n << " " << r;
        EXPECT_EQ(keys(n, r), brute) << n << " " << r;
    }
}

TEST(EnumerateProblem1, SevenPointsTriples)
{
    std::uint64_t all_triples = 0;
    bool saw_fano = false;
    auto f = fano().canonical_key();
    auto count = enumerate_problem1(7, 3, [&] (const CliqueDecomposition & d) {
            if (d.canonical_key() == f)
                saw_fano = true;
            if (std::all_of(d.cliques().begin(), d.cliques().end(), [] (auto & q) { return q.size() == 3; }))
                ++all_triples;
            });
    EXPECT_TRUE(saw_fano);
    EXPECT_EQ(all_triples, 30u);    // labelled Steiner triple systems on seven points
    EXPECT_EQ(count, 5596u);
}

TEST(EnumerateProblem1, RejectsBadR)
{
    auto ignore = [] (const CliqueDecomposition &) { };
    EXPECT_THROW(enumerate_problem1(5, 2, ignore), SearchError);
    EXPECT_THROW(enumerate_problem1(5, 6, ignore), SearchError);
}

TEST(Sweep, SmallCases)
{
    auto r33 = sweep_problem1(3, 3, { });
    EXPECT_EQ(r33.instances, 2u);
    EXPECT_EQ(r33.colorable, 2u);
    EXPECT_TRUE(r33.not_colorable.empty());
    EXPECT_TRUE(r33.budget_exhausted.empty());

    for (auto [n, r] : { std::pair{ 5, 3 }, { 6, 3 }, { 6, 4 }, { 7, 4 } }) {
        auto report = sweep_problem1(n, r, { });
        EXPECT_EQ(report.colorable, report.instances);
        EXPECT_TRUE(report.not_colorable.empty());
    }
}

TEST(Sweep, BudgetExhaustedInstancesAreListed)
{
    SearchConfig cfg;
    cfg.node_limit = 1;
    auto report = sweep_problem1(4, 3, cfg);
    EXPECT_EQ(report.instances, 5u);
    EXPECT_EQ(report.colorable + report.budget_exhausted.size(), 5u);
    EXPECT_FALSE(report.budget_exhausted.empty());
    EXPECT_TRUE(std::is_sorted(report.budget_exhausted.begin(), report.budget_exhausted.end(),
                [] (auto & a, auto & b) { return a.canonical_key() < b.canonical_key(); }));
}

TEST(Sweep, WorkersDoNotChangeTheReport)
{
    SweepOptions one{ true, 1 }, four{ true, 4 };
    auto a = sweep_problem1(6, 3, { }, one);
    auto b = sweep_problem1(6, 3, { }, four);
    EXPECT_EQ(a.instances, b.instances);
    EXPECT_EQ(a.colorable, b.colorable);
    EXPECT_EQ(a.max_nodes, b.max_nodes);
    EXPECT_EQ(a.minimum_palettes, b.minimum_palettes);
    EXPECT_EQ(a.minimum_palettes.size(), 271u);

    SearchConfig tight;
    tight.node_limit = 1;
    auto c = sweep_problem1(5, 3, tight, one);
    auto d = sweep_problem1(5, 3, tight, four);
    EXPECT_EQ(c.budget_exhausted, d.budget_exhausted);
}
