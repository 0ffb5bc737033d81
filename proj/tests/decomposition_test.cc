/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <efl/decomposition.hh>

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace efl;

using std::get;
using std::get_if;
using std::pair;
using std::vector;

namespace
{
    auto rejection(HostGraph host, vector<vector<int>> cliques) -> DecompositionRejection
    {
        auto result = validate_decomposition(std::move(host), std::move(cliques));
        auto r = get_if<DecompositionRejection>(&result);
        if (! r)
            throw std::logic_error("expected a rejection");
        return *r;
    }

    /// Random edge-disjoint cliques of order 3..max_order on 1..n, the rest of
    /// K_n covered by 2-cliques, then some 2-cliques dropped together with
    /// their host edges.
    auto random_decomposition(int n, int max_order, double drop, std::mt19937 & rng)
        -> pair<HostGraph, vector<vector<int>>>
    {
        vector<vector<bool>> used(n + 1, vector<bool>(n + 1, false));
        vector<vector<int>> cliques;
        vector<int> points(n);
        std::iota(points.begin(), points.end(), 1);
        for (int attempt = 0 ; attempt < 3 * n ; ++attempt) {
            int order = std::uniform_int_distribution<int>(3, std::max(3, std::min(n, max_order)))(rng);
            if (order > n)
                break;
            std::shuffle(points.begin(), points.end(), rng);
            vector<int> q(points.begin(), points.begin() + order);
            bool free = true;
            for (int a : q)
                for (int b : q)
                    if (a != b && used[a][b])
                        free = false;
            if (! free)
                continue;
            for (int a : q)
                for (int b : q)
                    used[a][b] = true;
            cliques.push_back(q);
        }

        HostGraph host{ n, { } };
        for (int a = 1 ; a <= n ; ++a)
            for (int b = a + 1 ; b <= n ; ++b) {
                if (! used[a][b]) {
                    if (std::bernoulli_distribution(drop)(rng))
                        continue;
                    cliques.push_back({ a, b });
                }
                host.edges.emplace_back(a, b);
            }
        return { host, cliques };
    }

    /// s ~ t iff the vertex sets meet, by direct set intersection.
    auto intersection_by_sets(const vector<vector<int>> & cliques) -> vector<pair<int, int>>
    {
        vector<pair<int, int>> result;
        for (std::size_t s = 0 ; s < cliques.size() ; ++s)
            for (std::size_t t = s + 1 ; t < cliques.size() ; ++t)
                for (int v : cliques[s])
                    if (std::find(cliques[t].begin(), cliques[t].end(), v) != cliques[t].end()) {
                        result.emplace_back(s + 1, t + 1);
                        break;
                    }
        return result;
    }

    auto triple_shared_three() -> EflGraph
    {
        vector<vector<VertexId>> cliques;
        for (int c = 1 ; c <= 3 ; ++c)
            cliques.push_back({ GeneralVertexId{ 1 }, UnsharedVertexId{ c, 1 }, UnsharedVertexId{ c, 2 } });
        return get<EflGraph>(validate(cliques, 3));
    }
}

TEST(ValidateDecomposition, TriangleAccepted)
{
    auto single = make_decomposition(HostGraph::complete(3), { { 3, 1, 2 } });
    EXPECT_EQ(single.size(), 1);
    EXPECT_EQ(single.clique(1), (vector<int>{ 1, 2, 3 }));
    EXPECT_EQ(single.canonical_key(), "1-2-3");

    auto edges = make_decomposition(HostGraph::complete(3), { { 2, 3 }, { 1, 3 }, { 2, 1 } });
    EXPECT_EQ(edges.cliques(), (vector<vector<int>>{ { 1, 2 }, { 1, 3 }, { 2, 3 } }));
    EXPECT_EQ(edges.canonical_key(), "1-2|1-3|2-3");
    EXPECT_TRUE(edges.host().is_complete());
}

TEST(ValidateDecomposition, TriangleRejections)
{
    auto k3 = HostGraph::complete(3);

    auto uncovered = rejection(k3, { { 1, 2 }, { 2, 3 } });
    EXPECT_EQ(uncovered.kind, DecompositionRejectionKind::edge_uncovered);
    EXPECT_EQ(uncovered.edge, (pair{ 1, 3 }));

    auto twice = rejection(k3, { { 1, 2, 3 }, { 2, 1 } });
    EXPECT_EQ(twice.kind, DecompositionRejectionKind::edge_covered_twice);
    EXPECT_EQ(twice.edge, (pair{ 1, 2 }));

    EXPECT_EQ(rejection(k3, { { 1, 1 }, { 1, 2, 3 } }).kind, DecompositionRejectionKind::bad_clique);
    EXPECT_EQ(rejection(k3, { { 1 }, { 1, 2, 3 } }).kind, DecompositionRejectionKind::bad_clique);
    EXPECT_EQ(rejection(k3, { { 1, 4 }, { 1, 2, 3 } }).kind, DecompositionRejectionKind::bad_clique);
    EXPECT_EQ(rejection(HostGraph{ 3, { { 1, 1 } } }, { }).kind, DecompositionRejectionKind::bad_host);
    EXPECT_EQ(rejection(HostGraph{ 3, { { 1, 5 } } }, { }).kind, DecompositionRejectionKind::bad_host);
    EXPECT_EQ(rejection(HostGraph{ 3, { { 1, 2 }, { 2, 1 } } }, { { 1, 2 } }).kind, DecompositionRejectionKind::bad_host);

    auto path = rejection(HostGraph{ 3, { { 1, 2 }, { 2, 3 } } }, { { 1, 2, 3 } });
    EXPECT_EQ(path.kind, DecompositionRejectionKind::clique_not_in_host);

    EXPECT_THROW(make_decomposition(k3, { { 1, 2 } }), DecompositionError);
}

TEST(ValidateDecomposition, EmptyHost)
{
    auto d = make_decomposition(HostGraph{ 3, { } }, { });
    EXPECT_EQ(d.size(), 0);
    EXPECT_EQ(d.canonical_key(), "");
}

TEST(ValidateDecomposition, RandomAcceptedAndKeyed)
{
    std::mt19937 rng(17);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        auto [host, cliques] = random_decomposition(n, 5, 0.2, rng);
        auto d = make_decomposition(host, cliques);
        EXPECT_EQ(d.canonical_key(), oracle::canonical_key(cliques));

        // any one extra 2-clique on a covered edge is a double cover
        if (! d.host().edges.empty()) {
            auto e = d.host().edges[std::uniform_int_distribution<std::size_t>(0, d.host().edges.size() - 1)(rng)];
            auto more = cliques;
            more.push_back({ e.first, e.second });
            EXPECT_EQ(rejection(host, more).kind, DecompositionRejectionKind::edge_covered_twice);
        }
    }
}

TEST(IntersectionGraph, Examples)
{
    EXPECT_EQ(intersection_graph(make_decomposition(HostGraph::complete(3), { { 1, 2, 3 } })), (HostGraph{ 1, { } }));

    auto k3 = make_decomposition(HostGraph::complete(3), { { 1, 2 }, { 1, 3 }, { 2, 3 } });
    EXPECT_EQ(intersection_graph(k3), HostGraph::complete(3));

    // two disjoint edges of a perfect matching on 4 vertices
    auto matching = make_decomposition(HostGraph{ 4, { { 1, 2 }, { 3, 4 } } }, { { 1, 2 }, { 3, 4 } });
    EXPECT_EQ(intersection_graph(matching), (HostGraph{ 2, { } }));

    // any two lines of the Fano plane meet
    auto fano = make_decomposition(HostGraph::complete(7), oracle::fano_lines());
    EXPECT_EQ(intersection_graph(fano), HostGraph::complete(7));
}

TEST(IntersectionGraph, MatchesSetIntersection)
{
    std::mt19937 rng(23);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 12)(rng);
        auto [host, cliques] = random_decomposition(n, 5, 0.3, rng);
        auto d = make_decomposition(host, cliques);
        auto ig = intersection_graph(d);
        EXPECT_EQ(ig.vertex_count, d.size());
        EXPECT_EQ(ig.edges, intersection_by_sets(d.cliques()));
    }
}

TEST(DecompositionColoring, Checks)
{
    auto k3 = make_decomposition(HostGraph::complete(3), { { 1, 2 }, { 1, 3 }, { 2, 3 } });
    EXPECT_TRUE(check_decomposition_coloring(k3, { 3, { 1, 2, 3 } }));

    auto conflict = check_decomposition_coloring(k3, { 3, { 1, 1, 2 } });
    ASSERT_FALSE(conflict);
    EXPECT_EQ(conflict.conflict, (pair{ 1, 2 }));

    auto outside = check_decomposition_coloring(k3, { 3, { 1, 2, 0 } });
    ASSERT_FALSE(outside);
    EXPECT_EQ(outside.out_of_palette, 3);

    auto wide = check_decomposition_coloring(k3, { 4, { 1, 2, 3 } });
    EXPECT_FALSE(wide);
    EXPECT_TRUE(wide.palette_too_large);
    EXPECT_TRUE(check_intersection_coloring(k3, { 4, { 1, 2, 3 } }));

    EXPECT_THROW(check_decomposition_coloring(k3, { 3, { 1, 2 } }), DecompositionError);

    auto triangle = make_decomposition(HostGraph::complete(3), { { 1, 2, 3 } });
    EXPECT_TRUE(check_decomposition_coloring(triangle, { 1, { 1 } }));
}

TEST(EflToDecomposition, Maximal)
{
    for (int n = 2 ; n <= 12 ; ++n) {
        auto d = efl_to_decomposition(build_maximal(n).graph());
        EXPECT_TRUE(d.host().is_complete());
        EXPECT_EQ(d.size(), binomial2(n));
        for (auto & q : d.cliques())
            EXPECT_EQ(q.size(), 2u);
    }
}

TEST(EflToDecomposition, TripleSharedVertex)
{
    auto d = efl_to_decomposition(triple_shared_three());
    EXPECT_EQ(d.host(), HostGraph::complete(3));
    EXPECT_EQ(d.cliques(), (vector<vector<int>>{ { 1, 2, 3 } }));
}

TEST(EflToDecomposition, Sparse)
{
    auto d = efl_to_decomposition(build_from_pairs(4, { { 1, 2 } }).graph());
    EXPECT_EQ(d.host(), (HostGraph{ 4, { { 1, 2 } } }));
    EXPECT_EQ(d.cliques(), (vector<vector<int>>{ { 1, 2 } }));
}

TEST(DecompositionToEfl, Examples)
{
    auto triangle = decomposition_to_efl(make_decomposition(HostGraph::complete(3), { { 1, 2, 3 } }));
    EXPECT_EQ(triangle, triple_shared_three());

    for (int n = 2 ; n <= 8 ; ++n) {
        vector<vector<int>> edges;
        for (auto & p : oracle::all_pairs(n))
            edges.push_back({ p.i, p.j });
        EXPECT_EQ(decomposition_to_efl(make_decomposition(HostGraph::complete(n), edges)), build_maximal(n).graph());
    }

    auto empty = decomposition_to_efl(make_decomposition(HostGraph{ 3, { } }, { }));
    EXPECT_EQ(empty, build_from_pairs(3, { }).graph());
    EXPECT_TRUE(empty.shared().empty());

    EXPECT_THROW(decomposition_to_efl(make_decomposition(HostGraph{ 1, { } }, { })), DecompositionError);
}

TEST(DecompositionToEfl, RoundTrips)
{
    std::mt19937 rng(29);
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 10)(rng);
        auto [host, cliques] = random_decomposition(n, 5, 0.3, rng);
        auto d = make_decomposition(host, cliques);
        auto g = decomposition_to_efl(d);
        EXPECT_EQ(g.n(), n);
        EXPECT_EQ(std::ssize(g.shared()), d.size());
        EXPECT_EQ(efl_to_decomposition(g), d);

        auto pairs = oracle::random_pairs(n, 0.5, rng);
        auto two = build_from_pairs(n, pairs).graph();
        EXPECT_EQ(decomposition_to_efl(efl_to_decomposition(two)), two);
    }
}

TEST(TransportColoring, MaximalFour)
{
    auto g = build_maximal(4);
    auto d = efl_to_decomposition(g.graph());
    auto shared = color_shared(g);
    DecompositionColoring c{ shared.palette, { } };
    for (auto & q : d.cliques())
        c.colors.push_back(shared.colors.at({ q[0], q[1] }));
    EXPECT_TRUE(check_decomposition_coloring(d, c));
    EXPECT_EQ(transport_coloring(d, c, g.graph()), to_vertex_coloring(shared));

    EXPECT_THROW(transport_coloring(d, c, build_maximal(5).graph()), DecompositionError);
    EXPECT_THROW(transport_coloring(d, c, build_from_pairs(4, { { 1, 2 } }).graph()), DecompositionError);
    EXPECT_THROW(transport_coloring(d, DecompositionColoring{ 3, { 1 } }, g.graph()), DecompositionError);
}

TEST(TransportColoring, ProperOnExactlyTheSameColourings)
{
    std::mt19937 rng(31);
    int proper = 0, improper = 0;
    for (int trial = 0 ; trial < 2000 ; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 8)(rng);
        auto [host, cliques] = random_decomposition(n, 4, 0.3, rng);
        auto d = make_decomposition(host, cliques);
        auto g = decomposition_to_efl(d);

        DecompositionColoring c{ n, { } };
        std::uniform_int_distribution<int> colour(1, n);
        for (int t = 0 ; t < d.size() ; ++t)
            c.colors.push_back(colour(rng));

        bool a = bool(check_decomposition_coloring(d, c));
        bool b = oracle::proper_by_cliques(g, transport_coloring(d, c, g));
        ASSERT_EQ(a, b) << d.canonical_key();
        ++(a ? proper : improper);
    }
    EXPECT_GT(proper, 100);
    EXPECT_GT(improper, 100);
}

TEST(ToDot, Triangle)
{
    EXPECT_EQ(to_dot(HostGraph::complete(3), "host"),
            "graph host {\n  1;\n  2;\n  3;\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n");
    EXPECT_EQ(to_dot(HostGraph{ 2, { } }, "g"), "graph g {\n  1;\n  2;\n}\n");
}
