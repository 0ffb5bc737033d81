/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <efl/decomposition.hh>

#include <algorithm>
#include <map>
#include <sstream>

using std::get_if;
using std::map;
using std::move;
using std::pair;
using std::string;
using std::variant;
using std::vector;

namespace efl
{
    using std::to_string;

    auto HostGraph::complete(int n) -> HostGraph
    {
        HostGraph h{ n, { } };
        for (int u = 1 ; u <= n ; ++u)
            for (int v = u + 1 ; v <= n ; ++v)
                h.edges.emplace_back(u, v);
        return h;
    }

    auto HostGraph::is_complete() const -> bool
    {
        return std::ssize(edges) == binomial2(vertex_count);
    }

    auto HostGraph::has_edge(int u, int v) const -> bool
    {
        return std::binary_search(edges.begin(), edges.end(), pair{ std::min(u, v), std::max(u, v) });
    }

    auto to_string(DecompositionRejectionKind k) -> string
    {
        switch (k) {
            case DecompositionRejectionKind::bad_host:           return "bad_host";
            case DecompositionRejectionKind::bad_clique:         return "bad_clique";
            case DecompositionRejectionKind::clique_not_in_host: return "clique_not_in_host";
            case DecompositionRejectionKind::edge_uncovered:     return "edge_uncovered";
            case DecompositionRejectionKind::edge_covered_twice: return "edge_covered_twice";
        }
        return "unknown";
    }

    auto CliqueDecomposition::canonical_key() const -> string
    {
        string result;
        for (std::size_t t = 0 ; t < _cliques.size() ; ++t) {
            if (t != 0)
                result += '|';
            for (std::size_t x = 0 ; x < _cliques[t].size() ; ++x) {
                if (x != 0)
                    result += '-';
                result += to_string(_cliques[t][x]);
            }
        }
        return result;
    }

    namespace
    {
        auto edge_name(pair<int, int> e) -> string
        {
            return "{" + to_string(e.first) + "," + to_string(e.second) + "}";
        }

        auto reject(DecompositionRejectionKind kind, string message, pair<int, int> edge = { 0, 0 })
            -> variant<CliqueDecomposition, DecompositionRejection>
        {
            return DecompositionRejection{ kind, move(message), edge };
        }
    }

    auto validate_decomposition(HostGraph host, vector<vector<int>> cliques)
        -> variant<CliqueDecomposition, DecompositionRejection>
    {
        int n = host.vertex_count;
        if (n < 0)
            return reject(DecompositionRejectionKind::bad_host, "host vertex count is negative");

        for (auto & [u, v] : host.edges) {
            if (u == v)
                return reject(DecompositionRejectionKind::bad_host, "host has a loop at vertex " + to_string(u), { u, v });
            if (u < 1 || u > n || v < 1 || v > n)
                return reject(DecompositionRejectionKind::bad_host, "host edge " + edge_name({ u, v })
                        + " leaves the vertex range 1.." + to_string(n), { u, v });
            if (u > v)
                std::swap(u, v);
        }
        std::sort(host.edges.begin(), host.edges.end());
        if (auto dup = std::adjacent_find(host.edges.begin(), host.edges.end()) ; dup != host.edges.end())
            return reject(DecompositionRejectionKind::bad_host, "host edge " + edge_name(*dup) + " listed twice", *dup);

        for (std::size_t t = 0 ; t < cliques.size() ; ++t) {
            auto & q = cliques[t];
            std::sort(q.begin(), q.end());
            if (q.size() < 2)
                return reject(DecompositionRejectionKind::bad_clique, "clique " + to_string(t + 1)
                        + " has fewer than two vertices");
            if (q.front() < 1 || q.back() > n)
                return reject(DecompositionRejectionKind::bad_clique, "clique " + to_string(t + 1)
                        + " leaves the vertex range 1.." + to_string(n));
            if (std::adjacent_find(q.begin(), q.end()) != q.end())
                return reject(DecompositionRejectionKind::bad_clique, "clique " + to_string(t + 1)
                        + " repeats a vertex");
        }

        vector<int> cover(std::size_t(n + 1) * (n + 1), 0);
        for (std::size_t t = 0 ; t < cliques.size() ; ++t) {
            auto & q = cliques[t];
            for (std::size_t a = 0 ; a < q.size() ; ++a)
                for (std::size_t b = a + 1 ; b < q.size() ; ++b) {
                    if (! host.has_edge(q[a], q[b]))
                        return reject(DecompositionRejectionKind::clique_not_in_host, "clique " + to_string(t + 1)
                                + " uses " + edge_name({ q[a], q[b] }) + ", which is not a host edge", { q[a], q[b] });
                    ++cover[q[a] * (n + 1) + q[b]];
                }
        }

        for (auto & e : host.edges) {
            int c = cover[e.first * (n + 1) + e.second];
            if (c == 0)
                return reject(DecompositionRejectionKind::edge_uncovered, "host edge " + edge_name(e)
                        + " is not covered by any clique", e);
            if (c > 1)
                return reject(DecompositionRejectionKind::edge_covered_twice, "host edge " + edge_name(e)
                        + " is covered by " + to_string(c) + " cliques", e);
        }

        std::sort(cliques.begin(), cliques.end(), [] (const vector<int> & a, const vector<int> & b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
                });

        CliqueDecomposition d;
        d._host = move(host);
        d._cliques = move(cliques);
        return d;
    }

    auto make_decomposition(HostGraph host, vector<vector<int>> cliques) -> CliqueDecomposition
    {
        auto result = validate_decomposition(move(host), move(cliques));
        if (auto r = get_if<DecompositionRejection>(&result))
            throw DecompositionError(r->message);
        return std::get<CliqueDecomposition>(move(result));
    }

    auto intersection_graph(const CliqueDecomposition & d) -> HostGraph
    {
        vector<vector<int>> through(d.n() + 1);
        for (int t = 1 ; t <= d.size() ; ++t)
            for (int v : d.clique(t))
                through[v].push_back(t);

        // edge-disjoint cliques meet in at most one vertex, so each pair appears once
        HostGraph result{ d.size(), { } };
        for (auto & list : through)
            for (std::size_t a = 0 ; a < list.size() ; ++a)
                for (std::size_t b = a + 1 ; b < list.size() ; ++b)
                    result.edges.emplace_back(list[a], list[b]);
        std::sort(result.edges.begin(), result.edges.end());
        return result;
    }

    auto check_intersection_coloring(const CliqueDecomposition & d, const DecompositionColoring & c) -> DecompositionCheck
    {
        if (std::ssize(c.colors) != d.size())
            throw DecompositionError("decomposition colouring has " + to_string(c.colors.size())
                    + " colours for " + to_string(d.size()) + " cliques");

        DecompositionCheck result;
        for (int t = 1 ; t <= d.size() ; ++t)
            if (c.colors[t - 1] < 1 || c.colors[t - 1] > c.palette) {
                result.proper = false;
                result.out_of_palette = t;
                return result;
            }

        for (auto & [s, t] : intersection_graph(d).edges)
            if (c.colors[s - 1] == c.colors[t - 1]) {
                result.proper = false;
                result.conflict = pair{ s, t };
                return result;
            }

        return result;
    }

    auto check_decomposition_coloring(const CliqueDecomposition & d, const DecompositionColoring & c) -> DecompositionCheck
    {
        if (c.palette > d.n()) {
            if (std::ssize(c.colors) != d.size())
                throw DecompositionError("decomposition colouring has " + to_string(c.colors.size())
                        + " colours for " + to_string(d.size()) + " cliques");
            DecompositionCheck result;
            result.proper = false;
            result.palette_too_large = true;
            return result;
        }
        return check_intersection_coloring(d, c);
    }

    auto efl_to_decomposition(const EflGraph & g) -> CliqueDecomposition
    {
        vector<vector<int>> cliques;
        vector<pair<int, int>> edges;
        for (int v : g.shared()) {
            auto & m = g.memberships(v);
            cliques.push_back(m);
            for (std::size_t a = 0 ; a < m.size() ; ++a)
                for (std::size_t b = a + 1 ; b < m.size() ; ++b)
                    edges.emplace_back(m[a], m[b]);
        }
        return make_decomposition(HostGraph{ g.n(), move(edges) }, move(cliques));
    }

    auto decomposition_to_efl(const CliqueDecomposition & d) -> EflGraph
    {
        int n = d.n();
        if (n < 2)
            throw DecompositionError("n must be >= 2 (got " + to_string(n) + ")");

        vector<vector<VertexId>> cliques(n);
        for (int t = 1 ; t <= d.size() ; ++t) {
            auto & q = d.clique(t);
            VertexId id = q.size() == 2 ? VertexId{ SharedVertexId{ q[0], q[1] } } : VertexId{ GeneralVertexId{ t } };
            for (int v : q)
                cliques[v - 1].push_back(id);
        }

        for (int c = 1 ; c <= n ; ++c) {
            auto & q = cliques[c - 1];
            if (std::ssize(q) > n)
                throw DecompositionError("host vertex " + to_string(c) + " lies in " + to_string(q.size())
                        + " decomposition cliques, but a defining " + to_string(n) + "-clique holds at most "
                        + to_string(n) + " shared vertices");
            for (int slot = 1, pad = n - int(q.size()) ; slot <= pad ; ++slot)
                q.push_back(UnsharedVertexId{ c, slot });
        }

        auto result = validate(cliques, n);
        if (auto r = get_if<Rejection>(&result))
            throw DecompositionError("decomposition does not give an EFL graph: " + r->message);
        return std::get<EflGraph>(move(result));
    }

    auto transport_coloring(const CliqueDecomposition & d, const DecompositionColoring & c, const EflGraph & g)
        -> FullColoring
    {
        if (d.n() != g.n())
            throw DecompositionError("decomposition has " + to_string(d.n()) + " host vertices but the graph has "
                    + to_string(g.n()) + " defining cliques");
        if (std::ssize(c.colors) != d.size())
            throw DecompositionError("decomposition colouring has " + to_string(c.colors.size())
                    + " colours for " + to_string(d.size()) + " cliques");
        if (std::ssize(g.shared()) != d.size())
            throw DecompositionError("graph has " + to_string(g.shared().size()) + " shared vertices but the "
                    "decomposition has " + to_string(d.size()) + " cliques");

        map<vector<int>, int> by_vertex_set;
        for (int t = 1 ; t <= d.size() ; ++t)
            by_vertex_set.emplace(d.clique(t), t);

        FullColoring result{ c.palette, { } };
        for (int v : g.shared()) {
            auto it = by_vertex_set.find(g.memberships(v));
            if (it == by_vertex_set.end())
                throw DecompositionError("shared vertex " + to_string(g.vertices()[v])
                        + " has no matching decomposition clique");
            result.colors.emplace(g.vertices()[v], c.colors[it->second - 1]);
        }
        return result;
    }

    auto to_dot(const HostGraph & g, const string & name) -> string
    {
        std::ostringstream out;
        out << "graph " << name << " {\n";
        for (int v = 1 ; v <= g.vertex_count ; ++v)
            out << "  " << v << ";\n";
        for (auto & [u, v] : g.edges)
            out << "  " << u << " -- " << v << ";\n";
        out << "}\n";
        return out.str();
    }
}
