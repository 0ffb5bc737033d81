/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <efl/efl_graph.hh>

#include <algorithm>
#include <optional>
#include <utility>

using std::get_if;
using std::map;
using std::move;
using std::optional;
using std::pair;
using std::set;
using std::string;
using std::variant;
using std::vector;

namespace efl
{
    using std::to_string;

    auto make_shared_vertex(int a, int b) -> SharedVertexId
    {
        return a < b ? SharedVertexId{ a, b } : SharedVertexId{ b, a };
    }

    auto to_string(const SharedVertexId & v) -> string
    {
        return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
    }

    auto to_string(const VertexId & v) -> string
    {
        struct Visitor
        {
            auto operator() (const SharedVertexId & s) const -> string { return efl::to_string(s); }
            auto operator() (const UnsharedVertexId & u) const -> string
            {
                return "Q" + std::to_string(u.clique) + "." + std::to_string(u.slot);
            }
            auto operator() (const GeneralVertexId & g) const -> string { return "v" + std::to_string(g.id); }
        };
        return std::visit(Visitor{ }, v);
    }

    auto to_string(RejectionKind k) -> string
    {
        switch (k) {
            case RejectionKind::n_too_small:           return "n_too_small";
            case RejectionKind::clique_count:          return "clique_count";
            case RejectionKind::clique_order:          return "clique_order";
            case RejectionKind::duplicate_vertex:      return "duplicate_vertex";
            case RejectionKind::pairwise_intersection: return "pairwise_intersection";
            case RejectionKind::identity_mismatch:     return "identity_mismatch";
            case RejectionKind::pair_out_of_range:     return "pair_out_of_range";
            case RejectionKind::duplicate_pair:        return "duplicate_pair";
        }
        return "unknown";
    }

    UnknownVertex::UnknownVertex(const VertexId & v) :
        EflError("unknown vertex " + efl::to_string(v))
    {
    }

    RejectedGraph::RejectedGraph(Rejection r) :
        EflError(r.message),
        _rejection(move(r))
    {
    }

    auto binomial2(long long n) -> long long
    {
        return n * (n - 1) / 2;
    }

    auto EflGraph::clique(int c) const -> const vector<int> &
    {
        if (c < 1 || c > _n)
            throw EflError("clique index " + std::to_string(c) + " out of range 1.." + std::to_string(_n));
        return _cliques[c - 1];
    }

    auto EflGraph::contains(const VertexId & v) const -> bool
    {
        return _index.contains(v);
    }

    auto EflGraph::index_of(const VertexId & v) const -> int
    {
        auto it = _index.find(v);
        if (it == _index.end())
            throw UnknownVertex(v);
        return it->second;
    }

    auto EflGraph::adjacent_indices(int u, int v) const -> bool
    {
        if (u == v)
            return false;
        auto & a = _memberships.at(u);
        auto & b = _memberships.at(v);
        auto i = a.begin();
        auto j = b.begin();
        while (i != a.end() && j != b.end()) {
            if (*i == *j)
                return true;
            else if (*i < *j)
                ++i;
            else
                ++j;
        }
        return false;
    }

    auto EflGraph::adjacent(const VertexId & u, const VertexId & v) const -> bool
    {
        return adjacent_indices(index_of(u), index_of(v));
    }

    auto EflGraph::adjacency_lists() const -> vector<vector<int>>
    {
        vector<vector<int>> result(_vertices.size());
        for (auto & q : _cliques)
            for (int u : q)
                for (int v : q)
                    if (u != v)
                        result[u].push_back(v);

        // a vertex pair lies in at most one clique, so no duplicates arise
        for (auto & r : result)
            std::sort(r.begin(), r.end());
        return result;
    }

    auto EflGraph::every_shared_in_two() const -> bool
    {
        return std::all_of(_shared.begin(), _shared.end(),
                [&] (int v) { return _memberships[v].size() == 2; });
    }

    auto EflGraph::sharing_structure() const -> vector<vector<int>>
    {
        vector<vector<int>> result;
        for (int v : _shared)
            result.push_back(_memberships[v]);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto EflGraph::clique_lists() const -> vector<vector<VertexId>>
    {
        vector<vector<VertexId>> result;
        for (auto & q : _cliques) {
            auto & list = result.emplace_back();
            for (int v : q)
                list.push_back(_vertices[v]);
        }
        return result;
    }

    namespace
    {
        auto reject(RejectionKind kind, string message, int a = 0, int b = 0) -> variant<EflGraph, Rejection>
        {
            return Rejection{ kind, move(message), a, b };
        }
    }

    auto validate(const vector<vector<VertexId>> & cliques, int n) -> variant<EflGraph, Rejection>
    {
        if (n < 2)
            return reject(RejectionKind::n_too_small, "n must be >= 2 (got " + to_string(n) + ")");

        if (cliques.size() != std::size_t(n))
            return reject(RejectionKind::clique_count, "expected " + to_string(n) + " defining cliques, got "
                    + to_string(cliques.size()));

        for (std::size_t c = 0 ; c < cliques.size() ; ++c)
            if (cliques[c].size() != std::size_t(n))
                return reject(RejectionKind::clique_order, "clique Q" + to_string(c + 1) + " has "
                        + to_string(cliques[c].size()) + " vertices, expected " + to_string(n), c + 1);

        vector<vector<VertexId>> sorted_cliques;
        for (std::size_t c = 0 ; c < cliques.size() ; ++c) {
            auto & s = sorted_cliques.emplace_back(cliques[c]);
            std::sort(s.begin(), s.end());
            auto dup = std::adjacent_find(s.begin(), s.end());
            if (dup != s.end())
                return reject(RejectionKind::duplicate_vertex, "clique Q" + to_string(c + 1) + " lists vertex "
                        + to_string(*dup) + " twice", c + 1);
        }

        EflGraph g;
        g._n = n;

        map<VertexId, vector<int>> membership;
        for (int c = 0 ; c < n ; ++c)
            for (auto & v : sorted_cliques[c])
                membership[v].push_back(c + 1);

        // two cliques meeting twice show up as a clique pair counted twice
        vector<int> meets(n * n, 0);
        optional<pair<int, int>> worst;
        for (auto & [v, m] : membership)
            for (std::size_t x = 0 ; x < m.size() ; ++x)
                for (std::size_t y = x + 1 ; y < m.size() ; ++y)
                    if (++meets[(m[x] - 1) * n + (m[y] - 1)] == 2 && (! worst || pair{ m[x], m[y] } < *worst))
                        worst = pair{ m[x], m[y] };
        if (worst) {
            auto [a, b] = *worst;
            int count = 0;
            for (auto & [v, m] : membership)
                if (std::binary_search(m.begin(), m.end(), a) && std::binary_search(m.begin(), m.end(), b))
                    ++count;
            return reject(RejectionKind::pairwise_intersection, "cliques Q" + to_string(a) + " and Q"
                    + to_string(b) + " share " + to_string(count) + " vertices", a, b);
        }

        for (auto & [v, m] : membership) {
            g._index.emplace(v, int(g._vertices.size()));
            g._vertices.push_back(v);
            g._memberships.push_back(m);
        }

        // names must agree with where vertices actually sit
        for (std::size_t v = 0 ; v < g._vertices.size() ; ++v) {
            auto & m = g._memberships[v];
            if (auto s = get_if<SharedVertexId>(&g._vertices[v])) {
                if (! (s->i < s->j && m == vector<int>{ s->i, s->j }))
                    return reject(RejectionKind::identity_mismatch, "vertex " + to_string(g._vertices[v])
                            + " does not lie in exactly the cliques it names", m.front(), m.size() > 1 ? m[1] : 0);
            }
            else if (auto u = get_if<UnsharedVertexId>(&g._vertices[v])) {
                if (! (m.size() == 1 && m.front() == u->clique && u->slot >= 1))
                    return reject(RejectionKind::identity_mismatch, "vertex " + to_string(g._vertices[v])
                            + " is not an unshared vertex of the clique it names", m.front(), m.size() > 1 ? m[1] : 0);
            }
        }

        g._cliques.resize(n);
        for (std::size_t v = 0 ; v < g._vertices.size() ; ++v) {
            for (int c : g._memberships[v])
                g._cliques[c - 1].push_back(int(v));
            if (g._memberships[v].size() >= 2)
                g._shared.push_back(int(v));
        }

        return g;
    }

    TwoCliqueEflGraph::TwoCliqueEflGraph(EflGraph g) :
        _graph(move(g))
    {
        for (int v : _graph.shared()) {
            auto & m = _graph.memberships(v);
            if (m.size() != 2)
                throw RejectedGraph(Rejection{ RejectionKind::identity_mismatch, "shared vertex "
                        + to_string(_graph.vertices()[v]) + " lies in " + to_string(m.size())
                        + " defining cliques; the modular colouring needs exactly two", m[0], m[1] });
            auto s = get_if<SharedVertexId>(&_graph.vertices()[v]);
            if (! s)
                throw RejectedGraph(Rejection{ RejectionKind::identity_mismatch, "shared vertex "
                        + to_string(_graph.vertices()[v]) + " is not named by its clique pair", m[0], m[1] });
            _pairs.push_back(*s);
        }
        // shared vertices come first in the vertex order, so _pairs is already sorted
    }

    auto build_from_pairs(int n, const vector<SharedVertexId> & pairs) -> TwoCliqueEflGraph
    {
        if (n < 2)
            throw RejectedGraph(Rejection{ RejectionKind::n_too_small, "n must be >= 2 (got " + to_string(n) + ")" });

        set<SharedVertexId> seen;
        for (auto & p : pairs) {
            if (! (1 <= p.i && p.i < p.j && p.j <= n))
                throw RejectedGraph(Rejection{ RejectionKind::pair_out_of_range, "shared pair " + to_string(p)
                        + " is not of the form (i,j) with 1 <= i < j <= " + to_string(n) });
            if (! seen.insert(p).second)
                throw RejectedGraph(Rejection{ RejectionKind::duplicate_pair, "shared pair " + to_string(p)
                        + " listed twice", p.i, p.j });
        }

        vector<vector<VertexId>> cliques(n);
        for (auto & p : seen) {
            cliques[p.i - 1].push_back(p);
            cliques[p.j - 1].push_back(p);
        }
        for (int c = 0 ; c < n ; ++c)
            for (int slot = 1, pad = n - int(cliques[c].size()) ; slot <= pad ; ++slot)
                cliques[c].push_back(UnsharedVertexId{ c + 1, slot });

        auto result = validate(cliques, n);
        if (auto r = get_if<Rejection>(&result))
            throw RejectedGraph(*r);
        return TwoCliqueEflGraph(std::get<EflGraph>(move(result)));
    }

    auto build_maximal(int n) -> TwoCliqueEflGraph
    {
        vector<SharedVertexId> pairs;
        for (int i = 1 ; i <= n ; ++i)
            for (int j = i + 1 ; j <= n ; ++j)
                pairs.push_back({ i, j });
        return build_from_pairs(n, pairs);
    }

    auto as_two_clique(const EflGraph & g) -> TwoCliqueEflGraph
    {
        vector<SharedVertexId> pairs;
        for (int v : g.shared()) {
            auto & m = g.memberships(v);
            if (m.size() != 2)
                throw RejectedGraph(Rejection{ RejectionKind::identity_mismatch, "shared vertex "
                        + to_string(g.vertices()[v]) + " lies in " + to_string(m.size())
                        + " defining cliques; the modular colouring needs exactly two", m[0], m[1] });
            pairs.push_back({ m[0], m[1] });
        }
        std::sort(pairs.begin(), pairs.end());
        return build_from_pairs(g.n(), pairs);
    }
}
