/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <efl/modular_coloring.hh>

#include <algorithm>
#include <numeric>

using std::get_if;
using std::nullopt;
using std::optional;
using std::pair;
using std::set;
using std::string;
using std::vector;

namespace efl
{
    using std::to_string;

    auto residue(long long x, int t) -> Color
    {
        if (t < 1)
            throw ColoringError("residue modulus must be positive");
        long long r = ((x % t) + t) % t;
        return r == 0 ? t : Color(r);
    }

    auto even_formula(int n, SharedVertexId v) -> Color
    {
        if (v.j < n)
            return residue(v.i + v.j, n - 1);
        else
            return residue(2 * v.i, n - 1);
    }

    auto odd_formula(int n, SharedVertexId v) -> Color
    {
        return residue(v.i + v.j, n);
    }

    namespace
    {
        auto check_pairs(int n, const vector<SharedVertexId> & pairs) -> void
        {
            for (auto & p : pairs)
                if (! (1 <= p.i && p.i < p.j && p.j <= n))
                    throw ColoringError("shared pair " + to_string(p) + " is not valid for n = " + std::to_string(n));
        }
    }

    auto color_shared_even(int n, const vector<SharedVertexId> & pairs) -> SharedColoring
    {
        if (n < 2 || n % 2 != 0)
            throw ColoringError("color_shared_even needs even n >= 2 (got " + std::to_string(n)
                    + "); use color_shared_odd for odd n");
        check_pairs(n, pairs);

        SharedColoring result{ n - 1, { } };
        for (auto & p : pairs)
            result.colors.emplace(p, even_formula(n, p));
        return result;
    }

    auto color_shared_odd(int n, const vector<SharedVertexId> & pairs) -> SharedColoring
    {
        if (n < 3 || n % 2 == 0)
            throw ColoringError("color_shared_odd needs odd n >= 3 (got " + std::to_string(n)
                    + "); use color_shared_even for even n");
        check_pairs(n, pairs);

        SharedColoring result{ n, { } };
        for (auto & p : pairs)
            result.colors.emplace(p, odd_formula(n, p));
        return result;
    }

    auto color_shared(const TwoCliqueEflGraph & g) -> SharedColoring
    {
        if (g.n() % 2 == 0)
            return color_shared_even(g.n(), g.shared_pairs());
        else
            return color_shared_odd(g.n(), g.shared_pairs());
    }

    auto to_vertex_coloring(const SharedColoring & c) -> FullColoring
    {
        FullColoring result{ c.palette, { } };
        for (auto & [v, col] : c.colors)
            result.colors.emplace(v, col);
        return result;
    }

    namespace
    {
        /// Dense colour array for the shared vertices of g; 0 marks uncoloured.
        auto dense_shared_colors(const EflGraph & g, const FullColoring & shared) -> vector<Color>
        {
            vector<Color> colors(g.vertex_count(), 0);
            for (auto & [v, c] : shared.colors) {
                if (! g.contains(v))
                    throw ColoringError("colouring names unknown vertex " + to_string(v));
                int idx = g.index_of(v);
                if (! g.is_shared(idx))
                    throw ColoringError("shared colouring assigns a colour to unshared vertex " + to_string(v));
                colors[idx] = c;
            }
            for (int v : g.shared())
                if (colors[v] == 0)
                    throw ColoringError("shared colouring misses shared vertex " + to_string(g.vertices()[v]));
            return colors;
        }
    }

    auto extension_state(const EflGraph & g, const FullColoring & shared) -> ExtensionState
    {
        auto colors = dense_shared_colors(g, shared);
        ExtensionState state;
        state.used.resize(g.n() + 1);
        for (int i = 1 ; i <= g.n() ; ++i)
            for (int v : g.clique(i))
                if (g.is_shared(v))
                    state.used[i].insert(colors[v]);
        return state;
    }

    auto extend_to_full(const EflGraph & g, const FullColoring & shared) -> FullColoring
    {
        int n = g.n();
        auto colors = dense_shared_colors(g, shared);

        for (int i = 1 ; i <= n ; ++i) {
            vector<bool> used(n + 1, false);
            for (int v : g.clique(i)) {
                if (! g.is_shared(v))
                    continue;
                Color c = colors[v];
                if (c < 1 || c > n)
                    throw ColoringError("clique Q" + to_string(i) + ": shared vertex " + to_string(g.vertices()[v])
                            + " has colour " + to_string(c) + " outside palette 1.." + to_string(n));
                if (used[c])
                    throw ColoringError("clique Q" + to_string(i) + ": colour " + to_string(c)
                            + " appears on two shared vertices");
                used[c] = true;
            }

            Color next = 1;
            for (int v : g.clique(i)) {
                if (g.is_shared(v))
                    continue;
                while (used[next])
                    ++next;
                colors[v] = next++;
            }
        }

        FullColoring result{ n, { } };
        for (std::size_t v = 0 ; v < g.vertex_count() ; ++v)
            result.colors.emplace(g.vertices()[v], colors[v]);
        return result;
    }

    auto extend_to_full(const TwoCliqueEflGraph & g, const SharedColoring & shared) -> FullColoring
    {
        return extend_to_full(g.graph(), to_vertex_coloring(shared));
    }

    auto round_robin_edge_coloring(int n) -> EdgeColoring
    {
        if (n < 2)
            throw ColoringError("round_robin_edge_coloring needs n >= 2");

        // odd n: seat a dummy player n + 1, whose games are byes
        int seats_count = n % 2 == 0 ? n : n + 1;
        vector<int> seats(seats_count);
        std::iota(seats.begin(), seats.end(), 1);

        EdgeColoring result;
        for (int round = 1 ; round <= seats_count - 1 ; ++round) {
            for (int k = 0 ; k < seats_count / 2 ; ++k) {
                int a = seats[k], b = seats[seats_count - 1 - k];
                if (a <= n && b <= n)
                    result.emplace(pair{ std::min(a, b), std::max(a, b) }, round);
            }
            // seat 0 stays put, everyone else moves one place round the table
            std::rotate(seats.begin() + 1, seats.end() - 1, seats.end());
        }
        return result;
    }

    auto transport_edge_coloring(const TwoCliqueEflGraph & g, const EdgeColoring & edges, int palette) -> SharedColoring
    {
        SharedColoring result{ palette, { } };
        for (auto & p : g.shared_pairs()) {
            auto it = edges.find({ p.i, p.j });
            if (it == edges.end())
                throw ColoringError("edge colouring has no colour for edge " + to_string(p));
            result.colors.emplace(p, it->second);
        }
        return result;
    }

    auto check_proper(const EflGraph & g, const FullColoring & coloring, CheckDomain domain) -> ProperCheck
    {
        vector<Color> colors(g.vertex_count(), 0);
        for (auto & [v, c] : coloring.colors) {
            if (! g.contains(v))
                throw ColoringError("colouring names unknown vertex " + to_string(v));
            int idx = g.index_of(v);
            if (domain == CheckDomain::shared_vertices && ! g.is_shared(idx))
                throw ColoringError("shared colouring assigns a colour to unshared vertex " + to_string(v));
            colors[idx] = c;
        }

        auto in_domain = [&] (int v) {
            return domain == CheckDomain::all_vertices || g.is_shared(v);
        };

        for (std::size_t v = 0 ; v < g.vertex_count() ; ++v)
            if (in_domain(v) && colors[v] == 0)
                throw ColoringError("colouring is partial: vertex " + to_string(g.vertices()[v]) + " has no colour");

        for (std::size_t v = 0 ; v < g.vertex_count() ; ++v)
            if (in_domain(v) && (colors[v] < 1 || colors[v] > coloring.palette))
                return ProperCheck{ false, ProperViolation{ ViolationKind::color_out_of_palette,
                    g.vertices()[v], g.vertices()[v], colors[v] } };

        // every edge lies inside some clique, so a per-clique scan finds whether any conflict exists
        bool conflict = false;
        vector<int> seen_in(coloring.palette + 1, 0);
        for (int i = 1 ; i <= g.n() && ! conflict ; ++i)
            for (int v : g.clique(i)) {
                if (colors[v] == 0)
                    continue;
                if (seen_in[colors[v]] == i) {
                    conflict = true;
                    break;
                }
                seen_in[colors[v]] = i;
            }

        if (! conflict)
            return ProperCheck{ };

        for (std::size_t u = 0 ; u < g.vertex_count() ; ++u) {
            if (colors[u] == 0)
                continue;
            optional<int> best;
            for (int c : g.memberships(u))
                for (int v : g.clique(c))
                    if (v > int(u) && colors[v] == colors[u] && (! best || v < *best))
                        best = v;
            if (best)
                return ProperCheck{ false, ProperViolation{ ViolationKind::monochromatic_edge,
                    g.vertices()[u], g.vertices()[*best], colors[u] } };
        }

        throw ColoringError("internal error: clique conflict without a violating edge");
    }

    auto check_proper(const EflGraph & g, const SharedColoring & coloring) -> ProperCheck
    {
        return check_proper(g, to_vertex_coloring(coloring), CheckDomain::shared_vertices);
    }

    auto to_string(const ProperViolation & v) -> string
    {
        switch (v.kind) {
            case ViolationKind::monochromatic_edge:
                return "adjacent vertices " + to_string(v.first) + " and " + to_string(v.second)
                    + " both have colour " + std::to_string(v.color);
            case ViolationKind::color_out_of_palette:
                return "vertex " + to_string(v.first) + " has colour " + std::to_string(v.color)
                    + " outside the palette";
        }
        return "unknown violation";
    }
}
