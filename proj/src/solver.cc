/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <efl/solver.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

using std::optional;
using std::nullopt;
using std::string;
using std::uint64_t;
using std::vector;

using std::chrono::duration_cast;
using std::chrono::nanoseconds;
using std::chrono::steady_clock;

namespace efl
{
    using std::to_string;

    auto to_string(SearchResult r) -> string
    {
        switch (r) {
            case SearchResult::colorable:        return "colorable";
            case SearchResult::not_colorable:    return "not_colorable";
            case SearchResult::budget_exhausted: return "budget_exhausted";
        }
        return "unknown";
    }

    namespace
    {
        struct BudgetExhausted
        {
        };

        class Colorer
        {
            public:
                Colorer(const GraphColoringProblem & problem, const SearchConfig & cfg) :
                    _adj(problem.adjacency),
                    _palette(problem.palette),
                    _cfg(cfg),
                    _size(int(problem.adjacency.size())),
                    _colors(_size, 0),
                    _counts(std::size_t(_size) * (_palette + 1), 0),
                    _domains(_size, _palette == 64 ? ~uint64_t{ 0 } : (uint64_t{ 1 } << _palette) - 1)
                {
                }

                auto nodes() const -> uint64_t { return _nodes; }
                auto colors() const -> const vector<Color> & { return _colors; }

                /// False if the precolouring already clashes or leaves a vertex without options.
                auto precolor(const vector<Color> & fixed) -> bool
                {
                    for (int v = 0 ; v < _size ; ++v) {
                        Color c = v < std::ssize(fixed) ? fixed[v] : 0;
                        if (c == 0)
                            continue;
                        if (c < 1 || c > _palette || ! (_domains[v] & bit(c)))
                            return false;
                        if (! assign(v, c))
                            return false;
                        _max_used = std::max(_max_used, c);
                    }
                    return true;
                }

                auto search() -> bool
                {
                    int v = choose();
                    if (v == -1)
                        return true;

                    uint64_t options = _domains[v];
                    if (_cfg.symmetry_fixing && _max_used < _palette)
                        options &= (uint64_t{ 1 } << _max_used << 1) - 1;   // colours 1..max_used+1

                    while (options) {
                        Color c = std::countr_zero(options) + 1;
                        options &= options - 1;

                        if (++_nodes > _cfg.node_limit)
                            throw BudgetExhausted{ };
                        if (_cfg.progress && _cfg.progress_interval && _nodes % _cfg.progress_interval == 0)
                            _cfg.progress(_nodes);

                        int saved_max = _max_used;
                        _max_used = std::max(_max_used, c);
                        if (assign(v, c) && search())
                            return true;
                        unassign(v, c);
                        _max_used = saved_max;
                    }
                    return false;
                }

            private:
                const vector<vector<int>> & _adj;
                int _palette;
                const SearchConfig & _cfg;
                int _size;
                vector<Color> _colors;
                vector<int> _counts;
                vector<uint64_t> _domains;
                uint64_t _nodes = 0;
                int _max_used = 0;

                static auto bit(Color c) -> uint64_t { return uint64_t{ 1 } << (c - 1); }

                auto count(int v, Color c) -> int & { return _counts[std::size_t(v) * (_palette + 1) + c]; }

                /// Uncoloured vertex with the fewest feasible colours, lowest index on ties; -1 when done.
                auto choose() const -> int
                {
                    int best = -1, best_size = 65;
                    for (int v = 0 ; v < _size ; ++v)
                        if (_colors[v] == 0) {
                            int s = std::popcount(_domains[v]);
                            if (s < best_size) {
                                best = v;
                                best_size = s;
                            }
                        }
                    return best;
                }

                /// Colours v, updating neighbour domains. Returns false on a domain wipeout,
                /// in which case the caller must still unassign.
                auto assign(int v, Color c) -> bool
                {
                    _colors[v] = c;
                    bool ok = true;
                    for (int u : _adj[v])
                        if (count(u, c)++ == 0) {
                            _domains[u] &= ~bit(c);
                            if (_colors[u] == 0 && _domains[u] == 0)
                                ok = false;
                        }
                    return ok;
                }

                auto unassign(int v, Color c) -> void
                {
                    _colors[v] = 0;
                    for (int u : _adj[v])
                        if (--count(u, c) == 0)
                            _domains[u] |= bit(c);
                }
        };
    }

    auto solve_coloring(const GraphColoringProblem & problem, const SearchConfig & cfg) -> GraphSearchOutcome
    {
        if (problem.palette < 0 || problem.palette > 64)
            throw SearchError("palette must lie in 0..64 (got " + to_string(problem.palette) + ")");
        if (cfg.node_limit < 1)
            throw SearchError("node_limit must be at least 1");

        auto start = steady_clock::now();
        GraphSearchOutcome outcome;
        Colorer colorer(problem, cfg);

        try {
            if (colorer.precolor(problem.precolored) && colorer.search()) {
                outcome.result = SearchResult::colorable;
                outcome.colors = colorer.colors();
            }
            else
                outcome.result = SearchResult::not_colorable;
        }
        catch (const BudgetExhausted &) {
            outcome.result = SearchResult::budget_exhausted;
        }

        outcome.nodes = std::min(colorer.nodes(), cfg.node_limit);
        outcome.elapsed = duration_cast<nanoseconds>(steady_clock::now() - start);
        return outcome;
    }

    namespace
    {
        auto intersection_adjacency(const CliqueDecomposition & d) -> vector<vector<int>>
        {
            vector<vector<int>> adj(d.size());
            for (auto & [s, t] : intersection_graph(d).edges) {
                adj[s - 1].push_back(t - 1);
                adj[t - 1].push_back(s - 1);
            }
            return adj;
        }
    }

    auto color_decomposition(const CliqueDecomposition & d, int palette, const SearchConfig & cfg) -> SearchOutcome
    {
        GraphColoringProblem problem{ intersection_adjacency(d), palette, { } };
        auto found = solve_coloring(problem, cfg);

        SearchOutcome outcome{ found.result, nullopt, found.nodes, found.elapsed };
        if (found.result == SearchResult::colorable) {
            DecompositionColoring c{ palette, found.colors };
            auto check = palette <= d.n() ? check_decomposition_coloring(d, c) : check_intersection_coloring(d, c);
            if (! check)
                throw SearchError("internal error: solver produced an improper decomposition colouring");
            outcome.certificate = std::move(c);
        }
        return outcome;
    }

    auto chromatic_number(const EflGraph & g, const SearchConfig & cfg) -> ChromaticResult
    {
        auto start = steady_clock::now();
        ChromaticResult result;
        result.lower_bound = g.n();

        GraphColoringProblem problem{ g.adjacency_lists(), 0, vector<Color>(g.vertex_count(), 0) };
        if (cfg.symmetry_fixing) {
            Color c = 1;
            for (int v : g.clique(1))
                problem.precolored[v] = c++;
        }

        for (int k = g.n() ; k <= int(g.vertex_count()) ; ++k) {
            problem.palette = k;
            auto found = solve_coloring(problem, cfg);
            result.nodes += found.nodes;

            if (found.result == SearchResult::budget_exhausted) {
                result.result = SearchResult::budget_exhausted;
                break;
            }
            if (found.result == SearchResult::colorable) {
                result.result = SearchResult::colorable;
                result.chromatic_number = k;
                result.witness.palette = k;
                for (std::size_t v = 0 ; v < g.vertex_count() ; ++v)
                    result.witness.colors.emplace(g.vertices()[v], found.colors[v]);
                if (! check_proper(g, result.witness, CheckDomain::all_vertices))
                    throw SearchError("internal error: solver produced an improper colouring");
                break;
            }
        }

        result.elapsed = duration_cast<nanoseconds>(steady_clock::now() - start);
        return result;
    }

    auto minimum_palette(const CliqueDecomposition & d, const SearchConfig & cfg) -> optional<int>
    {
        vector<int> through(d.n() + 1, 0);
        for (auto & q : d.cliques())
            for (int v : q)
                ++through[v];
        int lower = d.size() == 0 ? 0 : std::max(1, *std::max_element(through.begin(), through.end()));

        for (int k = lower ; k <= std::max(lower, d.size()) ; ++k) {
            auto outcome = color_decomposition(d, k, cfg);
            if (outcome.result == SearchResult::colorable)
                return k;
            if (outcome.result == SearchResult::budget_exhausted)
                return nullopt;
        }
        throw SearchError("internal error: no palette up to the clique count sufficed");
    }

    auto greedy_baseline(const CliqueDecomposition & d) -> DecompositionColoring
    {
        auto adj = intersection_adjacency(d);
        vector<int> order(d.size());
        for (int t = 0 ; t < d.size() ; ++t)
            order[t] = t;
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return adj[a].size() > adj[b].size(); });

        DecompositionColoring result{ 0, vector<Color>(d.size(), 0) };
        for (int t : order) {
            vector<bool> taken(adj[t].size() + 2, false);
            for (int u : adj[t])
                if (result.colors[u] != 0 && result.colors[u] < std::ssize(taken))
                    taken[result.colors[u]] = true;
            Color c = 1;
            while (taken[c])
                ++c;
            result.colors[t] = c;
            result.palette = std::max(result.palette, c);
        }
        return result;
    }

    namespace
    {
        class Problem1Enumerator
        {
            public:
                Problem1Enumerator(int n, int r, const std::function<void (const CliqueDecomposition &)> & visitor) :
                    _n(n),
                    _r(r),
                    _visitor(visitor),
                    _covered(std::size_t(n + 1) * (n + 1), false)
                {
                }

                auto run() -> uint64_t
                {
                    recurse(1, 2);
                    return _count;
                }

            private:
                int _n, _r;
                const std::function<void (const CliqueDecomposition &)> & _visitor;
                vector<bool> _covered;
                vector<vector<int>> _chosen;
                uint64_t _count = 0;

                auto covered(int u, int v) const -> bool
                {
                    return _covered[std::size_t(std::min(u, v)) * (_n + 1) + std::max(u, v)];
                }

                auto set_clique(const vector<int> & q, bool value) -> void
                {
                    for (std::size_t a = 0 ; a < q.size() ; ++a)
                        for (std::size_t b = a + 1 ; b < q.size() ; ++b)
                            _covered[std::size_t(std::min(q[a], q[b])) * (_n + 1) + std::max(q[a], q[b])] = value;
                }

                auto take(const vector<int> & q, int u, int v) -> void
                {
                    set_clique(q, true);
                    _chosen.push_back(q);
                    recurse(u, v);
                    _chosen.pop_back();
                    set_clique(q, false);
                }

                /// Every edge before (u, v) in lexicographic order is covered.
                auto recurse(int u, int v) -> void
                {
                    while (u < _n && covered(u, v)) {
                        if (++v > _n) {
                            ++u;
                            v = u + 1;
                        }
                    }

                    if (u >= _n) {
                        ++_count;
                        _visitor(make_decomposition(HostGraph::complete(_n), _chosen));
                        return;
                    }

                    take({ u, v }, u, v);

                    vector<int> candidates;
                    for (int w = 1 ; w <= _n ; ++w)
                        if (w != u && w != v && ! covered(u, w) && ! covered(v, w))
                            candidates.push_back(w);

                    vector<int> partial{ u, v };
                    extend(partial, candidates, 0, u, v);
                }

                /// Grows {u, v} to an r-clique of uncovered edges using candidates[from..].
                auto extend(vector<int> & partial, const vector<int> & candidates, std::size_t from, int u, int v) -> void
                {
                    if (std::ssize(partial) == _r) {
                        auto q = partial;
                        std::sort(q.begin(), q.end());
                        take(q, u, v);
                        return;
                    }

                    for (std::size_t x = from ; x < candidates.size() ; ++x) {
                        int w = candidates[x];
                        bool fits = true;
                        for (std::size_t y = 2 ; y < partial.size() && fits ; ++y)
                            if (covered(partial[y], w))
                                fits = false;
                        if (! fits)
                            continue;
                        partial.push_back(w);
                        extend(partial, candidates, x + 1, u, v);
                        partial.pop_back();
                    }
                }
        };
    }

    auto enumerate_problem1(int n, int r, const std::function<void (const CliqueDecomposition &)> & visitor) -> uint64_t
    {
        if (r < 3 || r > n)
            throw SearchError("decomposition sweeps need 3 <= r <= n (got n = " + to_string(n)
                    + ", r = " + to_string(r) + ")");
        return Problem1Enumerator(n, r, visitor).run();
    }

    namespace
    {
        struct SweepPartial
        {
            uint64_t instances = 0;
            uint64_t colorable = 0;
            uint64_t max_nodes = 0;
            vector<CliqueDecomposition> not_colorable;
            vector<CliqueDecomposition> budget_exhausted;
            std::map<string, int> minimum_palettes;

            auto consider(const CliqueDecomposition & d, int palette, const SearchConfig & cfg, bool want_minimum) -> void
            {
                ++instances;
                auto outcome = color_decomposition(d, palette, cfg);
                max_nodes = std::max(max_nodes, outcome.nodes);
                switch (outcome.result) {
                    case SearchResult::colorable:        ++colorable; break;
                    case SearchResult::not_colorable:    not_colorable.push_back(d); break;
                    case SearchResult::budget_exhausted: budget_exhausted.push_back(d); break;
                }
                if (want_minimum)
                    if (auto k = minimum_palette(d, cfg))
                        minimum_palettes.emplace(d.canonical_key(), *k);
            }

            auto merge(SweepPartial && other) -> void
            {
                instances += other.instances;
                colorable += other.colorable;
                max_nodes = std::max(max_nodes, other.max_nodes);
                std::move(other.not_colorable.begin(), other.not_colorable.end(), std::back_inserter(not_colorable));
                std::move(other.budget_exhausted.begin(), other.budget_exhausted.end(), std::back_inserter(budget_exhausted));
                minimum_palettes.merge(other.minimum_palettes);
            }
        };
    }

    auto sweep_problem1(int n, int r, const SearchConfig & cfg, const SweepOptions & options) -> SweepReport
    {
        SweepPartial total;

        if (options.workers <= 1) {
            enumerate_problem1(n, r, [&] (const CliqueDecomposition & d) {
                    total.consider(d, n, cfg, options.minimum_palettes);
                    });
        }
        else {
            vector<CliqueDecomposition> all;
            enumerate_problem1(n, r, [&] (const CliqueDecomposition & d) { all.push_back(d); });

            SearchConfig quiet = cfg;
            quiet.progress = nullptr;

            std::atomic<std::size_t> next{ 0 };
            std::mutex merge_mutex;
            vector<std::jthread> threads;
            for (unsigned w = 0 ; w < options.workers ; ++w)
                threads.emplace_back([&] {
                        SweepPartial mine;
                        for (std::size_t i = next++ ; i < all.size() ; i = next++)
                            mine.consider(all[i], n, quiet, options.minimum_palettes);
                        std::lock_guard lock(merge_mutex);
                        total.merge(std::move(mine));
                        });
            threads.clear();
        }

        auto by_key = [] (const CliqueDecomposition & a, const CliqueDecomposition & b) {
            return a.canonical_key() < b.canonical_key();
        };
        std::sort(total.not_colorable.begin(), total.not_colorable.end(), by_key);
        std::sort(total.budget_exhausted.begin(), total.budget_exhausted.end(), by_key);

        SweepReport report;
        report.n = n;
        report.r = r;
        report.instances = total.instances;
        report.colorable = total.colorable;
        report.max_nodes = total.max_nodes;
        report.not_colorable = std::move(total.not_colorable);
        report.budget_exhausted = std::move(total.budget_exhausted);
        report.minimum_palettes = std::move(total.minimum_palettes);
        return report;
    }
}
