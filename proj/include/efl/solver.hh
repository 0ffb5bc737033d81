/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EFL_GUARD_SOLVER_HH
#define EFL_GUARD_SOLVER_HH 1

#include <efl/decomposition.hh>
#include <efl/efl_graph.hh>
#include <efl/modular_coloring.hh>

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace efl
{
    struct SearchConfig
    {
        std::uint64_t node_limit = 100'000'000;

        /// In color_decomposition, a vertex may only open the lowest colour
        /// not yet used anywhere. In chromatic_number, Q_1 is precoloured 1..n.
        bool symmetry_fixing = true;

        /// Only true is supported; kept so configurations serialise explicitly.
        bool deterministic_order = true;

        std::uint64_t progress_interval = 1'000'000;
        std::function<void (std::uint64_t nodes)> progress;
    };

    enum class SearchResult
    {
        colorable,
        not_colorable,
        budget_exhausted
    };

    auto to_string(SearchResult) -> std::string;

    class SearchError : public EflError
    {
        public:
            using EflError::EflError;
    };

    /**
     * Exact k-colouring of a graph on dense vertices 0..size-1, by
     * backtracking. Branches on the uncoloured vertex with fewest feasible
     * colours, lowest index on ties, trying colours in ascending order.
     */
    struct GraphColoringProblem
    {
        std::vector<std::vector<int>> adjacency;
        int palette = 0;

        /// 0 for free vertices, otherwise a fixed colour.
        std::vector<Color> precolored;
    };

    struct GraphSearchOutcome
    {
        SearchResult result = SearchResult::not_colorable;
        std::vector<Color> colors;      // filled when colorable
        std::uint64_t nodes = 0;
        std::chrono::nanoseconds elapsed{ 0 };
    };

    /// Throws SearchError if the palette exceeds 64 colours.
    auto solve_coloring(const GraphColoringProblem & problem, const SearchConfig & cfg) -> GraphSearchOutcome;

    struct SearchOutcome
    {
        SearchResult result = SearchResult::not_colorable;
        std::optional<DecompositionColoring> certificate;
        std::uint64_t nodes = 0;
        std::chrono::nanoseconds elapsed{ 0 };
    };

    /// Certificates are checked by check_intersection_coloring before being returned.
    auto color_decomposition(const CliqueDecomposition & d, int palette, const SearchConfig & cfg) -> SearchOutcome;

    struct ChromaticResult
    {
        SearchResult result = SearchResult::colorable;  // colorable, or budget_exhausted
        int chromatic_number = 0;
        int lower_bound = 0;                            // clique bound: n
        FullColoring witness;
        std::uint64_t nodes = 0;
        std::chrono::nanoseconds elapsed{ 0 };
    };

    /**
     * Exact chromatic number of a small EFL graph. Since every defining
     * clique has order n, the search starts at palette n and only climbs
     * if that fails.
     */
    auto chromatic_number(const EflGraph & g, const SearchConfig & cfg) -> ChromaticResult;

    /// Minimum palette for which color_decomposition succeeds, or nullopt on
    /// budget exhaustion. Starts from the size of the largest intersection
    /// clique through a single host vertex.
    auto minimum_palette(const CliqueDecomposition & d, const SearchConfig & cfg) -> std::optional<int>;

    /// Descending-degree greedy colouring of the intersection graph.
    auto greedy_baseline(const CliqueDecomposition & d) -> DecompositionColoring;

    /// Calls visitor once per labelled decomposition of K_n into 2-cliques and
    /// r-cliques. Returns the number of decompositions visited. Throws
    /// SearchError unless 3 <= r <= n; r = n only admits K_n itself as a
    /// single clique besides the all-2-cliques decomposition.
    auto enumerate_problem1(int n, int r, const std::function<void (const CliqueDecomposition &)> & visitor)
        -> std::uint64_t;

    struct SweepOptions
    {
        bool minimum_palettes = false;
        unsigned workers = 1;
    };

    struct SweepReport
    {
        int n = 0;
        int r = 0;
        std::uint64_t instances = 0;
        std::uint64_t colorable = 0;
        std::vector<CliqueDecomposition> not_colorable;
        std::vector<CliqueDecomposition> budget_exhausted;
        std::uint64_t max_nodes = 0;

        /// Canonical key to minimum palette, when requested.
        std::map<std::string, int> minimum_palettes;
    };

    /// Colours every instance from enumerate_problem1(n, r) with palette n.
    /// Instance lists are sorted by canonical key, whatever the worker count.
    auto sweep_problem1(int n, int r, const SearchConfig & cfg, const SweepOptions & options = { }) -> SweepReport;
}

#endif
