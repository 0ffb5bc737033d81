/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EFL_GUARD_DECOMPOSITION_HH
#define EFL_GUARD_DECOMPOSITION_HH 1

#include <efl/efl_graph.hh>
#include <efl/modular_coloring.hh>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace efl
{
    /// A simple graph on vertices 1..vertex_count. Edges are (u, v) with u < v, sorted.
    struct HostGraph
    {
        int vertex_count = 0;
        std::vector<std::pair<int, int>> edges;

        static auto complete(int n) -> HostGraph;

        auto is_complete() const -> bool;
        auto has_edge(int u, int v) const -> bool;

        auto operator== (const HostGraph &) const -> bool = default;
    };

    enum class DecompositionRejectionKind
    {
        bad_host,
        bad_clique,
        clique_not_in_host,
        edge_uncovered,
        edge_covered_twice
    };

    auto to_string(DecompositionRejectionKind) -> std::string;

    struct DecompositionRejection
    {
        DecompositionRejectionKind kind;
        std::string message;
        std::pair<int, int> edge{ 0, 0 };
    };

    /**
     * A host graph together with cliques D_1..D_k whose edge sets partition
     * the host's edges. Only obtainable through validate_decomposition, so a
     * value of this type always satisfies the partition property.
     *
     * Cliques are held in canonical order: by size, then lexicographically
     * by sorted vertex set. Clique indices t are 1-based in that order.
     */
    class CliqueDecomposition
    {
        public:
            auto host() const -> const HostGraph & { return _host; }
            auto n() const -> int { return _host.vertex_count; }
            auto size() const -> int { return int(_cliques.size()); }

            auto cliques() const -> const std::vector<std::vector<int>> & { return _cliques; }

            /// 1-based.
            auto clique(int t) const -> const std::vector<int> & { return _cliques.at(t - 1); }

            /// Stable text key, e.g. "1-2-3|1-4|2-4", used to compare and sort instances.
            auto canonical_key() const -> std::string;

            auto operator== (const CliqueDecomposition &) const -> bool = default;

        private:
            friend auto validate_decomposition(HostGraph host, std::vector<std::vector<int>> cliques)
                -> std::variant<CliqueDecomposition, DecompositionRejection>;

            CliqueDecomposition() = default;

            HostGraph _host;
            std::vector<std::vector<int>> _cliques;
    };

    class DecompositionError : public EflError
    {
        public:
            using EflError::EflError;
    };

    /**
     * Checks that host is simple and that every host edge lies in exactly one
     * of the cliques, each of which must be complete in host. Reports the
     * first problem only; coverage problems are reported for the
     * lexicographically first offending edge.
     */
    auto validate_decomposition(HostGraph host, std::vector<std::vector<int>> cliques)
        -> std::variant<CliqueDecomposition, DecompositionRejection>;

    /// Throws DecompositionError carrying the rejection message.
    auto make_decomposition(HostGraph host, std::vector<std::vector<int>> cliques) -> CliqueDecomposition;

    /// The graph on clique indices 1..k with s ~ t iff D_s and D_t share a host vertex.
    auto intersection_graph(const CliqueDecomposition & d) -> HostGraph;

    /// Colour of D_t at colors[t - 1].
    struct DecompositionColoring
    {
        int palette = 0;
        std::vector<Color> colors;

        auto operator== (const DecompositionColoring &) const -> bool = default;
    };

    struct DecompositionCheck
    {
        bool proper = true;
        std::optional<std::pair<int, int>> conflict;    // clique indices s < t
        std::optional<int> out_of_palette;              // clique index
        bool palette_too_large = false;

        explicit operator bool() const { return proper; }
    };

    /// Proper on the intersection graph, all colours within 1..c.palette.
    /// Throws DecompositionError if c does not colour every clique.
    auto check_intersection_coloring(const CliqueDecomposition & d, const DecompositionColoring & c) -> DecompositionCheck;

    /// As check_intersection_coloring, and additionally requires c.palette <= n.
    auto check_decomposition_coloring(const CliqueDecomposition & d, const DecompositionColoring & c) -> DecompositionCheck;

    /// One host vertex per defining clique, one decomposition clique per shared vertex.
    auto efl_to_decomposition(const EflGraph & g) -> CliqueDecomposition;

    /**
     * One defining n-clique per host vertex and one shared vertex per
     * decomposition clique, lying in exactly the cliques it names. Two-vertex
     * cliques give SharedVertexId vertices, larger ones GeneralVertexId{t}.
     * Throws DecompositionError if n < 2 or a host vertex lies in more than n
     * decomposition cliques.
     */
    auto decomposition_to_efl(const CliqueDecomposition & d) -> EflGraph;

    /// Colours each shared vertex of g by the decomposition clique with the
    /// same membership set. Throws DecompositionError if d and g do not match.
    auto transport_coloring(const CliqueDecomposition & d, const DecompositionColoring & c, const EflGraph & g)
        -> FullColoring;

    auto to_dot(const HostGraph & g, const std::string & name) -> std::string;
}

#endif
