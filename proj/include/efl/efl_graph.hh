/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EFL_GUARD_EFL_GRAPH_HH
#define EFL_GUARD_EFL_GRAPH_HH 1

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace efl
{
    /// A vertex shared by the defining cliques Q_i and Q_j. Always stored with i < j.
    struct SharedVertexId
    {
        int i = 0;
        int j = 0;

        auto operator<=> (const SharedVertexId &) const = default;
    };

    /// The slot-th unshared vertex of defining clique Q_clique (slots count from 1).
    struct UnsharedVertexId
    {
        int clique = 0;
        int slot = 0;

        auto operator<=> (const UnsharedVertexId &) const = default;
    };

    /// Opaque vertex name, used when a shared vertex may lie in three or more cliques.
    struct GeneralVertexId
    {
        int id = 0;

        auto operator<=> (const GeneralVertexId &) const = default;
    };

    /* Variant ordering puts every shared vertex before every unshared one,
     * and both before general ids. All sorted output relies on this. */
    using VertexId = std::variant<SharedVertexId, UnsharedVertexId, GeneralVertexId>;

    auto make_shared_vertex(int a, int b) -> SharedVertexId;

    auto to_string(const VertexId &) -> std::string;
    auto to_string(const SharedVertexId &) -> std::string;

    class EflError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class UnknownVertex : public EflError
    {
        public:
            explicit UnknownVertex(const VertexId & v);
    };

    enum class RejectionKind
    {
        n_too_small,
        clique_count,
        clique_order,
        duplicate_vertex,
        pairwise_intersection,
        identity_mismatch,
        pair_out_of_range,
        duplicate_pair
    };

    auto to_string(RejectionKind) -> std::string;

    /// Why a clique list is not an EFL graph. Only the first violation is reported.
    struct Rejection
    {
        RejectionKind kind;
        std::string message;
        int first_clique = 0;   // 1-based, 0 when not applicable
        int second_clique = 0;
    };

    class RejectedGraph : public EflError
    {
        public:
            explicit RejectedGraph(Rejection r);

            auto rejection() const -> const Rejection & { return _rejection; }

        private:
            Rejection _rejection;
    };

    /**
     * A union of n cliques Q_1..Q_n of order n, any two of which meet in at
     * most one vertex. Stored by clique membership; adjacency is derived.
     *
     * Vertices are kept sorted by VertexId, and a vertex's position in that
     * order is its dense index. Immutable once built.
     */
    class EflGraph
    {
        public:
            auto n() const -> int { return _n; }
            auto vertex_count() const -> std::size_t { return _vertices.size(); }

            /// All vertices, sorted.
            auto vertices() const -> const std::vector<VertexId> & { return _vertices; }

            /// Dense vertex indices of Q_clique, ascending. clique is 1-based.
            auto clique(int clique) const -> const std::vector<int> &;

            /// 1-based indices of the defining cliques containing the vertex, ascending.
            auto memberships(int vertex_index) const -> const std::vector<int> & { return _memberships.at(vertex_index); }

            /// Dense indices of vertices lying in at least two cliques, ascending.
            auto shared() const -> const std::vector<int> & { return _shared; }

            auto is_shared(int vertex_index) const -> bool { return _memberships.at(vertex_index).size() >= 2; }

            auto contains(const VertexId &) const -> bool;

            /// Throws UnknownVertex.
            auto index_of(const VertexId &) const -> int;

            /// True iff u != v and some defining clique contains both. Throws UnknownVertex.
            auto adjacent(const VertexId & u, const VertexId & v) const -> bool;
            auto adjacent_indices(int u, int v) const -> bool;

            /// Dense-index neighbour lists, materialized on request for the solvers.
            auto adjacency_lists() const -> std::vector<std::vector<int>>;

            /// True iff every shared vertex lies in exactly two defining cliques.
            auto every_shared_in_two() const -> bool;

            /// The membership sets of all shared vertices, sorted. Identifies the
            /// sharing structure independently of vertex names.
            auto sharing_structure() const -> std::vector<std::vector<int>>;

            /// The defining cliques as explicit vertex lists.
            auto clique_lists() const -> std::vector<std::vector<VertexId>>;

            friend auto operator== (const EflGraph & a, const EflGraph & b) -> bool
            {
                return a._n == b._n && a._vertices == b._vertices && a._cliques == b._cliques;
            }

        private:
            friend auto validate(const std::vector<std::vector<VertexId>> & cliques, int n)
                -> std::variant<EflGraph, Rejection>;

            EflGraph() = default;

            int _n = 0;
            std::vector<VertexId> _vertices;
            std::map<VertexId, int> _index;
            std::vector<std::vector<int>> _cliques;
            std::vector<std::vector<int>> _memberships;
            std::vector<int> _shared;
    };

    /**
     * Checks every EFL invariant on an explicit clique list and builds the
     * graph. Never throws on bad input: the first violation, in a fixed
     * order (n, clique count, clique orders, duplicates, then clique pairs
     * lexicographically, then vertex naming), is returned instead.
     */
    auto validate(const std::vector<std::vector<VertexId>> & cliques, int n)
        -> std::variant<EflGraph, Rejection>;

    /// An EFL graph in which every shared vertex lies in exactly two cliques,
    /// with shared vertices named by their SharedVertexId.
    class TwoCliqueEflGraph
    {
        public:
            /// Throws RejectedGraph if g has a shared vertex in three or more
            /// cliques, or a shared vertex not named by its clique pair.
            explicit TwoCliqueEflGraph(EflGraph g);

            auto graph() const -> const EflGraph & { return _graph; }
            auto n() const -> int { return _graph.n(); }

            /// Sorted lexicographically.
            auto shared_pairs() const -> const std::vector<SharedVertexId> & { return _pairs; }

        private:
            EflGraph _graph;
            std::vector<SharedVertexId> _pairs;
    };

    /// G_n: every two defining cliques share exactly one vertex. Throws RejectedGraph for n < 2.
    auto build_maximal(int n) -> TwoCliqueEflGraph;

    /// The two-clique EFL graph whose shared vertices are exactly the given
    /// pairs, cliques padded with unshared vertices. Throws RejectedGraph on
    /// n < 2, out-of-range or unsorted pairs, or duplicates.
    auto build_from_pairs(int n, const std::vector<SharedVertexId> & pairs) -> TwoCliqueEflGraph;

    /// Reinterprets a general EFL graph as a two-clique one if every shared
    /// vertex lies in exactly two cliques, renaming vertices to the canonical
    /// scheme. Throws RejectedGraph otherwise.
    auto as_two_clique(const EflGraph & g) -> TwoCliqueEflGraph;

    auto binomial2(long long n) -> long long;
}

#endif
