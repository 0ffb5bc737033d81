/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EFL_GUARD_MODULAR_COLORING_HH
#define EFL_GUARD_MODULAR_COLORING_HH 1

#include <efl/efl_graph.hh>

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace efl
{
    /// Colours are 1..palette. Residues are taken in {1, ..., t}, so 0 never appears.
    using Color = int;

    template <typename Key_>
    struct Coloring
    {
        int palette = 0;
        std::map<Key_, Color> colors;

        auto operator== (const Coloring &) const -> bool = default;
    };

    /// Colours of shared vertices, keyed by clique pair.
    using SharedColoring = Coloring<SharedVertexId>;

    /// Colours keyed by arbitrary vertex identity; total on all vertices when
    /// produced by extend_to_full.
    using FullColoring = Coloring<VertexId>;

    /// Edge colouring of K_n, keyed by (i, j) with 1 <= i < j <= n.
    using EdgeColoring = std::map<std::pair<int, int>, Color>;

    class ColoringError : public EflError
    {
        public:
            using EflError::EflError;
    };

    /// x mod t written in the residue system {1, ..., t}.
    auto residue(long long x, int t) -> Color;

    /// Closed-form colour of (i, j) for even n, palette n - 1.
    auto even_formula(int n, SharedVertexId v) -> Color;

    /// Closed-form colour of (i, j) for odd n, palette n.
    auto odd_formula(int n, SharedVertexId v) -> Color;

    /// Throws ColoringError on odd n or invalid pairs.
    auto color_shared_even(int n, const std::vector<SharedVertexId> & pairs) -> SharedColoring;

    /// Throws ColoringError on even n or invalid pairs.
    auto color_shared_odd(int n, const std::vector<SharedVertexId> & pairs) -> SharedColoring;

    /**
     * Colours the shared vertices of g, dispatching on the parity of n. The
     * palette is n - 1 for even n and n for odd n, regardless of how many
     * pairs are actually present.
     */
    auto color_shared(const TwoCliqueEflGraph & g) -> SharedColoring;

    /// The used-colour sets C_i of each defining clique, indexed from 1 (index 0 unused).
    struct ExtensionState
    {
        std::vector<std::set<Color>> used;
    };

    auto extension_state(const EflGraph & g, const FullColoring & shared) -> ExtensionState;

    /**
     * Extends a colouring of the shared vertices of g to all of g with
     * palette n. Within each clique Q_i, ascending, the unshared vertices in
     * ascending vertex order receive the free colours {1..n} \ C_i in
     * ascending order.
     *
     * Throws ColoringError naming the clique if the shared colouring is
     * missing a shared vertex, repeats a colour within a clique, or uses a
     * colour outside 1..n.
     */
    auto extend_to_full(const EflGraph & g, const FullColoring & shared) -> FullColoring;
    auto extend_to_full(const TwoCliqueEflGraph & g, const SharedColoring & shared) -> FullColoring;

    /// Circle-method 1-factorization of K_n: n - 1 colours for even n, n for odd n.
    auto round_robin_edge_coloring(int n) -> EdgeColoring;

    /// Assigns each shared vertex (i, j) the colour of edge ij.
    auto transport_edge_coloring(const TwoCliqueEflGraph & g, const EdgeColoring & edges, int palette) -> SharedColoring;

    auto to_vertex_coloring(const SharedColoring & c) -> FullColoring;

    enum class CheckDomain
    {
        shared_vertices,
        all_vertices
    };

    enum class ViolationKind
    {
        monochromatic_edge,
        color_out_of_palette
    };

    struct ProperViolation
    {
        ViolationKind kind;
        VertexId first;
        VertexId second;       // equals first for color_out_of_palette
        Color color;
    };

    struct ProperCheck
    {
        bool proper = true;
        std::optional<ProperViolation> violation;

        explicit operator bool() const { return proper; }
    };

    /**
     * Checks that no edge of g with both ends in the colouring's domain is
     * monochromatic. On failure, reports the lexicographically first
     * violating pair (u, v), u < v.
     *
     * Throws ColoringError if the colouring is not total on the domain or
     * names a vertex outside it.
     */
    auto check_proper(const EflGraph & g, const FullColoring & coloring, CheckDomain domain) -> ProperCheck;
    auto check_proper(const EflGraph & g, const SharedColoring & coloring) -> ProperCheck;

    auto to_string(const ProperViolation &) -> std::string;
}

#endif
