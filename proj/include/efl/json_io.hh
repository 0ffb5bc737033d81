/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EFL_GUARD_JSON_IO_HH
#define EFL_GUARD_JSON_IO_HH 1

#include <efl/decomposition.hh>
#include <efl/efl_graph.hh>
#include <efl/modular_coloring.hh>
#include <efl/solver.hh>

#include <json.hpp>

#include <string>

/*
 * JSON forms:
 *
 *   vertex          shared [i, j] | unshared {"clique": c, "slot": s} | general k
 *   graph           {"n", "shared_pairs": [[i, j], ...], "cliques"?: [[vertex, ...], ...]}
 *   coloring        {"palette", "domain": "shared" | "full", "assignments": [{"vertex", "color"}, ...]}
 *   decomposition   {"n", "host_edges": [[u, v], ...] | "complete", "cliques": [[v, ...], ...]}
 *   dec. coloring   {"palette", "assignments": [{"clique": t, "vertices": [...], "color"}, ...]}
 *   sweep report    {"n", "r", "instances", "colorable", "not_colorable", "budget_exhausted", "max_nodes"}
 *
 * Everything written is sorted, so output is byte-stable.
 */

namespace efl
{
    using Json = nlohmann::ordered_json;

    class InputError : public EflError
    {
        public:
            using EflError::EflError;
    };

    auto vertex_to_json(const VertexId &) -> Json;
    auto vertex_from_json(const Json &) -> VertexId;

    /// "cliques" is written only when the graph is not the canonical graph of its shared pairs.
    auto graph_to_json(const EflGraph &) -> Json;

    /// Throws InputError on malformed JSON, RejectedGraph on invariant violations.
    auto graph_from_json(const Json &) -> EflGraph;

    auto coloring_to_json(const FullColoring &, CheckDomain domain) -> Json;
    auto coloring_to_json(const SharedColoring &) -> Json;

    struct ParsedColoring
    {
        FullColoring coloring;
        std::optional<CheckDomain> domain;
    };

    auto coloring_from_json(const Json &) -> ParsedColoring;

    auto decomposition_to_json(const CliqueDecomposition &) -> Json;

    /// Throws InputError on malformed JSON or a rejected decomposition.
    auto decomposition_from_json(const Json &) -> CliqueDecomposition;

    auto decomposition_coloring_to_json(const CliqueDecomposition &, const DecompositionColoring &) -> Json;
    auto decomposition_coloring_from_json(const CliqueDecomposition &, const Json &) -> DecompositionColoring;

    auto sweep_report_to_json(const SweepReport &) -> Json;

    /// Throws InputError if the file cannot be read or does not parse.
    auto read_json_file(const std::string & path) -> Json;
}

#endif
