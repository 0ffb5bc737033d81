/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <efl/cli.hh>
#include <efl/decomposition.hh>
#include <efl/efl_graph.hh>
#include <efl/json_io.hh>
#include <efl/modular_coloring.hh>
#include <efl/solver.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace efl::cli
{
    namespace
    {
        auto emit(const string & text, const string & out_path, ostream & out) -> void
        {
            if (out_path.empty()) {
                out << text;
                return;
            }
            std::ofstream file(out_path);
            if (! file)
                throw InputError("cannot write " + out_path);
            file << text;
        }

        auto emit(const Json & j, const string & out_path, ostream & out) -> void
        {
            emit(j.dump(2) + "\n", out_path, out);
        }

        auto read_pairs(const string & path) -> vector<SharedVertexId>
        {
            auto j = read_json_file(path);
            if (j.is_object() && j.contains("shared_pairs"))
                j = j["shared_pairs"];
            if (! j.is_array())
                throw InputError(path + ": expected an array of [i, j] pairs");
            vector<SharedVertexId> pairs;
            for (auto & p : j) {
                if (! p.is_array() || p.size() != 2 || ! p[0].is_number_integer() || ! p[1].is_number_integer())
                    throw InputError(path + ": each pair must be [i, j]");
                pairs.push_back({ p[0].get<int>(), p[1].get<int>() });
            }
            return pairs;
        }

        auto is_decomposition(const Json & j) -> bool
        {
            return j.is_object() && j.contains("host_edges");
        }

        auto progress_to(ostream & err) -> std::function<void (std::uint64_t)>
        {
            return [&err] (std::uint64_t nodes) { err << "... " << nodes << " nodes explored" << std::endl; };
        }

        struct Options
        {
            int n = 0;
            int r = 0;
            string pairs = "all";
            string in, out, graph, coloring;
            bool extend = false;
            bool no_symmetry = false;
            bool minimum_palettes = false;
            std::uint64_t node_limit = 100'000'000;
            unsigned workers = 1;
            string dot_what = "host";
            optional<std::uint64_t> seed;
        };

        auto run_gen(const Options & o, ostream & out) -> int
        {
            auto g = o.pairs == "all" ? build_maximal(o.n) : build_from_pairs(o.n, read_pairs(o.pairs));
            emit(graph_to_json(g.graph()), o.out, out);
            return success;
        }

        auto run_color(const Options & o, ostream & out, ostream & err) -> int
        {
            auto g = graph_from_json(read_json_file(o.in));
            if (! g.every_shared_in_two()) {
                err << "graph has a shared vertex in three or more defining cliques; the closed-form colouring "
                    "does not apply. Use `decompose` and then `sweep` or `chromatic` instead." << std::endl;
                return unsupported;
            }
            auto two = as_two_clique(g);
            auto shared = color_shared(two);

            if (o.extend) {
                auto full = extend_to_full(two, shared);
                auto check = check_proper(two.graph(), full, CheckDomain::all_vertices);
                if (! check)
                    throw EflError("internal error: extended colouring is not proper: " + to_string(*check.violation));
                emit(coloring_to_json(full, CheckDomain::all_vertices), o.out, out);
            }
            else {
                auto check = check_proper(two.graph(), shared);
                if (! check)
                    throw EflError("internal error: shared colouring is not proper: " + to_string(*check.violation));
                emit(coloring_to_json(shared), o.out, out);
            }
            return success;
        }

        auto run_verify(const Options & o, ostream & out, ostream & err) -> int
        {
            auto gj = read_json_file(o.graph);
            auto cj = read_json_file(o.coloring);

            if (is_decomposition(gj)) {
                auto d = decomposition_from_json(gj);
                auto c = decomposition_coloring_from_json(d, cj);
                auto check = check_decomposition_coloring(d, c);
                if (check) {
                    out << "proper " << c.palette << "-colouring of the decomposition" << std::endl;
                    return success;
                }
                if (check.palette_too_large)
                    err << "palette " << c.palette << " exceeds n = " << d.n() << std::endl;
                else if (check.out_of_palette)
                    err << "clique " << *check.out_of_palette << " has a colour outside the palette" << std::endl;
                else
                    err << "intersecting cliques " << check.conflict->first << " and " << check.conflict->second
                        << " share colour " << c.colors[check.conflict->first - 1] << std::endl;
                return negative;
            }

            auto g = graph_from_json(gj);
            auto parsed = coloring_from_json(cj);
            auto domain = parsed.domain.value_or(
                    parsed.coloring.colors.size() == g.vertex_count() ? CheckDomain::all_vertices : CheckDomain::shared_vertices);

            auto check = check_proper(g, parsed.coloring, domain);
            if (check) {
                out << "proper " << parsed.coloring.palette << "-colouring of "
                    << (domain == CheckDomain::all_vertices ? "all vertices" : "the shared vertices") << std::endl;
                return success;
            }
            err << "violation: " << to_string(*check.violation) << std::endl;
            return negative;
        }

        auto config_from(const Options & o, ostream & err) -> SearchConfig
        {
            SearchConfig cfg;
            cfg.node_limit = o.node_limit;
            cfg.symmetry_fixing = ! o.no_symmetry;
            cfg.progress = progress_to(err);
            return cfg;
        }

        auto run_chromatic(const Options & o, ostream & out, ostream & err) -> int
        {
            auto g = graph_from_json(read_json_file(o.in));
            auto result = chromatic_number(g, config_from(o, err));
            if (result.result == SearchResult::budget_exhausted) {
                err << "node budget of " << o.node_limit << " exhausted after " << result.nodes << " nodes" << std::endl;
                return budget_exhausted;
            }

            out << "chromatic number: " << result.chromatic_number << " (clique lower bound " << result.lower_bound
                << ", " << result.nodes << " nodes)" << std::endl;
            auto witness = coloring_to_json(result.witness, CheckDomain::all_vertices);
            if (o.out.empty())
                out << witness.dump(2) << std::endl;
            else
                emit(witness, o.out, out);
            return success;
        }

        auto run_decompose(const Options & o, ostream & out) -> int
        {
            auto g = graph_from_json(read_json_file(o.in));
            emit(decomposition_to_json(efl_to_decomposition(g)), o.out, out);
            return success;
        }

        auto run_to_efl(const Options & o, ostream & out) -> int
        {
            auto d = decomposition_from_json(read_json_file(o.in));
            emit(graph_to_json(decomposition_to_efl(d)), o.out, out);
            return success;
        }

        auto run_sweep(const Options & o, ostream & out, ostream & err) -> int
        {
            auto cfg = config_from(o, err);
            auto report = sweep_problem1(o.n, o.r, cfg, SweepOptions{ o.minimum_palettes, std::max(1u, o.workers) });
            emit(sweep_report_to_json(report), o.out, out);
            if (! report.not_colorable.empty())
                return negative;
            if (! report.budget_exhausted.empty())
                return budget_exhausted;
            return success;
        }

        auto run_export_dot(const Options & o, ostream & out) -> int
        {
            auto j = read_json_file(o.in);
            auto d = is_decomposition(j) ? decomposition_from_json(j) : efl_to_decomposition(graph_from_json(j));
            if (o.dot_what == "intersection")
                emit(to_dot(intersection_graph(d), "intersection"), o.out, out);
            else
                emit(to_dot(d.host(), "host"), o.out, out);
            return success;
        }
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Build, colour and verify Erdos-Faber-Lovasz graphs and clique decompositions", "efl" };
        app.require_subcommand(1);

        Options o;
        app.add_option("--seed", o.seed, "Reserved for randomized modes (unused)");

        auto gen = app.add_subcommand("gen", "Write an EFL graph with the given shared pairs");
        gen->add_option("--n", o.n, "Number and order of the defining cliques")->required();
        gen->add_option("--pairs", o.pairs, "JSON file of [i, j] pairs, or \"all\" for G_n");
        gen->add_option("--out", o.out, "Output file (default: standard output)");

        auto color = app.add_subcommand("color", "Colour the shared vertices of a two-clique EFL graph");
        color->add_option("--in", o.in, "Graph JSON")->required();
        color->add_flag("--extend", o.extend, "Extend to a proper n-colouring of every vertex");
        color->add_option("--out", o.out, "Output file");

        auto verify = app.add_subcommand("verify", "Check a colouring of a graph or decomposition");
        verify->add_option("--graph", o.graph, "Graph or decomposition JSON")->required();
        verify->add_option("--coloring", o.coloring, "Colouring JSON")->required();

        auto chromatic = app.add_subcommand("chromatic", "Exact chromatic number of a small EFL graph");
        chromatic->add_option("--in", o.in, "Graph JSON")->required();
        chromatic->add_option("--node-limit", o.node_limit, "Backtracking node budget");
        chromatic->add_flag("--no-symmetry", o.no_symmetry, "Disable symmetry fixing");
        chromatic->add_option("--out", o.out, "Witness output file");

        auto decompose = app.add_subcommand("decompose", "Clique decomposition of the host graph of an EFL graph");
        decompose->add_option("--in", o.in, "Graph JSON")->required();
        decompose->add_option("--out", o.out, "Output file");

        auto to_efl = app.add_subcommand("to-efl", "EFL graph of a clique decomposition");
        to_efl->add_option("--in", o.in, "Decomposition JSON")->required();
        to_efl->add_option("--out", o.out, "Output file");

        auto sweep = app.add_subcommand("sweep", "Colour every decomposition of K_n into 2-cliques and r-cliques");
        sweep->add_option("--n", o.n, "Host order")->required();
        sweep->add_option("--r", o.r, "Size of the larger cliques")->required();
        sweep->add_option("--node-limit", o.node_limit, "Backtracking node budget per search");
        sweep->add_flag("--min-palettes", o.minimum_palettes, "Also find each instance's minimum palette");
        sweep->add_option("--workers", o.workers, "Worker threads");
        sweep->add_option("--out", o.out, "Output file");

        auto export_dot = app.add_subcommand("export-dot", "Render a host or intersection graph as DOT");
        export_dot->add_option("--in", o.in, "Graph or decomposition JSON")->required();
        export_dot->add_option("--graph", o.dot_what, "host or intersection")
            ->check(CLI::IsMember({ "host", "intersection" }));
        export_dot->add_option("--out", o.out, "Output file");

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return success;
        }
        catch (const CLI::CallForAllHelp &) {
            out << app.help("", CLI::AppFormatMode::All);
            return success;
        }
        catch (const CLI::ParseError & e) {
            err << e.what() << std::endl;
            return input_error;
        }

        try {
            if (gen->parsed())
                return run_gen(o, out);
            if (color->parsed())
                return run_color(o, out, err);
            if (verify->parsed())
                return run_verify(o, out, err);
            if (chromatic->parsed())
                return run_chromatic(o, out, err);
            if (decompose->parsed())
                return run_decompose(o, out);
            if (to_efl->parsed())
                return run_to_efl(o, out);
            if (sweep->parsed())
                return run_sweep(o, out, err);
            if (export_dot->parsed())
                return run_export_dot(o, out);
        }
        catch (const RejectedGraph & e) {
            err << "rejected (" << to_string(e.rejection().kind) << "): " << e.what() << std::endl;
            return input_error;
        }
        catch (const EflError & e) {
            err << e.what() << std::endl;
            return input_error;
        }
        catch (const nlohmann::json::exception & e) {
            err << e.what() << std::endl;
            return input_error;
        }

        err << "no subcommand given" << std::endl;
        return input_error;
    }
}
