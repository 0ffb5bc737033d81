/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <efl/json_io.hh>

#include <fstream>
#include <map>
#include <sstream>

using std::get_if;
using std::string;
using std::vector;

namespace efl
{
    using std::to_string;

    namespace
    {
        auto require(const Json & j, const char * key) -> const Json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InputError(string("missing field \"") + key + "\"");
            return j.at(key);
        }

        auto as_int(const Json & j, const string & what) -> int
        {
            if (! j.is_number_integer())
                throw InputError(what + " must be an integer");
            return j.get<int>();
        }

        auto as_int_pair(const Json & j, const string & what) -> std::pair<int, int>
        {
            if (! j.is_array() || j.size() != 2)
                throw InputError(what + " must be a two-element array");
            return { as_int(j[0], what), as_int(j[1], what) };
        }

        auto int_list(const Json & j, const string & what) -> vector<int>
        {
            if (! j.is_array())
                throw InputError(what + " must be an array");
            vector<int> result;
            for (auto & x : j)
                result.push_back(as_int(x, what));
            return result;
        }
    }

    auto vertex_to_json(const VertexId & v) -> Json
    {
        if (auto s = get_if<SharedVertexId>(&v))
            return Json::array({ s->i, s->j });
        else if (auto u = get_if<UnsharedVertexId>(&v))
            return Json{ { "clique", u->clique }, { "slot", u->slot } };
        else
            return std::get<GeneralVertexId>(v).id;
    }

    auto vertex_from_json(const Json & j) -> VertexId
    {
        if (j.is_array()) {
            auto [i, k] = as_int_pair(j, "shared vertex");
            return SharedVertexId{ i, k };
        }
        else if (j.is_object())
            return UnsharedVertexId{ as_int(require(j, "clique"), "clique"), as_int(require(j, "slot"), "slot") };
        else if (j.is_number_integer())
            return GeneralVertexId{ j.get<int>() };
        throw InputError("vertex must be [i, j], {\"clique\", \"slot\"} or an integer");
    }

    namespace
    {
        auto pair_named_shared(const EflGraph & g) -> vector<SharedVertexId>
        {
            vector<SharedVertexId> result;
            for (int v : g.shared())
                if (auto s = get_if<SharedVertexId>(&g.vertices()[v]))
                    result.push_back(*s);
            return result;
        }

        auto is_canonical_two_clique(const EflGraph & g, const vector<SharedVertexId> & pairs) -> bool
        {
            if (pairs.size() != g.shared().size())
                return false;
            return build_from_pairs(g.n(), pairs).graph() == g;
        }
    }

    auto graph_to_json(const EflGraph & g) -> Json
    {
        auto pairs = pair_named_shared(g);

        Json result;
        result["n"] = g.n();
        auto & shared = result["shared_pairs"] = Json::array();
        for (auto & p : pairs)
            shared.push_back(Json::array({ p.i, p.j }));

        if (! is_canonical_two_clique(g, pairs)) {
            auto & cliques = result["cliques"] = Json::array();
            for (auto & q : g.clique_lists()) {
                auto & list = cliques.emplace_back(Json::array());
                for (auto & v : q)
                    list.push_back(vertex_to_json(v));
            }
        }
        return result;
    }

    auto graph_from_json(const Json & j) -> EflGraph
    {
        int n = as_int(require(j, "n"), "n");

        vector<SharedVertexId> pairs;
        if (j.contains("shared_pairs")) {
            if (! j["shared_pairs"].is_array())
                throw InputError("shared_pairs must be an array");
            for (auto & p : j["shared_pairs"]) {
                auto [a, b] = as_int_pair(p, "shared pair");
                pairs.push_back({ a, b });
            }
        }

        if (! j.contains("cliques")) {
            if (! j.contains("shared_pairs"))
                throw InputError("graph needs \"shared_pairs\" or \"cliques\"");
            return build_from_pairs(n, pairs).graph();
        }

        if (! j["cliques"].is_array())
            throw InputError("cliques must be an array");
        vector<vector<VertexId>> cliques;
        for (auto & q : j["cliques"]) {
            if (! q.is_array())
                throw InputError("each clique must be an array of vertices");
            auto & list = cliques.emplace_back();
            for (auto & v : q)
                list.push_back(vertex_from_json(v));
        }

        auto result = validate(cliques, n);
        if (auto r = get_if<Rejection>(&result))
            throw RejectedGraph(*r);
        auto & g = std::get<EflGraph>(result);

        if (j.contains("shared_pairs")) {
            std::sort(pairs.begin(), pairs.end());
            if (pairs != pair_named_shared(g))
                throw InputError("shared_pairs disagrees with the explicit cliques");
        }
        return std::move(g);
    }

    auto coloring_to_json(const FullColoring & c, CheckDomain domain) -> Json
    {
        Json result;
        result["palette"] = c.palette;
        result["domain"] = domain == CheckDomain::shared_vertices ? "shared" : "full";
        auto & list = result["assignments"] = Json::array();
        for (auto & [v, col] : c.colors)
            list.push_back(Json{ { "vertex", vertex_to_json(v) }, { "color", col } });
        return result;
    }

    auto coloring_to_json(const SharedColoring & c) -> Json
    {
        return coloring_to_json(to_vertex_coloring(c), CheckDomain::shared_vertices);
    }

    auto coloring_from_json(const Json & j) -> ParsedColoring
    {
        ParsedColoring result;
        result.coloring.palette = as_int(require(j, "palette"), "palette");

        if (j.contains("domain")) {
            auto & d = j["domain"];
            if (d == "shared")
                result.domain = CheckDomain::shared_vertices;
            else if (d == "full")
                result.domain = CheckDomain::all_vertices;
            else
                throw InputError("domain must be \"shared\" or \"full\"");
        }

        auto & list = require(j, "assignments");
        if (! list.is_array())
            throw InputError("assignments must be an array");
        for (auto & a : list) {
            auto v = vertex_from_json(require(a, "vertex"));
            if (! result.coloring.colors.emplace(v, as_int(require(a, "color"), "color")).second)
                throw InputError("vertex " + to_string(v) + " is assigned twice");
        }
        return result;
    }

    auto decomposition_to_json(const CliqueDecomposition & d) -> Json
    {
        Json result;
        result["n"] = d.n();
        if (d.host().is_complete())
            result["host_edges"] = "complete";
        else {
            auto & edges = result["host_edges"] = Json::array();
            for (auto & [u, v] : d.host().edges)
                edges.push_back(Json::array({ u, v }));
        }
        auto & cliques = result["cliques"] = Json::array();
        for (auto & q : d.cliques())
            cliques.push_back(q);
        return result;
    }

    auto decomposition_from_json(const Json & j) -> CliqueDecomposition
    {
        int n = as_int(require(j, "n"), "n");
        auto & edges = require(j, "host_edges");

        HostGraph host;
        if (edges.is_string()) {
            if (edges != "complete")
                throw InputError("host_edges must be an edge list or \"complete\"");
            host = HostGraph::complete(n);
        }
        else if (edges.is_array()) {
            host.vertex_count = n;
            for (auto & e : edges)
                host.edges.push_back(as_int_pair(e, "host edge"));
        }
        else
            throw InputError("host_edges must be an edge list or \"complete\"");

        auto & list = require(j, "cliques");
        if (! list.is_array())
            throw InputError("cliques must be an array");
        vector<vector<int>> cliques;
        for (auto & q : list)
            cliques.push_back(int_list(q, "clique"));

        auto result = validate_decomposition(std::move(host), std::move(cliques));
        if (auto r = get_if<DecompositionRejection>(&result))
            throw InputError("invalid decomposition: " + r->message);
        return std::get<CliqueDecomposition>(std::move(result));
    }

    auto decomposition_coloring_to_json(const CliqueDecomposition & d, const DecompositionColoring & c) -> Json
    {
        Json result;
        result["palette"] = c.palette;
        auto & list = result["assignments"] = Json::array();
        for (int t = 1 ; t <= d.size() && t <= std::ssize(c.colors) ; ++t)
            list.push_back(Json{ { "clique", t }, { "vertices", d.clique(t) }, { "color", c.colors[t - 1] } });
        return result;
    }

    auto decomposition_coloring_from_json(const CliqueDecomposition & d, const Json & j) -> DecompositionColoring
    {
        DecompositionColoring result{ as_int(require(j, "palette"), "palette"), vector<Color>(d.size(), 0) };

        std::map<vector<int>, int> by_vertices;
        for (int t = 1 ; t <= d.size() ; ++t)
            by_vertices.emplace(d.clique(t), t);

        auto & list = require(j, "assignments");
        if (! list.is_array())
            throw InputError("assignments must be an array");
        for (auto & a : list) {
            int t = 0;
            if (a.contains("vertices")) {
                auto vs = int_list(a["vertices"], "clique vertices");
                std::sort(vs.begin(), vs.end());
                auto it = by_vertices.find(vs);
                if (it == by_vertices.end())
                    throw InputError("assignment names a vertex set that is not a decomposition clique");
                t = it->second;
            }
            else
                t = as_int(require(a, "clique"), "clique");
            if (t < 1 || t > d.size())
                throw InputError("clique index " + to_string(t) + " out of range");
            if (result.colors[t - 1] != 0)
                throw InputError("clique " + to_string(t) + " is assigned twice");
            result.colors[t - 1] = as_int(require(a, "color"), "color");
        }

        for (int t = 1 ; t <= d.size() ; ++t)
            if (result.colors[t - 1] == 0)
                throw InputError("clique " + to_string(t) + " has no colour");
        return result;
    }

    auto sweep_report_to_json(const SweepReport & r) -> Json
    {
        auto clique_lists = [] (const vector<CliqueDecomposition> & ds) {
            Json list = Json::array();
            for (auto & d : ds)
                list.push_back(d.cliques());
            return list;
        };

        Json result;
        result["n"] = r.n;
        result["r"] = r.r;
        result["instances"] = r.instances;
        result["colorable"] = r.colorable;
        result["not_colorable"] = clique_lists(r.not_colorable);
        result["budget_exhausted"] = clique_lists(r.budget_exhausted);
        result["max_nodes"] = r.max_nodes;
        if (! r.minimum_palettes.empty()) {
            std::map<int, std::uint64_t> histogram;
            for (auto & [key, k] : r.minimum_palettes)
                ++histogram[k];
            auto & h = result["minimum_palette_histogram"] = Json::object();
            for (auto & [k, count] : histogram)
                h[to_string(k)] = count;
            auto & each = result["minimum_palettes"] = Json::object();
            for (auto & [key, k] : r.minimum_palettes)
                each[key] = k;
        }
        return result;
    }

    auto read_json_file(const string & path) -> Json
    {
        std::ifstream in(path);
        if (! in)
            throw InputError("cannot read " + path);
        try {
            return Json::parse(in);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw InputError(path + ": " + e.what());
        }
    }
}
