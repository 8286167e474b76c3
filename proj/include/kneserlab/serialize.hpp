#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "coclique.hpp"
#include "cross_validate.hpp"
#include "fixtures.hpp"

namespace kneserlab {

using nlohmann::json;

inline json spec_to_json(const BuildingSpec& spec)
{
    return json{{"family", std::string(1, family_letter(spec.family))},
                {"rank", spec.rank},
                {"types", spec.types},
                {"p", spec.p},
                {"selector", spec.selector == DSelector::plus ? "plus" : "minus"},
                {"allow_non_self_opposite", spec.allow_non_self_opposite},
                {"label", spec.label()}};
}

inline BuildingSpec spec_from_json(const json& j)
{
    BuildingSpec s;
    s.family = parse_family(j.at("family").get<std::string>());
    s.rank = j.at("rank").get<int>();
    s.types = j.at("types").get<std::vector<int>>();
    s.p = j.at("p").get<int>();
    const auto sel = j.at("selector").get<std::string>();
    if (sel != "plus" && sel != "minus") throw UsageError("selector must be plus or minus");
    s.selector = sel == "plus" ? DSelector::plus : DSelector::minus;
    s.allow_non_self_opposite = j.value("allow_non_self_opposite", false);
    return s;
}

/// Members as lists of RREF basis rows.
inline json object_to_json(const GeometricObject& obj)
{
    json members = json::array();
    for (const Subspace& s : obj.flag) {
        json rows = json::array();
        for (int r = 0; r < s.dim(); ++r) {
            const auto row = s.row(r);
            rows.push_back(std::vector<int>(row.begin(), row.end()));
        }
        members.push_back(std::move(rows));
    }
    return members;
}

inline GeometricObject object_from_json(const json& j, int ambient, int p)
{
    GeometricObject obj;
    for (const auto& member : j) {
        std::vector<std::vector<long long>> rows;
        for (const auto& r : member) rows.push_back(r.get<std::vector<long long>>());
        obj.flag.push_back(Subspace::span(rows, ambient, p));
    }
    return obj;
}

inline json graph_to_json(const KneserGraph& g)
{
    json j;
    j["schema"] = 1;
    j["spec"] = spec_to_json(g.spec);
    j["vertex_count"] = g.order();
    j["edge_count"] = g.graph.edge_count();
    json vertices = json::array();
    for (const auto& v : g.vertices) vertices.push_back(object_to_json(v));
    j["vertices"] = std::move(vertices);
    json adjacency = json::array();
    for (int v = 0; v < g.order(); ++v) adjacency.push_back(g.graph.neighbours(v).indices());
    j["adjacency"] = std::move(adjacency);
    j["sigma"] = g.sigma;
    return j;
}

inline KneserGraph graph_from_json(const json& j)
{
    if (j.at("schema").get<int>() != 1) throw UsageError("unsupported graph schema");
    KneserGraph g;
    g.spec = spec_from_json(j.at("spec"));
    const int d = g.spec.ambient();
    for (const auto& v : j.at("vertices")) g.vertices.push_back(object_from_json(v, d, g.spec.p));
    const int n = static_cast<int>(g.vertices.size());
    g.graph = Graph(n);
    const auto& adjacency = j.at("adjacency");
    if (static_cast<int>(adjacency.size()) != n) throw UsageError("adjacency has the wrong number of rows");
    for (int u = 0; u < n; ++u) {
        for (int v : adjacency[static_cast<std::size_t>(u)].get<std::vector<int>>()) {
            if (v < 0 || v >= n || v == u) throw UsageError("adjacency entry out of range");
            if (u < v) g.graph.add_edge(u, v);
        }
    }
    if (!g.graph.is_symmetric_irreflexive()) throw UsageError("adjacency is not symmetric");
    g.sigma = j.at("sigma").get<std::vector<int>>();
    for (int v : g.sigma) {
        if (v < 0 || v >= n) throw UsageError("sigma index out of range");
    }
    return g;
}

inline void write_dimacs(std::ostream& out, const KneserGraph& g)
{
    out << "c kneserlab Kneser graph " << g.spec.label() << " over F_" << g.spec.p << "\n";
    out << "c vertices in canonical order, 1-based; apartment size " << g.sigma.size() << "\n";
    out << "p edge " << g.order() << " " << g.graph.edge_count() << "\n";
    for (int u = 0; u < g.order(); ++u) {
        const BitRow& row = g.graph.neighbours(u);
        for (int v = row.next(u + 1); v >= 0; v = row.next(v + 1)) out << "e " << u + 1 << " " << v + 1 << "\n";
    }
}

inline void write_text(std::ostream& out, const KneserGraph& g)
{
    out << g.spec.label() << " over F_" << g.spec.p << "\n";
    out << "vertices " << g.order() << ", edges " << g.graph.edge_count() << ", apartment " << g.sigma.size() << "\n";
    for (int v = 0; v < g.order(); ++v) {
        out << v << (std::binary_search(g.sigma.begin(), g.sigma.end(), v) ? " * " : "   ") << g.vertices[static_cast<std::size_t>(v)].to_string()
            << " deg " << g.graph.degree(v) << "\n";
    }
}

inline json report_to_json(const UcepReport& r, const KneserGraph* g = nullptr)
{
    json j;
    j["schema"] = 1;
    j["spec"] = r.spec;
    j["verdict"] = to_string(r.verdict);
    j["cocliques_checked"] = r.cocliques_checked;
    if (r.witness) {
        json w;
        w["coclique"] = r.witness->coclique.members;
        w["x"] = r.witness->x;
        w["y"] = r.witness->y;
        if (g) {
            json objs = json::array();
            for (int v : r.witness->coclique.members) objs.push_back(object_to_json(g->vertices[static_cast<std::size_t>(v)]));
            w["coclique_objects"] = std::move(objs);
            w["x_object"] = object_to_json(g->vertices[static_cast<std::size_t>(r.witness->x)]);
            w["y_object"] = object_to_json(g->vertices[static_cast<std::size_t>(r.witness->y)]);
        }
        j["witness"] = std::move(w);
    }
    if (r.seed) j["seed"] = *r.seed;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline UcepReport report_from_json(const json& j)
{
    if (j.at("schema").get<int>() != 1) throw UsageError("unsupported report schema");
    UcepReport r;
    r.spec = j.at("spec").get<std::string>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "holds" && verdict != "fails") throw UsageError("verdict must be holds or fails");
    r.verdict = verdict == "holds" ? UcepVerdict::holds : UcepVerdict::fails;
    r.cocliques_checked = j.at("cocliques_checked").get<long long>();
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        r.witness = UcepWitness{Coclique{w.at("coclique").get<std::vector<int>>()}, w.at("x").get<int>(), w.at("y").get<int>()};
    }
    if (j.contains("seed")) r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    return r;
}

inline json fixture_report_to_json(const FixtureReport& r)
{
    json j{{"name", r.name}, {"spec", r.spec}, {"p", r.p}, {"x", r.x}, {"y", r.y}, {"coclique", r.coclique}, {"certified", r.certified}};
    if (r.sigma_touching) j["sigma_touching"] = *r.sigma_touching;
    return j;
}

inline json cross_validation_to_json(const CrossValidationResult& r)
{
    json j{{"spec", r.spec},
           {"geometric_vertices", r.geometric_vertices},
           {"coset_vertices", r.coset_vertices},
           {"labels_match", r.labels_match},
           {"ok", r.ok()},
           {"message", r.message}};
    if (r.mismatch) {
        auto sets = [](const FrameLabel& l) {
            json a = json::array();
            for (const auto& s : l) a.push_back(std::vector<int>(s.begin(), s.end()));
            return a;
        };
        j["mismatch"] = json{{"a", sets(r.mismatch->a)}, {"b", sets(r.mismatch->b)}, {"geometric", r.mismatch->geometric}, {"coset", r.mismatch->coset}};
    }
    return j;
}

} // namespace kneserlab
