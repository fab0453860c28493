#include "unav/json_io.hpp"

#include <sstream>

namespace unav {

json to_json(const TwoColoring& c) {
    json j;
    j["n"] = c.n;
    json red = json::array();
    for (auto [u, v] : c.red.edges()) red.push_back({u, v});
    j["red"] = red;
    return j;
}

TwoColoring two_coloring_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("red")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return TwoColoring(n, make_graph(n, edges));
}

json to_json(const KColoring& c) {
    json j;
    j["n"] = c.n;
    j["k"] = c.k;
    json edges = json::array();
    for (int v = 1; v < c.n; ++v)
        for (int u = 0; u < v; ++u) edges.push_back({u, v, c.color_of(u, v)});
    j["edges"] = edges;
    return j;
}

KColoring kcoloring_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<std::tuple<int, int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    return kcoloring_from_parts(n, k, edges);
}

json to_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.n;
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

json to_json(const PatternWitness& w) {
    json j;
    j["color"] = w.color == WitnessColor::red ? "red" : "blue";
    j["vertices"] = w.vertices;
    if (w.red_edges >= 0) {
        j["red_edges"] = w.red_edges;
        json edges = json::array();
        for (auto [u, v] : w.copy_edges) edges.push_back({u, v});
        j["copy_edges"] = edges;
    }
    return j;
}

json to_json(const BalanceWitness& w) {
    json j;
    j["X"] = w.x_side;
    j["W"] = w.w_set;
    j["cut_edges"] = w.cut_edges;
    j["inside_edges"] = w.inside_edges;
    return j;
}

json to_json(const CkReport& r) {
    json j;
    j["k"] = r.k;
    j["beta"] = r.beta;
    j["member"] = r.member;
    if (r.apex) j["apex"] = *r.apex;
    if (!r.member) return j;
    j["beta_at_most"] = r.beta_at_most;
    j["degree_dichotomy"] = r.degree_dichotomy;
    if (r.decomposition) {
        json d;
        d["removed_edge"] = {r.decomposition->removed_edge.first, r.decomposition->removed_edge.second};
        d["star_center"] = r.decomposition->star_center;
        d["star_leaves"] = r.decomposition->star_leaves;
        json m = json::array();
        for (auto [u, v] : r.decomposition->matching) m.push_back({u, v});
        d["matching"] = m;
        j["decomposition"] = d;
    }
    json mm = json::array();
    for (auto [u, v] : r.matching_at_apex) mm.push_back({u, v});
    j["matching_at_apex"] = mm;
    return j;
}

json to_json(const ColorClassification& c) {
    json j;
    j["A"] = c.a_colors;
    j["B"] = c.b_colors;
    json ws = json::array();
    for (const auto& w : c.witnesses) {
        json wj;
        wj["color"] = w.color;
        wj["pattern"] = w.pattern;
        wj["vertices"] = w.vertices;
        ws.push_back(wj);
    }
    j["witnesses"] = ws;
    return j;
}

json to_json(const ExtremalCertificate& cert) {
    json j;
    j["quantity"] = cert.quantity;
    json params = json::object();
    for (const auto& [key, value] : cert.params) params[key] = value;
    if (!cert.family_name.empty()) params["family"] = cert.family_name;
    j["params"] = params;
    j["value"] = cert.value;
    j["exhaustive"] = cert.exhaustive;
    j["max_possible"] = cert.max_possible;
    j["nodes_searched"] = cert.nodes_searched;
    if (cert.witness_coloring) j["witness_coloring"] = to_json(*cert.witness_coloring);
    if (cert.witness_graph) j["witness_graph"] = to_json(*cert.witness_graph);
    return j;
}

std::string to_dot(const TwoColoring& c) {
    std::ostringstream out;
    out << "graph coloring {\n  node [shape=circle];\n";
    for (int v = 0; v < c.n; ++v) out << "  " << v << ";\n";
    for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v)
            out << "  " << u << " -- " << v
                << (c.is_red(u, v) ? " [color=red];\n" : " [color=blue, style=dashed];\n");
    out << "}\n";
    return out.str();
}

std::string to_dot(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace unav
