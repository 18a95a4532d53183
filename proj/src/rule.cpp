#include "dpo/rule.hpp"

namespace dpo {

namespace {

// K must occur in `side` with identical structure (id-sharing form).
void check_span_side(const Graph& K, const Graph& side, const char* name,
                     std::vector<std::string>& violations) {
    for (const auto& v : K.vertices)
        if (!side.has_vertex(v))
            violations.push_back(std::string("K vertex ") + v + " missing from " + name);
    for (const auto& [id, e] : K.edges) {
        if (!side.has_edge(id))
            violations.push_back(std::string("K edge ") + id + " missing from " + name);
        else if (!(side.edge_at(id) == e))
            violations.push_back(std::string("K edge ") + id + " differs in " + name);
    }
}

}  // namespace

std::vector<std::string> validate_rule(const Rule& r) {
    std::vector<std::string> violations;
    if (r.name.empty()) violations.push_back("rule has empty name");
    for (const auto* part : {&r.L, &r.K, &r.R})
        for (auto& v : validate_graph(*part)) violations.push_back(v);
    check_span_side(r.K, r.L, "L", violations);
    check_span_side(r.K, r.R, "R", violations);
    return violations;
}

Rule invert_rule(const Rule& r) {
    // Strip a trailing inversion marker instead of stacking them, so
    // inversion is an involution on rule values.
    static const std::string marker = "^-1";
    std::string name = r.name.size() > marker.size() &&
                               r.name.compare(r.name.size() - marker.size(), marker.size(),
                                              marker) == 0
                           ? r.name.substr(0, r.name.size() - marker.size())
                           : r.name + marker;
    return Rule{std::move(name), r.R, r.K, r.L};
}

bool check_identification(const Rule& r, const GraphMorphism& g) {
    // Collisions are allowed only between items of K.
    std::map<Id, std::vector<Id>> vpre, epre;
    for (const auto& [x, y] : g.vmap) vpre[y].push_back(x);
    for (const auto& [x, y] : g.emap) epre[y].push_back(x);
    for (const auto& [y, xs] : vpre)
        if (xs.size() > 1)
            for (const auto& x : xs)
                if (!r.K.has_vertex(x)) return false;
    for (const auto& [y, xs] : epre)
        if (xs.size() > 1)
            for (const auto& x : xs)
                if (!r.K.has_edge(x)) return false;
    return true;
}

bool check_dangling(const Rule& r, const GraphMorphism& g) {
    std::set<Id> deleted_vertices, deleted_edges;
    for (const auto& v : r.L.vertices)
        if (!r.K.has_vertex(v)) deleted_vertices.insert(g.v(v));
    for (const auto& v : r.K.vertices) deleted_vertices.erase(g.v(v));
    for (const auto& [id, e] : r.L.edges)
        if (!r.K.has_edge(id)) deleted_edges.insert(g.e(id));
    for (const auto& [id, e] : r.K.edges) deleted_edges.erase(g.e(id));

    for (const auto& [id, e] : g.cod.edges) {
        if (deleted_edges.count(id)) continue;
        if (deleted_vertices.count(e.src) || deleted_vertices.count(e.tgt)) return false;
    }
    return true;
}

std::vector<std::string> gluing_violations(const Rule& r, const GraphMorphism& g) {
    std::vector<std::string> violations;

    std::map<Id, std::vector<Id>> vpre, epre;
    for (const auto& [x, y] : g.vmap) vpre[y].push_back(x);
    for (const auto& [x, y] : g.emap) epre[y].push_back(x);
    for (const auto& [y, xs] : vpre)
        if (xs.size() > 1)
            for (const auto& x : xs)
                if (!r.K.has_vertex(x))
                    violations.push_back("identification: vertex " + x +
                                         " outside K identified at " + y);
    for (const auto& [y, xs] : epre)
        if (xs.size() > 1)
            for (const auto& x : xs)
                if (!r.K.has_edge(x))
                    violations.push_back("identification: edge " + x + " outside K identified at " +
                                         y);

    std::set<Id> deleted_vertices, deleted_edges;
    for (const auto& v : r.L.vertices)
        if (!r.K.has_vertex(v)) deleted_vertices.insert(g.v(v));
    for (const auto& v : r.K.vertices) deleted_vertices.erase(g.v(v));
    for (const auto& [id, e] : r.L.edges)
        if (!r.K.has_edge(id)) deleted_edges.insert(g.e(id));
    for (const auto& [id, e] : r.K.edges) deleted_edges.erase(g.e(id));
    for (const auto& [id, e] : g.cod.edges) {
        if (deleted_edges.count(id)) continue;
        if (deleted_vertices.count(e.src) || deleted_vertices.count(e.tgt))
            violations.push_back("dangling: edge " + id + " touches a deleted vertex");
    }
    return violations;
}

}  // namespace dpo
