#include "dpo/graph.hpp"

#include <algorithm>

namespace dpo {

std::vector<std::string> validate_graph(const Graph& g) {
    std::vector<std::string> violations;
    for (const auto& [id, e] : g.edges) {
        if (!g.has_vertex(e.src))
            violations.push_back("edge " + id + ": source " + e.src + " is not a vertex");
        if (!g.has_vertex(e.tgt))
            violations.push_back("edge " + id + ": target " + e.tgt + " is not a vertex");
        if (e.label.empty()) violations.push_back("edge " + id + ": empty label");
    }
    for (const auto& v : g.vertices)
        if (v.empty()) violations.push_back("empty vertex identifier");
    return violations;
}

SubgraphHandle full_handle(const Graph& host) {
    SubgraphHandle h{host, host.vertices, {}};
    for (const auto& [id, e] : host.edges) h.eset.insert(id);
    return h;
}

SubgraphHandle empty_handle(const Graph& host) { return SubgraphHandle{host, {}, {}}; }

SubgraphHandle make_handle(const Graph& host, std::set<Id> vset, std::set<Id> eset) {
    SubgraphHandle h{host, std::move(vset), std::move(eset)};
    auto violations = validate_handle(h);
    if (!violations.empty()) throw Error("invalid handle: " + violations.front());
    return h;
}

std::vector<std::string> validate_handle(const SubgraphHandle& h) {
    std::vector<std::string> violations;
    for (const auto& v : h.vset)
        if (!h.host.has_vertex(v)) violations.push_back("vertex " + v + " not in host");
    for (const auto& e : h.eset) {
        if (!h.host.has_edge(e)) {
            violations.push_back("edge " + e + " not in host");
            continue;
        }
        const auto& edge = h.host.edge_at(e);
        if (!h.vset.count(edge.src))
            violations.push_back("edge " + e + ": source " + edge.src + " outside handle");
        if (!h.vset.count(edge.tgt))
            violations.push_back("edge " + e + ": target " + edge.tgt + " outside handle");
    }
    return violations;
}

namespace {

void require_same_host(const SubgraphHandle& a, const SubgraphHandle& b) {
    if (!(a.host == b.host)) throw Error("subgraph handles have different hosts");
}

std::set<Id> set_intersection(const std::set<Id>& a, const std::set<Id>& b) {
    std::set<Id> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

std::set<Id> set_union(const std::set<Id>& a, const std::set<Id>& b) {
    std::set<Id> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

}  // namespace

SubgraphHandle intersect(const SubgraphHandle& a, const SubgraphHandle& b) {
    require_same_host(a, b);
    return SubgraphHandle{a.host, set_intersection(a.vset, b.vset),
                          set_intersection(a.eset, b.eset)};
}

SubgraphHandle unite(const SubgraphHandle& a, const SubgraphHandle& b) {
    require_same_host(a, b);
    return SubgraphHandle{a.host, set_union(a.vset, b.vset), set_union(a.eset, b.eset)};
}

bool handle_subset(const SubgraphHandle& a, const SubgraphHandle& b) {
    require_same_host(a, b);
    return std::includes(b.vset.begin(), b.vset.end(), a.vset.begin(), a.vset.end()) &&
           std::includes(b.eset.begin(), b.eset.end(), a.eset.begin(), a.eset.end());
}

Graph materialize(const SubgraphHandle& h) {
    Graph g;
    g.vertices = h.vset;
    for (const auto& e : h.eset) g.edges[e] = h.host.edge_at(e);
    return g;
}

}  // namespace dpo
