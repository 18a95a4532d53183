#include "dpo/match.hpp"

#include <algorithm>

namespace dpo {

namespace {

struct Matcher {
    const Graph& L;
    const Graph& G;
    MatchMode mode;
    std::size_t cap;

    std::vector<Id> lverts;
    std::vector<Id> ledges;
    std::map<Id, Id> vmap;
    std::map<Id, Id> emap;
    std::set<Id> used_verts;
    std::set<Id> used_edges;
    std::vector<GraphMorphism> results;

    Matcher(const Graph& L_, const Graph& G_, MatchMode mode_, std::size_t cap_)
        : L(L_), G(G_), mode(mode_), cap(cap_) {
        lverts.assign(L.vertices.begin(), L.vertices.end());
        for (const auto& [id, e] : L.edges) ledges.push_back(id);
    }

    bool full() const { return results.size() >= cap; }

    void run() { assign_vertex(0); }

    void assign_vertex(std::size_t i) {
        if (full()) return;
        if (i == lverts.size()) {
            assign_edge(0);
            return;
        }
        const Id& x = lverts[i];
        for (const auto& y : G.vertices) {
            if (mode == MatchMode::Monomorphisms && used_verts.count(y)) continue;
            vmap[x] = y;
            if (mode == MatchMode::Monomorphisms) used_verts.insert(y);
            assign_vertex(i + 1);
            if (mode == MatchMode::Monomorphisms) used_verts.erase(y);
            vmap.erase(x);
            if (full()) return;
        }
    }

    void assign_edge(std::size_t i) {
        if (full()) return;
        if (i == ledges.size()) {
            results.push_back(GraphMorphism{L, G, vmap, emap});
            return;
        }
        const Id& x = ledges[i];
        const Edge& le = L.edge_at(x);
        for (const auto& [y, ge] : G.edges) {
            if (mode == MatchMode::Monomorphisms && used_edges.count(y)) continue;
            if (ge.label != le.label) continue;
            if (ge.src != vmap.at(le.src) || ge.tgt != vmap.at(le.tgt)) continue;
            emap[x] = y;
            if (mode == MatchMode::Monomorphisms) used_edges.insert(y);
            assign_edge(i + 1);
            if (mode == MatchMode::Monomorphisms) used_edges.erase(y);
            emap.erase(x);
            if (full()) return;
        }
    }
};

}  // namespace

std::vector<GraphMorphism> enumerate_morphisms(const Graph& L, const Graph& G, MatchMode mode) {
    Matcher m(L, G, mode, static_cast<std::size_t>(-1));
    m.run();
    return std::move(m.results);
}

std::vector<GraphMorphism> enumerate_isomorphisms(const Graph& G, const Graph& H,
                                                  std::size_t cap) {
    // A mono between graphs of equal size is an iso.
    if (G.vertices.size() != H.vertices.size() || G.edges.size() != H.edges.size()) return {};
    Matcher m(G, H, MatchMode::Monomorphisms, cap);
    m.run();
    return std::move(m.results);
}

std::optional<GraphMorphism> find_isomorphism(const Graph& G, const Graph& H) {
    auto isos = enumerate_isomorphisms(G, H, 1);
    if (isos.empty()) return std::nullopt;
    return isos.front();
}

}  // namespace dpo
