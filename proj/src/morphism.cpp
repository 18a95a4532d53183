#include "dpo/morphism.hpp"

#include <algorithm>

namespace dpo {

std::vector<std::string> validate_morphism(const GraphMorphism& m) {
    std::vector<std::string> violations;
    for (const auto& v : m.dom.vertices)
        if (!m.vmap.count(v)) violations.push_back("vmap undefined on vertex " + v);
    for (const auto& [id, e] : m.dom.edges)
        if (!m.emap.count(id)) violations.push_back("emap undefined on edge " + id);
    for (const auto& [x, y] : m.vmap) {
        if (!m.dom.has_vertex(x)) violations.push_back("vmap key " + x + " not a dom vertex");
        if (!m.cod.has_vertex(y)) violations.push_back("vmap image " + y + " not a cod vertex");
    }
    for (const auto& [x, y] : m.emap) {
        if (!m.dom.has_edge(x)) {
            violations.push_back("emap key " + x + " not a dom edge");
            continue;
        }
        if (!m.cod.has_edge(y)) {
            violations.push_back("emap image " + y + " not a cod edge");
            continue;
        }
        const auto& de = m.dom.edge_at(x);
        const auto& ce = m.cod.edge_at(y);
        auto vsrc = m.vmap.find(de.src);
        auto vtgt = m.vmap.find(de.tgt);
        if (vsrc != m.vmap.end() && vsrc->second != ce.src)
            violations.push_back("edge " + x + ": source not preserved");
        if (vtgt != m.vmap.end() && vtgt->second != ce.tgt)
            violations.push_back("edge " + x + ": target not preserved");
        if (de.label != ce.label)
            violations.push_back("edge " + x + ": label " + de.label + " mapped to " + ce.label);
    }
    return violations;
}

GraphMorphism identity(const Graph& g) {
    GraphMorphism m{g, g, {}, {}};
    for (const auto& v : g.vertices) m.vmap[v] = v;
    for (const auto& [id, e] : g.edges) m.emap[id] = id;
    return m;
}

GraphMorphism inclusion(const Graph& sub, const Graph& host) {
    GraphMorphism m{sub, host, {}, {}};
    for (const auto& v : sub.vertices) {
        if (!host.has_vertex(v)) throw Error("inclusion: vertex " + v + " not in host");
        m.vmap[v] = v;
    }
    for (const auto& [id, e] : sub.edges) {
        if (!host.has_edge(id) || !(host.edge_at(id) == e))
            throw Error("inclusion: edge " + id + " not in host with same structure");
        m.emap[id] = id;
    }
    return m;
}

GraphMorphism inclusion(const SubgraphHandle& h) { return inclusion(materialize(h), h.host); }

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
    if (!(f.cod == g.dom)) throw Error("compose: cod(f) != dom(g)");
    GraphMorphism m{f.dom, g.cod, {}, {}};
    for (const auto& [x, y] : f.vmap) m.vmap[x] = g.v(y);
    for (const auto& [x, y] : f.emap) m.emap[x] = g.e(y);
    return m;
}

namespace {

bool injective(const std::map<Id, Id>& m) {
    std::set<Id> seen;
    for (const auto& [x, y] : m)
        if (!seen.insert(y).second) return false;
    return true;
}

}  // namespace

MorphismClass classify(const GraphMorphism& m) {
    MorphismClass c;
    c.mono = injective(m.vmap) && injective(m.emap);
    std::set<Id> vimg, eimg;
    for (const auto& [x, y] : m.vmap) vimg.insert(y);
    for (const auto& [x, y] : m.emap) eimg.insert(y);
    c.epi = vimg.size() == m.cod.vertices.size() && eimg.size() == m.cod.edges.size();
    c.iso = c.mono && c.epi;
    return c;
}

SubgraphHandle image_handle(const GraphMorphism& m) {
    SubgraphHandle h{m.cod, {}, {}};
    for (const auto& [x, y] : m.vmap) h.vset.insert(y);
    for (const auto& [x, y] : m.emap) h.eset.insert(y);
    return h;
}

EpiMonoFactorization epi_mono_factorize(const GraphMorphism& m) {
    auto image = image_handle(m);
    Graph img = materialize(image);
    GraphMorphism epi{m.dom, img, m.vmap, m.emap};
    return EpiMonoFactorization{std::move(epi), image, inclusion(img, m.cod)};
}

GraphMorphism corestrict(const GraphMorphism& m, const SubgraphHandle& h) {
    if (!(m.cod == h.host)) throw Error("corestrict: handle host is not the codomain");
    return corestrict(m, materialize(h));
}

GraphMorphism corestrict(const GraphMorphism& m, const Graph& sub) {
    GraphMorphism out{m.dom, sub, m.vmap, m.emap};
    for (const auto& [x, y] : m.vmap)
        if (!sub.has_vertex(y)) throw Error("corestrict: image vertex " + y + " outside subgraph");
    for (const auto& [x, y] : m.emap)
        if (!sub.has_edge(y)) throw Error("corestrict: image edge " + y + " outside subgraph");
    return out;
}

}  // namespace dpo
