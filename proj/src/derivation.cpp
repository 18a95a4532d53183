#include "dpo/derivation.hpp"

#include <algorithm>

#include "dpo/match.hpp"

namespace dpo {

FreshIds default_fresh_ids(const Rule& r, std::size_t step_index) {
    FreshIds fresh;
    const std::string prefix = r.name + "." + std::to_string(step_index) + ".";
    for (const auto& v : r.R.vertices)
        if (!r.K.has_vertex(v)) fresh.vmap[v] = prefix + v;
    for (const auto& [id, e] : r.R.edges)
        if (!r.K.has_edge(id)) fresh.emap[id] = prefix + id;
    return fresh;
}

std::set<Id> DerivationStep::deleted_vertices() const {
    std::set<Id> out;
    for (const auto& v : rule.L.vertices)
        if (!rule.K.has_vertex(v)) out.insert(g.v(v));
    for (const auto& v : rule.K.vertices) out.erase(g.v(v));
    return out;
}

std::set<Id> DerivationStep::deleted_edges() const {
    std::set<Id> out;
    for (const auto& [id, e] : rule.L.edges)
        if (!rule.K.has_edge(id)) out.insert(g.e(id));
    for (const auto& [id, e] : rule.K.edges) out.erase(g.e(id));
    return out;
}

std::set<Id> DerivationStep::fresh_vertices() const {
    std::set<Id> out;
    for (const auto& v : rule.R.vertices)
        if (!rule.K.has_vertex(v)) out.insert(h.v(v));
    return out;
}

std::set<Id> DerivationStep::fresh_edges() const {
    std::set<Id> out;
    for (const auto& [id, e] : rule.R.edges)
        if (!rule.K.has_edge(id)) out.insert(h.e(id));
    return out;
}

std::vector<std::string> Derivation::rule_names() const {
    std::vector<std::string> names;
    names.reserve(steps.size());
    for (const auto& s : steps) names.push_back(s.rule.name);
    return names;
}

DerivationStep apply(const Rule& r, const GraphMorphism& g, const FreshIds& fresh) {
    if (!(g.dom == r.L)) throw Error("apply: match domain is not the rule's left-hand side");
    if (auto v = validate_morphism(g); !v.empty())
        throw Error("apply: invalid match: " + v.front());
    if (auto v = gluing_violations(r, g); !v.empty()) throw GluingError(v.front());

    const Graph& G = g.cod;

    std::set<Id> delv, dele;
    for (const auto& v : r.L.vertices)
        if (!r.K.has_vertex(v)) delv.insert(g.v(v));
    for (const auto& v : r.K.vertices) delv.erase(g.v(v));
    for (const auto& [id, e] : r.L.edges)
        if (!r.K.has_edge(id)) dele.insert(g.e(id));
    for (const auto& [id, e] : r.K.edges) dele.erase(g.e(id));

    Graph Z;
    for (const auto& v : G.vertices)
        if (!delv.count(v)) Z.vertices.insert(v);
    for (const auto& [id, e] : G.edges)
        if (!dele.count(id)) Z.edges[id] = e;

    GraphMorphism z{r.K, Z, {}, {}};
    for (const auto& v : r.K.vertices) z.vmap[v] = g.v(v);
    for (const auto& [id, e] : r.K.edges) z.emap[id] = g.e(id);

    Graph H = Z;
    auto fresh_vertex = [&](const Id& x) {
        auto it = fresh.vmap.find(x);
        if (it == fresh.vmap.end()) throw Error("apply: no fresh id for vertex " + x);
        return it->second;
    };
    for (const auto& v : r.R.vertices) {
        if (r.K.has_vertex(v)) continue;
        Id nv = fresh_vertex(v);
        if (H.has_vertex(nv)) throw Error("apply: fresh vertex id collides: " + nv);
        H.vertices.insert(nv);
    }
    auto attach = [&](const Id& x) {
        return r.K.has_vertex(x) ? z.v(x) : fresh_vertex(x);
    };
    for (const auto& [id, e] : r.R.edges) {
        if (r.K.has_edge(id)) continue;
        auto it = fresh.emap.find(id);
        if (it == fresh.emap.end()) throw Error("apply: no fresh id for edge " + id);
        if (H.has_edge(it->second)) throw Error("apply: fresh edge id collides: " + it->second);
        H.edges[it->second] = Edge{attach(e.src), attach(e.tgt), e.label};
    }

    GraphMorphism h{r.R, H, {}, {}};
    for (const auto& v : r.R.vertices)
        h.vmap[v] = r.K.has_vertex(v) ? z.v(v) : fresh_vertex(v);
    for (const auto& [id, e] : r.R.edges)
        h.emap[id] = r.K.has_edge(id) ? z.e(id) : fresh.emap.at(id);

    return DerivationStep{r, g, std::move(Z), std::move(z), std::move(h)};
}

DerivationStep apply(const Rule& r, const GraphMorphism& g, std::size_t step_index) {
    return apply(r, g, default_fresh_ids(r, step_index));
}

namespace {

// Z is an id-subset of `outer` with identical edge structure.
bool subgraph_of(const Graph& Z, const Graph& outer) {
    for (const auto& v : Z.vertices)
        if (!outer.has_vertex(v)) return false;
    for (const auto& [id, e] : Z.edges) {
        if (!outer.has_edge(id)) return false;
        if (!(outer.edge_at(id) == e)) return false;
    }
    return true;
}

// One pushout square: `outer` must be Z and the side's image glued
// exactly along K. `m` is the matching morphism from `side` into outer.
bool pushout_square(const Graph& K, const Graph& side, const GraphMorphism& m, const Graph& Z,
                    const Graph& outer) {
    if (!(m.dom == side) || !(m.cod == outer)) return false;
    if (!validate_morphism(m).empty()) return false;
    if (!subgraph_of(Z, outer)) return false;

    // No extra identifications: items outside K map injectively and
    // outside Z.
    std::set<Id> nonk_vimg, nonk_eimg;
    for (const auto& v : side.vertices) {
        if (K.has_vertex(v)) {
            if (!Z.has_vertex(m.v(v))) return false;  // K image must survive
            continue;
        }
        Id y = m.v(v);
        if (Z.has_vertex(y)) return false;
        if (!nonk_vimg.insert(y).second) return false;
    }
    for (const auto& [id, e] : side.edges) {
        if (K.has_edge(id)) {
            if (!Z.has_edge(m.e(id))) return false;
            continue;
        }
        Id y = m.e(id);
        if (Z.has_edge(y)) return false;
        if (!nonk_eimg.insert(y).second) return false;
    }

    // Joint surjectivity: every item of outer comes from Z or the side.
    for (const auto& v : outer.vertices)
        if (!Z.has_vertex(v) && !nonk_vimg.count(v)) return false;
    for (const auto& [id, e] : outer.edges)
        if (!Z.has_edge(id) && !nonk_eimg.count(id)) return false;
    return true;
}

}  // namespace

bool verify_double_pushout(const DerivationStep& step) {
    if (!validate_rule(step.rule).empty()) return false;
    if (!validate_morphism(step.z).empty() || !(step.z.dom == step.rule.K) ||
        !(step.z.cod == step.Z))
        return false;
    // Squares commute: g and h agree with z on K.
    for (const auto& v : step.rule.K.vertices)
        if (step.g.v(v) != step.z.v(v) || step.h.v(v) != step.z.v(v)) return false;
    for (const auto& [id, e] : step.rule.K.edges)
        if (step.g.e(id) != step.z.e(id) || step.h.e(id) != step.z.e(id)) return false;
    return pushout_square(step.rule.K, step.rule.L, step.g, step.Z, step.G()) &&
           pushout_square(step.rule.K, step.rule.R, step.h, step.Z, step.H());
}

DerivationStep invert_step(const DerivationStep& step) {
    return DerivationStep{invert_rule(step.rule), step.h, step.Z, step.z, step.g};
}

Derivation invert_derivation(const Derivation& d) {
    Derivation out;
    out.start = d.end();
    out.steps.reserve(d.steps.size());
    for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it)
        out.steps.push_back(invert_step(*it));
    return out;
}

std::vector<std::string> validate_derivation(const Derivation& d) {
    std::vector<std::string> violations;
    for (auto& v : validate_graph(d.start)) violations.push_back("start: " + v);
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const auto& s = d.steps[i];
        const Graph& expected = i == 0 ? d.start : d.steps[i - 1].H();
        if (!(s.G() == expected))
            violations.push_back("step " + std::to_string(i) + ": does not chain");
        if (!verify_double_pushout(s))
            violations.push_back("step " + std::to_string(i) + ": not a double pushout");
    }
    return violations;
}

Derivation run_script(const Graph& start, const std::vector<ScriptEntry>& entries,
                      const std::vector<Rule>& rules) {
    Derivation d;
    d.start = start;
    Graph current = start;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& entry = entries[i];
        auto it = std::find_if(rules.begin(), rules.end(),
                               [&](const Rule& r) { return r.name == entry.rule; });
        if (it == rules.end())
            throw Error("step " + std::to_string(i) + ": no such rule: " + entry.rule);
        const Rule& rule = *it;

        GraphMorphism match{rule.L, current, {}, {}};
        if (entry.match.auto_match) {
            bool found = false;
            for (auto& cand : enumerate_morphisms(rule.L, current, MatchMode::All)) {
                if (applicable(rule, cand)) {
                    match = std::move(cand);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error("step " + std::to_string(i) + ": no applicable match for rule " +
                            rule.name);
        } else {
            match.vmap = entry.match.vmap;
            match.emap = entry.match.emap;
            if (auto v = validate_morphism(match); !v.empty())
                throw Error("step " + std::to_string(i) + ": invalid match: " + v.front());
        }

        try {
            d.steps.push_back(apply(rule, match, i));
        } catch (const GluingError& e) {
            throw GluingError("step " + std::to_string(i) + " (" + rule.name +
                              "): " + e.what());
        }
        current = d.steps.back().H();
    }
    return d;
}

}  // namespace dpo
