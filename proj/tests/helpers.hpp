#pragma once

#include <filesystem>
#include <random>

#include "dpo/io.hpp"

namespace helpers {

using namespace dpo;

inline std::filesystem::path corpus_dir() { return CORPUS_DIR; }

struct Corpus {
    Graph k33;
    std::vector<Rule> color_rules;
    std::vector<Rule> dual_rules;
    Derivation d_color;
    Derivation d_dual;
};

inline const Corpus& corpus() {
    static const Corpus c = [] {
        Corpus out;
        auto dir = corpus_dir();
        out.k33 = io::load_graph(dir / "k33.json");
        auto run = [&](const char* script, std::vector<Rule>& rules) {
            auto sf = io::script_from_json(io::load(dir / script));
            for (const auto& r : sf.rules) rules.push_back(io::load_rule(dir / r));
            return run_script(io::load_graph(dir / sf.start), sf.entries, rules);
        };
        out.d_color = run("d_color.script.json", out.color_rules);
        out.d_dual = run("d_dual.script.json", out.dual_rules);
        return out;
    }();
    return c;
}

// ---- oracles: straight-line enumerations independent of the matcher ----

// All (optionally injective) total assignments, filtered by morphism
// validity. Exponential; for small instances only.
inline std::vector<GraphMorphism> naive_morphisms(const Graph& L, const Graph& G,
                                                  bool injective) {
    std::vector<Id> lv(L.vertices.begin(), L.vertices.end());
    std::vector<Id> le;
    for (const auto& [id, e] : L.edges) le.push_back(id);
    std::vector<Id> gv(G.vertices.begin(), G.vertices.end());
    std::vector<Id> ge;
    for (const auto& [id, e] : G.edges) ge.push_back(id);

    std::vector<GraphMorphism> out;
    if ((!lv.empty() && gv.empty()) || (!le.empty() && ge.empty())) return out;

    std::vector<std::size_t> vassign(lv.size(), 0), eassign(le.size(), 0);
    auto emit = [&] {
        GraphMorphism m{L, G, {}, {}};
        for (std::size_t i = 0; i < lv.size(); ++i) m.vmap[lv[i]] = gv[vassign[i]];
        for (std::size_t i = 0; i < le.size(); ++i) m.emap[le[i]] = ge[eassign[i]];
        if (!validate_morphism(m).empty()) return;
        if (injective) {
            auto c = classify(m);
            if (!c.mono) return;
        }
        out.push_back(std::move(m));
    };
    auto next = [](std::vector<std::size_t>& counters, std::size_t base) {
        for (std::size_t i = 0; i < counters.size(); ++i) {
            if (++counters[i] < base) return true;
            counters[i] = 0;
        }
        return false;
    };
    do {
        do emit();
        while (!le.empty() && next(eassign, ge.size()));
    } while (!lv.empty() && next(vassign, gv.size()));
    return out;
}

inline std::vector<GraphMorphism> naive_isomorphisms(const Graph& G, const Graph& H) {
    std::vector<GraphMorphism> out;
    if (G.vertices.size() != H.vertices.size() || G.edges.size() != H.edges.size()) return out;
    for (auto& m : naive_morphisms(G, H, true))
        if (classify(m).iso) out.push_back(std::move(m));
    return out;
}

// ---- randomized instances for the algebraic-law suite ----
//
// Rules on side A delete and add only "x"/"y"-labeled edges, side B
// only "s"/"t"-labeled ones, and neither deletes vertices. Any A-step
// and B-step are therefore parallel independent wherever both apply,
// which guarantees the move grid is defined.

struct RandomInstance {
    Graph start;
    std::vector<Rule> P;      // side A
    std::vector<Rule> P_bar;  // side B
    Derivation d;             // by P
    Derivation d_bar;         // by P_bar
};

inline Rule random_rule(std::mt19937& rng, const std::string& name,
                        const std::vector<std::string>& labels) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    Graph K;
    std::size_t kv = 1 + pick(2);
    for (std::size_t i = 0; i < kv; ++i) K.vertex("k" + std::to_string(i + 1));
    std::vector<Id> kverts(K.vertices.begin(), K.vertices.end());
    auto kvert = [&] { return kverts[pick(kverts.size())]; };
    auto label = [&] { return labels[pick(labels.size())]; };
    if (pick(5) == 0) K.edge("ke", kvert(), kvert(), label());

    Graph L = K;
    std::size_t deleted = pick(2);
    for (std::size_t i = 0; i < deleted; ++i)
        L.edge("de" + std::to_string(i), kvert(), kvert(), label());

    Graph R = K;
    if (pick(3) == 0) R.vertex("fv");
    std::vector<Id> rverts(R.vertices.begin(), R.vertices.end());
    std::size_t added = pick(3);
    for (std::size_t i = 0; i < added; ++i)
        R.edge("ae" + std::to_string(i), rverts[pick(rverts.size())], rverts[pick(rverts.size())],
               label());
    return Rule{name, std::move(L), std::move(K), std::move(R)};
}

inline Graph random_host(std::mt19937& rng) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    Graph g;
    std::size_t nv = 2 + pick(7);  // 2..8
    std::vector<Id> verts;
    for (std::size_t i = 0; i < nv; ++i) {
        verts.push_back("n" + std::to_string(i + 1));
        g.vertex(verts.back());
    }
    static const std::vector<std::string> labels{"x", "y", "s", "t"};
    std::size_t ne = pick(11);
    for (std::size_t i = 0; i < ne; ++i)
        g.edge("h" + std::to_string(i + 1), verts[pick(nv)], verts[pick(nv)],
               labels[pick(labels.size())]);
    return g;
}

inline Derivation random_derivation(std::mt19937& rng, const Graph& start,
                                    const std::vector<Rule>& rules, std::size_t max_steps) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    Derivation d;
    d.start = start;
    Graph current = start;
    std::size_t target = pick(max_steps + 1);
    for (std::size_t i = 0; i < target; ++i) {
        // try rules in a random rotation until one has an applicable match
        std::size_t offset = pick(rules.size());
        bool stepped = false;
        for (std::size_t k = 0; k < rules.size() && !stepped; ++k) {
            const Rule& r = rules[(offset + k) % rules.size()];
            std::vector<GraphMorphism> matches;
            for (auto& m : enumerate_morphisms(r.L, current, MatchMode::All))
                if (applicable(r, m)) matches.push_back(std::move(m));
            if (matches.empty()) continue;
            d.steps.push_back(apply(r, matches[pick(matches.size())], d.steps.size()));
            current = d.steps.back().H();
            stepped = true;
        }
        if (!stepped) break;
    }
    return d;
}

inline RandomInstance random_instance(std::mt19937& rng) {
    RandomInstance inst;
    inst.start = random_host(rng);
    static const std::vector<std::string> a_labels{"x", "y"};
    static const std::vector<std::string> b_labels{"s", "t"};
    for (int i = 0; i < 2; ++i) {
        inst.P.push_back(random_rule(rng, "pa" + std::to_string(i), a_labels));
        inst.P_bar.push_back(random_rule(rng, "pb" + std::to_string(i), b_labels));
    }
    inst.d = random_derivation(rng, inst.start, inst.P, 6);
    inst.d_bar = random_derivation(rng, inst.start, inst.P_bar, 6);
    return inst;
}

// Random handle on d.start that contains the accessed part (closure is
// kept by only adding edges whose endpoints are already in).
inline SubgraphHandle random_superset_handle(std::mt19937& rng, const Derivation& d) {
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    SubgraphHandle h = accessed_part(d).handle;
    for (const auto& v : d.start.vertices)
        if (pick(2) == 0) h.vset.insert(v);
    for (const auto& [id, e] : d.start.edges)
        if (h.vset.count(e.src) && h.vset.count(e.tgt) && pick(2) == 0) h.eset.insert(id);
    return h;
}

}  // namespace helpers
