#include "dpo/independence.hpp"

#include "dpo/match.hpp"

namespace dpo {

namespace {

bool image_inside(const GraphMorphism& m, const Graph& Z) {
    for (const auto& [x, y] : m.vmap)
        if (!Z.has_vertex(y)) return false;
    for (const auto& [x, y] : m.emap)
        if (!Z.has_edge(y)) return false;
    return true;
}

FreshIds fresh_ids_of(const DerivationStep& s) {
    FreshIds fresh;
    for (const auto& v : s.rule.R.vertices)
        if (!s.rule.K.has_vertex(v)) fresh.vmap[v] = s.h.v(v);
    for (const auto& [id, e] : s.rule.R.edges)
        if (!s.rule.K.has_edge(id)) fresh.emap[id] = s.h.e(id);
    return fresh;
}

// The recorded match transported into a larger graph containing its
// image (same maps, new codomain).
GraphMorphism transport(const GraphMorphism& m, const Graph& cod) {
    GraphMorphism out{m.dom, cod, m.vmap, m.emap};
    if (auto v = validate_morphism(out); !v.empty())
        throw Error("transported match invalid: " + v.front());
    return out;
}

}  // namespace

std::optional<IndependenceWitness> parallel_independent(const DerivationStep& s1,
                                                        const DerivationStep& s2) {
    if (!(s1.G() == s2.G())) throw Error("parallel_independent: steps have different hosts");
    if (!image_inside(s1.g, s2.Z) || !image_inside(s2.g, s1.Z)) return std::nullopt;
    return IndependenceWitness{corestrict(s1.g, s2.Z), corestrict(s2.g, s1.Z)};
}

std::optional<IndependenceWitness> sequentially_independent(const DerivationStep& s1,
                                                            const DerivationStep& s2) {
    if (!(s1.H() == s2.G())) throw Error("sequentially_independent: steps do not compose");
    if (!image_inside(s1.h, s2.Z) || !image_inside(s2.g, s1.Z)) return std::nullopt;
    return IndependenceWitness{corestrict(s1.h, s2.Z), corestrict(s2.g, s1.Z)};
}

std::pair<DerivationStep, DerivationStep> conflux(const DerivationStep& s1,
                                                  const DerivationStep& s2,
                                                  const IndependenceWitness& w) {
    if (!(w.f.dom == s1.rule.L) || !(w.f.cod == s2.Z) || !(w.f_bar.dom == s2.rule.L) ||
        !(w.f_bar.cod == s1.Z))
        throw Error("conflux: witness does not fit the step pair");

    // Matches survive in the other step's derived graph; fresh ids are
    // taken from the original steps so both squares close on the same X.
    DerivationStep t2 = apply(s2.rule, transport(w.f_bar, s1.H()), fresh_ids_of(s2));
    DerivationStep t1 = apply(s1.rule, transport(w.f, s2.H()), fresh_ids_of(s1));
    if (!(t1.H() == t2.H())) throw Error("conflux: squares closed on different graphs");
    return {std::move(t2), std::move(t1)};
}

std::pair<DerivationStep, DerivationStep> interchange(const DerivationStep& s1,
                                                      const DerivationStep& s2,
                                                      const IndependenceWitness& w) {
    // Inverting the first step turns the sequential pair into a peak.
    auto [t2, t1] = conflux(invert_step(s1), s2, w);
    return {std::move(t2), invert_step(t1)};
}

MovedPair move_forward(const Derivation& d, const Derivation& d_bar) {
    if (!(d.start == d_bar.start)) throw Error("move: derivations have different start graphs");
    const std::size_t n = d.length();
    const std::size_t m = d_bar.length();

    MovedPair grid;
    grid.vertical.assign(n, std::vector<DerivationStep>(m + 1));
    grid.horizontal.assign(n + 1, std::vector<DerivationStep>(m));
    for (std::size_t i = 0; i < n; ++i) grid.vertical[i][0] = d.steps[i];
    for (std::size_t j = 0; j < m; ++j) grid.horizontal[0][j] = d_bar.steps[j];

    // Row-major: each step of d is moved across the whole of d_bar
    // before the next one, mirroring the inductive construction.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto& v = grid.vertical[i][j];
            const auto& hz = grid.horizontal[i][j];
            auto w = parallel_independent(v, hz);
            if (!w)
                throw MoveError("move: steps not parallel independent at cell (" +
                                    std::to_string(i) + "," + std::to_string(j) + "): rules " +
                                    v.rule.name + " and " + hz.rule.name,
                                i, j);
            auto [next_h, next_v] = conflux(v, hz, *w);
            grid.horizontal[i + 1][j] = std::move(next_h);
            grid.vertical[i][j + 1] = std::move(next_v);
        }
    }

    grid.moved.start = d_bar.end();
    for (std::size_t i = 0; i < n; ++i) grid.moved.steps.push_back(grid.vertical[i][m]);
    grid.co_moved.start = d.end();
    for (std::size_t j = 0; j < m; ++j) grid.co_moved.steps.push_back(grid.horizontal[n][j]);
    return grid;
}

Derivation evom(const Derivation& d_prime, const Derivation& d_bar) {
    if (!(d_bar.end() == d_prime.start))
        throw Error("evom: d_bar does not end at d_prime's start");
    return move_forward(d_prime, invert_derivation(d_bar)).moved;
}

namespace {

std::vector<DerivationStep> applicable_steps(const Rule& r, const Graph& G,
                                             std::size_t fresh_index) {
    std::vector<DerivationStep> steps;
    for (auto& g : enumerate_morphisms(r.L, G, MatchMode::All))
        if (applicable(r, g)) steps.push_back(apply(r, g, fresh_index));
    return steps;
}

std::string describe(const DerivationStep& s) {
    std::string out = s.rule.name + " at {";
    bool first = true;
    for (const auto& [x, y] : s.g.vmap) {
        if (!first) out += ",";
        out += x + "->" + y;
        first = false;
    }
    return out + "}";
}

}  // namespace

IndependenceReport check_rule_pair_independence(const std::vector<Rule>& P,
                                                const std::vector<Rule>& P_bar,
                                                const std::vector<Graph>& hosts,
                                                bool sequential) {
    IndependenceReport report;
    report.sequential = sequential;
    for (std::size_t hi = 0; hi < hosts.size(); ++hi) {
        const Graph& G = hosts[hi];
        if (!sequential) {
            for (const auto& p : P) {
                auto p_steps = applicable_steps(p, G, 0);
                for (const auto& pb : P_bar) {
                    auto pb_steps = applicable_steps(pb, G, 1);
                    for (const auto& s1 : p_steps)
                        for (const auto& s2 : pb_steps) {
                            ++report.pairs_checked;
                            if (!parallel_independent(s1, s2))
                                report.counterexamples.push_back(
                                    "host " + std::to_string(hi) + ": " + describe(s1) +
                                    " vs " + describe(s2));
                        }
                }
            }
        } else {
            // Each one-step reachable composition of a P_bar-step
            // followed by a P-step.
            for (const auto& pb : P_bar) {
                for (const auto& s1 : applicable_steps(pb, G, 0)) {
                    for (const auto& p : P) {
                        for (const auto& s2 : applicable_steps(p, s1.H(), 1)) {
                            ++report.pairs_checked;
                            if (!sequentially_independent(s1, s2))
                                report.counterexamples.push_back(
                                    "host " + std::to_string(hi) + ": " + describe(s1) +
                                    " then " + describe(s2));
                        }
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace dpo
