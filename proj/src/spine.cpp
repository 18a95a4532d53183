#include "dpo/spine.hpp"

#include <algorithm>

#include "dpo/match.hpp"

namespace dpo {

namespace {

SubgraphHandle ids_of(const Graph& g, const Graph& host) {
    SubgraphHandle h{host, g.vertices, {}};
    for (const auto& [id, e] : g.edges) h.eset.insert(id);
    return h;
}

}  // namespace

AccessedPart accessed_part(const Derivation& d) {
    std::set<Id> vacc, eacc;
    for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it) {
        const DerivationStep& s = *it;
        std::set<Id> vnext, enext;
        for (const auto& v : vacc)
            if (s.Z.has_vertex(v)) vnext.insert(v);
        for (const auto& e : eacc)
            if (s.Z.has_edge(e)) enext.insert(e);
        for (const auto& [x, y] : s.g.vmap) vnext.insert(y);
        for (const auto& [x, y] : s.g.emap) enext.insert(y);
        vacc = std::move(vnext);
        eacc = std::move(enext);
    }
    return AccessedPart{d, SubgraphHandle{d.start, std::move(vacc), std::move(eacc)}};
}

std::optional<SubgraphHandle> factors_through(const AccessedPart& acc, const SubgraphHandle& m) {
    if (!(acc.handle.host == m.host))
        throw Error("factors_through: handles live in different hosts");
    if (!handle_subset(acc.handle, m)) return std::nullopt;
    return SubgraphHandle{materialize(m), acc.handle.vset, acc.handle.eset};
}

std::pair<DerivationStep, SubgraphHandle> restrict_step(const DerivationStep& step,
                                                        const SubgraphHandle& m,
                                                        const GraphMorphism& g_restricted) {
    if (!(m.host == step.G())) throw Error("restrict_step: handle is not on the step's host");
    const Graph Gr = materialize(m);
    if (!(g_restricted.cod == Gr))
        throw Error("restrict_step: restricted match has the wrong codomain");
    if (g_restricted.vmap != step.g.vmap || g_restricted.emap != step.g.emap)
        throw Error("restrict_step: restricted match differs from the recorded one");

    Graph Zr;
    for (const auto& v : step.Z.vertices)
        if (Gr.has_vertex(v)) Zr.vertices.insert(v);
    for (const auto& [id, e] : step.Z.edges)
        if (Gr.has_edge(id)) Zr.edges[id] = e;

    // Fresh items keep their original ids, so the restricted derived
    // graph sits inside the original one as an id-subset.
    Graph Hr = Zr;
    for (const auto& v : step.fresh_vertices()) Hr.vertices.insert(v);
    for (const auto& e : step.fresh_edges()) Hr.edges[e] = step.H().edge_at(e);

    GraphMorphism zr{step.rule.K, Zr, step.z.vmap, step.z.emap};
    GraphMorphism hr{step.rule.R, Hr, step.h.vmap, step.h.emap};
    if (auto v = validate_morphism(zr); !v.empty())
        throw Error("restrict_step: K-image not preserved: " + v.front());
    if (auto v = validate_morphism(hr); !v.empty())
        throw Error("restrict_step: right match not preserved: " + v.front());

    DerivationStep out{step.rule, g_restricted, std::move(Zr), std::move(zr), std::move(hr)};
    SubgraphHandle next = ids_of(out.H(), step.H());
    return {std::move(out), std::move(next)};
}

RestrictionCertificate restrict_derivation(const Derivation& d, const SubgraphHandle& m) {
    if (!(m.host == d.start)) throw Error("restrict: handle is not on the start graph");
    if (auto v = validate_handle(m); !v.empty()) throw Error("restrict: bad handle: " + v.front());

    AccessedPart acc = accessed_part(d);
    if (!factors_through(acc, m)) {
        std::string missing;
        for (const auto& v : acc.handle.vset)
            if (!m.vset.count(v)) missing += " " + v;
        for (const auto& e : acc.handle.eset)
            if (!m.eset.count(e)) missing += " " + e;
        throw Error("restrict: accessed part does not factor through the subgraph; missing:" +
                    missing);
    }

    RestrictionCertificate cert;
    cert.original = d;
    cert.restricted.start = materialize(m);
    cert.mono_chain.push_back(m);

    SubgraphHandle current = m;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const DerivationStep& s = d.steps[i];
        GraphMorphism gr = corestrict(s.g, materialize(current));
        auto [rstep, next] = restrict_step(s, current, gr);
        cert.restricted.steps.push_back(std::move(rstep));
        cert.mono_chain.push_back(next);
        current = std::move(next);
    }
    return cert;
}

std::vector<std::string> validate_restriction(const RestrictionCertificate& cert) {
    std::vector<std::string> violations;
    const std::size_t n = cert.original.length();
    if (cert.restricted.length() != n || cert.mono_chain.size() != n + 1) {
        violations.push_back("certificate has mismatched lengths");
        return violations;
    }
    for (auto& v : validate_derivation(cert.restricted)) violations.push_back("restricted: " + v);

    if (!(cert.mono_chain.front().host == cert.original.start))
        violations.push_back("first handle not on the original start graph");
    if (!(materialize(cert.mono_chain.front()) == cert.restricted.start))
        violations.push_back("restricted start is not the first handle's subgraph");

    for (std::size_t i = 0; i < n; ++i) {
        const DerivationStep& s = cert.original.steps[i];
        const DerivationStep& r = cert.restricted.steps[i];
        const std::string at = "step " + std::to_string(i) + ": ";
        if (!(r.rule == s.rule)) violations.push_back(at + "rule differs");
        if (r.g.vmap != s.g.vmap || r.g.emap != s.g.emap)
            violations.push_back(at + "left match differs");
        if (r.h.vmap != s.h.vmap || r.h.emap != s.h.emap)
            violations.push_back(at + "right match differs");

        if (!(cert.mono_chain[i + 1].host == s.H()))
            violations.push_back(at + "handle not on the original derived graph");
        if (!(materialize(cert.mono_chain[i + 1]) == r.H()))
            violations.push_back(at + "derived graph is not the handle's subgraph");

        // Side squares are pullbacks: the restricted intermediate graph
        // is exactly the original one intersected with each handle.
        SubgraphHandle zl = intersect(ids_of(s.Z, s.G()), cert.mono_chain[i]);
        SubgraphHandle rz = ids_of(r.Z, s.G());
        if (!(zl.vset == rz.vset && zl.eset == rz.eset))
            violations.push_back(at + "left side square is not a pullback");
        SubgraphHandle zr = intersect(ids_of(s.Z, s.H()), cert.mono_chain[i + 1]);
        if (!(zr.vset == rz.vset && zr.eset == rz.eset))
            violations.push_back(at + "right side square is not a pullback");
    }
    return violations;
}

std::pair<AccessedPart, Derivation> spine(const Derivation& d) {
    AccessedPart acc = accessed_part(d);
    RestrictionCertificate cert = restrict_derivation(d, acc.handle);
    return {std::move(acc), std::move(cert.restricted)};
}

namespace {

// Deterministically extends a start iso along both derivations; fails
// when it stops commuting with the matches or stops being an iso.
std::optional<std::vector<GraphMorphism>> propagate_iso(const Derivation& d, const Derivation& d2,
                                                        const GraphMorphism& start_iso) {
    std::vector<GraphMorphism> chain{start_iso};
    GraphMorphism cur = start_iso;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const DerivationStep& s = d.steps[i];
        const DerivationStep& s2 = d2.steps[i];
        for (const auto& [x, y] : s.g.vmap)
            if (s2.g.v(x) != cur.v(y)) return std::nullopt;
        for (const auto& [x, y] : s.g.emap)
            if (s2.g.e(x) != cur.e(y)) return std::nullopt;

        GraphMorphism mid{s.Z, s2.Z, {}, {}};
        for (const auto& v : s.Z.vertices) {
            if (!s2.Z.has_vertex(cur.v(v))) return std::nullopt;
            mid.vmap[v] = cur.v(v);
        }
        for (const auto& [id, e] : s.Z.edges) {
            if (!s2.Z.has_edge(cur.e(id))) return std::nullopt;
            mid.emap[id] = cur.e(id);
        }
        if (!validate_morphism(mid).empty() || !classify(mid).iso) return std::nullopt;

        GraphMorphism next{s.H(), s2.H(), mid.vmap, mid.emap};
        for (const auto& v : s.fresh_vertices()) {
            // fresh ids correspond through the right matches
            for (const auto& [x, y] : s.h.vmap)
                if (y == v) next.vmap[v] = s2.h.v(x);
        }
        for (const auto& e : s.fresh_edges()) {
            for (const auto& [x, y] : s.h.emap)
                if (y == e) next.emap[e] = s2.h.e(x);
        }
        if (!validate_morphism(next).empty() || !classify(next).iso) return std::nullopt;

        chain.push_back(mid);
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

}  // namespace

DerivationIsoResult derivations_equal_up_to_iso(const Derivation& d, const Derivation& d2,
                                                std::size_t max_start_isos) {
    DerivationIsoResult result;
    if (d.rule_names() != d2.rule_names()) return result;  // NotEqual

    // shared start graph: the identity usually propagates, so try it
    // before enumerating the whole automorphism group
    if (d.start == d2.start) {
        if (auto chain = propagate_iso(d, d2, identity(d.start))) {
            result.status = IsoSearchStatus::Found;
            result.witness = DerivationIso{d, d2, std::move(*chain)};
            return result;
        }
    }

    auto isos = enumerate_isomorphisms(d.start, d2.start, max_start_isos + 1);
    bool capped = isos.size() > max_start_isos;
    if (capped) isos.pop_back();

    for (const auto& iso : isos) {
        if (auto chain = propagate_iso(d, d2, iso)) {
            result.status = IsoSearchStatus::Found;
            result.witness = DerivationIso{d, d2, std::move(*chain)};
            return result;
        }
    }
    result.status = capped ? IsoSearchStatus::Undecided : IsoSearchStatus::NotEqual;
    return result;
}

SpineReport check_spine_preservation(const Derivation& d, const Derivation& d_bar) {
    SpineReport report;
    Derivation moved;
    try {
        moved = move_forward(d, d_bar).moved;
    } catch (const Error& e) {
        report.detail = std::string("moving failed: ") + e.what();
        return report;
    }

    auto [acc, sp] = spine(d);
    auto [acc2, sp2] = spine(moved);
    auto iso = derivations_equal_up_to_iso(sp, sp2);
    switch (iso.status) {
        case IsoSearchStatus::Found:
            report.pass = true;
            report.detail = "spines equal up to isomorphism";
            report.witness = iso.witness;
            break;
        case IsoSearchStatus::NotEqual:
            report.detail = "spines are not isomorphic";
            break;
        case IsoSearchStatus::Undecided:
            report.detail = "start iso enumeration hit the cap";
            break;
    }

    if (d_bar.length() == 1) {
        // Single-step law: restricting to the step's preserved part
        // commutes with moving, on the nose.
        report.one_step_law_checked = true;
        const DerivationStep& s = d_bar.steps.front();
        try {
            auto left = restrict_derivation(d, ids_of(s.Z, d.start)).restricted;
            auto right = restrict_derivation(moved, ids_of(s.Z, moved.start)).restricted;
            report.one_step_law_holds = left == right;
        } catch (const Error& e) {
            report.one_step_law_holds = false;
            report.detail += std::string("; one-step restriction failed: ") + e.what();
        }
        if (!report.one_step_law_holds) {
            report.pass = false;
            if (report.detail.find("one-step") == std::string::npos)
                report.detail += "; one-step restriction law failed";
        }
    }
    return report;
}

}  // namespace dpo
