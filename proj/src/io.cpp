#include "dpo/io.hpp"

#include <fstream>

namespace dpo::io {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw ParseError(msg);
}

void check_kind(const json& j, const std::string& kind) {
    require(j.is_object(), "expected a JSON object for " + kind);
    require(j.value("kind", "") == kind, "expected kind \"" + kind + "\"");
    require(j.value("version", 0) == format_version, kind + ": unsupported format version");
}

std::map<Id, Id> idmap_from_json(const json& j) {
    std::map<Id, Id> out;
    require(j.is_object(), "expected an object of id pairs");
    for (auto it = j.begin(); it != j.end(); ++it) {
        require(it.value().is_string(), "id map values must be strings");
        out[it.key()] = it.value().get<std::string>();
    }
    return out;
}

json idmap_to_json(const std::map<Id, Id>& m) {
    json j = json::object();
    for (const auto& [x, y] : m) j[x] = y;
    return j;
}

}  // namespace

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [id, e] : g.edges)
        edges.push_back({{"id", id}, {"src", e.src}, {"tgt", e.tgt}, {"label", e.label}});
    return {{"kind", "graph"},
            {"version", format_version},
            {"vertices", g.vertices},
            {"edges", edges}};
}

json to_json(const GraphMorphism& m) {
    return {{"vmap", idmap_to_json(m.vmap)}, {"emap", idmap_to_json(m.emap)}};
}

json to_json(const SubgraphHandle& h) { return {{"vset", h.vset}, {"eset", h.eset}}; }

json to_json(const Rule& r) {
    return {{"kind", "rule"},
            {"version", format_version},
            {"name", r.name},
            {"L", to_json(r.L)},
            {"K", to_json(r.K)},
            {"R", to_json(r.R)}};
}

json to_json(const DerivationStep& s) {
    return {{"rule", to_json(s.rule)},
            {"g", to_json(s.g)},
            {"G", to_json(s.G())},
            {"Z", to_json(s.Z)},
            {"z", to_json(s.z)},
            {"h", to_json(s.h)},
            {"H", to_json(s.H())}};
}

json to_json(const Derivation& d) {
    json steps = json::array();
    for (const auto& s : d.steps) steps.push_back(to_json(s));
    return {{"kind", "derivation"},
            {"version", format_version},
            {"start", to_json(d.start)},
            {"steps", steps}};
}

json to_json(const MovedPair& grid) {
    return {{"kind", "moved_pair"},
            {"version", format_version},
            {"moved", to_json(grid.moved)},
            {"co_moved", to_json(grid.co_moved)}};
}

json to_json(const RestrictionCertificate& cert) {
    json chain = json::array();
    for (const auto& h : cert.mono_chain) chain.push_back(to_json(h));
    return {{"kind", "restriction"},
            {"version", format_version},
            {"original", to_json(cert.original)},
            {"mono_chain", chain},
            {"restricted", to_json(cert.restricted)}};
}

json to_json(const IndependenceReport& report) {
    return {{"kind", "independence_report"},
            {"version", format_version},
            {"sequential", report.sequential},
            {"pairs_checked", report.pairs_checked},
            {"counterexamples", report.counterexamples},
            {"bounded", report.bounded}};
}

Graph graph_from_json(const json& j) {
    check_kind(j, "graph");
    Graph g;
    for (const auto& v : j.at("vertices")) {
        require(v.is_string(), "graph: vertex ids must be strings");
        g.vertices.insert(v.get<std::string>());
    }
    const json& edges = j.at("edges");
    if (edges.is_array()) {
        for (const json& e : edges) {
            Id id = e.at("id").get<std::string>();
            require(!g.edges.count(id), "graph: duplicate edge id " + id);
            g.edges[id] = Edge{e.at("src").get<std::string>(), e.at("tgt").get<std::string>(),
                               e.value("label", unlabeled)};
        }
    } else if (edges.is_object()) {
        for (auto it = edges.begin(); it != edges.end(); ++it) {
            const json& e = it.value();
            g.edges[it.key()] = Edge{e.at("src").get<std::string>(),
                                     e.at("tgt").get<std::string>(), e.value("label", unlabeled)};
        }
    } else {
        throw ParseError("graph: edges must be an array or object");
    }
    if (auto v = validate_graph(g); !v.empty()) throw ParseError("graph: " + v.front());
    return g;
}

Rule rule_from_json(const json& j) {
    check_kind(j, "rule");
    Rule r{j.at("name").get<std::string>(), graph_from_json(j.at("L")),
           graph_from_json(j.at("K")), graph_from_json(j.at("R"))};
    if (auto v = validate_rule(r); !v.empty()) throw ParseError("rule " + r.name + ": " + v.front());
    return r;
}

SubgraphHandle handle_from_json(const json& j, const Graph& host) {
    SubgraphHandle h{host, {}, {}};
    for (const auto& v : j.at("vset")) h.vset.insert(v.get<std::string>());
    for (const auto& e : j.at("eset")) h.eset.insert(e.get<std::string>());
    if (auto v = validate_handle(h); !v.empty()) throw ParseError("handle: " + v.front());
    return h;
}

GraphMorphism morphism_from_json(const json& j, const Graph& dom, const Graph& cod) {
    GraphMorphism m{dom, cod, idmap_from_json(j.at("vmap")), idmap_from_json(j.at("emap"))};
    if (auto v = validate_morphism(m); !v.empty()) throw ParseError("morphism: " + v.front());
    return m;
}

Derivation derivation_from_json(const json& j) {
    check_kind(j, "derivation");
    Derivation d;
    d.start = graph_from_json(j.at("start"));
    for (const json& js : j.at("steps")) {
        DerivationStep s;
        s.rule = rule_from_json(js.at("rule"));
        Graph G = graph_from_json(js.at("G"));
        Graph Z = graph_from_json(js.at("Z"));
        Graph H = graph_from_json(js.at("H"));
        s.g = morphism_from_json(js.at("g"), s.rule.L, G);
        s.z = morphism_from_json(js.at("z"), s.rule.K, Z);
        s.h = morphism_from_json(js.at("h"), s.rule.R, H);
        s.Z = std::move(Z);
        d.steps.push_back(std::move(s));
    }
    if (auto v = validate_derivation(d); !v.empty()) throw ParseError("derivation: " + v.front());
    return d;
}

ScriptFile script_from_json(const json& j) {
    check_kind(j, "script");
    ScriptFile sf;
    sf.start = j.at("start").get<std::string>();
    for (const auto& p : j.at("rules")) sf.rules.emplace_back(p.get<std::string>());
    for (const json& js : j.at("steps")) {
        ScriptEntry entry;
        entry.rule = js.at("rule").get<std::string>();
        if (js.contains("match")) {
            entry.match.auto_match = false;
            entry.match.vmap = idmap_from_json(js.at("match").at("vmap"));
            entry.match.emap = idmap_from_json(js.at("match").at("emap"));
        }
        sf.entries.push_back(std::move(entry));
    }
    return sf;
}

json load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return j;
}

void save(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string kind_of(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("artifact has no \"kind\" field");
    return j.at("kind").get<std::string>();
}

Graph load_graph(const std::filesystem::path& path) { return graph_from_json(load(path)); }
Rule load_rule(const std::filesystem::path& path) { return rule_from_json(load(path)); }
Derivation load_derivation(const std::filesystem::path& path) {
    return derivation_from_json(load(path));
}

Derivation replay(const Derivation& d) {
    Derivation out;
    out.start = d.start;
    Graph current = d.start;
    for (const auto& s : d.steps) {
        FreshIds fresh;
        for (const auto& v : s.rule.R.vertices)
            if (!s.rule.K.has_vertex(v)) fresh.vmap[v] = s.h.v(v);
        for (const auto& [id, e] : s.rule.R.edges)
            if (!s.rule.K.has_edge(id)) fresh.emap[id] = s.h.e(id);
        GraphMorphism g{s.rule.L, current, s.g.vmap, s.g.emap};
        if (auto v = validate_morphism(g); !v.empty())
            throw Error("replay: recorded match invalid: " + v.front());
        out.steps.push_back(apply(s.rule, g, fresh));
        current = out.steps.back().H();
    }
    return out;
}

}  // namespace dpo::io
