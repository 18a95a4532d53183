#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpo {

using Id = std::string;

/// The distinguished token for unlabeled edges.
inline const std::string unlabeled = "*";

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    Id src;
    Id tgt;
    std::string label = unlabeled;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Finite directed edge-labeled graph. Vertex and edge identifiers are
/// opaque tokens; identity is token equality, so two graphs are equal
/// exactly when their id-sets and edge structures coincide.
struct Graph {
    std::set<Id> vertices;
    std::map<Id, Edge> edges;

    bool operator==(const Graph&) const = default;

    Graph& vertex(const Id& v) {
        vertices.insert(v);
        return *this;
    }

    Graph& edge(const Id& e, const Id& src, const Id& tgt, const std::string& label = unlabeled) {
        edges[e] = Edge{src, tgt, label};
        return *this;
    }

    /// Pair of opposite directed edges, ids `e` and `e` + "_r".
    Graph& undirected(const Id& e, const Id& a, const Id& b, const std::string& label = unlabeled) {
        edge(e, a, b, label);
        edge(e + "_r", b, a, label);
        return *this;
    }

    bool has_vertex(const Id& v) const { return vertices.count(v) != 0; }
    bool has_edge(const Id& e) const { return edges.count(e) != 0; }

    const Edge& edge_at(const Id& e) const {
        auto it = edges.find(e);
        if (it == edges.end()) throw Error("no such edge: " + e);
        return it->second;
    }

    bool empty() const { return vertices.empty() && edges.empty(); }
    std::size_t size() const { return vertices.size() + edges.size(); }
};

/// Empty list iff every edge's endpoints are declared vertices.
std::vector<std::string> validate_graph(const Graph& g);

/// An id-subset of a host graph. Stores sets, not a copied graph;
/// materialize() produces the standalone subgraph.
struct SubgraphHandle {
    Graph host;
    std::set<Id> vset;
    std::set<Id> eset;

    bool operator==(const SubgraphHandle&) const = default;
};

SubgraphHandle full_handle(const Graph& host);
SubgraphHandle empty_handle(const Graph& host);
SubgraphHandle make_handle(const Graph& host, std::set<Id> vset, std::set<Id> eset);

/// Empty list iff vset/eset are subsets of the host and (vset, eset)
/// is closed under edge endpoints.
std::vector<std::string> validate_handle(const SubgraphHandle& h);

/// Pullback of the two inclusions, realized as componentwise intersection.
SubgraphHandle intersect(const SubgraphHandle& a, const SubgraphHandle& b);

/// Pushout of the intersection span, realized as componentwise union.
SubgraphHandle unite(const SubgraphHandle& a, const SubgraphHandle& b);

bool handle_subset(const SubgraphHandle& a, const SubgraphHandle& b);

Graph materialize(const SubgraphHandle& h);

}  // namespace dpo
