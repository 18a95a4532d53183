#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dpo/graph.hpp"

namespace dpo {

/// Structure-preserving pair of vertex/edge maps between two graphs.
/// Domain and codomain are stored by value; morphism equality is
/// componentwise value equality.
struct GraphMorphism {
    Graph dom;
    Graph cod;
    std::map<Id, Id> vmap;
    std::map<Id, Id> emap;

    bool operator==(const GraphMorphism&) const = default;

    Id v(const Id& x) const {
        auto it = vmap.find(x);
        if (it == vmap.end()) throw Error("morphism undefined on vertex " + x);
        return it->second;
    }

    Id e(const Id& x) const {
        auto it = emap.find(x);
        if (it == emap.end()) throw Error("morphism undefined on edge " + x);
        return it->second;
    }
};

/// Empty list iff the maps are total on the domain, land in the
/// codomain, and preserve sources, targets and labels.
std::vector<std::string> validate_morphism(const GraphMorphism& m);

GraphMorphism identity(const Graph& g);

/// Inclusion of an id-subset graph into a host containing it.
GraphMorphism inclusion(const Graph& sub, const Graph& host);
GraphMorphism inclusion(const SubgraphHandle& h);

/// g after f; requires cod(f) = dom(g) as graph values.
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);

struct MorphismClass {
    bool mono = false;
    bool epi = false;
    bool iso = false;
};

MorphismClass classify(const GraphMorphism& m);

/// Image of m inside its codomain.
SubgraphHandle image_handle(const GraphMorphism& m);

struct EpiMonoFactorization {
    GraphMorphism epi;    // dom -> image
    SubgraphHandle image;  // handle in cod
    GraphMorphism mono;   // image -> cod (inclusion)
};

/// m = mono . epi with the image as an id-subset of the codomain.
EpiMonoFactorization epi_mono_factorize(const GraphMorphism& m);

/// Corestriction of m to an id-subset of its codomain; requires the
/// image to lie inside the handle.
GraphMorphism corestrict(const GraphMorphism& m, const SubgraphHandle& h);
GraphMorphism corestrict(const GraphMorphism& m, const Graph& sub);

}  // namespace dpo
