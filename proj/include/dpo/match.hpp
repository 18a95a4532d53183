#pragma once

#include <optional>
#include <vector>

#include "dpo/morphism.hpp"

namespace dpo {

enum class MatchMode {
    Monomorphisms,  // injective on vertices and edges
    All,            // arbitrary structure-preserving maps
};

/// Backtracking enumeration of morphisms L -> G in a deterministic
/// order: candidate images are tried in lexicographic id order,
/// vertices before edges.
std::vector<GraphMorphism> enumerate_morphisms(const Graph& L, const Graph& G,
                                               MatchMode mode = MatchMode::Monomorphisms);

inline std::vector<GraphMorphism> enumerate_monomorphisms(const Graph& L, const Graph& G) {
    return enumerate_morphisms(L, G, MatchMode::Monomorphisms);
}

/// First isomorphism G -> H in enumeration order, if any.
std::optional<GraphMorphism> find_isomorphism(const Graph& G, const Graph& H);

/// All isomorphisms G -> H, stopping after `cap` results.
std::vector<GraphMorphism> enumerate_isomorphisms(const Graph& G, const Graph& H,
                                                  std::size_t cap = 10000);

}  // namespace dpo
