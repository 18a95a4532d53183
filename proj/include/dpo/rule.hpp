#pragma once

#include <string>
#include <vector>

#include "dpo/morphism.hpp"

namespace dpo {

/// A span L >= K <= R given by id-sharing: every item of K occurs in L
/// and in R with identical structure.
struct Rule {
    std::string name;
    Graph L;
    Graph K;
    Graph R;

    bool operator==(const Rule&) const = default;
};

std::vector<std::string> validate_rule(const Rule& r);

/// Swaps L and R; an involution.
Rule invert_rule(const Rule& r);

/// Identification condition: items of L identified by g lie in K.
bool check_identification(const Rule& r, const GraphMorphism& g);

/// Dangling condition: no edge of G outside g(L)-g(K) touches a vertex
/// of g(L)-g(K).
bool check_dangling(const Rule& r, const GraphMorphism& g);

/// Both gluing conditions, with one message per violating item.
std::vector<std::string> gluing_violations(const Rule& r, const GraphMorphism& g);

inline bool applicable(const Rule& r, const GraphMorphism& g) {
    return check_identification(r, g) && check_dangling(r, g);
}

}  // namespace dpo
