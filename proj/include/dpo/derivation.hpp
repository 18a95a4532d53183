#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dpo/rule.hpp"

namespace dpo {

struct GluingError : Error {
    using Error::Error;
};

/// Identifier assignment for the fresh copies of R-K items.
struct FreshIds {
    std::map<Id, Id> vmap;
    std::map<Id, Id> emap;
};

/// Deterministic default scheme: "<ruleName>.<stepIndex>.<originalId>".
FreshIds default_fresh_ids(const Rule& r, std::size_t step_index);

/// Full record of one double-pushout application. G and H are the
/// codomains of g and h; Z is an id-subset of both.
struct DerivationStep {
    Rule rule;
    GraphMorphism g;  // L -> G
    Graph Z;
    GraphMorphism z;  // K -> Z
    GraphMorphism h;  // R -> H

    const Graph& G() const { return g.cod; }
    const Graph& H() const { return h.cod; }
    GraphMorphism incl_ZG() const { return inclusion(Z, G()); }
    GraphMorphism incl_ZH() const { return inclusion(Z, H()); }

    /// Images the step removes from G (ids of g(L)-g(K)).
    std::set<Id> deleted_vertices() const;
    std::set<Id> deleted_edges() const;
    /// Fresh images the step adds to H (ids of h(R-K)).
    std::set<Id> fresh_vertices() const;
    std::set<Id> fresh_edges() const;

    bool operator==(const DerivationStep&) const = default;
};

struct Derivation {
    Graph start;
    std::vector<DerivationStep> steps;

    const Graph& end() const { return steps.empty() ? start : steps.back().H(); }
    std::size_t length() const { return steps.size(); }
    std::vector<std::string> rule_names() const;

    bool operator==(const Derivation&) const = default;
};

/// Empty list iff all steps verify and chain by graph value.
std::vector<std::string> validate_derivation(const Derivation& d);

/// The three-step construction: remove g(L)-g(K), then glue in fresh
/// copies of R-K attached along g on K. Throws GluingError when the
/// identification or dangling condition fails.
DerivationStep apply(const Rule& r, const GraphMorphism& g, const FreshIds& fresh);
DerivationStep apply(const Rule& r, const GraphMorphism& g, std::size_t step_index = 0);

/// Concrete pushout criterion for both squares: the outer graph is
/// covered jointly by Z and the match image, overlapping exactly on the
/// K-image, with no extra identifications.
bool verify_double_pushout(const DerivationStep& step);

/// Step over the inverted rule with matches swapped and the same Z.
DerivationStep invert_step(const DerivationStep& step);
Derivation invert_derivation(const Derivation& d);

struct MatchSpec {
    bool auto_match = true;
    std::map<Id, Id> vmap;
    std::map<Id, Id> emap;
};

struct ScriptEntry {
    std::string rule;
    MatchSpec match;
};

/// Runs the entries in order; "auto" picks the first match in
/// enumeration order that satisfies both gluing conditions. Fails fast
/// at the first inapplicable entry, reporting its index.
Derivation run_script(const Graph& start, const std::vector<ScriptEntry>& entries,
                      const std::vector<Rule>& rules);

}  // namespace dpo
