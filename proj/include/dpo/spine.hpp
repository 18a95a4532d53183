#pragma once

#include <optional>

#include "dpo/independence.hpp"

namespace dpo {

/// The subobject of the start graph touched by some left match during
/// the derivation.
struct AccessedPart {
    Derivation derivation;
    SubgraphHandle handle;  // host = derivation.start
};

/// Backward recursion: acc(0-derivation) = empty,
/// acc(step; tail) = (acc(tail) n Z) u g(L).
AccessedPart accessed_part(const Derivation& d);

/// Present iff the accessed part's id-sets are contained in m; returns
/// the accessed part re-hosted into the subgraph m.
std::optional<SubgraphHandle> factors_through(const AccessedPart& acc, const SubgraphHandle& m);

/// Single-step restriction: Z' = Z n G', H' = Z' plus the step's fresh
/// items with their original ids, so the returned handle H' -> H is a
/// genuine id-subset inclusion.
std::pair<DerivationStep, SubgraphHandle> restrict_step(const DerivationStep& step,
                                                        const SubgraphHandle& m,
                                                        const GraphMorphism& g_restricted);

struct RestrictionCertificate {
    Derivation original;
    std::vector<SubgraphHandle> mono_chain;  // one handle per graph of restricted, into original
    Derivation restricted;
};

/// Inductive restriction; requires the accessed part to factor through
/// m and throws Error listing the missing items otherwise.
RestrictionCertificate restrict_derivation(const Derivation& d, const SubgraphHandle& m);

/// Empty list iff the six-square decomposition holds per step:
/// restricted steps are double pushouts and the side squares are
/// pullbacks at the id-set level.
std::vector<std::string> validate_restriction(const RestrictionCertificate& cert);

/// spine(d) = restrict(d, acc(d)); the minimal restriction.
std::pair<AccessedPart, Derivation> spine(const Derivation& d);

/// Chain of compatible isomorphisms: start iso, then per step the
/// intermediate and derived isos.
struct DerivationIso {
    Derivation d;
    Derivation d2;
    std::vector<GraphMorphism> isos;
};

enum class IsoSearchStatus { Found, NotEqual, Undecided };

struct DerivationIsoResult {
    IsoSearchStatus status = IsoSearchStatus::NotEqual;
    std::optional<DerivationIso> witness;

    bool found() const { return status == IsoSearchStatus::Found; }
};

/// Equality up to isomorphism: same rule sequence and a start iso whose
/// deterministic propagation commutes with every match. Enumerates at
/// most max_start_isos candidate start isos and reports Undecided past
/// the cap.
DerivationIsoResult derivations_equal_up_to_iso(const Derivation& d, const Derivation& d2,
                                                std::size_t max_start_isos = 10000);

struct SpineReport {
    bool pass = false;
    std::string detail;
    std::optional<DerivationIso> witness;
    bool one_step_law_checked = false;  // only when |d_bar| = 1
    bool one_step_law_holds = false;
};

/// Checks spine(d) == spine(move(d, d_bar)) up to iso, including the
/// single-step intermediate law when d_bar has exactly one step.
SpineReport check_spine_preservation(const Derivation& d, const Derivation& d_bar);

}  // namespace dpo
