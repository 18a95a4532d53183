#pragma once

#include <optional>
#include <utility>

#include "dpo/derivation.hpp"

namespace dpo {

/// Witness pair for parallel or sequential independence. In this
/// concrete category the witnesses are corestrictions of the original
/// matches into the other step's intermediate graph.
struct IndependenceWitness {
    GraphMorphism f;
    GraphMorphism f_bar;

    bool operator==(const IndependenceWitness&) const = default;
};

/// Both steps at the same G; witness exists iff each match image lies
/// inside the other step's intermediate graph as id-sets.
std::optional<IndependenceWitness> parallel_independent(const DerivationStep& s1,
                                                        const DerivationStep& s2);

/// s1.H = s2.G; witness iff h1(R1) survives s2 and g2(L2) survives s1.
std::optional<IndependenceWitness> sequentially_independent(const DerivationStep& s1,
                                                            const DerivationStep& s2);

/// Completes the peak (s1: G => H, s2: G => H_bar) to a square. Returns
/// (H => X by s2's rule, H_bar => X by s1's rule). Fresh ids are reused
/// from the original steps, so both routes produce the identical X.
std::pair<DerivationStep, DerivationStep> conflux(const DerivationStep& s1,
                                                  const DerivationStep& s2,
                                                  const IndependenceWitness& w);

/// Swaps sequentially independent steps s1: G => H_bar, s2: H_bar => X,
/// returning (G => H, H => X). Reduced to conflux via step inversion.
std::pair<DerivationStep, DerivationStep> interchange(const DerivationStep& s1,
                                                      const DerivationStep& s2,
                                                      const IndependenceWitness& w);

struct MoveError : Error {
    std::size_t row;
    std::size_t col;
    MoveError(std::string msg, std::size_t i, std::size_t j)
        : Error(std::move(msg)), row(i), col(j) {}
};

/// The full conflux grid. vertical[i][j] applies d's rule i+1 at column
/// j; horizontal[i][j] applies d_bar's rule j+1 at row i.
struct MovedPair {
    Derivation moved;     // move(d, d_bar): from d_bar's end
    Derivation co_moved;  // move(d_bar, d): from d's end
    std::vector<std::vector<DerivationStep>> vertical;
    std::vector<std::vector<DerivationStep>> horizontal;
};

/// Double induction over the grid in row-major order. Throws MoveError
/// naming the offending cell when a required witness is missing.
MovedPair move_forward(const Derivation& d, const Derivation& d_bar);

/// Backward moving: evom(d', d_bar) = move(d', invert(d_bar)).
/// Requires d_bar.end = d_prime.start.
Derivation evom(const Derivation& d_prime, const Derivation& d_bar);

/// Bounded certification report for a rule-set pair on given hosts.
/// Explicitly not a proof of the universally quantified definition.
struct IndependenceReport {
    bool sequential = false;
    std::size_t pairs_checked = 0;
    std::vector<std::string> counterexamples;
    bool bounded = true;

    bool clean() const { return counterexamples.empty(); }
};

IndependenceReport check_rule_pair_independence(const std::vector<Rule>& P,
                                                const std::vector<Rule>& P_bar,
                                                const std::vector<Graph>& hosts,
                                                bool sequential = false);

}  // namespace dpo
