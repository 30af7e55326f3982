#ifndef LEIBNIZ_SEQUENCES_HPP
#define LEIBNIZ_SEQUENCES_HPP

#include <string>
#include <vector>

#include "leibniz/dialgebra.hpp"
#include "leibniz/trees.hpp"

namespace leibniz {

// A tuple of signed Hall trees with a 1-based middle index j. The struct
// itself is plain data; is_standard checks the invariants (all trees Hall,
// and for every composite t_i all later entries are <= t_i.right()).
struct StandardSequence {
    std::vector<SignedTree> trees;
    int middle = 1;

    StandardSequence() = default;
    StandardSequence(std::vector<SignedTree> trees_, int middle_);
    int size() const { return static_cast<int>(trees.size()); }
    int degree() const; // sum of tree lengths

    friend bool operator==(const StandardSequence& a, const StandardSequence& b);
};

// Canonical order for containers and deterministic listings:
// (degree, size, middle, trees pointwise by the Hall order).
bool operator<(const StandardSequence& a, const StandardSequence& b);

bool is_standard(const HallOrderConfig& order, const Conventions& conv,
                 const StandardSequence& s);

// Indices i (1-based) with a rise at (t_i, t_{i+1}) -- strict or nonstrict
// per rise_strictness -- such that t_{i+1} >= every later entry.
std::vector<int> legal_rises(const HallOrderConfig& order, const Conventions& conv,
                             const StandardSequence& s);

struct RewriteStep {
    int position = 0;            // the rise index i
    Sign rule = Sign::plus;      // plus_merge or minus_merge
    StandardSequence before, after;
};

// Merges (t_i, t_{i+1}) into one signed tree: plus with middle j-1 when
// i < j, minus with middle j when i > j, and the def1_tie_at_i_equals_j rule
// at i = j. Throws Error when i is not a legal rise and ConventionViolation
// when the result has an out-of-range middle or is not standard.
StandardSequence rewrite_at(const HallOrderConfig& order, const Conventions& conv,
                            const StandardSequence& s, int i);
RewriteStep rewrite_step_at(const HallOrderConfig& order, const Conventions& conv,
                            const StandardSequence& s, int i);

// (s) = (t_1) |- ... |- (t_j) -| ... -| (t_n).
Monomial eval_seq_monomial(const StandardSequence& s);

// [s]: same fold over the Leibniz evaluations of the entries.
DiPoly eval_seq_leibniz(const StandardSequence& s);

// Repeatedly rewrites at the greatest legal rise; every step merges a pair,
// so this takes at most n-1 steps.
StandardSequence reduce_to_terminal(const HallOrderConfig& order, const Conventions& conv,
                                    const StandardSequence& s);

// The letters of m as leaves, middle = m.middle.
StandardSequence letters_sequence(const Monomial& m);

// Breadth-first exploration of every legal-rise rewrite reachable from s;
// returns all terminal sequences found, canonically sorted. A singleton
// certifies confluence from s. Throws BudgetExceeded past step_bound
// explored sequences.
std::vector<StandardSequence> terminal_set(const HallOrderConfig& order,
                                           const Conventions& conv,
                                           const StandardSequence& s,
                                           long long step_bound);

// Number of index pairs p < q with t_p < t_q.
long long inversion_count(const HallOrderConfig& order, const StandardSequence& s);

struct LambdaRho {
    enum class Relation { sum, difference };
    StandardSequence lambda; // merge of (t_i, t_{i+1}); minus sign when i+1 = j
    StandardSequence rho;    // swap of t_i and t_{i+1}
    Relation relation = Relation::sum; // difference iff i+1 = j
};

// The two-term decomposition behind the B-basis expansion. The identity
// [s] = [lambda]+[rho] (sum) or [rho]-[lambda] (difference) is recomputed by
// expansion on every call; a failure raises ConventionViolation carrying
// both expansions (expected under middle_tracking = paper_literal in some
// positions).
LambdaRho lambda_rho_decompose(const HallOrderConfig& order, const Conventions& conv,
                               const StandardSequence& s, int i);

// Canonical text form "(t1, t2, ..., tn ; j)".
std::string sequence_text(const HallOrderConfig& order, const StandardSequence& s);

// Enumeration helpers for the claim harness: every sequence of Hall trees of
// the given total degree (any middle) that passes is_standard, and the
// subset with no legal rises.
std::vector<StandardSequence> enumerate_standard_sequences(const HallOrderConfig& order,
                                                           const Conventions& conv,
                                                           int degree);
std::vector<StandardSequence> enumerate_terminal_sequences(const HallOrderConfig& order,
                                                           const Conventions& conv,
                                                           int degree);

} // namespace leibniz

#endif
