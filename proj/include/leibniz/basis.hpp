#ifndef LEIBNIZ_BASIS_HPP
#define LEIBNIZ_BASIS_HPP

#include <map>
#include <string>
#include <vector>

#include "leibniz/expr.hpp"
#include "leibniz/sequences.hpp"

namespace leibniz {

struct TreeHallGreater {
    bool operator()(const SignedTree& a, const SignedTree& b) const {
        return hall_compare(a, b) == Ordering::greater;
    }
};

// Finitely supported SignedTree -> Rational map, keys in descending Hall
// order, no zero coefficients stored.
class HallCombination {
  public:
    using Map = std::map<SignedTree, Rational, TreeHallGreater>;

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const& { return terms_; }
    Map terms() && { return std::move(terms_); }

    HallCombination& add(const SignedTree& t, const Rational& c);
    HallCombination& add_scaled(const HallCombination& other, const Rational& c);

    // Sum of coeff * [key].
    DiPoly expansion() const;

    friend bool operator==(const HallCombination& a, const HallCombination& b) {
        return a.terms_ == b.terms_;
    }

  private:
    Map terms_;
};

// Finitely supported StandardSequence -> Rational map over terminal
// sequences.
class BCombination {
  public:
    using Map = std::map<StandardSequence, Rational>;

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Map& terms() const& { return terms_; }
    Map terms() && { return std::move(terms_); }

    BCombination& add(const StandardSequence& s, const Rational& c);

    // Sum of coeff * [key].
    DiPoly expansion() const;

    friend bool operator==(const BCombination& a, const BCombination& b) {
        return a.terms_ == b.terms_;
    }

  private:
    Map terms_;
};

// reduce_to_terminal(letters_sequence(m)), checked to evaluate back to m.
StandardSequence factorize_monomial(const HallOrderConfig& order, const Conventions& conv,
                                    const Monomial& m);

// Every terminal standard sequence of Hall trees evaluating to m, by
// exhaustive enumeration; the uniqueness audit oracle. Throws BudgetExceeded
// above degree_bound.
std::vector<StandardSequence> all_hall_factorizations(const HallOrderConfig& order,
                                                      const Conventions& conv,
                                                      const Monomial& m,
                                                      int degree_bound = 5);

// Per-call audit of the bracket expansion recursion: how often the produced
// keys violate u.right() < max(t1,t2) (strict) and u.right() <= max(t1,t2)
// (nonstrict). Not a contract; the expansion identity is.
struct ExpansionAudit {
    long long calls = 0;
    long long keys = 0;
    long long strict_bound_failures = 0;
    long long nonstrict_bound_failures = 0;
};

inline constexpr long long kDefaultBracketBudget = 1'000'000;

// Expresses [[t1],[t2]] as a combination of Hall trees via the recursive
// case analysis on (|t1|+|t2|, max(t1,t2)). The expansion equality against
// bracket(eval_tree_leibniz(t1), eval_tree_leibniz(t2)) is checked on every
// recursive call (hard contract). Keys whose Leibniz evaluation is zero are
// pruned; they contribute nothing to any expansion. Throws BudgetExceeded
// (carrying the alpha-chain) past the step budget and ConventionViolation on
// a failed self-check or a non-Hall key.
HallCombination bracket_hall(const HallOrderConfig& order, const Conventions& conv,
                             const SignedTree& t1, const SignedTree& t2,
                             ExpansionAudit* audit = nullptr,
                             long long budget = kDefaultBracketBudget);

// Recursive evaluation of a bracket expression into a Hall combination;
// rejects expressions containing a bare product. Same self-check and errors
// as bracket_hall.
HallCombination leibniz_to_hall(const HallOrderConfig& order, const Conventions& conv,
                                const ExprPtr& e, ExpansionAudit* audit = nullptr,
                                long long budget = kDefaultBracketBudget);

// Writes P over the terminal-sequence family by repeated lambda/rho
// decomposition at the greatest legal rise. The expansion of the result is
// checked to equal P on every call.
BCombination to_b_basis(const HallOrderConfig& order, const Conventions& conv,
                        const DiPoly& p, long long budget = kDefaultBracketBudget);

std::string hall_combination_text(const HallOrderConfig& order, const HallCombination& c);
std::string b_combination_text(const HallOrderConfig& order, const BCombination& c);

} // namespace leibniz

#endif
