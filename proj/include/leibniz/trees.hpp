#ifndef LEIBNIZ_TREES_HPP
#define LEIBNIZ_TREES_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "leibniz/conventions.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

// Position in the alphabet. Index 0 is the *greatest* generator: the
// alphabet is listed greatest-first, so "x,y" gives x > y.
struct Generator {
    int index = 0;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

enum class Sign { plus, minus };

// Immutable binary tree over generator leaves whose internal nodes carry a
// sign. Copies share structure; all accessors are O(1).
class SignedTree {
  public:
    static SignedTree leaf(Generator g);
    static SignedTree node(const SignedTree& left, const SignedTree& right, Sign sign);

    bool is_leaf() const { return !rep_->lhs; }
    Generator generator() const; // leaf only
    SignedTree left() const;     // node only: the immediate left part t'
    SignedTree right() const;    // node only: the immediate right part t''
    Sign sign() const;           // node only
    int length() const { return rep_->len; } // number of leaves, |t|
    int max_generator_index() const { return rep_->max_index; }

    friend bool operator==(const SignedTree& a, const SignedTree& b);
    friend bool operator!=(const SignedTree& a, const SignedTree& b) { return !(a == b); }

  private:
    struct Rep {
        Generator gen;        // valid for leaves
        Sign sgn = Sign::plus;
        std::shared_ptr<const Rep> lhs, rhs; // null for leaves
        int len = 1;
        int max_index = 0;
    };
    explicit SignedTree(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    std::shared_ptr<const Rep> rep_;
};

int tree_length(const SignedTree& t);

enum class Ordering { less, equal, greater };

// The fixed Hall-order family: longer trees compare smaller (which makes
// t < t'' automatic for every composite tree); equal-length leaves compare
// by generator (lower index = greater); equal-length composites compare by
// (left, right, sign) with plus above minus. Total, and equal only on
// structurally identical trees.
Ordering hall_compare(const SignedTree& a, const SignedTree& b);

inline bool tree_less(const SignedTree& a, const SignedTree& b) {
    return hall_compare(a, b) == Ordering::less;
}
inline bool tree_greater(const SignedTree& a, const SignedTree& b) {
    return hall_compare(a, b) == Ordering::greater;
}

struct HallOrderConfig {
    // Greatest generator first.
    std::vector<std::string> alphabet;

    int size() const { return static_cast<int>(alphabet.size()); }
    // Throws Error if the tree mentions a generator outside the alphabet.
    void check(const SignedTree& t) const;
    Ordering compare(const SignedTree& a, const SignedTree& b) const;
    bool less(const SignedTree& a, const SignedTree& b) const;
    bool leq(const SignedTree& a, const SignedTree& b) const;
    bool greater(const SignedTree& a, const SignedTree& b) const;
    bool geq(const SignedTree& a, const SignedTree& b) const;

    Generator generator(const std::string& name) const; // throws on unknown name
    const std::string& name(Generator g) const;         // throws on out-of-range index
};

HallOrderConfig make_order(std::vector<std::string> alphabet);

// Leaves are Hall; a node is Hall iff both children are Hall, left <= right
// (strict when hall_pair_strictness = strict) and the left child is a leaf
// or right <= left.right().
bool is_hall(const HallOrderConfig& order, const Conventions& conv, const SignedTree& t);

// Exactly the Hall trees of the given length, sorted descending by the Hall
// order.
std::vector<SignedTree> enumerate_hall(const HallOrderConfig& order, const Conventions& conv,
                                       int degree);

// Canonical text form: leaf names, "(t1,t2)+" / "(t1,t2)-".
std::string tree_text(const HallOrderConfig& order, const SignedTree& t);

} // namespace leibniz

#endif
