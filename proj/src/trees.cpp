#include "leibniz/trees.hpp"

#include <algorithm>

namespace leibniz {

SignedTree SignedTree::leaf(Generator g) {
    auto rep = std::make_shared<Rep>();
    rep->gen = g;
    rep->len = 1;
    rep->max_index = g.index;
    return SignedTree(std::move(rep));
}

SignedTree SignedTree::node(const SignedTree& left, const SignedTree& right, Sign sign) {
    auto rep = std::make_shared<Rep>();
    rep->sgn = sign;
    rep->lhs = left.rep_;
    rep->rhs = right.rep_;
    rep->len = left.length() + right.length();
    rep->max_index = std::max(left.max_generator_index(), right.max_generator_index());
    return SignedTree(std::move(rep));
}

Generator SignedTree::generator() const {
    if (!is_leaf()) throw Error("generator() called on a composite tree");
    return rep_->gen;
}

SignedTree SignedTree::left() const {
    if (is_leaf()) throw Error("left() called on a leaf");
    return SignedTree(rep_->lhs);
}

SignedTree SignedTree::right() const {
    if (is_leaf()) throw Error("right() called on a leaf");
    return SignedTree(rep_->rhs);
}

Sign SignedTree::sign() const {
    if (is_leaf()) throw Error("sign() called on a leaf");
    return rep_->sgn;
}

bool operator==(const SignedTree& a, const SignedTree& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.length() != b.length()) return false;
    if (a.is_leaf() != b.is_leaf()) return false;
    if (a.is_leaf()) return a.generator() == b.generator();
    return a.sign() == b.sign() && a.left() == b.left() && a.right() == b.right();
}

int tree_length(const SignedTree& t) {
    return t.length();
}

Ordering hall_compare(const SignedTree& a, const SignedTree& b) {
    // Longer trees compare smaller; this gives t < t'' for every composite t.
    if (a.length() != b.length())
        return a.length() > b.length() ? Ordering::less : Ordering::greater;
    if (a.is_leaf()) {
        int ia = a.generator().index, ib = b.generator().index;
        if (ia == ib) return Ordering::equal;
        return ia < ib ? Ordering::greater : Ordering::less;
    }
    if (Ordering c = hall_compare(a.left(), b.left()); c != Ordering::equal) return c;
    if (Ordering c = hall_compare(a.right(), b.right()); c != Ordering::equal) return c;
    if (a.sign() == b.sign()) return Ordering::equal;
    return a.sign() == Sign::plus ? Ordering::greater : Ordering::less;
}

void HallOrderConfig::check(const SignedTree& t) const {
    if (t.max_generator_index() >= size())
        throw Error("generator index " + std::to_string(t.max_generator_index()) +
                    " outside alphabet of size " + std::to_string(size()));
}

Ordering HallOrderConfig::compare(const SignedTree& a, const SignedTree& b) const {
    check(a);
    check(b);
    return hall_compare(a, b);
}

bool HallOrderConfig::less(const SignedTree& a, const SignedTree& b) const {
    return compare(a, b) == Ordering::less;
}
bool HallOrderConfig::leq(const SignedTree& a, const SignedTree& b) const {
    return compare(a, b) != Ordering::greater;
}
bool HallOrderConfig::greater(const SignedTree& a, const SignedTree& b) const {
    return compare(a, b) == Ordering::greater;
}
bool HallOrderConfig::geq(const SignedTree& a, const SignedTree& b) const {
    return compare(a, b) != Ordering::less;
}

Generator HallOrderConfig::generator(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (alphabet[i] == name) return Generator{i};
    throw Error("unknown generator '" + name + "'");
}

const std::string& HallOrderConfig::name(Generator g) const {
    if (g.index < 0 || g.index >= size())
        throw Error("generator index " + std::to_string(g.index) + " outside alphabet");
    return alphabet[g.index];
}

HallOrderConfig make_order(std::vector<std::string> alphabet) {
    if (alphabet.empty()) throw Error("alphabet must be nonempty");
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i].empty()) throw Error("alphabet names must be nonempty");
        for (std::size_t k = i + 1; k < alphabet.size(); ++k)
            if (alphabet[i] == alphabet[k])
                throw Error("duplicate generator name '" + alphabet[i] + "'");
    }
    return HallOrderConfig{std::move(alphabet)};
}

bool is_hall(const HallOrderConfig& order, const Conventions& conv, const SignedTree& t) {
    order.check(t);
    if (t.is_leaf()) return true;
    SignedTree l = t.left(), r = t.right();
    if (!is_hall(order, conv, l) || !is_hall(order, conv, r)) return false;
    Ordering lr = hall_compare(l, r);
    bool pair_ok = conv.hall_pair_strictness == Strictness::strict ? lr == Ordering::less
                                                                   : lr != Ordering::greater;
    if (!pair_ok) return false;
    if (l.is_leaf()) return true;
    return hall_compare(r, l.right()) != Ordering::greater; // t'' <= (t')''
}

std::vector<SignedTree> enumerate_hall(const HallOrderConfig& order, const Conventions& conv,
                                       int degree) {
    if (degree < 1) throw Error("degree must be >= 1");
    std::vector<std::vector<SignedTree>> levels(degree + 1);
    for (int i = 0; i < order.size(); ++i) levels[1].push_back(SignedTree::leaf(Generator{i}));
    for (int d = 2; d <= degree; ++d) {
        for (int a = 1; a < d; ++a) {
            for (const SignedTree& l : levels[a]) {
                for (const SignedTree& r : levels[d - a]) {
                    Ordering lr = hall_compare(l, r);
                    bool pair_ok = conv.hall_pair_strictness == Strictness::strict
                                       ? lr == Ordering::less
                                       : lr != Ordering::greater;
                    if (!pair_ok) continue;
                    if (!l.is_leaf() && hall_compare(r, l.right()) == Ordering::greater) continue;
                    levels[d].push_back(SignedTree::node(l, r, Sign::plus));
                    levels[d].push_back(SignedTree::node(l, r, Sign::minus));
                }
            }
        }
    }
    std::sort(levels[degree].begin(), levels[degree].end(), tree_greater);
    return levels[degree];
}

std::string tree_text(const HallOrderConfig& order, const SignedTree& t) {
    if (t.is_leaf()) return order.name(t.generator());
    return "(" + tree_text(order, t.left()) + "," + tree_text(order, t.right()) + ")" +
           (t.sign() == Sign::plus ? "+" : "-");
}

} // namespace leibniz
