#include "leibniz/sequences.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace leibniz {

StandardSequence::StandardSequence(std::vector<SignedTree> trees_, int middle_)
    : trees(std::move(trees_)), middle(middle_) {
    if (trees.empty()) throw Error("sequence must be nonempty");
    if (middle < 1 || middle > size())
        throw ConventionViolation("sequence middle " + std::to_string(middle) +
                                  " out of range 1.." + std::to_string(size()));
}

int StandardSequence::degree() const {
    int d = 0;
    for (const SignedTree& t : trees) d += t.length();
    return d;
}

bool operator==(const StandardSequence& a, const StandardSequence& b) {
    return a.middle == b.middle && a.trees == b.trees;
}

bool operator<(const StandardSequence& a, const StandardSequence& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.middle != b.middle) return a.middle < b.middle;
    for (int k = 0; k < a.size(); ++k) {
        Ordering c = hall_compare(a.trees[k], b.trees[k]);
        if (c != Ordering::equal) return c == Ordering::less;
    }
    return false;
}

bool is_standard(const HallOrderConfig& order, const Conventions& conv,
                 const StandardSequence& s) {
    if (s.trees.empty() || s.middle < 1 || s.middle > s.size()) return false;
    for (const SignedTree& t : s.trees)
        if (!is_hall(order, conv, t)) return false;
    for (int i = 0; i < s.size(); ++i) {
        if (s.trees[i].is_leaf()) continue;
        SignedTree bound = s.trees[i].right();
        for (int k = i + 1; k < s.size(); ++k)
            if (hall_compare(s.trees[k], bound) == Ordering::greater) return false;
    }
    return true;
}

std::vector<int> legal_rises(const HallOrderConfig& order, const Conventions& conv,
                             const StandardSequence& s) {
    std::vector<int> out;
    for (int i = 1; i < s.size(); ++i) {
        Ordering c = order.compare(s.trees[i - 1], s.trees[i]);
        bool rise = conv.rise_strictness == Strictness::strict ? c == Ordering::less
                                                               : c != Ordering::greater;
        if (!rise) continue;
        bool legal = true;
        for (int k = i + 1; k < s.size(); ++k)
            if (hall_compare(s.trees[i], s.trees[k]) == Ordering::less) {
                legal = false;
                break;
            }
        if (legal) out.push_back(i);
    }
    return out;
}

namespace {

StandardSequence merge_at(const StandardSequence& s, int i, Sign sign, int new_middle) {
    std::vector<SignedTree> trees;
    trees.reserve(s.trees.size() - 1);
    for (int k = 0; k < s.size(); ++k) {
        if (k == i - 1) {
            trees.push_back(SignedTree::node(s.trees[k], s.trees[k + 1], sign));
            ++k;
        } else {
            trees.push_back(s.trees[k]);
        }
    }
    if (new_middle < 1 || new_middle > static_cast<int>(trees.size()))
        throw ConventionViolation("merge at position " + std::to_string(i) +
                                  " produced middle " + std::to_string(new_middle) +
                                  " out of range 1.." + std::to_string(trees.size()));
    return StandardSequence(std::move(trees), new_middle);
}

StandardSequence swap_at(const StandardSequence& s, int i, int new_middle) {
    std::vector<SignedTree> trees = s.trees;
    std::swap(trees[i - 1], trees[i]);
    if (new_middle < 1 || new_middle > static_cast<int>(trees.size()))
        throw ConventionViolation("swap at position " + std::to_string(i) + " produced middle " +
                                  std::to_string(new_middle) + " out of range 1.." +
                                  std::to_string(trees.size()));
    return StandardSequence(std::move(trees), new_middle);
}

} // namespace

RewriteStep rewrite_step_at(const HallOrderConfig& order, const Conventions& conv,
                            const StandardSequence& s, int i) {
    auto rises = legal_rises(order, conv, s);
    if (std::find(rises.begin(), rises.end(), i) == rises.end())
        throw Error("position " + std::to_string(i) + " is not a legal rise of " +
                    sequence_text(order, s));
    int j = s.middle;
    Sign sign;
    int new_middle;
    if (i < j) {
        sign = Sign::plus;
        new_middle = j - 1;
    } else if (i > j) {
        sign = Sign::minus;
        new_middle = j;
    } else if (conv.def1_tie_at_i_equals_j == TieRule::minus_rule) {
        sign = Sign::minus;
        new_middle = j;
    } else {
        sign = Sign::plus;
        new_middle = j - 1;
    }
    RewriteStep step;
    step.position = i;
    step.rule = sign;
    step.before = s;
    step.after = merge_at(s, i, sign, new_middle);
    if (!is_standard(order, conv, step.after))
        throw ConventionViolation("rewrite at " + std::to_string(i) + " of " +
                                  sequence_text(order, s) + " produced the non-standard " +
                                  sequence_text(order, step.after));
    return step;
}

StandardSequence rewrite_at(const HallOrderConfig& order, const Conventions& conv,
                            const StandardSequence& s, int i) {
    return rewrite_step_at(order, conv, s, i).after;
}

Monomial eval_seq_monomial(const StandardSequence& s) {
    Monomial acc = eval_tree_monomial(s.trees[0]);
    for (int k = 2; k <= s.size(); ++k)
        acc = mono_product(k <= s.middle ? ProductOp::right : ProductOp::left, acc,
                           eval_tree_monomial(s.trees[k - 1]));
    return acc;
}

DiPoly eval_seq_leibniz(const StandardSequence& s) {
    DiPoly acc = eval_tree_leibniz(s.trees[0]);
    for (int k = 2; k <= s.size(); ++k)
        acc = poly_product(k <= s.middle ? ProductOp::right : ProductOp::left, acc,
                           eval_tree_leibniz(s.trees[k - 1]));
    return acc;
}

StandardSequence reduce_to_terminal(const HallOrderConfig& order, const Conventions& conv,
                                    const StandardSequence& s) {
    StandardSequence cur = s;
    while (true) {
        auto rises = legal_rises(order, conv, cur);
        if (rises.empty()) return cur;
        cur = rewrite_at(order, conv, cur, rises.back());
    }
}

StandardSequence letters_sequence(const Monomial& m) {
    std::vector<SignedTree> trees;
    trees.reserve(m.letters.size());
    for (Generator g : m.letters) trees.push_back(SignedTree::leaf(g));
    return StandardSequence(std::move(trees), m.middle);
}

std::vector<StandardSequence> terminal_set(const HallOrderConfig& order, const Conventions& conv,
                                           const StandardSequence& s, long long step_bound) {
    if (step_bound < 1) throw Error("step_bound must be >= 1");
    std::set<StandardSequence> visited{s};
    std::deque<StandardSequence> queue{s};
    std::set<StandardSequence> terminals;
    long long steps = 0;
    while (!queue.empty()) {
        if (++steps > step_bound)
            throw BudgetExceeded("terminal_set exceeded " + std::to_string(step_bound) +
                                 " explored sequences from " + sequence_text(order, s));
        StandardSequence cur = queue.front();
        queue.pop_front();
        auto rises = legal_rises(order, conv, cur);
        if (rises.empty()) {
            terminals.insert(cur);
            continue;
        }
        for (int i : rises) {
            StandardSequence next = rewrite_at(order, conv, cur, i);
            if (visited.insert(next).second) queue.push_back(next);
        }
    }
    return {terminals.begin(), terminals.end()};
}

long long inversion_count(const HallOrderConfig& order, const StandardSequence& s) {
    long long count = 0;
    for (int p = 0; p < s.size(); ++p)
        for (int q = p + 1; q < s.size(); ++q)
            if (order.compare(s.trees[p], s.trees[q]) == Ordering::less) ++count;
    return count;
}

LambdaRho lambda_rho_decompose(const HallOrderConfig& order, const Conventions& conv,
                               const StandardSequence& s, int i) {
    auto rises = legal_rises(order, conv, s);
    if (std::find(rises.begin(), rises.end(), i) == rises.end())
        throw Error("position " + std::to_string(i) + " is not a legal rise of " +
                    sequence_text(order, s));
    int j = s.middle;
    Sign lambda_sign = (i + 1 == j) ? Sign::minus : Sign::plus;
    int lambda_middle, rho_middle;
    if (conv.middle_tracking == MiddleTracking::element) {
        lambda_middle = i < j ? j - 1 : j;
        rho_middle = (i + 1 == j) ? j - 1 : (i == j ? j + 1 : j);
    } else { // the source's literal index arithmetic
        lambda_middle = j - 1;
        rho_middle = j;
    }
    LambdaRho out;
    out.lambda = merge_at(s, i, lambda_sign, lambda_middle);
    out.rho = swap_at(s, i, rho_middle);
    out.relation = (i + 1 == j) ? LambdaRho::Relation::difference : LambdaRho::Relation::sum;

    DiPoly lhs = eval_seq_leibniz(s);
    DiPoly lam = eval_seq_leibniz(out.lambda);
    DiPoly rho = eval_seq_leibniz(out.rho);
    DiPoly rhs = out.relation == LambdaRho::Relation::sum ? lam + rho : rho - lam;
    if (lhs != rhs)
        throw ConventionViolation(
            "lambda/rho identity failed at rise " + std::to_string(i) + " of " +
            sequence_text(order, s) + ": [s] = " + poly_text(order, lhs) +
            " but [lambda] " + (out.relation == LambdaRho::Relation::sum ? "+" : "-(...)") +
            " [rho] = " + poly_text(order, rhs) + " with [lambda] = " + poly_text(order, lam) +
            " and [rho] = " + poly_text(order, rho));
    return out;
}

std::string sequence_text(const HallOrderConfig& order, const StandardSequence& s) {
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < s.size(); ++k) {
        if (k) os << ", ";
        os << tree_text(order, s.trees[k]);
    }
    os << " ; " << s.middle << ")";
    return os.str();
}

namespace {

// All Hall-tree tuples with the given degree composition, any middle,
// filtered by is_standard.
void sequences_rec(const HallOrderConfig& order, const Conventions& conv,
                   const std::vector<std::vector<SignedTree>>& halls, int remaining,
                   std::vector<SignedTree>& acc, std::vector<StandardSequence>& out) {
    if (remaining == 0) {
        for (int j = 1; j <= static_cast<int>(acc.size()); ++j) {
            StandardSequence s(acc, j);
            if (is_standard(order, conv, s)) out.push_back(s);
        }
        return;
    }
    for (int d = 1; d <= remaining; ++d) {
        for (const SignedTree& t : halls[d]) {
            acc.push_back(t);
            sequences_rec(order, conv, halls, remaining - d, acc, out);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<StandardSequence> enumerate_standard_sequences(const HallOrderConfig& order,
                                                           const Conventions& conv, int degree) {
    if (degree < 1) throw Error("degree must be >= 1");
    std::vector<std::vector<SignedTree>> halls(degree + 1);
    for (int d = 1; d <= degree; ++d) halls[d] = enumerate_hall(order, conv, d);
    std::vector<StandardSequence> out;
    std::vector<SignedTree> acc;
    sequences_rec(order, conv, halls, degree, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StandardSequence> enumerate_terminal_sequences(const HallOrderConfig& order,
                                                           const Conventions& conv, int degree) {
    std::vector<StandardSequence> all = enumerate_standard_sequences(order, conv, degree);
    std::vector<StandardSequence> out;
    for (const StandardSequence& s : all)
        if (legal_rises(order, conv, s).empty()) out.push_back(s);
    return out;
}

} // namespace leibniz
