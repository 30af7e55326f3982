#include "leibniz/basis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace leibniz {

HallCombination& HallCombination::add(const SignedTree& t, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

HallCombination& HallCombination::add_scaled(const HallCombination& other, const Rational& c) {
    for (const auto& [t, coeff] : other.terms_) add(t, coeff * c);
    return *this;
}

DiPoly HallCombination::expansion() const {
    DiPoly out;
    for (const auto& [t, c] : terms_) out += c * eval_tree_leibniz(t);
    return out;
}

BCombination& BCombination::add(const StandardSequence& s, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

DiPoly BCombination::expansion() const {
    DiPoly out;
    for (const auto& [s, c] : terms_) out += c * eval_seq_leibniz(s);
    return out;
}

StandardSequence factorize_monomial(const HallOrderConfig& order, const Conventions& conv,
                                    const Monomial& m) {
    StandardSequence out = reduce_to_terminal(order, conv, letters_sequence(m));
    if (eval_seq_monomial(out) != m)
        throw ConventionViolation("factorization of " + monomial_text(order, m) +
                                  " evaluates to " +
                                  monomial_text(order, eval_seq_monomial(out)) + " instead");
    return out;
}

namespace {

// Hall trees of each degree bucketed by their left-to-right leaf word.
using WordBuckets = std::vector<std::map<std::vector<Generator>, std::vector<SignedTree>>>;

void factorizations_rec(const HallOrderConfig& order, const Conventions& conv,
                        const WordBuckets& buckets, const Monomial& m, std::size_t pos,
                        std::vector<SignedTree>& acc, std::vector<StandardSequence>& out) {
    int n = m.degree();
    if (pos == static_cast<std::size_t>(n)) {
        for (int j = 1; j <= static_cast<int>(acc.size()); ++j) {
            StandardSequence s(acc, j);
            if (eval_seq_monomial(s) != m) continue;
            if (!is_standard(order, conv, s)) continue;
            if (!legal_rises(order, conv, s).empty()) continue;
            out.push_back(s);
        }
        return;
    }
    for (int d = 1; pos + d <= static_cast<std::size_t>(n); ++d) {
        std::vector<Generator> segment(m.letters.begin() + pos, m.letters.begin() + pos + d);
        auto it = buckets[d].find(segment);
        if (it == buckets[d].end()) continue;
        for (const SignedTree& t : it->second) {
            acc.push_back(t);
            factorizations_rec(order, conv, buckets, m, pos + d, acc, out);
            acc.pop_back();
        }
    }
}

std::vector<Generator> leaf_word(const SignedTree& t) {
    if (t.is_leaf()) return {t.generator()};
    std::vector<Generator> w = leaf_word(t.left());
    std::vector<Generator> r = leaf_word(t.right());
    w.insert(w.end(), r.begin(), r.end());
    return w;
}

} // namespace

std::vector<StandardSequence> all_hall_factorizations(const HallOrderConfig& order,
                                                      const Conventions& conv, const Monomial& m,
                                                      int degree_bound) {
    if (m.degree() > degree_bound)
        throw BudgetExceeded("monomial degree " + std::to_string(m.degree()) +
                             " exceeds the factorization search bound " +
                             std::to_string(degree_bound));
    WordBuckets buckets(m.degree() + 1);
    for (int d = 1; d <= m.degree(); ++d)
        for (const SignedTree& t : enumerate_hall(order, conv, d))
            buckets[d][leaf_word(t)].push_back(t);
    std::vector<StandardSequence> out;
    std::vector<SignedTree> acc;
    factorizations_rec(order, conv, buckets, m, 0, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct TreePairLess {
    bool operator()(const std::pair<SignedTree, SignedTree>& a,
                    const std::pair<SignedTree, SignedTree>& b) const {
        Ordering c = hall_compare(a.first, b.first);
        if (c != Ordering::equal) return c == Ordering::less;
        return hall_compare(a.second, b.second) == Ordering::less;
    }
};

struct BracketContext {
    const HallOrderConfig& order;
    const Conventions& conv;
    long long budget;
    long long steps = 0;
    ExpansionAudit* audit;
    std::vector<std::pair<SignedTree, SignedTree>> chain;
    std::map<std::pair<SignedTree, SignedTree>, HallCombination, TreePairLess> memo;
    std::map<SignedTree, bool, TreeHallGreater> zero_eval;

    std::string alpha_chain() const {
        std::ostringstream os;
        for (std::size_t k = 0; k < chain.size(); ++k) {
            const auto& [t1, t2] = chain[k];
            const SignedTree& mx =
                hall_compare(t1, t2) == Ordering::less ? t2 : t1;
            if (k) os << " -> ";
            os << "alpha=(" << t1.length() + t2.length() << ", " << tree_text(order, mx)
               << ") at [" << tree_text(order, t1) << ", " << tree_text(order, t2) << "]";
        }
        return os.str();
    }

    bool evaluates_to_zero(const SignedTree& t) {
        auto it = zero_eval.find(t);
        if (it != zero_eval.end()) return it->second;
        bool z = eval_tree_leibniz(t).is_zero();
        zero_eval.emplace(t, z);
        return z;
    }
};

HallCombination bracket_hall_rec(BracketContext& ctx, const SignedTree& t1, const SignedTree& t2);

// Insert a base-case key, enforcing Hall membership and recording the
// right-part bound audit. Keys with zero Leibniz evaluation are dropped;
// they contribute nothing to any expansion.
void add_key(BracketContext& ctx, HallCombination& out, const SignedTree& key, const Rational& c,
             const SignedTree& t1, const SignedTree& t2) {
    if (!is_hall(ctx.order, ctx.conv, key))
        throw ConventionViolation("bracket expansion produced the non-Hall tree " +
                                  tree_text(ctx.order, key) + "; chain: " + ctx.alpha_chain());
    if (ctx.audit) {
        const SignedTree& mx = hall_compare(t1, t2) == Ordering::less ? t2 : t1;
        ++ctx.audit->keys;
        Ordering c2 = hall_compare(key.right(), mx);
        if (c2 != Ordering::less) ++ctx.audit->strict_bound_failures;
        if (c2 == Ordering::greater) ++ctx.audit->nonstrict_bound_failures;
    }
    if (ctx.evaluates_to_zero(key)) return;
    out.add(key, c);
}

void add_scaled_combination(HallCombination& out, const HallCombination& c,
                            const Rational& scale) {
    for (const auto& [t, coeff] : c.terms()) out.add(t, coeff * scale);
}

HallCombination bracket_hall_rec(BracketContext& ctx, const SignedTree& t1, const SignedTree& t2) {
    if (++ctx.steps > ctx.budget)
        throw BudgetExceeded("bracket expansion exceeded " + std::to_string(ctx.budget) +
                             " steps; chain: " + ctx.alpha_chain());
    auto key = std::make_pair(t1, t2);
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;
    ctx.chain.push_back(key);
    if (ctx.audit) ++ctx.audit->calls;

    HallCombination out;
    Ordering c12 = hall_compare(t1, t2);
    if (c12 != Ordering::greater) { // case 1: t1 <= t2
        if (t1.is_leaf()) {
            add_key(ctx, out, SignedTree::node(t1, t2, Sign::plus), 1, t1, t2); // 1-1
        } else if (hall_compare(t1.right(), t2) != Ordering::less) {
            add_key(ctx, out, SignedTree::node(t1, t2, Sign::plus), 1, t1, t2); // 1-2
        } else {
            // 1-3: write [t1] = [[p],[q]] and apply the Leibniz identity
            // [[p,q],t2] = [[p,t2],q] + [p,[q,t2]].
            SignedTree p = t1.sign() == Sign::plus ? t1.left() : t1.right();
            SignedTree q = t1.sign() == Sign::plus ? t1.right() : t1.left();
            HallCombination a = bracket_hall_rec(ctx, p, t2);
            HallCombination b = bracket_hall_rec(ctx, q, t2);
            for (const auto& [u, lambda] : a.terms())
                add_scaled_combination(out, bracket_hall_rec(ctx, u, q), lambda);
            for (const auto& [v, mu] : b.terms())
                add_scaled_combination(out, bracket_hall_rec(ctx, p, v), mu);
        }
    } else if (ctx.conv.case2_orientation == Case2Orientation::paper_literal) {
        // literal reading: [[t1],[t2]] = [(t2,t1)-] with no subcase analysis;
        // the Hall check in add_key reports where this breaks down.
        add_key(ctx, out, SignedTree::node(t2, t1, Sign::minus), 1, t1, t2);
    } else { // case 2 read as t1 > t2, symmetric subcases
        if (t2.is_leaf()) {
            add_key(ctx, out, SignedTree::node(t2, t1, Sign::minus), 1, t1, t2); // 2-1
        } else if (hall_compare(t2.right(), t1) != Ordering::less) {
            add_key(ctx, out, SignedTree::node(t2, t1, Sign::minus), 1, t1, t2); // 2-2
        } else {
            // 2-3: write [t2] = [[u],[v]] and apply the rearranged identity
            // [t1,[u,v]] = [[t1,u],v] - [[t1,v],u].
            SignedTree u = t2.sign() == Sign::plus ? t2.left() : t2.right();
            SignedTree v = t2.sign() == Sign::plus ? t2.right() : t2.left();
            HallCombination a = bracket_hall_rec(ctx, t1, u);
            HallCombination b = bracket_hall_rec(ctx, t1, v);
            for (const auto& [w, lambda] : a.terms())
                add_scaled_combination(out, bracket_hall_rec(ctx, w, v), lambda);
            for (const auto& [w, mu] : b.terms())
                add_scaled_combination(out, bracket_hall_rec(ctx, w, u), -mu);
        }
    }

    DiPoly expected = bracket(eval_tree_leibniz(t1), eval_tree_leibniz(t2));
    if (out.expansion() != expected)
        throw ConventionViolation(
            "bracket expansion self-check failed: combination expands to " +
            poly_text(ctx.order, out.expansion()) + " but [[t1],[t2]] = " +
            poly_text(ctx.order, expected) + "; chain: " + ctx.alpha_chain());

    ctx.chain.pop_back();
    ctx.memo.emplace(key, out);
    return out;
}

} // namespace

HallCombination bracket_hall(const HallOrderConfig& order, const Conventions& conv,
                             const SignedTree& t1, const SignedTree& t2, ExpansionAudit* audit,
                             long long budget) {
    if (!is_hall(order, conv, t1))
        throw Error("bracket_hall argument " + tree_text(order, t1) + " is not a Hall tree");
    if (!is_hall(order, conv, t2))
        throw Error("bracket_hall argument " + tree_text(order, t2) + " is not a Hall tree");
    BracketContext ctx{order, conv, budget, 0, audit, {}, {}, {}};
    return bracket_hall_rec(ctx, t1, t2);
}

namespace {

HallCombination leibniz_to_hall_rec(BracketContext& ctx, const ExprPtr& e) {
    if (++ctx.steps > ctx.budget)
        throw BudgetExceeded("expression expansion exceeded " + std::to_string(ctx.budget) +
                             " steps");
    switch (e->kind()) {
    case Expr::Kind::generator: {
        HallCombination out;
        out.add(SignedTree::leaf(e->generator()), 1);
        return out;
    }
    case Expr::Kind::bracket: {
        HallCombination a = leibniz_to_hall_rec(ctx, e->first());
        HallCombination b = leibniz_to_hall_rec(ctx, e->second());
        HallCombination out;
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms())
                add_scaled_combination(out, bracket_hall_rec(ctx, u, v), cu * cv);
        return out;
    }
    case Expr::Kind::sum: {
        HallCombination out;
        for (const auto& [c, sub] : e->summands())
            add_scaled_combination(out, leibniz_to_hall_rec(ctx, sub), c);
        return out;
    }
    case Expr::Kind::left_prod:
    case Expr::Kind::right_prod:
        throw Error("expression contains a bare product; not a Leibniz expression");
    }
    throw Error("unreachable expression kind");
}

} // namespace

HallCombination leibniz_to_hall(const HallOrderConfig& order, const Conventions& conv,
                                const ExprPtr& e, ExpansionAudit* audit, long long budget) {
    if (!e) throw Error("null expression");
    if (!is_leibniz_expr(e))
        throw Error("expression contains a bare product; not a Leibniz expression");
    BracketContext ctx{order, conv, budget, 0, audit, {}, {}, {}};
    HallCombination out = leibniz_to_hall_rec(ctx, e);
    DiPoly expected = eval_expr(e);
    if (out.expansion() != expected)
        throw ConventionViolation("expression expansion self-check failed: combination expands to " +
                                  poly_text(order, out.expansion()) + " but the input evaluates to " +
                                  poly_text(order, expected));
    return out;
}

BCombination to_b_basis(const HallOrderConfig& order, const Conventions& conv, const DiPoly& p,
                        long long budget) {
    BCombination out;
    std::vector<std::pair<StandardSequence, Rational>> work;
    for (const auto& [m, c] : p.terms()) work.emplace_back(letters_sequence(m), c);
    long long steps = 0;
    while (!work.empty()) {
        if (++steps > budget)
            throw BudgetExceeded("B-basis expansion exceeded " + std::to_string(budget) +
                                 " steps");
        auto [s, c] = work.back();
        work.pop_back();
        auto rises = legal_rises(order, conv, s);
        if (rises.empty()) {
            out.add(s, c);
            continue;
        }
        int i = rises.back();
        // A rho swap of equal entries changes nothing but the middle index,
        // so the measure never decreases and the expansion cycles.
        if (hall_compare(s.trees[i - 1], s.trees[i]) == Ordering::equal)
            throw ConventionViolation("rewriting does not progress at " +
                                      sequence_text(order, s) +
                                      ": swapping equal adjacent entries loops (nonstrict rises "
                                      "do not terminate)");
        LambdaRho lr = lambda_rho_decompose(order, conv, s, i);
        if (lr.relation == LambdaRho::Relation::sum) {
            work.emplace_back(lr.lambda, c);
            work.emplace_back(lr.rho, c);
        } else {
            work.emplace_back(lr.rho, c);
            work.emplace_back(lr.lambda, -c);
        }
    }
    if (out.expansion() != p)
        throw ConventionViolation("B-basis self-check failed: combination expands to " +
                                  poly_text(order, out.expansion()) + " but the input is " +
                                  poly_text(order, p));
    return out;
}

std::string hall_combination_text(const HallOrderConfig& order, const HallCombination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, coeff] : c.terms()) {
        Rational a = coeff;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << rational_to_string(a) << "*";
        os << tree_text(order, t);
    }
    return os.str();
}

std::string b_combination_text(const HallOrderConfig& order, const BCombination& c) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, coeff] : c.terms()) {
        Rational a = coeff;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << rational_to_string(a) << "*";
        os << sequence_text(order, s);
    }
    return os.str();
}

} // namespace leibniz
