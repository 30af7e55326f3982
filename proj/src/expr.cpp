#include "leibniz/expr.hpp"

#include "leibniz/errors.hpp"

namespace leibniz {

Generator Expr::generator() const {
    if (kind_ != Kind::generator) throw Error("generator() on non-generator expression");
    return gen_;
}

const ExprPtr& Expr::first() const {
    if (kind_ != Kind::left_prod && kind_ != Kind::right_prod && kind_ != Kind::bracket)
        throw Error("first() on non-binary expression");
    return a_;
}

const ExprPtr& Expr::second() const {
    if (kind_ != Kind::left_prod && kind_ != Kind::right_prod && kind_ != Kind::bracket)
        throw Error("second() on non-binary expression");
    return b_;
}

const std::vector<std::pair<Rational, ExprPtr>>& Expr::summands() const {
    if (kind_ != Kind::sum) throw Error("summands() on non-sum expression");
    return summands_;
}

ExprPtr Expr::make_generator(Generator g) {
    std::shared_ptr<Expr> e(new Expr());
    e->kind_ = Kind::generator;
    e->gen_ = g;
    return e;
}

ExprPtr Expr::make_left(ExprPtr a, ExprPtr b) {
    if (!a || !b) throw Error("null subexpression");
    std::shared_ptr<Expr> e(new Expr());
    e->kind_ = Kind::left_prod;
    e->a_ = std::move(a);
    e->b_ = std::move(b);
    return e;
}

ExprPtr Expr::make_right(ExprPtr a, ExprPtr b) {
    if (!a || !b) throw Error("null subexpression");
    std::shared_ptr<Expr> e(new Expr());
    e->kind_ = Kind::right_prod;
    e->a_ = std::move(a);
    e->b_ = std::move(b);
    return e;
}

ExprPtr Expr::make_bracket(ExprPtr a, ExprPtr b) {
    if (!a || !b) throw Error("null subexpression");
    std::shared_ptr<Expr> e(new Expr());
    e->kind_ = Kind::bracket;
    e->a_ = std::move(a);
    e->b_ = std::move(b);
    return e;
}

ExprPtr Expr::make_sum(std::vector<std::pair<Rational, ExprPtr>> summands) {
    for (const auto& [c, sub] : summands)
        if (!sub) throw Error("null subexpression");
    std::shared_ptr<Expr> e(new Expr());
    e->kind_ = Kind::sum;
    e->summands_ = std::move(summands);
    return e;
}

ExprPtr Expr::from_tree(const SignedTree& t) {
    if (t.is_leaf()) return make_generator(t.generator());
    ExprPtr l = from_tree(t.left());
    ExprPtr r = from_tree(t.right());
    return t.sign() == Sign::plus ? make_bracket(l, r) : make_bracket(r, l);
}

DiPoly eval_expr(const ExprPtr& e) {
    if (!e) throw Error("null expression");
    switch (e->kind()) {
    case Expr::Kind::generator:
        return DiPoly::generator(e->generator());
    case Expr::Kind::left_prod:
        return poly_product(ProductOp::left, eval_expr(e->first()), eval_expr(e->second()));
    case Expr::Kind::right_prod:
        return poly_product(ProductOp::right, eval_expr(e->first()), eval_expr(e->second()));
    case Expr::Kind::bracket:
        return bracket(eval_expr(e->first()), eval_expr(e->second()));
    case Expr::Kind::sum: {
        DiPoly out;
        for (const auto& [c, sub] : e->summands()) out += c * eval_expr(sub);
        return out;
    }
    }
    throw Error("unreachable expression kind");
}

bool is_leibniz_expr(const ExprPtr& e) {
    if (!e) throw Error("null expression");
    switch (e->kind()) {
    case Expr::Kind::generator:
        return true;
    case Expr::Kind::left_prod:
    case Expr::Kind::right_prod:
        return false;
    case Expr::Kind::bracket:
        return is_leibniz_expr(e->first()) && is_leibniz_expr(e->second());
    case Expr::Kind::sum:
        for (const auto& [c, sub] : e->summands())
            if (!is_leibniz_expr(sub)) return false;
        return true;
    }
    throw Error("unreachable expression kind");
}

} // namespace leibniz
