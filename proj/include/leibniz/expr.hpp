#ifndef LEIBNIZ_EXPR_HPP
#define LEIBNIZ_EXPR_HPP

#include <memory>
#include <utility>
#include <vector>

#include "leibniz/dialgebra.hpp"

namespace leibniz {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Input language for elements of the free di-algebra: generators, the two
// products, brackets and rational-weighted sums. Immutable.
class Expr {
  public:
    enum class Kind { generator, left_prod, right_prod, bracket, sum };

    Kind kind() const { return kind_; }
    Generator generator() const;
    const ExprPtr& first() const;  // left_prod / right_prod / bracket
    const ExprPtr& second() const;
    const std::vector<std::pair<Rational, ExprPtr>>& summands() const;

    static ExprPtr make_generator(Generator g);
    static ExprPtr make_left(ExprPtr a, ExprPtr b);
    static ExprPtr make_right(ExprPtr a, ExprPtr b);
    static ExprPtr make_bracket(ExprPtr a, ExprPtr b);
    static ExprPtr make_sum(std::vector<std::pair<Rational, ExprPtr>> summands);
    // Desugars a signed tree into nested brackets following the Leibniz
    // evaluation: (t1,t2)+ -> [t1,t2], (t1,t2)- -> [t2,t1].
    static ExprPtr from_tree(const SignedTree& t);

  private:
    Expr() = default;
    Kind kind_ = Kind::generator;
    Generator gen_;
    ExprPtr a_, b_;
    std::vector<std::pair<Rational, ExprPtr>> summands_;
};

DiPoly eval_expr(const ExprPtr& e);

// True iff the expression uses only generators, brackets, sums and scalars.
bool is_leibniz_expr(const ExprPtr& e);

} // namespace leibniz

#endif
