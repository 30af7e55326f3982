#ifndef LEIBNIZ_PARSER_HPP
#define LEIBNIZ_PARSER_HPP

#include <string>
#include <variant>

#include "leibniz/expr.hpp"
#include "leibniz/sequences.hpp"

namespace leibniz {

// Expression grammar: generators are identifiers; "-|" and "|-" are
// left-associative infix products of equal precedence; "[e1,e2]" is the
// bracket; parentheses group; "(t1,t2)+" / "(t1,t2)-" are signed trees
// (which denote their Leibniz evaluation when used as expressions);
// "p" or "p/q" scalars prefix a term with "*"; "+" and "-" form sums.
// Sequences are "t1, t2, ..., tn ; j", optionally parenthesized.
// All parse errors carry line/column.
ExprPtr parse_expr(const HallOrderConfig& order, const std::string& text);
SignedTree parse_tree(const HallOrderConfig& order, const std::string& text);
StandardSequence parse_sequence(const HallOrderConfig& order, const std::string& text);

using ParsedValue = std::variant<ExprPtr, SignedTree, StandardSequence>;

// Sequence when the text contains a top-level ';', a signed tree when the
// whole input is one tree, otherwise an expression.
ParsedValue parse_expression(const HallOrderConfig& order, const std::string& text);

} // namespace leibniz

#endif
