#include "leibniz/parser.hpp"

#include <cctype>
#include <optional>

namespace leibniz {

namespace {

enum class Tok {
    ident,
    number,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    semicolon,
    plus,
    minus,
    star,
    slash,
    left_op,  // -|
    right_op, // |-
    end,
};

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t) { out.push_back({k, std::move(t), line, col}); };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            push(Tok::ident, text.substr(start, i - start));
            col += static_cast<int>(i - start);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            push(Tok::number, text.substr(start, i - start));
            col += static_cast<int>(i - start);
            continue;
        }
        switch (c) {
        case '(': push(Tok::lparen, "("); break;
        case ')': push(Tok::rparen, ")"); break;
        case '[': push(Tok::lbracket, "["); break;
        case ']': push(Tok::rbracket, "]"); break;
        case ',': push(Tok::comma, ","); break;
        case ';': push(Tok::semicolon, ";"); break;
        case '+': push(Tok::plus, "+"); break;
        case '*': push(Tok::star, "*"); break;
        case '/': push(Tok::slash, "/"); break;
        case '-':
            if (i + 1 < text.size() && text[i + 1] == '|') {
                push(Tok::left_op, "-|");
                ++i;
                ++col;
            } else {
                push(Tok::minus, "-");
            }
            break;
        case '|':
            if (i + 1 < text.size() && text[i + 1] == '-') {
                push(Tok::right_op, "|-");
                ++i;
                ++col;
            } else {
                throw ParseError("unexpected '|'", line, col);
            }
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        ++i;
        ++col;
    }
    out.push_back({Tok::end, "", line, col});
    return out;
}

// An expression value that remembers whether it is syntactically a pure
// signed tree (a leaf or a "(t1,t2)±" literal).
struct Val {
    ExprPtr expr;
    std::optional<SignedTree> tree;
};

class Parser {
  public:
    Parser(const HallOrderConfig& order, std::vector<Token> tokens)
        : order_(order), tokens_(std::move(tokens)) {}

    Val parse_expression_all() {
        Val v = parse_expr();
        expect_end();
        return v;
    }

    SignedTree parse_tree_all() {
        SignedTree t = parse_tree();
        expect_end();
        return t;
    }

    StandardSequence parse_sequence_all() {
        // A sequence may be wrapped in one pair of parentheses.
        bool wrapped = peek().kind == Tok::lparen && wrapping_parens();
        if (wrapped) advance();
        std::vector<SignedTree> trees;
        trees.push_back(parse_tree());
        while (peek().kind == Tok::comma) {
            advance();
            trees.push_back(parse_tree());
        }
        const Token& semi = peek();
        if (semi.kind != Tok::semicolon)
            throw ParseError("expected ';' before the sequence middle", semi.line, semi.column);
        advance();
        const Token& num = peek();
        if (num.kind != Tok::number)
            throw ParseError("expected the middle index after ';'", num.line, num.column);
        advance();
        long long j = 0;
        for (char c : num.text) j = j * 10 + (c - '0');
        if (j < 1 || j > static_cast<long long>(trees.size()))
            throw ParseError("sequence middle " + num.text + " out of range 1.." +
                                 std::to_string(trees.size()),
                             num.line, num.column);
        if (wrapped) {
            const Token& close = peek();
            if (close.kind != Tok::rparen)
                throw ParseError("expected ')' closing the sequence", close.line, close.column);
            advance();
        }
        expect_end();
        return StandardSequence(std::move(trees), static_cast<int>(j));
    }

    bool has_semicolon() const {
        for (const Token& t : tokens_)
            if (t.kind == Tok::semicolon) return true;
        return false;
    }

  private:
    const Token& peek(int ahead = 0) const {
        std::size_t k = pos_ + ahead;
        return k < tokens_.size() ? tokens_[k] : tokens_.back();
    }
    void advance() {
        if (pos_ + 1 < tokens_.size()) ++pos_;
    }
    void expect_end() {
        const Token& t = peek();
        if (t.kind != Tok::end)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.column);
    }

    // True iff the first token's parenthesis closes at the last token.
    bool wrapping_parens() const {
        int depth = 0;
        for (std::size_t k = 0; k + 1 < tokens_.size(); ++k) { // excludes the end token
            Tok kind = tokens_[k].kind;
            if (kind == Tok::lparen) ++depth;
            if (kind == Tok::rparen) {
                --depth;
                if (depth == 0) return k + 2 == tokens_.size();
            }
        }
        return false;
    }

    Generator generator_for(const Token& t) {
        try {
            return order_.generator(t.text);
        } catch (const Error&) {
            throw ParseError("unknown generator '" + t.text + "'", t.line, t.column);
        }
    }

    Rational parse_scalar() {
        const Token& num = peek();
        advance();
        std::string text = num.text;
        if (peek().kind == Tok::slash) {
            advance();
            const Token& den = peek();
            if (den.kind != Tok::number)
                throw ParseError("expected a denominator after '/'", den.line, den.column);
            advance();
            if (rational_from_string(den.text) == 0)
                throw ParseError("zero denominator", den.line, den.column);
            text += "/" + den.text;
        }
        return rational_from_string(text);
    }

    SignedTree parse_tree() {
        const Token& t = peek();
        if (t.kind == Tok::ident) {
            advance();
            return SignedTree::leaf(generator_for(t));
        }
        if (t.kind == Tok::lparen) {
            advance();
            SignedTree left = parse_tree();
            const Token& comma = peek();
            if (comma.kind != Tok::comma)
                throw ParseError("expected ',' inside a signed tree", comma.line, comma.column);
            advance();
            SignedTree right = parse_tree();
            const Token& close = peek();
            if (close.kind != Tok::rparen)
                throw ParseError("expected ')' closing a signed tree", close.line, close.column);
            advance();
            const Token& sign = peek();
            if (sign.kind == Tok::plus || sign.kind == Tok::minus) {
                advance();
                return SignedTree::node(left, right,
                                        sign.kind == Tok::plus ? Sign::plus : Sign::minus);
            }
            throw ParseError("expected '+' or '-' after a signed tree pair", sign.line,
                             sign.column);
        }
        throw ParseError("expected a signed tree", t.line, t.column);
    }

    Val parse_expr() {
        std::vector<std::pair<Rational, ExprPtr>> summands;
        bool negative = false;
        if (peek().kind == Tok::minus) {
            advance();
            negative = true;
        }
        Val first = parse_term(negative ? Rational(-1) : Rational(1), summands);
        bool single = summands.size() == 1 && !negative;
        Val out = first;
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool neg = peek().kind == Tok::minus;
            advance();
            parse_term(neg ? Rational(-1) : Rational(1), summands);
            single = false;
        }
        if (single && summands[0].first == 1) return out; // keep tree-ness of a lone term
        return {Expr::make_sum(std::move(summands)), std::nullopt};
    }

    // Parses one term and appends (sign * coefficient, chain) to summands.
    Val parse_term(const Rational& sign, std::vector<std::pair<Rational, ExprPtr>>& summands) {
        Rational coeff = sign;
        if (peek().kind == Tok::number) {
            coeff *= parse_scalar();
            const Token& star = peek();
            if (star.kind != Tok::star)
                throw ParseError("expected '*' after a scalar", star.line, star.column);
            advance();
        }
        Val v = parse_atom();
        while (peek().kind == Tok::left_op || peek().kind == Tok::right_op) {
            bool left = peek().kind == Tok::left_op;
            advance();
            Val rhs = parse_atom();
            v = {left ? Expr::make_left(v.expr, rhs.expr) : Expr::make_right(v.expr, rhs.expr),
                 std::nullopt};
        }
        summands.emplace_back(coeff, v.expr);
        return v;
    }

    Val parse_atom() {
        const Token& t = peek();
        if (t.kind == Tok::ident) {
            advance();
            Generator g = generator_for(t);
            return {Expr::make_generator(g), SignedTree::leaf(g)};
        }
        if (t.kind == Tok::lbracket) {
            advance();
            Val a = parse_expr();
            const Token& comma = peek();
            if (comma.kind != Tok::comma)
                throw ParseError("expected ',' inside a bracket", comma.line, comma.column);
            advance();
            Val b = parse_expr();
            const Token& close = peek();
            if (close.kind != Tok::rbracket)
                throw ParseError("expected ']' closing a bracket", close.line, close.column);
            advance();
            return {Expr::make_bracket(a.expr, b.expr), std::nullopt};
        }
        if (t.kind == Tok::lparen) {
            advance();
            Val a = parse_expr();
            if (peek().kind == Tok::comma) {
                const Token& comma = peek();
                advance();
                Val b = parse_expr();
                const Token& close = peek();
                if (close.kind != Tok::rparen)
                    throw ParseError("expected ')' closing a signed tree", close.line,
                                     close.column);
                advance();
                const Token& sign = peek();
                if (sign.kind != Tok::plus && sign.kind != Tok::minus)
                    throw ParseError("expected '+' or '-' after a signed tree pair", sign.line,
                                     sign.column);
                advance();
                if (!a.tree || !b.tree)
                    throw ParseError("signed tree components must be signed trees", comma.line,
                                     comma.column);
                SignedTree node = SignedTree::node(
                    *a.tree, *b.tree, sign.kind == Tok::plus ? Sign::plus : Sign::minus);
                return {Expr::from_tree(node), node};
            }
            const Token& close = peek();
            if (close.kind != Tok::rparen)
                throw ParseError("expected ')'", close.line, close.column);
            advance();
            return a;
        }
        throw ParseError("expected a generator, bracket, or parenthesized expression", t.line,
                         t.column);
    }

    const HallOrderConfig& order_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

ExprPtr parse_expr(const HallOrderConfig& order, const std::string& text) {
    Parser p(order, tokenize(text));
    return p.parse_expression_all().expr;
}

SignedTree parse_tree(const HallOrderConfig& order, const std::string& text) {
    Parser p(order, tokenize(text));
    return p.parse_tree_all();
}

StandardSequence parse_sequence(const HallOrderConfig& order, const std::string& text) {
    Parser p(order, tokenize(text));
    return p.parse_sequence_all();
}

ParsedValue parse_expression(const HallOrderConfig& order, const std::string& text) {
    Parser probe(order, tokenize(text));
    if (probe.has_semicolon()) return parse_sequence(order, text);
    Parser p(order, tokenize(text));
    Val v = p.parse_expression_all();
    if (v.tree) return *v.tree;
    return v.expr;
}

} // namespace leibniz
