#include "leibniz/dialgebra.hpp"

#include <sstream>

namespace leibniz {

Monomial::Monomial(std::vector<Generator> letters_, int middle_)
    : letters(std::move(letters_)), middle(middle_) {
    if (letters.empty()) throw Error("monomial letters must be nonempty");
    if (middle < 1 || middle > degree())
        throw Error("monomial middle " + std::to_string(middle) + " out of range 1.." +
                    std::to_string(degree()));
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    if (a.letters != b.letters) return a.letters < b.letters;
    return a.middle < b.middle;
}

Monomial mono_product(ProductOp op, const Monomial& a, const Monomial& b) {
    std::vector<Generator> letters = a.letters;
    letters.insert(letters.end(), b.letters.begin(), b.letters.end());
    int middle = op == ProductOp::left ? a.middle : a.degree() + b.middle;
    return Monomial(std::move(letters), middle);
}

DiPoly DiPoly::monomial(const Monomial& m, const Rational& coeff) {
    DiPoly p;
    p.add_term(m, coeff);
    return p;
}

DiPoly DiPoly::generator(Generator g) {
    return monomial(Monomial({g}, 1));
}

Rational DiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

DiPoly& DiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

DiPoly& DiPoly::operator+=(const DiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

DiPoly& DiPoly::operator-=(const DiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

DiPoly& DiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

DiPoly poly_product(ProductOp op, const DiPoly& p, const DiPoly& q) {
    DiPoly out;
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) out.add_term(mono_product(op, mp, mq), cp * cq);
    return out;
}

DiPoly bracket(const DiPoly& p, const DiPoly& q) {
    return poly_product(ProductOp::left, p, q) - poly_product(ProductOp::right, q, p);
}

Monomial eval_tree_monomial(const SignedTree& t) {
    if (t.is_leaf()) return Monomial({t.generator()}, 1);
    Monomial l = eval_tree_monomial(t.left());
    Monomial r = eval_tree_monomial(t.right());
    return mono_product(t.sign() == Sign::plus ? ProductOp::right : ProductOp::left, l, r);
}

DiPoly eval_tree_leibniz(const SignedTree& t) {
    if (t.is_leaf()) return DiPoly::generator(t.generator());
    DiPoly l = eval_tree_leibniz(t.left());
    DiPoly r = eval_tree_leibniz(t.right());
    return t.sign() == Sign::plus ? bracket(l, r) : bracket(r, l);
}

ComponentDimension component_dimension(int alphabet_size, int degree) {
    if (alphabet_size < 1) throw Error("alphabet size must be >= 1");
    if (degree < 1) throw Error("degree must be >= 1");
    long long words = 1;
    for (int i = 0; i < degree; ++i) {
        words *= alphabet_size;
        if (words > 50'000'000) throw BudgetExceeded("component too large to enumerate");
    }
    ComponentDimension out;
    out.monomials.reserve(static_cast<std::size_t>(words * degree));
    std::vector<Generator> word(degree, Generator{0});
    for (long long w = 0; w < words; ++w) {
        long long code = w;
        // lexicographically increasing words: earlier letters vary slowest
        for (int pos = degree - 1; pos >= 0; --pos) {
            word[pos] = Generator{static_cast<int>(code % alphabet_size)};
            code /= alphabet_size;
        }
        for (int j = 1; j <= degree; ++j) out.monomials.emplace_back(word, j);
    }
    out.count = static_cast<long long>(out.monomials.size());
    return out;
}

DiPoly loday_element(const std::vector<Generator>& word) {
    if (word.empty()) throw Error("loday_element requires a nonempty word");
    DiPoly acc = DiPoly::generator(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i)
        acc = bracket(acc, DiPoly::generator(word[i]));
    return acc;
}

std::string monomial_text(const HallOrderConfig& order, const Monomial& m) {
    std::ostringstream os;
    for (int k = 1; k <= m.degree(); ++k) {
        os << order.name(m.letters[k - 1]);
        if (k < m.degree()) os << (k < m.middle ? " |- " : " -| ");
    }
    return os.str();
}

std::string poly_text(const HallOrderConfig& order, const DiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
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
        os << monomial_text(order, m);
    }
    return os.str();
}

} // namespace leibniz
