#ifndef LEIBNIZ_DIALGEBRA_HPP
#define LEIBNIZ_DIALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "leibniz/rational.hpp"
#include "leibniz/trees.hpp"

namespace leibniz {

// The two di-semigroup products: left is -| and right is |-.
enum class ProductOp { left, right };

// Normal-form word of the free di-semigroup: a nonempty letter list plus a
// 1-based middle position.
struct Monomial {
    std::vector<Generator> letters;
    int middle = 1;

    Monomial() = default;
    Monomial(std::vector<Generator> letters_, int middle_); // validates the invariants
    int degree() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical order: degree, then letters lexicographic, then middle.
bool operator<(const Monomial& a, const Monomial& b);

// Products are computed directly on normal forms: concatenate the letters;
// the middle stays at a.middle under left and shifts by |a| under right.
Monomial mono_product(ProductOp op, const Monomial& a, const Monomial& b);

// Finitely supported Monomial -> Rational map. Never stores zero
// coefficients; iteration order is the canonical monomial order.
class DiPoly {
  public:
    DiPoly() = default;
    static DiPoly monomial(const Monomial& m, const Rational& coeff = 1);
    static DiPoly generator(Generator g);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const& { return terms_; }
    // value overload so iterating the terms of a temporary stays valid
    std::map<Monomial, Rational> terms() && { return std::move(terms_); }
    Rational coeff(const Monomial& m) const;

    DiPoly& add_term(const Monomial& m, const Rational& c);
    DiPoly& operator+=(const DiPoly& other);
    DiPoly& operator-=(const DiPoly& other);
    DiPoly& operator*=(const Rational& c);

    friend DiPoly operator+(DiPoly a, const DiPoly& b) { return a += b; }
    friend DiPoly operator-(DiPoly a, const DiPoly& b) { return a -= b; }
    friend DiPoly operator*(const Rational& c, DiPoly p) { return p *= c; }
    friend DiPoly operator-(DiPoly p) { return p *= Rational(-1); }
    friend bool operator==(const DiPoly&, const DiPoly&) = default;

  private:
    std::map<Monomial, Rational> terms_;
};

// Bilinear extension of mono_product.
DiPoly poly_product(ProductOp op, const DiPoly& p, const DiPoly& q);

// [P,Q] = P -| Q  -  Q |- P.
DiPoly bracket(const DiPoly& p, const DiPoly& q);

// (t): leaves map to themselves, plus nodes multiply with |- and minus nodes
// with -|. The resulting middle is the leaf reached by following node signs
// from the root.
Monomial eval_tree_monomial(const SignedTree& t);

// [t]: [x] = x, [(t1,t2)+] = [[t1],[t2]], [(t1,t2)-] = [[t2],[t1]].
DiPoly eval_tree_leibniz(const SignedTree& t);

struct ComponentDimension {
    long long count = 0;
    std::vector<Monomial> monomials; // canonical order
};

// Enumerates every monomial with `degree` letters over `alphabet_size`
// generators; count = degree * alphabet_size^degree by construction.
ComponentDimension component_dimension(int alphabet_size, int degree);

// Left-normed bracket [[...[w1,w2],w3]...,wn] of a nonempty word; the
// independent reference family for the Leibniz component.
DiPoly loday_element(const std::vector<Generator>& word);

// Canonical text forms (see the formatting conventions in format.hpp; these
// are the plain-ASCII variants used in error messages and reports).
std::string monomial_text(const HallOrderConfig& order, const Monomial& m);
std::string poly_text(const HallOrderConfig& order, const DiPoly& p);

} // namespace leibniz

#endif
