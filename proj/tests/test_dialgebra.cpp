#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "leibniz/dialgebra.hpp"
#include "support/enumeration.hpp"
#include "support/normalizer_oracle.hpp"
#include "support/testutil.hpp"

using namespace leibniz;
using namespace leibniz::testing;

namespace {

Monomial mono(const std::vector<int>& letters, int middle) {
    std::vector<Generator> gs;
    for (int i : letters) gs.push_back(Generator{i});
    return Monomial(gs, middle);
}

std::vector<Monomial> monomials(int q, int d) {
    return component_dimension(q, d).monomials;
}

} // namespace

TEST_CASE("mono_product on the worked examples") {
    auto xy = mono_product(ProductOp::left, mono({0}, 1), mono({1}, 1));
    CHECK(xy == mono({0, 1}, 1));
    auto xy2 = mono_product(ProductOp::right, mono({0}, 1), mono({1}, 1));
    CHECK(xy2 == mono({0, 1}, 2));
    auto prod = mono_product(ProductOp::left, mono({0, 1}, 2), mono({0, 0}, 1));
    CHECK(prod == mono({0, 1, 0, 0}, 2));
}

TEST_CASE("mono_product agrees with the law-closure normalizer up to degree 6") {
    NormalizerOracle oracle(6);
    for (int na = 1; na <= 5; ++na)
        for (int nb = 1; na + nb <= 6; ++nb)
            for (int ja = 1; ja <= na; ++ja)
                for (int jb = 1; jb <= nb; ++jb) {
                    SignedTree ta = NormalizerOracle::comb(0, na, ja);
                    SignedTree tb = NormalizerOracle::comb(na, nb, jb);
                    for (ProductOp op : {ProductOp::left, ProductOp::right}) {
                        SignedTree prod = SignedTree::node(
                            ta, tb, op == ProductOp::right ? Sign::plus : Sign::minus);
                        Monomial a = mono(
                            [&] {
                                std::vector<int> v;
                                for (int i = 0; i < na; ++i) v.push_back(i);
                                return v;
                            }(),
                            ja);
                        Monomial b = mono(
                            [&] {
                                std::vector<int> v;
                                for (int i = 0; i < nb; ++i) v.push_back(na + i);
                                return v;
                            }(),
                            jb);
                        Monomial got = mono_product(op, a, b);
                        REQUIRE(got.middle == oracle.middle_of(prod));
                        // letters are the concatenation by definition
                        std::vector<Generator> expect_letters = a.letters;
                        expect_letters.insert(expect_letters.end(), b.letters.begin(),
                                              b.letters.end());
                        REQUIRE(got.letters == expect_letters);
                    }
                }
}

TEST_CASE("eval_tree_monomial agrees with the law-closure normalizer up to degree 6") {
    NormalizerOracle oracle(6);
    // Every parenthesized product tree evaluates to the normal form the laws
    // force; the middle also matches the sign-path description.
    for (int n = 1; n <= 6; ++n) {
        for (const SignedTree& t : NormalizerOracle::position_trees(0, n)) {
            Monomial m = eval_tree_monomial(t);
            REQUIRE(m.middle == oracle.middle_of(t));
            SignedTree cur = t;
            while (!cur.is_leaf()) cur = cur.sign() == Sign::plus ? cur.right() : cur.left();
            REQUIRE(m.letters[m.middle - 1] == cur.generator());
        }
    }
}

TEST_CASE("eval_tree_monomial letters are the leaves in order") {
    for (int d = 1; d <= 4; ++d)
        for (const SignedTree& t : all_trees(2, d)) {
            Monomial m = eval_tree_monomial(t);
            std::vector<Generator> leaves;
            std::function<void(const SignedTree&)> walk = [&](const SignedTree& u) {
                if (u.is_leaf()) {
                    leaves.push_back(u.generator());
                    return;
                }
                walk(u.left());
                walk(u.right());
            };
            walk(t);
            REQUIRE(m.letters == leaves);
        }
}

TEST_CASE("iterating the terms of a temporary polynomial is safe") {
    DiPoly x = DiPoly::generator(Generator{0});
    int count = 0;
    for (const auto& [m, c] : bracket(x, x).terms()) {
        CHECK(m.degree() == 2);
        CHECK((c == 1 || c == -1));
        ++count;
    }
    CHECK(count == 2);
}

TEST_CASE("poly_product bilinearity examples") {
    DiPoly x = DiPoly::generator(Generator{0});
    DiPoly y = DiPoly::generator(Generator{1});
    DiPoly z = x; // alphabet {x,y}: reuse x as z over the same alphabet
    CHECK(poly_product(ProductOp::left, x + y, z) ==
          poly_product(ProductOp::left, x, z) + poly_product(ProductOp::left, y, z));
    CHECK(poly_product(ProductOp::right, DiPoly{}, x) == DiPoly{});
    DiPoly diff = x - y;
    DiPoly expect = poly_product(ProductOp::left, x, x) - poly_product(ProductOp::left, x, y) -
                    poly_product(ProductOp::left, y, x) + poly_product(ProductOp::left, y, y);
    CHECK(poly_product(ProductOp::left, diff, diff) == expect);
}

TEST_CASE("bracket on the worked examples") {
    DiPoly x = DiPoly::generator(Generator{0});
    DiPoly y = DiPoly::generator(Generator{1});
    DiPoly b = bracket(x, y);
    DiPoly expect = DiPoly::monomial(mono({0, 1}, 1)) - DiPoly::monomial(mono({1, 0}, 2));
    CHECK(b == expect);

    CHECK(bracket(x, bracket(x, x)) == DiPoly{});

    DiPoly triple = bracket(bracket(x, x), x);
    DiPoly expect3 = DiPoly::monomial(mono({0, 0, 0}, 1)) -
                     Rational(2) * DiPoly::monomial(mono({0, 0, 0}, 2)) +
                     DiPoly::monomial(mono({0, 0, 0}, 3));
    CHECK(triple == expect3);
}

TEST_CASE("eval_tree_monomial on the worked examples") {
    CHECK(eval_tree_monomial(X()) == mono({0}, 1));
    // the six-letter word ((x1 -| x2) |- (x3 -| x4)) -| (x5 |- x6)
    SignedTree w = M(P(M(SignedTree::leaf(Generator{0}), SignedTree::leaf(Generator{1})),
                       M(SignedTree::leaf(Generator{2}), SignedTree::leaf(Generator{3}))),
                     P(SignedTree::leaf(Generator{4}), SignedTree::leaf(Generator{5})));
    Monomial m = eval_tree_monomial(w);
    CHECK(m == mono({0, 1, 2, 3, 4, 5}, 3));
    CHECK(eval_tree_monomial(M(M(X(), X()), X())) == mono({0, 0, 0}, 1));
}

TEST_CASE("eval_tree_leibniz on the worked examples") {
    CHECK(eval_tree_leibniz(X()) == DiPoly::generator(Generator{0}));
    DiPoly expect = DiPoly::monomial(mono({0, 1}, 1)) - DiPoly::monomial(mono({1, 0}, 2));
    CHECK(eval_tree_leibniz(M(Y(), X())) == expect);
    CHECK(eval_tree_leibniz(M(P(X(), X()), X())) == DiPoly{});
}

TEST_CASE("eval_tree_leibniz is supported on the leaf multiset") {
    for (int d = 1; d <= 4; ++d)
        for (const SignedTree& t : all_trees(2, d)) {
            std::vector<Generator> leaves = eval_tree_monomial(t).letters;
            std::sort(leaves.begin(), leaves.end());
            DiPoly p = eval_tree_leibniz(t);
            for (const auto& [m, c] : p.terms()) {
                std::vector<Generator> letters = m.letters;
                std::sort(letters.begin(), letters.end());
                REQUIRE(letters == leaves);
            }
        }
}

TEST_CASE("component_dimension") {
    CHECK(component_dimension(1, 2).count == 2);
    CHECK(component_dimension(2, 3).count == 24);
    CHECK(component_dimension(1, 1).count == 1);
    for (int q = 1; q <= 2; ++q)
        for (int d = 1; d <= 5; ++d) {
            auto comp = component_dimension(q, d);
            long long expect = d;
            for (int i = 0; i < d; ++i) expect *= q;
            CHECK(comp.count == expect);
            CHECK(static_cast<long long>(comp.monomials.size()) == expect);
            for (std::size_t i = 1; i < comp.monomials.size(); ++i)
                REQUIRE(comp.monomials[i - 1] < comp.monomials[i]);
        }
}

TEST_CASE("loday_element") {
    CHECK(loday_element({Generator{0}}) == DiPoly::generator(Generator{0}));
    DiPoly expect = DiPoly::monomial(mono({0, 1}, 1)) - DiPoly::monomial(mono({1, 0}, 2));
    CHECK(loday_element({Generator{0}, Generator{1}}) == expect);
    DiPoly expect3 = DiPoly::monomial(mono({0, 0, 0}, 1)) -
                     Rational(2) * DiPoly::monomial(mono({0, 0, 0}, 2)) +
                     DiPoly::monomial(mono({0, 0, 0}, 3));
    CHECK(loday_element({Generator{0}, Generator{0}, Generator{0}}) == expect3);
}

TEST_CASE("the five di-semigroup laws hold exactly up to total degree 6") {
    for (int da = 1; da <= 4; ++da)
        for (int db = 1; da + db <= 5; ++db)
            for (int dc = 1; da + db + dc <= 6; ++dc)
                for (const Monomial& a : monomials(2, da))
                    for (const Monomial& b : monomials(2, db))
                        for (const Monomial& c : monomials(2, dc)) {
                            auto L = ProductOp::left;
                            auto R = ProductOp::right;
                            REQUIRE(mono_product(L, mono_product(L, a, b), c) ==
                                    mono_product(L, a, mono_product(L, b, c)));
                            REQUIRE(mono_product(R, mono_product(R, a, b), c) ==
                                    mono_product(R, a, mono_product(R, b, c)));
                            REQUIRE(mono_product(L, mono_product(L, a, b), c) ==
                                    mono_product(L, a, mono_product(R, b, c)));
                            REQUIRE(mono_product(L, mono_product(R, a, b), c) ==
                                    mono_product(R, a, mono_product(L, b, c)));
                            REQUIRE(mono_product(R, mono_product(L, a, b), c) ==
                                    mono_product(R, a, mono_product(R, b, c)));
                        }
}

TEST_CASE("the Leibniz identity holds exactly up to total degree 6") {
    for (int da = 1; da <= 4; ++da)
        for (int db = 1; da + db <= 5; ++db)
            for (int dc = 1; da + db + dc <= 6; ++dc)
                for (const Monomial& ma : monomials(2, da))
                    for (const Monomial& mb : monomials(2, db))
                        for (const Monomial& mc : monomials(2, dc)) {
                            DiPoly a = DiPoly::monomial(ma);
                            DiPoly b = DiPoly::monomial(mb);
                            DiPoly c = DiPoly::monomial(mc);
                            REQUIRE(bracket(bracket(a, b), c) ==
                                    bracket(bracket(a, c), b) + bracket(a, bracket(b, c)));
                        }
}

TEST_CASE("randomized exact arithmetic properties") {
    std::mt19937 rng(20240817);
    auto random_poly = [&] {
        DiPoly p;
        std::uniform_int_distribution<int> nterms(0, 3), deg(1, 3), letter(0, 1), num(-3, 3),
            den(1, 2);
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            int d = deg(rng);
            std::vector<Generator> letters;
            for (int j = 0; j < d; ++j) letters.push_back(Generator{letter(rng)});
            std::uniform_int_distribution<int> mid(1, d);
            p.add_term(Monomial(letters, mid(rng)), Rational(num(rng), den(rng)));
        }
        return p;
    };
    for (int iter = 0; iter < 1000; ++iter) {
        DiPoly p = random_poly(), q = random_poly(), r = random_poly();
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        Rational c(3, 2);
        for (ProductOp op : {ProductOp::left, ProductOp::right}) {
            CHECK(poly_product(op, p + q, r) ==
                  poly_product(op, p, r) + poly_product(op, q, r));
            CHECK(poly_product(op, p, q + r) ==
                  poly_product(op, p, q) + poly_product(op, p, r));
            CHECK(poly_product(op, c * p, q) == c * poly_product(op, p, q));
        }
        CHECK(bracket(p + q, r) == bracket(p, r) + bracket(q, r));
        CHECK(bracket(p, q + r) == bracket(p, q) + bracket(p, r));
        CHECK(bracket(c * p, q) == c * bracket(p, q));
    }
}

TEST_CASE("monomial invariants are enforced") {
    CHECK_THROWS_AS(Monomial({}, 1), Error);
    CHECK_THROWS_AS(mono({0}, 2), Error);
    CHECK_THROWS_AS(mono({0}, 0), Error);
}
