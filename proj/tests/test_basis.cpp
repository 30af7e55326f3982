#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "leibniz/basis.hpp"
#include "support/testutil.hpp"

using namespace leibniz;
using namespace leibniz::testing;

namespace {

StandardSequence seq(std::vector<SignedTree> trees, int j) {
    return StandardSequence(std::move(trees), j);
}

Monomial mono(const std::vector<int>& letters, int middle) {
    std::vector<Generator> gs;
    for (int i : letters) gs.push_back(Generator{i});
    return Monomial(gs, middle);
}

Conventions nonstrict_rises() {
    Conventions c;
    c.rise_strictness = Strictness::nonstrict;
    return c;
}

} // namespace

TEST_CASE("factorize_monomial on the worked examples") {
    auto order = xy_order();
    Conventions conv;
    CHECK(factorize_monomial(order, conv, mono({1, 0}, 1)) == seq({M(Y(), X())}, 1));
    CHECK(factorize_monomial(order, conv, mono({0, 1}, 1)) == seq({X(), Y()}, 1));
    CHECK(factorize_monomial(order, conv, mono({0, 0}, 2)) == seq({X(), X()}, 2));
    CHECK(factorize_monomial(order, nonstrict_rises(), mono({0, 0}, 2)) ==
          seq({P(X(), X())}, 1));
}

TEST_CASE("all_hall_factorizations on the worked examples") {
    auto order = xy_order();
    Conventions conv;
    auto f1 = all_hall_factorizations(order, conv, mono({0, 1}, 1));
    REQUIRE(f1.size() == 1);
    CHECK(f1[0] == seq({X(), Y()}, 1));

    auto f2 = all_hall_factorizations(order, conv, mono({0, 0}, 2));
    CHECK(std::find(f2.begin(), f2.end(), seq({X(), X()}, 2)) != f2.end());
    CHECK(std::find(f2.begin(), f2.end(), seq({P(X(), X())}, 1)) != f2.end());
    CHECK(f2.size() == 2);

    auto order1 = x_order();
    auto f3 = all_hall_factorizations(order1, conv, Monomial({Generator{0}}, 1));
    REQUIRE(f3.size() == 1);
    CHECK(f3[0] == seq({X()}, 1));

    CHECK_THROWS_AS(all_hall_factorizations(order, conv, mono({0, 0, 0, 0, 0, 0}, 1)),
                    BudgetExceeded);
}

TEST_CASE("all_hall_factorizations always contains the factorize output") {
    auto order = xy_order();
    Conventions conv;
    for (int d = 1; d <= 4; ++d)
        for (const Monomial& m : component_dimension(2, d).monomials) {
            auto all = all_hall_factorizations(order, conv, m);
            auto one = factorize_monomial(order, conv, m);
            REQUIRE(std::find(all.begin(), all.end(), one) != all.end());
        }
}

TEST_CASE("bracket_hall on the worked examples") {
    auto order = xy_order();
    Conventions conv;
    auto c1 = bracket_hall(order, conv, Y(), X());
    REQUIRE(c1.term_count() == 1);
    CHECK(c1.terms().begin()->first == P(Y(), X()));
    CHECK(c1.terms().begin()->second == 1);

    auto c2 = bracket_hall(order, conv, X(), Y());
    REQUIRE(c2.term_count() == 1);
    CHECK(c2.terms().begin()->first == M(Y(), X()));
    CHECK(c2.terms().begin()->second == 1);

    auto c3 = bracket_hall(order, conv, P(Y(), Y()), X());
    REQUIRE(c3.term_count() == 2);
    auto it = c3.terms().begin();
    CHECK(it->first == P(P(Y(), X()), Y()));
    CHECK(it->second == 1);
    ++it;
    CHECK(it->first == M(P(Y(), X()), Y()));
    CHECK(it->second == 1);
}

TEST_CASE("bracket_hall rejects non-Hall arguments") {
    auto order = xy_order();
    Conventions conv;
    CHECK_THROWS_AS(bracket_hall(order, conv, P(X(), Y()), X()), Error);
}

TEST_CASE("bracket_hall expansion property over all Hall pairs up to degree 4") {
    auto order = xy_order();
    Conventions conv;
    ExpansionAudit audit;
    long long pairs = 0;
    for (int d = 2; d <= 4; ++d)
        for (int a = 1; a < d; ++a)
            for (const SignedTree& t1 : enumerate_hall(order, conv, a))
                for (const SignedTree& t2 : enumerate_hall(order, conv, d - a)) {
                    ++pairs;
                    HallCombination c = bracket_hall(order, conv, t1, t2, &audit);
                    // the expansion identity is asserted inline on every call;
                    // check homogeneity and Hall membership of the keys here
                    for (const auto& [u, coeff] : c.terms()) {
                        REQUIRE(u.length() == t1.length() + t2.length());
                        REQUIRE(is_hall(order, conv, u));
                        REQUIRE(coeff != 0);
                    }
                }
    CHECK(pairs == 144);
    CHECK(audit.calls >= pairs);
    // computed by running the audit: the nonstrict bound u'' <= max(t1,t2)
    // holds for every produced key, while the strict variant fails for every
    // produced key (the bound is tight throughout this range).
    CHECK(audit.nonstrict_bound_failures == 0);
    CHECK(audit.keys > 0);
    CHECK(audit.strict_bound_failures == audit.keys);
}

TEST_CASE("case2_orientation = paper_literal errors where the literal rule leaves H") {
    auto order = xy_order();
    Conventions literal;
    literal.case2_orientation = Case2Orientation::paper_literal;
    Conventions conv;
    long long errors = 0, ok = 0;
    for (int d = 2; d <= 4; ++d)
        for (int a = 1; a < d; ++a)
            for (const SignedTree& t1 : enumerate_hall(order, conv, a))
                for (const SignedTree& t2 : enumerate_hall(order, conv, d - a)) {
                    try {
                        bracket_hall(order, literal, t1, t2);
                        ++ok;
                    } catch (const ConventionViolation&) {
                        ++errors;
                    }
                }
    // computed by running the audit: the unconditional literal rule produces
    // a non-Hall key on 14 of the 144 pairs; the oriented subcases handle all
    CHECK(ok == 130);
    CHECK(errors == 14);
    // one concrete breakage: x > (y,y)+ with (y,y)+'' = y < x, so the
    // literal pair ((y,y)+, x)- is not Hall; the oriented case 2-3 recurses
    CHECK_THROWS_AS(bracket_hall(order, literal, X(), P(Y(), Y())), ConventionViolation);
    CHECK_NOTHROW(bracket_hall(order, conv, X(), P(Y(), Y())));
}

TEST_CASE("leibniz_to_hall on the worked examples") {
    auto order = xy_order();
    Conventions conv;
    auto gx = Expr::make_generator(Generator{0});
    auto gy = Expr::make_generator(Generator{1});

    auto c1 = leibniz_to_hall(order, conv, Expr::make_bracket(gx, gy));
    REQUIRE(c1.term_count() == 1);
    CHECK(c1.terms().begin()->first == M(Y(), X()));

    auto c2 = leibniz_to_hall(order, conv,
                              Expr::make_bracket(gx, Expr::make_bracket(gx, gx)));
    CHECK(c2.empty());
    CHECK(c2.expansion() == DiPoly{});

    auto c3 = leibniz_to_hall(
        order, conv, Expr::make_sum({{Rational(2), gx}, {Rational(3), gy}}));
    REQUIRE(c3.term_count() == 2);
    auto it = c3.terms().begin();
    CHECK(it->first == X());
    CHECK(it->second == 2);
    ++it;
    CHECK(it->first == Y());
    CHECK(it->second == 3);

    CHECK_THROWS_AS(leibniz_to_hall(order, conv, Expr::make_left(gx, gy)), Error);
}

TEST_CASE("to_b_basis on the worked examples") {
    auto order1 = x_order();
    Conventions conv;
    auto b1 = to_b_basis(order1, conv, DiPoly::monomial(Monomial({Generator{0}, Generator{0}}, 1)));
    REQUIRE(b1.term_count() == 1);
    CHECK(b1.terms().begin()->first == seq({X(), X()}, 1));
    CHECK(b1.terms().begin()->second == 1);

    auto order = xy_order();
    auto b2 = to_b_basis(order, conv, DiPoly::monomial(mono({1, 0}, 2)));
    REQUIRE(b2.term_count() == 2);
    // canonical key order: the single-tree sequence sorts first
    auto it = b2.terms().begin();
    CHECK(it->first == seq({M(Y(), X())}, 1));
    CHECK(it->second == -1);
    ++it;
    CHECK(it->first == seq({X(), Y()}, 1));
    CHECK(it->second == 1);

    CHECK(to_b_basis(order, conv, DiPoly{}).empty());
}

TEST_CASE("to_b_basis keys are terminal and homogeneous") {
    auto order = xy_order();
    Conventions conv;
    for (int d = 1; d <= 4; ++d)
        for (const Monomial& m : component_dimension(2, d).monomials) {
            BCombination b = to_b_basis(order, conv, DiPoly::monomial(m));
            for (const auto& [s, c] : b.terms()) {
                REQUIRE(legal_rises(order, conv, s).empty());
                REQUIRE(is_standard(order, conv, s));
                REQUIRE(s.degree() == d);
                REQUIRE(c != 0);
            }
        }
}

TEST_CASE("to_b_basis reports the nonstrict-rise nontermination instead of looping") {
    auto order = x_order();
    CHECK_THROWS_AS(
        to_b_basis(order, nonstrict_rises(),
                   DiPoly::monomial(Monomial({Generator{0}, Generator{0}}, 1))),
        ConventionViolation);
}

TEST_CASE("factorize output is terminal Hall and evaluates back up to degree 5") {
    auto order = xy_order();
    Conventions conv;
    for (int d = 1; d <= 5; ++d)
        for (const Monomial& m : component_dimension(2, d).monomials) {
            StandardSequence s = factorize_monomial(order, conv, m);
            REQUIRE(is_standard(order, conv, s));
            REQUIRE(legal_rises(order, conv, s).empty());
            REQUIRE(eval_seq_monomial(s) == m);
        }
}

TEST_CASE("hall combination keeps canonical descending key order") {
    auto order = xy_order();
    Conventions conv;
    HallCombination c;
    c.add(M(Y(), X()), 1);
    c.add(X(), 2);
    c.add(Y(), 3);
    auto it = c.terms().begin();
    CHECK(it->first == X());
    ++it;
    CHECK(it->first == Y());
    ++it;
    CHECK(it->first == M(Y(), X()));
    c.add(X(), -2); // cancellation prunes the zero
    CHECK(c.term_count() == 2);
    (void)order;
    (void)conv;
}
