#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "leibniz/verify.hpp"
#include "support/testutil.hpp"

using namespace leibniz;
using namespace leibniz::testing;

namespace {

Monomial mono(const std::vector<int>& letters, int middle) {
    std::vector<Generator> gs;
    for (int i : letters) gs.push_back(Generator{i});
    return Monomial(gs, middle);
}

std::vector<DiPoly> loday_family(int q, int d) {
    std::vector<DiPoly> out;
    long long words = 1;
    for (int i = 0; i < d; ++i) words *= q;
    for (long long w = 0; w < words; ++w) {
        std::vector<Generator> word(d);
        long long code = w;
        for (int pos = d - 1; pos >= 0; --pos) {
            word[pos] = Generator{static_cast<int>(code % q)};
            code /= q;
        }
        out.push_back(loday_element(word));
    }
    return out;
}

} // namespace

TEST_CASE("rank on the worked examples") {
    CHECK(rank({}) == 0);
    DiPoly x = DiPoly::generator(Generator{0});
    DiPoly y = DiPoly::generator(Generator{1});
    DiPoly a = poly_product(ProductOp::left, x, y) - poly_product(ProductOp::right, y, x);
    CHECK(rank({a, -a}) == 1);
    CHECK(rank(loday_family(2, 2)) == 4);
}

TEST_CASE("rank is invariant under scaling and permutation") {
    std::mt19937 rng(987654);
    std::vector<DiPoly> polys = loday_family(2, 3);
    polys.push_back(polys[0] + polys[3]);
    polys.push_back(DiPoly{});
    long long base = rank(polys);
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<DiPoly> shuffled = polys;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::uniform_int_distribution<int> num(1, 7), den(1, 5);
        for (DiPoly& p : shuffled) p *= Rational(num(rng), den(rng));
        CHECK(rank(shuffled) == base);
    }
}

TEST_CASE("in_span on the worked examples") {
    DiPoly x = DiPoly::generator(Generator{0});
    DiPoly y = DiPoly::generator(Generator{1});
    DiPoly xy = poly_product(ProductOp::left, x, y);
    CHECK(in_span(DiPoly{}, {}));
    CHECK(in_span(xy, {xy}));
    CHECK_FALSE(in_span(x, {y}));
    auto order = xy_order();
    CHECK(in_span(eval_tree_leibniz(M(Y(), X())), leibniz_component_basis(order, 2)));
}

TEST_CASE("leibniz_component_basis dimensions") {
    auto order2 = xy_order();
    CHECK(leibniz_component_basis(order2, 1).size() == 2);
    CHECK(leibniz_component_basis(order2, 2).size() == 4);
    auto order1 = x_order();
    CHECK(leibniz_component_basis(order1, 3).size() == 1);
    CHECK_THROWS_AS(leibniz_component_basis(order2, 6), BudgetExceeded);
}

TEST_CASE("the component basis is independent and closed under brackets") {
    auto order = xy_order();
    for (int d = 1; d <= 4; ++d) {
        auto basis = leibniz_component_basis(order, d);
        CHECK(rank(basis) == static_cast<long long>(basis.size()));
        for (int a = 1; a < d; ++a)
            for (const DiPoly& u : leibniz_component_basis(order, a))
                for (const DiPoly& v : leibniz_component_basis(order, d - a))
                    REQUIRE(in_span(bracket(u, v), basis));
    }
}

TEST_CASE("the two Leibniz oracles agree: rank q^d and equal spans") {
    for (int q = 1; q <= 2; ++q) {
        auto order = q == 1 ? x_order() : xy_order();
        for (int d = 1; d <= 4; ++d) {
            auto oracle = leibniz_component_basis(order, d);
            auto loday = loday_family(q, d);
            long long expected = q == 1 ? 1 : (1LL << d);
            CHECK(static_cast<long long>(oracle.size()) == (q == 1 ? 1 : expected));
            CHECK(rank(loday) == (q == 1 ? 1 : expected));
            for (const DiPoly& e : oracle) REQUIRE(in_span(e, loday));
            for (const DiPoly& e : loday) REQUIRE(in_span(e, oracle));
        }
    }
}

TEST_CASE("every Hall evaluation lies in the Leibniz component up to degree 4") {
    Conventions conv;
    for (int q = 1; q <= 2; ++q) {
        auto order = q == 1 ? x_order() : xy_order();
        for (int d = 1; d <= 4; ++d) {
            auto basis = leibniz_component_basis(order, d);
            for (const SignedTree& t : enumerate_hall(order, conv, d))
                REQUIRE(in_span(eval_tree_leibniz(t), basis));
        }
    }
}

TEST_CASE("run_claim on the worked examples") {
    Conventions conv;
    auto order2 = xy_order();

    auto r1 = run_claim(order2, conv, Claim::dialgebra_axioms, 3);
    CHECK(r1.status == ClaimStatus::verified);
    CHECK(r1.counterexamples.empty());
    CHECK(r1.instances_checked == 40); // 8 triples of total degree 3, 5 laws each

    auto r2 = run_claim(order2, conv, Claim::dim_formula_paper, 3);
    CHECK(r2.status == ClaimStatus::refuted);
    REQUIRE(r2.counterexamples.size() == 2); // degrees 1 and 3 disagree, degree 2 agrees
    CHECK(r2.counterexamples[1].degree == 3);
    CHECK(r2.counterexamples[1].details.at("computed") == "24");
    CHECK(r2.counterexamples[1].details.at("paper") == "16");

    auto order1 = x_order();
    auto r3 = run_claim(order1, conv, Claim::thm2_independence, 3);
    CHECK(r3.status == ClaimStatus::refuted);
    bool found = false;
    for (const Counterexample& x : r3.counterexamples)
        if (x.degree == 3) {
            found = true;
            CHECK(x.details.at("set_size") == "4");
            CHECK(x.details.at("rank") == "1");
            CHECK(x.details.at("zero_elements") == "((x,x)+,x)-, ((x,x)-,x)-");
        }
    CHECK(found);
}

TEST_CASE("claim statuses at q=2, degree 3 under the defaults") {
    Conventions conv;
    auto order = xy_order();
    auto expect = [&](Claim c, ClaimStatus s) {
        auto r = run_claim(order, conv, c, 3);
        CHECK(claim_name(r.claim) == claim_name(c));
        CHECK(r.status == s);
    };
    expect(Claim::dialgebra_axioms, ClaimStatus::verified);
    expect(Claim::leibniz_identity, ClaimStatus::verified);
    expect(Claim::def1_preservation, ClaimStatus::verified);
    expect(Claim::prop1_confluence, ClaimStatus::verified);
    expect(Claim::prop1_letters_reachability, ClaimStatus::refuted);
    expect(Claim::prop2_existence, ClaimStatus::verified);
    expect(Claim::prop2_uniqueness, ClaimStatus::refuted);
    expect(Claim::thm1_spanning, ClaimStatus::verified);
    expect(Claim::thm1_independence, ClaimStatus::refuted);
    expect(Claim::thm2_spanning, ClaimStatus::verified);
    expect(Claim::thm2_independence, ClaimStatus::refuted);
    expect(Claim::dim_formula_paper, ClaimStatus::refuted);
}

TEST_CASE("claim reports are deterministic") {
    Conventions conv;
    auto order = xy_order();
    std::vector<Claim> claims(kAllClaims.begin(), kAllClaims.end());
    auto a = run_claims(order, conv, claims, 3);
    auto b = run_claims(order, conv, claims, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].claim == b[i].claim);
        CHECK(a[i].status == b[i].status);
        CHECK(a[i].instances_checked == b[i].instances_checked);
        CHECK(a[i].counterexamples == b[i].counterexamples);
        a[i].elapsed_ms = b[i].elapsed_ms = 0;
    }
    CHECK(render_report(a) == render_report(b));
}

TEST_CASE("write_report on the worked examples") {
    CHECK(render_report({}).find("\"claims\": []") != std::string::npos);

    Conventions conv;
    auto order = xy_order();
    auto verified = run_claim(order, conv, Claim::dialgebra_axioms, 2);
    verified.elapsed_ms = 0;
    std::string doc = render_report({verified});
    CHECK(doc.find("\"status\": \"verified\"") != std::string::npos);
    CHECK(doc.find("\"id\": \"dialgebra_axioms\"") != std::string::npos);

    auto refuted = run_claim(order, conv, Claim::dim_formula_paper, 3);
    refuted.elapsed_ms = 0;
    CHECK(render_report({refuted}) == render_report({refuted}));
    // sorted by id regardless of input order
    std::string both = render_report({refuted, verified});
    CHECK(both.find("dialgebra_axioms") < both.find("dim_formula_paper"));
}

TEST_CASE("run_claims orders reports canonically") {
    Conventions conv;
    auto order = x_order();
    auto reports =
        run_claims(order, conv, {Claim::thm2_independence, Claim::dialgebra_axioms}, 2);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].claim == Claim::dialgebra_axioms);
    CHECK(reports[1].claim == Claim::thm2_independence);
}

TEST_CASE("claims outside the desk-scale envelope report an error status") {
    Conventions conv;
    auto report = run_claim(xy_order(), conv, Claim::dialgebra_axioms, 9);
    CHECK(report.status == ClaimStatus::error);
    REQUIRE(report.counterexamples.size() == 1);
    CHECK(report.counterexamples[0].details.at("error").find("envelope") != std::string::npos);
}

TEST_CASE("claim names round-trip") {
    for (Claim c : kAllClaims) {
        auto back = claim_from_name(claim_name(c));
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK_FALSE(claim_from_name("bogus").has_value());
}

TEST_CASE("the convention sweep emits one row per combination per claim") {
    auto order = x_order();
    auto rows = run_convention_sweep(order, 2);
    CHECK(rows.size() == 16 * kAllClaims.size());
    // deterministic rendering
    CHECK(render_sweep(rows, order, 2) == render_sweep(run_convention_sweep(order, 2), order, 2));
    // every combination appears exactly 12 times
    std::map<std::string, int> combos;
    for (const SweepRow& r : rows) combos[conventions_to_text(r.conventions)]++;
    CHECK(combos.size() == 16);
    for (const auto& [k, v] : combos) CHECK(v == 12);
}

TEST_CASE("mono helper sanity") {
    CHECK(mono({0, 1}, 1).degree() == 2);
}
