#include "leibniz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace leibniz {

namespace {

// Exact Gaussian elimination over the rationals. Pivot rows are kept with
// leading (smallest) monomial normalized to coefficient 1.
class Eliminator {
  public:
    // Reduces p against the pivots; true iff the residue is nonzero, in
    // which case it becomes a new pivot.
    bool insert(DiPoly p) {
        reduce(p);
        if (p.is_zero()) return false;
        const auto& [lead, c] = *p.terms().begin();
        p *= Rational(1) / c;
        pivots_.emplace(lead, std::move(p));
        return true;
    }

    bool reduces_to_zero(DiPoly p) const {
        reduce(p);
        return p.is_zero();
    }

    long long size() const { return static_cast<long long>(pivots_.size()); }

  private:
    void reduce(DiPoly& p) const {
        while (!p.is_zero()) {
            const auto& [lead, c] = *p.terms().begin();
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) return;
            p -= c * it->second;
        }
    }

    std::map<Monomial, DiPoly> pivots_;
};

} // namespace

long long rank(const std::vector<DiPoly>& polys) {
    Eliminator e;
    long long r = 0;
    for (const DiPoly& p : polys)
        if (e.insert(p)) ++r;
    return r;
}

bool in_span(const DiPoly& p, const std::vector<DiPoly>& basis) {
    Eliminator e;
    for (const DiPoly& b : basis) e.insert(b);
    return e.reduces_to_zero(p);
}

std::vector<DiPoly> leibniz_component_basis(const HallOrderConfig& order, int degree,
                                            const DeskBounds& bounds) {
    if (degree < 1) throw Error("degree must be >= 1");
    if (order.size() > bounds.max_alphabet || degree > bounds.max_degree)
        throw BudgetExceeded("leibniz_component_basis bounds exceeded (alphabet " +
                             std::to_string(order.size()) + ", degree " + std::to_string(degree) +
                             " vs limits " + std::to_string(bounds.max_alphabet) + ", " +
                             std::to_string(bounds.max_degree) + ")");
    std::vector<std::vector<DiPoly>> levels(degree + 1);
    for (int i = 0; i < order.size(); ++i)
        levels[1].push_back(DiPoly::generator(Generator{i}));
    for (int k = 2; k <= degree; ++k) {
        Eliminator e;
        for (int a = 1; a < k; ++a)
            for (const DiPoly& u : levels[a])
                for (const DiPoly& v : levels[k - a]) {
                    DiPoly b = bracket(u, v);
                    if (e.insert(b)) levels[k].push_back(std::move(b));
                }
    }
    return levels[degree];
}

std::string claim_name(Claim c) {
    switch (c) {
    case Claim::dialgebra_axioms: return "dialgebra_axioms";
    case Claim::leibniz_identity: return "leibniz_identity";
    case Claim::def1_preservation: return "def1_preservation";
    case Claim::prop1_confluence: return "prop1_confluence";
    case Claim::prop1_letters_reachability: return "prop1_letters_reachability";
    case Claim::prop2_existence: return "prop2_existence";
    case Claim::prop2_uniqueness: return "prop2_uniqueness";
    case Claim::thm1_spanning: return "thm1_spanning";
    case Claim::thm1_independence: return "thm1_independence";
    case Claim::thm2_spanning: return "thm2_spanning";
    case Claim::thm2_independence: return "thm2_independence";
    case Claim::dim_formula_paper: return "dim_formula_paper";
    }
    throw Error("unreachable claim value");
}

std::optional<Claim> claim_from_name(const std::string& name) {
    for (Claim c : kAllClaims)
        if (claim_name(c) == name) return c;
    return std::nullopt;
}

std::string status_name(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::partial: return "partial";
    case ClaimStatus::error: return "error";
    }
    throw Error("unreachable status value");
}

namespace {

struct ClaimData {
    long long instances = 0;
    std::vector<Counterexample> cex;
};

constexpr long long kClaimBracketBudget = 50'000;
constexpr long long kTerminalSetBound = 200'000;

std::vector<std::vector<Monomial>> monomials_by_degree(int q, int max_degree) {
    std::vector<std::vector<Monomial>> out(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) out[d] = component_dimension(q, d).monomials;
    return out;
}

void check_dialgebra_axioms(const HallOrderConfig& order, int max_degree, ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    struct Law {
        const char* name;
        ProductOp outer_l, inner_l, outer_r, inner_r;
    };
    // (a inner_l b) outer_l c  ==  a outer_r (b inner_r c)
    const Law laws[5] = {
        {"(a-|b)-|c = a-|(b-|c)", ProductOp::left, ProductOp::left, ProductOp::left,
         ProductOp::left},
        {"(a|-b)|-c = a|-(b|-c)", ProductOp::right, ProductOp::right, ProductOp::right,
         ProductOp::right},
        {"(a-|b)-|c = a-|(b|-c)", ProductOp::left, ProductOp::left, ProductOp::left,
         ProductOp::right},
        {"(a|-b)-|c = a|-(b-|c)", ProductOp::left, ProductOp::right, ProductOp::right,
         ProductOp::left},
        {"(a-|b)|-c = a|-(b|-c)", ProductOp::right, ProductOp::left, ProductOp::right,
         ProductOp::right},
    };
    for (int da = 1; da + 2 <= max_degree; ++da)
        for (int db = 1; da + db + 1 <= max_degree; ++db)
            for (int dc = 1; da + db + dc <= max_degree; ++dc)
                for (const Monomial& a : mons[da])
                    for (const Monomial& b : mons[db])
                        for (const Monomial& c : mons[dc])
                            for (const Law& law : laws) {
                                ++data.instances;
                                Monomial lhs =
                                    mono_product(law.outer_l, mono_product(law.inner_l, a, b), c);
                                Monomial rhs =
                                    mono_product(law.outer_r, a, mono_product(law.inner_r, b, c));
                                if (lhs == rhs) continue;
                                Counterexample x;
                                x.degree = da + db + dc;
                                x.instance = "a = " + monomial_text(order, a) +
                                             ", b = " + monomial_text(order, b) +
                                             ", c = " + monomial_text(order, c);
                                x.details["law"] = law.name;
                                x.details["lhs"] = monomial_text(order, lhs);
                                x.details["rhs"] = monomial_text(order, rhs);
                                data.cex.push_back(std::move(x));
                            }
}

void check_leibniz_identity(const HallOrderConfig& order, int max_degree, ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    for (int da = 1; da + 2 <= max_degree; ++da)
        for (int db = 1; da + db + 1 <= max_degree; ++db)
            for (int dc = 1; da + db + dc <= max_degree; ++dc)
                for (const Monomial& ma : mons[da])
                    for (const Monomial& mb : mons[db])
                        for (const Monomial& mc : mons[dc]) {
                            ++data.instances;
                            DiPoly a = DiPoly::monomial(ma);
                            DiPoly b = DiPoly::monomial(mb);
                            DiPoly c = DiPoly::monomial(mc);
                            DiPoly lhs = bracket(bracket(a, b), c);
                            DiPoly rhs = bracket(bracket(a, c), b) + bracket(a, bracket(b, c));
                            if (lhs == rhs) continue;
                            Counterexample x;
                            x.degree = da + db + dc;
                            x.instance = "a = " + monomial_text(order, ma) +
                                         ", b = " + monomial_text(order, mb) +
                                         ", c = " + monomial_text(order, mc);
                            x.details["lhs"] = poly_text(order, lhs);
                            x.details["rhs"] = poly_text(order, rhs);
                            data.cex.push_back(std::move(x));
                        }
}

// Breadth-first closure of Definition-1 rewriting from a letter sequence.
// Every rewrite merges a pair, so the closure is finite. Edges that raise a
// ConventionViolation are handed to on_violation and not explored.
template <typename OnEdge, typename OnViolation>
void def1_closure(const HallOrderConfig& order, const Conventions& conv,
                  const StandardSequence& root, OnEdge&& on_edge, OnViolation&& on_violation) {
    std::set<StandardSequence> visited{root};
    std::deque<StandardSequence> queue{root};
    while (!queue.empty()) {
        StandardSequence s = queue.front();
        queue.pop_front();
        for (int i : legal_rises(order, conv, s)) {
            try {
                StandardSequence r = rewrite_at(order, conv, s, i);
                on_edge(s, i, r);
                if (visited.insert(r).second) queue.push_back(r);
            } catch (const ConventionViolation& e) {
                on_violation(s, i, e);
            }
        }
    }
}

void check_def1_preservation(const HallOrderConfig& order, const Conventions& conv,
                             int max_degree, ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    for (int d = 1; d <= max_degree; ++d)
        for (const Monomial& m : mons[d]) {
            def1_closure(
                order, conv, letters_sequence(m),
                [&](const StandardSequence& s, int i, const StandardSequence& r) {
                    ++data.instances;
                    if (eval_seq_monomial(r) == eval_seq_monomial(s)) return;
                    Counterexample x;
                    x.degree = d;
                    x.instance = sequence_text(order, s) + " rewritten at " + std::to_string(i);
                    x.details["before"] = monomial_text(order, eval_seq_monomial(s));
                    x.details["after"] = monomial_text(order, eval_seq_monomial(r));
                    data.cex.push_back(std::move(x));
                },
                [&](const StandardSequence& s, int i, const ConventionViolation& e) {
                    ++data.instances;
                    Counterexample x;
                    x.degree = d;
                    x.instance = sequence_text(order, s) + " rewritten at " + std::to_string(i);
                    x.details["error"] = e.what();
                    data.cex.push_back(std::move(x));
                });
        }
}

void check_prop1_confluence(const HallOrderConfig& order, const Conventions& conv, int max_degree,
                            ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    for (int d = 1; d <= max_degree; ++d)
        for (const Monomial& m : mons[d]) {
            ++data.instances;
            StandardSequence root = letters_sequence(m);
            try {
                auto terminals = terminal_set(order, conv, root, kTerminalSetBound);
                if (terminals.size() == 1) continue;
                Counterexample x;
                x.degree = d;
                x.instance = sequence_text(order, root);
                x.details["terminal_count"] = std::to_string(terminals.size());
                std::string list;
                for (const StandardSequence& t : terminals) {
                    if (!list.empty()) list += "; ";
                    list += sequence_text(order, t);
                }
                x.details["terminals"] = list;
                data.cex.push_back(std::move(x));
            } catch (const ConventionViolation& e) {
                Counterexample x;
                x.degree = d;
                x.instance = sequence_text(order, root);
                x.details["error"] = e.what();
                data.cex.push_back(std::move(x));
            }
        }
}

void check_prop1_letters_reachability(const HallOrderConfig& order, const Conventions& conv,
                                      int max_degree, ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    for (int d = 1; d <= max_degree; ++d) {
        std::set<StandardSequence> reachable;
        for (const Monomial& m : mons[d]) {
            StandardSequence root = letters_sequence(m);
            reachable.insert(root);
            def1_closure(
                order, conv, root,
                [&](const StandardSequence&, int, const StandardSequence& r) {
                    reachable.insert(r);
                },
                [&](const StandardSequence&, int, const ConventionViolation&) {});
        }
        for (const StandardSequence& s : enumerate_standard_sequences(order, conv, d)) {
            ++data.instances;
            if (reachable.count(s)) continue;
            Counterexample x;
            x.degree = d;
            x.instance = sequence_text(order, s);
            x.details["reason"] = "not reachable from any letter sequence";
            data.cex.push_back(std::move(x));
        }
    }
}

void check_prop2_existence(const HallOrderConfig& order, const Conventions& conv, int max_degree,
                           ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    for (int d = 1; d <= max_degree; ++d)
        for (const Monomial& m : mons[d]) {
            ++data.instances;
            try {
                StandardSequence s = factorize_monomial(order, conv, m);
                bool ok = is_standard(order, conv, s) && legal_rises(order, conv, s).empty() &&
                          eval_seq_monomial(s) == m;
                if (ok) continue;
                Counterexample x;
                x.degree = d;
                x.instance = monomial_text(order, m);
                x.details["result"] = sequence_text(order, s);
                data.cex.push_back(std::move(x));
            } catch (const ConventionViolation& e) {
                Counterexample x;
                x.degree = d;
                x.instance = monomial_text(order, m);
                x.details["error"] = e.what();
                data.cex.push_back(std::move(x));
            }
        }
}

void check_prop2_uniqueness(const HallOrderConfig& order, const Conventions& conv, int max_degree,
                            ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    for (int d = 1; d <= max_degree; ++d)
        for (const Monomial& m : mons[d]) {
            ++data.instances;
            auto facs = all_hall_factorizations(order, conv, m, max_degree);
            if (facs.size() == 1) continue;
            Counterexample x;
            x.degree = d;
            x.instance = monomial_text(order, m);
            x.details["count"] = std::to_string(facs.size());
            std::string list;
            for (const StandardSequence& s : facs) {
                if (!list.empty()) list += "; ";
                list += sequence_text(order, s);
            }
            x.details["factorizations"] = list;
            data.cex.push_back(std::move(x));
        }
}

// The theorem's chain family at one degree: Hall-tree tuples ordered per
// b_basis_order (the proof's decreasing form by default), any middle.
void chains_rec(const std::vector<std::vector<SignedTree>>& halls, bool decreasing, int remaining,
                std::vector<SignedTree>& acc, std::vector<StandardSequence>& out) {
    if (remaining == 0) {
        for (int j = 1; j <= static_cast<int>(acc.size()); ++j) out.emplace_back(acc, j);
        return;
    }
    for (int d = 1; d <= remaining; ++d)
        for (const SignedTree& t : halls[d]) {
            if (!acc.empty()) {
                Ordering c = hall_compare(acc.back(), t);
                if (decreasing ? c == Ordering::less : c == Ordering::greater) continue;
            }
            acc.push_back(t);
            chains_rec(halls, decreasing, remaining - d, acc, out);
            acc.pop_back();
        }
}

std::vector<StandardSequence> b_family(const HallOrderConfig& order, const Conventions& conv,
                                       int degree) {
    std::vector<std::vector<SignedTree>> halls(degree + 1);
    for (int d = 1; d <= degree; ++d) halls[d] = enumerate_hall(order, conv, d);
    std::vector<StandardSequence> out;
    std::vector<SignedTree> acc;
    chains_rec(halls, conv.b_basis_order == BBasisOrder::decreasing, degree, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

void check_thm1_spanning(const HallOrderConfig& order, const Conventions& conv, int max_degree,
                         ClaimData& data) {
    auto mons = monomials_by_degree(order.size(), max_degree);
    for (int d = 1; d <= max_degree; ++d) {
        Eliminator elim;
        for (const StandardSequence& s : b_family(order, conv, d))
            elim.insert(eval_seq_leibniz(s));
        for (const Monomial& m : mons[d]) {
            ++data.instances;
            DiPoly p = DiPoly::monomial(m);
            bool spanned = elim.reduces_to_zero(p);
            std::string constructive_error;
            try {
                to_b_basis(order, conv, p);
            } catch (const Error& e) {
                constructive_error = e.what();
            }
            if (spanned && constructive_error.empty()) continue;
            Counterexample x;
            x.degree = d;
            x.instance = monomial_text(order, m);
            x.details["in_span"] = spanned ? "true" : "false";
            if (!constructive_error.empty()) x.details["error"] = constructive_error;
            data.cex.push_back(std::move(x));
        }
    }
}

std::string zero_elements_of(const std::vector<std::pair<std::string, DiPoly>>& labeled) {
    std::string out;
    for (const auto& [label, p] : labeled) {
        if (!p.is_zero()) continue;
        if (!out.empty()) out += ", ";
        out += label;
    }
    return out;
}

void check_thm1_independence(const HallOrderConfig& order, const Conventions& conv,
                             int max_degree, ClaimData& data) {
    for (int d = 1; d <= max_degree; ++d) {
        auto fam = b_family(order, conv, d);
        std::vector<DiPoly> evals;
        std::vector<std::pair<std::string, DiPoly>> labeled;
        for (const StandardSequence& s : fam) {
            evals.push_back(eval_seq_leibniz(s));
            labeled.emplace_back(sequence_text(order, s), evals.back());
        }
        data.instances += static_cast<long long>(fam.size());
        long long r = rank(evals);
        if (r == static_cast<long long>(fam.size())) continue;
        Counterexample x;
        x.degree = d;
        x.instance = "B family at degree " + std::to_string(d);
        x.details["set_size"] = std::to_string(fam.size());
        x.details["rank"] = std::to_string(r);
        x.details["zero_elements"] = zero_elements_of(labeled);
        data.cex.push_back(std::move(x));
    }
}

void check_thm2_spanning(const HallOrderConfig& order, const Conventions& conv, int max_degree,
                         ClaimData& data) {
    DeskBounds bounds{order.size(), std::max(max_degree, DeskBounds{}.max_degree)};
    std::vector<std::vector<SignedTree>> halls(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) halls[d] = enumerate_hall(order, conv, d);
    for (int d = 1; d <= max_degree; ++d) {
        Eliminator elim;
        for (const SignedTree& t : halls[d]) elim.insert(eval_tree_leibniz(t));
        for (const DiPoly& e : leibniz_component_basis(order, d, bounds)) {
            ++data.instances;
            if (elim.reduces_to_zero(e)) continue;
            Counterexample x;
            x.degree = d;
            x.instance = poly_text(order, e);
            x.details["reason"] = "Leibniz component element outside the span of the degree-" +
                                  std::to_string(d) + " Hall evaluations";
            data.cex.push_back(std::move(x));
        }
        // constructive closure: every bracket of Hall trees expands
        for (int a = 1; a < d; ++a)
            for (const SignedTree& t1 : halls[a])
                for (const SignedTree& t2 : halls[d - a]) {
                    ++data.instances;
                    try {
                        bracket_hall(order, conv, t1, t2, nullptr, kClaimBracketBudget);
                    } catch (const Error& e) {
                        Counterexample x;
                        x.degree = d;
                        x.instance = "[" + tree_text(order, t1) + ", " + tree_text(order, t2) + "]";
                        x.details["error"] = e.what();
                        data.cex.push_back(std::move(x));
                    }
                }
    }
}

void check_thm2_independence(const HallOrderConfig& order, const Conventions& conv,
                             int max_degree, ClaimData& data) {
    for (int d = 1; d <= max_degree; ++d) {
        auto hall = enumerate_hall(order, conv, d);
        std::vector<DiPoly> evals;
        std::vector<std::pair<std::string, DiPoly>> labeled;
        for (const SignedTree& t : hall) {
            evals.push_back(eval_tree_leibniz(t));
            labeled.emplace_back(tree_text(order, t), evals.back());
        }
        data.instances += static_cast<long long>(hall.size());
        long long r = rank(evals);
        if (r == static_cast<long long>(hall.size())) continue;
        Counterexample x;
        x.degree = d;
        x.instance = "Hall evaluations at degree " + std::to_string(d);
        x.details["set_size"] = std::to_string(hall.size());
        x.details["rank"] = std::to_string(r);
        x.details["zero_elements"] = zero_elements_of(labeled);
        data.cex.push_back(std::move(x));
    }
}

void check_dim_formula_paper(const HallOrderConfig& order, int max_degree, ClaimData& data) {
    for (int d = 1; d <= max_degree; ++d) {
        ++data.instances;
        long long computed = component_dimension(order.size(), d).count;
        long long paper = 1;
        for (int i = 0; i <= d; ++i) paper *= order.size();
        if (computed == paper) continue;
        Counterexample x;
        x.degree = d;
        x.instance = "dimension of the degree-" + std::to_string(d) + " component";
        x.details["computed"] = std::to_string(computed);
        x.details["paper"] = std::to_string(paper);
        data.cex.push_back(std::move(x));
    }
}

} // namespace

ClaimReport run_claim(const HallOrderConfig& order, const Conventions& conv, Claim claim,
                      int max_degree) {
    if (max_degree < 1) throw Error("max_degree must be >= 1");
    ClaimReport report;
    report.claim = claim;
    report.alphabet = order.alphabet;
    report.max_degree = max_degree;
    report.conventions = conv;
    ClaimData data;
    auto start = std::chrono::steady_clock::now();
    try {
        if (order.size() > 4 || max_degree > 8)
            throw BudgetExceeded("claim envelope exceeded (alphabet " +
                                 std::to_string(order.size()) + ", max degree " +
                                 std::to_string(max_degree) +
                                 "); the harness accepts alphabets up to 4 and degrees up to 8");
        switch (claim) {
        case Claim::dialgebra_axioms: check_dialgebra_axioms(order, max_degree, data); break;
        case Claim::leibniz_identity: check_leibniz_identity(order, max_degree, data); break;
        case Claim::def1_preservation:
            check_def1_preservation(order, conv, max_degree, data);
            break;
        case Claim::prop1_confluence: check_prop1_confluence(order, conv, max_degree, data); break;
        case Claim::prop1_letters_reachability:
            check_prop1_letters_reachability(order, conv, max_degree, data);
            break;
        case Claim::prop2_existence: check_prop2_existence(order, conv, max_degree, data); break;
        case Claim::prop2_uniqueness: check_prop2_uniqueness(order, conv, max_degree, data); break;
        case Claim::thm1_spanning: check_thm1_spanning(order, conv, max_degree, data); break;
        case Claim::thm1_independence:
            check_thm1_independence(order, conv, max_degree, data);
            break;
        case Claim::thm2_spanning: check_thm2_spanning(order, conv, max_degree, data); break;
        case Claim::thm2_independence:
            check_thm2_independence(order, conv, max_degree, data);
            break;
        case Claim::dim_formula_paper: check_dim_formula_paper(order, max_degree, data); break;
        }
        report.status = data.cex.empty() ? ClaimStatus::verified : ClaimStatus::refuted;
    } catch (const BudgetExceeded& e) {
        report.status = ClaimStatus::error;
        Counterexample x;
        x.instance = "budget exhausted";
        x.details["error"] = e.what();
        data.cex.push_back(std::move(x));
    } catch (const Error& e) {
        report.status = ClaimStatus::error;
        Counterexample x;
        x.instance = "harness error";
        x.details["error"] = e.what();
        data.cex.push_back(std::move(x));
    }
    auto stop = std::chrono::steady_clock::now();
    report.instances_checked = data.instances;
    std::sort(data.cex.begin(), data.cex.end());
    report.counterexamples = std::move(data.cex);
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return report;
}

std::vector<ClaimReport> run_claims(const HallOrderConfig& order, const Conventions& conv,
                                    const std::vector<Claim>& claims, int max_degree) {
    std::vector<ClaimReport> reports;
    reports.reserve(claims.size());
    for (Claim c : claims) reports.push_back(run_claim(order, conv, c, max_degree));
    std::sort(reports.begin(), reports.end(), [](const ClaimReport& a, const ClaimReport& b) {
        if (a.claim != b.claim) return claim_name(a.claim) < claim_name(b.claim);
        return a.max_degree < b.max_degree;
    });
    return reports;
}

namespace {

nlohmann::ordered_json conventions_json(const Conventions& c) {
    nlohmann::ordered_json j;
    j["rise_strictness"] = to_string(c.rise_strictness);
    j["hall_pair_strictness"] = to_string(c.hall_pair_strictness);
    j["def1_tie_at_i_equals_j"] = to_string(c.def1_tie_at_i_equals_j);
    j["middle_tracking"] = to_string(c.middle_tracking);
    j["b_basis_order"] = to_string(c.b_basis_order);
    j["case2_orientation"] = to_string(c.case2_orientation);
    return j;
}

nlohmann::ordered_json counterexample_json(const Counterexample& x) {
    nlohmann::ordered_json j;
    j["degree"] = x.degree;
    j["instance"] = x.instance;
    nlohmann::ordered_json details;
    for (const auto& [k, v] : x.details) details[k] = v;
    j["details"] = std::move(details);
    return j;
}

} // namespace

std::string render_report(const std::vector<ClaimReport>& reports) {
    for (std::size_t i = 1; i < reports.size(); ++i)
        if (!(reports[i].conventions == reports[0].conventions))
            throw Error("reports under differing conventions cannot share one document");
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["conventions"] =
        conventions_json(reports.empty() ? Conventions{} : reports[0].conventions);
    std::vector<ClaimReport> sorted = reports;
    std::sort(sorted.begin(), sorted.end(), [](const ClaimReport& a, const ClaimReport& b) {
        if (a.claim != b.claim) return claim_name(a.claim) < claim_name(b.claim);
        return a.max_degree < b.max_degree;
    });
    nlohmann::ordered_json claims = nlohmann::ordered_json::array();
    for (const ClaimReport& r : sorted) {
        nlohmann::ordered_json entry;
        entry["id"] = claim_name(r.claim);
        nlohmann::ordered_json params;
        params["alphabet"] = r.alphabet;
        params["max_degree"] = r.max_degree;
        entry["params"] = std::move(params);
        entry["status"] = status_name(r.status);
        entry["instances_checked"] = r.instances_checked;
        nlohmann::ordered_json cex = nlohmann::ordered_json::array();
        std::vector<Counterexample> xs = r.counterexamples;
        std::sort(xs.begin(), xs.end());
        for (const Counterexample& x : xs) cex.push_back(counterexample_json(x));
        entry["counterexamples"] = std::move(cex);
        entry["elapsed_ms"] = r.elapsed_ms;
        claims.push_back(std::move(entry));
    }
    doc["claims"] = std::move(claims);
    return doc.dump(2) + "\n";
}

void write_report(const std::vector<ClaimReport>& reports, const std::string& path) {
    std::string text = render_report(reports);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open report destination '" + path + "'");
    out << text;
    if (!out) throw Error("failed writing report to '" + path + "'");
}

std::vector<SweepRow> run_convention_sweep(const HallOrderConfig& order, int max_degree) {
    std::vector<SweepRow> rows;
    for (Strictness rise : {Strictness::strict, Strictness::nonstrict})
        for (Strictness pair : {Strictness::strict, Strictness::nonstrict})
            for (TieRule tie : {TieRule::plus_rule, TieRule::minus_rule})
                for (MiddleTracking mt : {MiddleTracking::element, MiddleTracking::paper_literal}) {
                    Conventions conv;
                    conv.rise_strictness = rise;
                    conv.hall_pair_strictness = pair;
                    conv.def1_tie_at_i_equals_j = tie;
                    conv.middle_tracking = mt;
                    for (Claim c : kAllClaims) {
                        ClaimReport rep = run_claim(order, conv, c, max_degree);
                        SweepRow row;
                        row.conventions = conv;
                        row.claim = c;
                        row.status = rep.status;
                        row.instances_checked = rep.instances_checked;
                        row.counterexample_count =
                            static_cast<long long>(rep.counterexamples.size());
                        rows.push_back(row);
                    }
                }
    return rows;
}

std::string render_sweep(const std::vector<SweepRow>& rows, const HallOrderConfig& order,
                         int max_degree) {
    nlohmann::ordered_json doc;
    doc["tool_version"] = kToolVersion;
    doc["alphabet"] = order.alphabet;
    doc["max_degree"] = max_degree;
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const SweepRow& r : rows) {
        nlohmann::ordered_json j;
        j["conventions"] = conventions_json(r.conventions);
        j["claim"] = claim_name(r.claim);
        j["status"] = status_name(r.status);
        j["instances_checked"] = r.instances_checked;
        j["counterexamples"] = r.counterexample_count;
        out.push_back(std::move(j));
    }
    doc["rows"] = std::move(out);
    return doc.dump(2) + "\n";
}

} // namespace leibniz
