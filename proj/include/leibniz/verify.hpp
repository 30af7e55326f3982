#ifndef LEIBNIZ_VERIFY_HPP
#define LEIBNIZ_VERIFY_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/basis.hpp"

namespace leibniz {

// Rank of the coefficient matrix of the given polynomials over monomial
// coordinates, by exact fraction Gaussian elimination.
long long rank(const std::vector<DiPoly>& polys);

// True iff p lies in the rational span of basis.
bool in_span(const DiPoly& p, const std::vector<DiPoly>& basis);

struct DeskBounds {
    int max_alphabet = 2;
    int max_degree = 5;
};

// Basis of the degree-d component of the smallest Leibniz subalgebra
// containing the generators, built from below: degree 1 is the generators,
// degree d is a rank-reduced independent subset of the brackets of lower
// components. Deterministic. Throws BudgetExceeded outside the bounds.
std::vector<DiPoly> leibniz_component_basis(const HallOrderConfig& order, int degree,
                                            const DeskBounds& bounds = {});

enum class Claim {
    dialgebra_axioms,
    leibniz_identity,
    def1_preservation,
    prop1_confluence,
    prop1_letters_reachability,
    prop2_existence,
    prop2_uniqueness,
    thm1_spanning,
    thm1_independence,
    thm2_spanning,
    thm2_independence,
    dim_formula_paper,
};

inline constexpr std::array<Claim, 12> kAllClaims = {
    Claim::dialgebra_axioms,    Claim::leibniz_identity,
    Claim::def1_preservation,   Claim::prop1_confluence,
    Claim::prop1_letters_reachability, Claim::prop2_existence,
    Claim::prop2_uniqueness,    Claim::thm1_spanning,
    Claim::thm1_independence,   Claim::thm2_spanning,
    Claim::thm2_independence,   Claim::dim_formula_paper,
};

std::string claim_name(Claim c);
std::optional<Claim> claim_from_name(const std::string& name);

enum class ClaimStatus { verified, refuted, partial, error };
std::string status_name(ClaimStatus s);

struct Counterexample {
    int degree = 0;
    std::string instance; // canonical text form
    std::map<std::string, std::string> details;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
    friend bool operator<(const Counterexample& a, const Counterexample& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.details < b.details;
    }
};

struct ClaimReport {
    Claim claim = Claim::dialgebra_axioms;
    std::vector<std::string> alphabet;
    int max_degree = 0;
    Conventions conventions;
    ClaimStatus status = ClaimStatus::verified;
    long long instances_checked = 0;
    std::vector<Counterexample> counterexamples; // canonically sorted
    long long elapsed_ms = 0;
};

// Runs the exhaustive check for one claim at every degree <= max_degree.
// Statuses report what the computation finds; a refutation of the source
// statement is a successful run. Budget exhaustion yields status error with
// the data collected so far.
ClaimReport run_claim(const HallOrderConfig& order, const Conventions& conv, Claim claim,
                      int max_degree);

// All requested claims, reports in canonical order (claim id, then degree).
std::vector<ClaimReport> run_claims(const HallOrderConfig& order, const Conventions& conv,
                                    const std::vector<Claim>& claims, int max_degree);

// JSON document {tool_version, conventions, claims:[...]} with claims sorted
// by id then degree and counterexamples sorted canonically. Byte-identical
// across runs for identical inputs.
std::string render_report(const std::vector<ClaimReport>& reports);
void write_report(const std::vector<ClaimReport>& reports, const std::string& path);

struct SweepRow {
    Conventions conventions;
    Claim claim = Claim::dialgebra_axioms;
    ClaimStatus status = ClaimStatus::verified;
    long long instances_checked = 0;
    long long counterexample_count = 0;
};

// Runs every claim under all 16 combinations of the four binary conventions
// (rise strictness, Hall-pair strictness, the i = j tie rule and middle
// tracking); b_basis_order and case2_orientation stay at their defaults.
std::vector<SweepRow> run_convention_sweep(const HallOrderConfig& order, int max_degree);

std::string render_sweep(const std::vector<SweepRow>& rows, const HallOrderConfig& order,
                         int max_degree);

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace leibniz

#endif
