#ifndef LEIBNIZ_CONVENTIONS_HPP
#define LEIBNIZ_CONVENTIONS_HPP

#include <string>

namespace leibniz {

enum class Strictness { strict, nonstrict };
enum class TieRule { plus_rule, minus_rule };
enum class MiddleTracking { element, paper_literal };
enum class BBasisOrder { decreasing, increasing };
enum class Case2Orientation { t1_greater, paper_literal };

// Every ambiguity in the source construction is resolved by one of these
// switches so that the claim harness can audit the consequences of each
// choice instead of hard-coding one.
struct Conventions {
    // Whether a rise requires t_i < t_{i+1} or only t_i <= t_{i+1}.
    Strictness rise_strictness = Strictness::strict;
    // Whether Hall membership requires t' < t'' or only t' <= t''.
    Strictness hall_pair_strictness = Strictness::nonstrict;
    // Which merge rule wins when a rewrite position coincides with the middle.
    TieRule def1_tie_at_i_equals_j = TieRule::minus_rule;
    // Whether lambda/rho middles follow the middle element or the literal
    // index arithmetic.
    MiddleTracking middle_tracking = MiddleTracking::element;
    // Orientation of the B-family chains (t1 >= ... >= tn vs t1 <= ... <= tn).
    BBasisOrder b_basis_order = BBasisOrder::decreasing;
    // Reading of the bracket-expansion case split when the arguments are not
    // already ordered.
    Case2Orientation case2_orientation = Case2Orientation::t1_greater;

    friend bool operator==(const Conventions&, const Conventions&) = default;
};

std::string to_string(Strictness v);
std::string to_string(TieRule v);
std::string to_string(MiddleTracking v);
std::string to_string(BBasisOrder v);
std::string to_string(Case2Orientation v);

// Six "key = value" lines in fixed order; the exact inverse of
// conventions_from_text on its own output.
std::string conventions_to_text(const Conventions& conv);

// Accepts any subset of the six keys (missing keys keep their defaults),
// blank lines and '#' comments. Unknown keys, duplicate keys and unknown
// values are errors.
Conventions conventions_from_text(const std::string& text);
Conventions conventions_from_file(const std::string& path);

} // namespace leibniz

#endif
