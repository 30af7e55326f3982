#ifndef LEIBNIZ_FORMAT_HPP
#define LEIBNIZ_FORMAT_HPP

#include <string>

#include "leibniz/basis.hpp"
#include "leibniz/dialgebra.hpp"
#include "leibniz/sequences.hpp"

namespace leibniz {

struct FormatOptions {
    bool unicode = false; // emit the symbols instead of "-|" / "|-" in output
};

// Monomials print in normal form with the middle marked by the switch from
// "|-" joins to "-|" joins; polynomials print as signed scalar*monomial
// terms in canonical order.
std::string format_monomial(const HallOrderConfig& order, const Monomial& m,
                            const FormatOptions& opts = {});
std::string format_poly(const HallOrderConfig& order, const DiPoly& p,
                        const FormatOptions& opts = {});
std::string format_tree(const HallOrderConfig& order, const SignedTree& t);
std::string format_sequence(const HallOrderConfig& order, const StandardSequence& s);
std::string format_hall_combination(const HallOrderConfig& order, const HallCombination& c);
std::string format_b_combination(const HallOrderConfig& order, const BCombination& c);

// Structured (JSON) fragments in the report schema style; returned as
// serialized text.
std::string structured_monomial(const HallOrderConfig& order, const Monomial& m);
std::string structured_poly(const HallOrderConfig& order, const DiPoly& p);
std::string structured_tree(const HallOrderConfig& order, const SignedTree& t);
std::string structured_sequence(const HallOrderConfig& order, const StandardSequence& s);

} // namespace leibniz

#endif
