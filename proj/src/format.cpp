#include "leibniz/format.hpp"

#include <sstream>

#include <json.hpp>

namespace leibniz {

namespace {

const char* left_join(const FormatOptions& opts) {
    return opts.unicode ? " ⊣ " : " -| ";
}
const char* right_join(const FormatOptions& opts) {
    return opts.unicode ? " ⊢ " : " |- ";
}
const char* minus_sep(const FormatOptions& opts) {
    return opts.unicode ? " − " : " - ";
}

} // namespace

std::string format_monomial(const HallOrderConfig& order, const Monomial& m,
                            const FormatOptions& opts) {
    std::ostringstream os;
    for (int k = 1; k <= m.degree(); ++k) {
        os << order.name(m.letters[k - 1]);
        if (k < m.degree()) os << (k < m.middle ? right_join(opts) : left_join(opts));
    }
    return os.str();
}

std::string format_poly(const HallOrderConfig& order, const DiPoly& p, const FormatOptions& opts) {
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
            os << (a < 0 ? minus_sep(opts) : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << rational_to_string(a) << "*";
        os << format_monomial(order, m, opts);
    }
    return os.str();
}

std::string format_tree(const HallOrderConfig& order, const SignedTree& t) {
    return tree_text(order, t);
}

std::string format_sequence(const HallOrderConfig& order, const StandardSequence& s) {
    return sequence_text(order, s);
}

std::string format_hall_combination(const HallOrderConfig& order, const HallCombination& c) {
    return hall_combination_text(order, c);
}

std::string format_b_combination(const HallOrderConfig& order, const BCombination& c) {
    return b_combination_text(order, c);
}

namespace {

nlohmann::ordered_json monomial_json(const HallOrderConfig& order, const Monomial& m) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json letters = nlohmann::ordered_json::array();
    for (Generator g : m.letters) letters.push_back(order.name(g));
    j["letters"] = std::move(letters);
    j["middle"] = m.middle;
    j["text"] = format_monomial(order, m);
    return j;
}

} // namespace

std::string structured_monomial(const HallOrderConfig& order, const Monomial& m) {
    return monomial_json(order, m).dump(2) + "\n";
}

std::string structured_poly(const HallOrderConfig& order, const DiPoly& p) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["coeff"] = rational_to_string(c);
        term["monomial"] = monomial_json(order, m);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    j["text"] = format_poly(order, p);
    return j.dump(2) + "\n";
}

std::string structured_tree(const HallOrderConfig& order, const SignedTree& t) {
    nlohmann::ordered_json j;
    j["tree"] = tree_text(order, t);
    j["degree"] = t.length();
    return j.dump(2) + "\n";
}

std::string structured_sequence(const HallOrderConfig& order, const StandardSequence& s) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json trees = nlohmann::ordered_json::array();
    for (const SignedTree& t : s.trees) trees.push_back(tree_text(order, t));
    j["trees"] = std::move(trees);
    j["middle"] = s.middle;
    j["text"] = sequence_text(order, s);
    return j.dump(2) + "\n";
}

} // namespace leibniz
