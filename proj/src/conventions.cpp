#include "leibniz/conventions.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz {

std::string to_string(Strictness v) {
    return v == Strictness::strict ? "strict" : "nonstrict";
}
std::string to_string(TieRule v) {
    return v == TieRule::plus_rule ? "plus_rule" : "minus_rule";
}
std::string to_string(MiddleTracking v) {
    return v == MiddleTracking::element ? "element" : "paper_literal";
}
std::string to_string(BBasisOrder v) {
    return v == BBasisOrder::decreasing ? "decreasing" : "increasing";
}
std::string to_string(Case2Orientation v) {
    return v == Case2Orientation::t1_greater ? "t1_greater" : "paper_literal";
}

std::string conventions_to_text(const Conventions& conv) {
    std::ostringstream os;
    os << "rise_strictness = " << to_string(conv.rise_strictness) << '\n'
       << "hall_pair_strictness = " << to_string(conv.hall_pair_strictness) << '\n'
       << "def1_tie_at_i_equals_j = " << to_string(conv.def1_tie_at_i_equals_j) << '\n'
       << "middle_tracking = " << to_string(conv.middle_tracking) << '\n'
       << "b_basis_order = " << to_string(conv.b_basis_order) << '\n'
       << "case2_orientation = " << to_string(conv.case2_orientation) << '\n';
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T pick(const std::string& key, const std::string& value, const std::string& a, T va,
       const std::string& b, T vb) {
    if (value == a) return va;
    if (value == b) return vb;
    throw Error("invalid value '" + value + "' for convention '" + key + "' (expected '" + a +
                "' or '" + b + "')");
}

} // namespace

Conventions conventions_from_text(const std::string& text) {
    Conventions conv;
    std::map<std::string, int> seen;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw Error("conventions line " + std::to_string(lineno) + " is not 'key = value'");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (++seen[key] > 1) throw Error("duplicate convention key '" + key + "'");
        if (key == "rise_strictness")
            conv.rise_strictness = pick(key, value, "strict", Strictness::strict, "nonstrict",
                                        Strictness::nonstrict);
        else if (key == "hall_pair_strictness")
            conv.hall_pair_strictness = pick(key, value, "strict", Strictness::strict, "nonstrict",
                                             Strictness::nonstrict);
        else if (key == "def1_tie_at_i_equals_j")
            conv.def1_tie_at_i_equals_j =
                pick(key, value, "plus_rule", TieRule::plus_rule, "minus_rule", TieRule::minus_rule);
        else if (key == "middle_tracking")
            conv.middle_tracking = pick(key, value, "element", MiddleTracking::element,
                                        "paper_literal", MiddleTracking::paper_literal);
        else if (key == "b_basis_order")
            conv.b_basis_order = pick(key, value, "decreasing", BBasisOrder::decreasing,
                                      "increasing", BBasisOrder::increasing);
        else if (key == "case2_orientation")
            conv.case2_orientation = pick(key, value, "t1_greater", Case2Orientation::t1_greater,
                                          "paper_literal", Case2Orientation::paper_literal);
        else
            throw Error("unknown convention key '" + key + "'");
    }
    return conv;
}

Conventions conventions_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open conventions file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return conventions_from_text(buf.str());
}

} // namespace leibniz
