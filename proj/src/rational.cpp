#include "leibniz/rational.hpp"

#include <cctype>

#include "leibniz/errors.hpp"

namespace leibniz {

std::string rational_to_string(const Rational& r) {
    return r.str();
}

Rational rational_from_string(const std::string& text) {
    auto malformed = [&] { return Error("malformed rational literal '" + text + "'"); };
    if (text.empty()) throw malformed();
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    std::string num_digits, den_digits;
    bool seen_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            (seen_slash ? den_digits : num_digits) += c;
        } else if (c == '/' && !seen_slash && !num_digits.empty()) {
            seen_slash = true;
        } else {
            throw malformed();
        }
    }
    if (num_digits.empty() || (seen_slash && den_digits.empty())) throw malformed();
    boost::multiprecision::cpp_int num(num_digits);
    if (text[0] == '-') num = -num;
    if (!seen_slash) return Rational(num);
    boost::multiprecision::cpp_int den(den_digits);
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(num, den);
}

} // namespace leibniz
