#ifndef LEIBNIZ_RATIONAL_HPP
#define LEIBNIZ_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace leibniz {

// Exact rational coefficients. The backend keeps every value in canonical
// reduced form (coprime numerator/denominator, positive denominator), so
// equality is decidable and printing is unambiguous.
using Rational = boost::multiprecision::cpp_rational;

// "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with an optional leading '-'. Throws Error on
// malformed text or a zero denominator.
Rational rational_from_string(const std::string& text);

} // namespace leibniz

#endif
