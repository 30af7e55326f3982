#ifndef LEIBNIZ_ERRORS_HPP
#define LEIBNIZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibniz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A convention assignment produced an inconsistent state: a rewrite result
// that is not standard, a middle index out of range, a failed expansion
// identity, or a non-Hall key. The message carries the offending instance.
struct ConventionViolation : Error {
    using Error::Error;
};

// An exploration, recursion, or enumeration exceeded its step budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
    int line;
    int column;
};

} // namespace leibniz

#endif
