#ifndef PWAVG_ERRORS_HPP
#define PWAVG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pwavg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error("term budget exceeded: " + msg) {}
};

struct MissingAssignmentError : Error {
    explicit MissingAssignmentError(const std::string& msg)
        : Error("missing assignment: " + msg) {}
};

struct SingularSolveError : Error {
    explicit SingularSolveError(const std::string& msg) : Error("singular solve: " + msg) {}
};

struct RankDeficientError : Error {
    explicit RankDeficientError(const std::string& msg) : Error("rank deficient: " + msg) {}
};

struct NoLinearVariableError : Error {
    explicit NoLinearVariableError(const std::string& msg)
        : Error("no linear variable: " + msg) {}
};

struct SignIndeterminateError : Error {
    explicit SignIndeterminateError(const std::string& msg)
        : Error("sign indeterminate: " + msg) {}
};

struct DegenerateParameterError : Error {
    explicit DegenerateParameterError(const std::string& msg)
        : Error("degenerate parameters: " + msg) {}
};

struct TangencyError : Error {
    explicit TangencyError(const std::string& msg) : Error("tangency: " + msg) {}
};

struct NonReturnError : Error {
    explicit NonReturnError(const std::string& msg) : Error("non-return: " + msg) {}
};

struct QuadratureError : Error {
    explicit QuadratureError(const std::string& msg) : Error("quadrature: " + msg) {}
};

struct OverBoundError : Error {
    explicit OverBoundError(const std::string& msg) : Error("over bound: " + msg) {}
};

struct TableMismatchError : Error {
    explicit TableMismatchError(const std::string& msg) : Error("table mismatch: " + msg) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

#define PWAVG_CHECK(cond, msg) \
    do { if (!(cond)) throw ::pwavg::InternalError(msg); } while (0)

} // namespace pwavg

#endif
