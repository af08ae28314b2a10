#ifndef PWAVG_EXPR_AST_HPP
#define PWAVG_EXPR_AST_HPP

#include <memory>
#include <string>
#include <vector>

#include "pwavg/rational.hpp"

namespace pwavg::ast {

enum class Kind { Num, Sym, Add, Sub, Mul, Div, Neg, Pow };

struct Node {
    Kind kind;
    Rat num;          // Num
    std::string name; // Sym
    int exp = 0;      // Pow
    std::unique_ptr<Node> a, b;
};

using NodePtr = std::unique_ptr<Node>;

/// Parses +,-,*,/,^,(), integer/decimal/rational literals and symbol
/// names into an expression tree. Throws ParseError on malformed input.
NodePtr parse_expression(const std::string& text);

} // namespace pwavg::ast

#endif
