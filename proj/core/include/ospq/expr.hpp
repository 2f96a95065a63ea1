#pragma once

#include "ospq/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ospq {

// Shared expression AST for all textual dialects (scalar, afun, osc,
// covariant, uword).  Parsing is dialect-independent; the evaluators in each
// module interpret identifiers.
struct ExprNode {
    enum class Kind { Number, Symbol, Bracket, BracketFactorial, Sqrt,
                      Add, Sub, Mul, Div, Pow, Neg };
    Kind kind;
    Rational number;                 // Number
    std::string name;                // Symbol
    int bracket_arg = 0;             // Bracket / BracketFactorial
    std::vector<std::unique_ptr<ExprNode>> args;
    int pos = 0;                     // character offset for error reporting

    std::string to_string() const;
};

using ExprPtr = std::unique_ptr<ExprNode>;

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int position);
    int position;
};

// Parse the published grammar: rationals, s, q, [n], [n]!, rho, sqrt(...),
// identifiers, + - * / ^ and parentheses.  `^` takes an integer exponent.
ExprPtr parse_expr(const std::string& text);

// Evaluate an AST in the scalar dialect.  Identifiers resolve first through
// `consts`, then through the declared parameter symbols.
Scalar eval_scalar(const ExprNode& node,
                   const std::map<std::string, Scalar>& consts = {});

Scalar parse_scalar(const std::string& text,
                    const std::map<std::string, Scalar>& consts = {});

} // namespace ospq
