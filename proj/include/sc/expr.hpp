#pragma once

#include <memory>

#include "sc/curve.hpp"

namespace sc {

// Abstract syntax for the little expression language used by the CLI.
// Identifiers name the standard superfields and series; D/Dt/Dz/Dtau/Dphi
// are the derivation applications.
struct Expr {
    enum class Kind { number, ident, add, sub, mul, div, pow, neg, apply };

    Kind kind;
    Rat value;              // number
    std::string name;       // ident, apply (operator name)
    std::shared_ptr<Expr> lhs, rhs;
    int exponent = 0;       // pow

    std::string str() const;
};

using ExprPtr = std::shared_ptr<Expr>;

// Recursive-descent parser; standard precedence (^ highest, then unary -,
// then * /, then + -), left associative.  Throws SyntaxError with position
// and UnknownIdentifier (the latter at parse time for unknown names).
ExprPtr parse_expr(const std::string& src);

// Evaluate over a chart.  Division requires an invertible leading term.
SuperField eval_expr(const Expr& e, const Chart& ch);

const std::vector<std::string>& known_identifiers();

}  // namespace sc
