/*
 * expr.hpp
 * --------
 * Subtraction-free rational expressions (add/mul/div, powers, positive
 * integer constants) and their evaluation over a semifield. The same
 * expression evaluates over (Q>0, +, *, /, 1) and over (Z, min, +, -, 0);
 * in the min-plus reading positive integer constants collapse to 0.
 */
#pragma once

#include "trefl/scalar.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace trefl {

enum class SemifieldKind { PosRat, MinPlus };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Var, Const, Add, Mul, Div };

    Op op;
    std::string name;   // Var
    Int constant;       // Const, >= 1
    ExprPtr lhs, rhs;   // Add/Mul/Div

    static ExprPtr var(std::string n);
    static ExprPtr constant_int(Int k);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr mul(ExprPtr a, ExprPtr b);
    static ExprPtr div(ExprPtr a, ExprPtr b);
};

// Grammar:  expr := term ('+' term)*
//           term := factor (('*'|'/') factor)*
//           factor := base ('^' uint)?
//           base := uint | ident | '(' expr ')'
// Throws Errc::parse_error with the offending position in the message.
ExprPtr parse_expr(const std::string& text);

std::string expr_to_string(const Expr& e);

// Collect variable names in order of first appearance.
std::vector<std::string> expr_vars(const Expr& e);

// Exact evaluation over the chosen semifield. Bindings must be Rational
// scalars for PosRat and Int scalars for MinPlus.
Scalar semifield_eval(const Expr& e, const std::map<std::string, Scalar>& bindings,
                      SemifieldKind field);

Rational eval_expr_posrat(const Expr& e, const std::map<std::string, Rational>& bindings);
Int eval_expr_minplus(const Expr& e, const std::map<std::string, Int>& bindings);

}  // namespace trefl
