#include "trefl/expr.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace trefl {

ExprPtr Expr::var(std::string n) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Var;
    e->name = std::move(n);
    return e;
}

ExprPtr Expr::constant_int(Int k) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Const;
    e->constant = std::move(k);
    return e;
}

static ExprPtr binary(Expr::Op op, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) { return binary(Op::Add, std::move(a), std::move(b)); }
ExprPtr Expr::mul(ExprPtr a, ExprPtr b) { return binary(Op::Mul, std::move(a), std::move(b)); }
ExprPtr Expr::div(ExprPtr a, ExprPtr b) { return binary(Op::Div, std::move(a), std::move(b)); }

namespace {

// Recursive-descent parser for the subtraction-free grammar.
class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    ExprPtr run() {
        auto e = sum();
        skip_ws();
        if (pos_ != s_.size()) die("trailing input");
        return e;
    }

private:
    [[noreturn]] void die(const std::string& msg) const {
        fail(Errc::parse_error, "expression error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprPtr sum() {
        auto e = term();
        while (eat('+')) e = Expr::add(e, term());
        return e;
    }

    ExprPtr term() {
        auto e = factor();
        for (;;) {
            if (eat('*')) {
                e = Expr::mul(e, factor());
            } else if (eat('/')) {
                e = Expr::div(e, factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        auto e = base();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) die("expected integer exponent");
            long k = std::stol(s_.substr(start, pos_ - start));
            if (k < 1) die("exponent must be >= 1");
            auto result = e;
            for (long i = 1; i < k; ++i) result = Expr::mul(result, e);
            return result;
        }
        return e;
    }

    ExprPtr base() {
        skip_ws();
        if (pos_ >= s_.size()) die("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = sum();
            if (!eat(')')) die("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Int k(s_.substr(start, pos_ - start));
            if (k < 1) die("constants must be positive integers");
            return Expr::constant_int(k);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return Expr::var(s_.substr(start, pos_ - start));
        }
        die(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

void collect_vars(const Expr& e, std::vector<std::string>& out) {
    switch (e.op) {
        case Expr::Op::Var:
            for (const auto& n : out)
                if (n == e.name) return;
            out.push_back(e.name);
            return;
        case Expr::Op::Const:
            return;
        default:
            collect_vars(*e.lhs, out);
            collect_vars(*e.rhs, out);
    }
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return ExprParser(text).run(); }

std::vector<std::string> expr_vars(const Expr& e) {
    std::vector<std::string> out;
    collect_vars(e, out);
    return out;
}

std::string expr_to_string(const Expr& e) {
    switch (e.op) {
        case Expr::Op::Var:
            return e.name;
        case Expr::Op::Const:
            return e.constant.str();
        case Expr::Op::Add:
            return "(" + expr_to_string(*e.lhs) + " + " + expr_to_string(*e.rhs) + ")";
        case Expr::Op::Mul:
            return "(" + expr_to_string(*e.lhs) + "*" + expr_to_string(*e.rhs) + ")";
        case Expr::Op::Div:
            return "(" + expr_to_string(*e.lhs) + "/" + expr_to_string(*e.rhs) + ")";
    }
    return "?";
}

Rational eval_expr_posrat(const Expr& e, const std::map<std::string, Rational>& bindings) {
    switch (e.op) {
        case Expr::Op::Var: {
            auto it = bindings.find(e.name);
            if (it == bindings.end()) fail(Errc::unbound_variable, "unbound variable " + e.name);
            return it->second;
        }
        case Expr::Op::Const:
            return Rational(e.constant);
        case Expr::Op::Add:
            return eval_expr_posrat(*e.lhs, bindings) + eval_expr_posrat(*e.rhs, bindings);
        case Expr::Op::Mul:
            return eval_expr_posrat(*e.lhs, bindings) * eval_expr_posrat(*e.rhs, bindings);
        case Expr::Op::Div: {
            Rational d = eval_expr_posrat(*e.rhs, bindings);
            if (d == 0) fail(Errc::division_by_absorber, "division by zero");
            return eval_expr_posrat(*e.lhs, bindings) / d;
        }
    }
    fail(Errc::parse_error, "bad expression node");
}

// Min-plus reading: + is min, * is +, / is -, and every positive integer
// constant is a unit (tropical degree 0).
Int eval_expr_minplus(const Expr& e, const std::map<std::string, Int>& bindings) {
    switch (e.op) {
        case Expr::Op::Var: {
            auto it = bindings.find(e.name);
            if (it == bindings.end()) fail(Errc::unbound_variable, "unbound variable " + e.name);
            return it->second;
        }
        case Expr::Op::Const:
            return Int(0);
        case Expr::Op::Add:
            return std::min(eval_expr_minplus(*e.lhs, bindings),
                            eval_expr_minplus(*e.rhs, bindings));
        case Expr::Op::Mul:
            return eval_expr_minplus(*e.lhs, bindings) + eval_expr_minplus(*e.rhs, bindings);
        case Expr::Op::Div:
            return eval_expr_minplus(*e.lhs, bindings) - eval_expr_minplus(*e.rhs, bindings);
    }
    fail(Errc::parse_error, "bad expression node");
}

Scalar semifield_eval(const Expr& e, const std::map<std::string, Scalar>& bindings,
                      SemifieldKind field) {
    if (field == SemifieldKind::PosRat) {
        std::map<std::string, Rational> b;
        for (const auto& [k, v] : bindings) {
            if (!v.is_rational())
                fail(Errc::domain_mismatch, "posrat evaluation needs rational bindings");
            b.emplace(k, v.rat());
        }
        return Scalar(eval_expr_posrat(e, b));
    }
    std::map<std::string, Int> b;
    for (const auto& [k, v] : bindings) {
        if (!v.is_int()) fail(Errc::domain_mismatch, "min-plus evaluation needs integer bindings");
        b.emplace(k, v.integer());
    }
    return Scalar(eval_expr_minplus(e, b));
}

}  // namespace trefl
