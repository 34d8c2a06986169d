/*
 * poly.hpp
 * --------
 * Multivariate polynomials with exact rational coefficients over a shared
 * ordered variable table. Terms are kept in graded lexicographic order so
 * printing is stable; no zero coefficients are stored. Addition,
 * subtraction and multiplication only -- no GCD, no factorization.
 */
#pragma once

#include "trefl/numeric.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace trefl {

using VarTable = std::vector<std::string>;
using VarTablePtr = std::shared_ptr<const VarTable>;

using Expo = std::vector<uint32_t>;

// Graded lex: higher total degree first, ties broken lexicographically by
// variable-table order (larger exponent on an earlier variable first).
struct GrlexGreater {
    bool operator()(const Expo& a, const Expo& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Expo, Rational, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarTablePtr vars);  // zero polynomial
    static MultiPoly constant(VarTablePtr vars, Rational c);
    static MultiPoly variable(VarTablePtr vars, size_t index);

    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    uint64_t total_degree() const;

    // Leading coefficient in graded lex order; zero polynomial has none.
    const Rational& leading_coeff() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;

    bool operator==(const MultiPoly& o) const;

    Rational eval(const std::vector<Rational>& point) const;

    // Canonical text: terms in graded lex order, explicit coefficients,
    // e.g. "x1*x2^2 + 2*x1*x2*x4 - 1/3".
    std::string to_string() const;

    void add_term(const Expo& e, const Rational& c);  // accumulate, drop zeros

    // Budgets for runaway expansions. Composing birational maps grows
    // degrees multiplicatively, so the degree cap trips hopeless
    // computations long before the term count gets expensive; both raise
    // Errc::budget_exceeded. RAII-scoped overrides via the guards below.
    static size_t term_limit();
    static void set_term_limit(size_t n);
    static uint64_t degree_limit();
    static void set_degree_limit(uint64_t n);

private:
    void check_compatible(const MultiPoly& o) const;

    VarTablePtr vars_;
    TermMap terms_;
};

struct TermLimitGuard {
    explicit TermLimitGuard(size_t n) : prev_(MultiPoly::term_limit()) { MultiPoly::set_term_limit(n); }
    ~TermLimitGuard() { MultiPoly::set_term_limit(prev_); }

private:
    size_t prev_;
};

struct DegreeLimitGuard {
    explicit DegreeLimitGuard(uint64_t n) : prev_(MultiPoly::degree_limit()) {
        MultiPoly::set_degree_limit(n);
    }
    ~DegreeLimitGuard() { MultiPoly::set_degree_limit(prev_); }

private:
    uint64_t prev_;
};

}  // namespace trefl
