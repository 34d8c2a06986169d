/*
 * ratfunc.hpp
 * -----------
 * Rational functions as unreduced numerator/denominator pairs. Equality is
 * decided by cross-multiplication (a.num*b.den - b.num*a.den == 0), so the
 * stored pair never needs lowest terms; the only normalization is a sign
 * flip making the denominator's leading coefficient positive.
 */
#pragma once

#include "trefl/poly.hpp"

#include <string>
#include <vector>

namespace trefl {

class RatFunc {
public:
    RatFunc() = default;
    RatFunc(MultiPoly num, MultiPoly den);
    static RatFunc from_poly(MultiPoly p);
    static RatFunc constant(VarTablePtr vars, Rational c);
    static RatFunc variable(VarTablePtr vars, size_t index);
    static RatFunc variable(VarTablePtr vars, const std::string& name);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarTablePtr& vars() const { return num_.vars(); }

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;

    Rational eval(const std::vector<Rational>& point) const;

    std::string to_string() const;

private:
    MultiPoly num_, den_;
};

// True iff the two functions agree as elements of the fraction field.
bool ratfunc_equal(const RatFunc& a, const RatFunc& b);

}  // namespace trefl
