/*
 * scalar.hpp
 * ----------
 * Exact scalar values for the slot domains the catalog maps act on:
 * positive rationals, min-plus integers, bits (stored as integers),
 * symbolic rational functions, and two-component pairs of the rational
 * kinds. All values are immutable after construction and safe to share.
 */
#pragma once

#include "trefl/ratfunc.hpp"

#include <string>
#include <variant>

namespace trefl {

template <class F>
struct PairT {
    F x, y;
    bool operator==(const PairT&) const = default;
};

using RatPair = PairT<Rational>;
using SymPair = PairT<RatFunc>;

class Scalar {
public:
    using Variant = std::variant<Rational, Int, RatFunc, RatPair, SymPair>;

    Scalar() : v_(Rational(0)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(Int n) : v_(std::move(n)) {}
    Scalar(RatFunc f) : v_(std::move(f)) {}
    Scalar(RatPair p) : v_(std::move(p)) {}
    Scalar(SymPair p) : v_(std::move(p)) {}

    const Variant& v() const { return v_; }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    bool is_int() const { return std::holds_alternative<Int>(v_); }
    bool is_symbolic() const { return std::holds_alternative<RatFunc>(v_); }
    bool is_rat_pair() const { return std::holds_alternative<RatPair>(v_); }
    bool is_sym_pair() const { return std::holds_alternative<SymPair>(v_); }

    const Rational& rat() const { return std::get<Rational>(v_); }
    const Int& integer() const { return std::get<Int>(v_); }
    const RatFunc& sym() const { return std::get<RatFunc>(v_); }
    const RatPair& rat_pair() const { return std::get<RatPair>(v_); }
    const SymPair& sym_pair() const { return std::get<SymPair>(v_); }

    // True when the value lies in the domain's value set. Symbolic values
    // satisfy PosRat/RatPair slots (subtraction-free formulas keep them
    // positive wherever they are evaluated).
    bool fits(Dom d) const;

    bool operator==(const Scalar& o) const;

private:
    Variant v_;
};

bool scalar_equal(const Scalar& a, const Scalar& b);
std::string scalar_to_string(const Scalar& s);

// Text form: rationals as "p/q" or "p", integers as decimal, pairs as "a:b".
Scalar parse_scalar(const std::string& text, Dom dom);

inline bool Scalar::operator==(const Scalar& o) const { return scalar_equal(*this, o); }

}  // namespace trefl
