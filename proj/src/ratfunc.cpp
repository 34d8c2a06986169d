#include "trefl/ratfunc.hpp"

namespace trefl {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::bad_state, "rational function with zero denominator");
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::from_poly(MultiPoly p) {
    MultiPoly one = MultiPoly::constant(p.vars(), Rational(1));
    return RatFunc(std::move(p), std::move(one));
}

RatFunc RatFunc::constant(VarTablePtr vars, Rational c) {
    return from_poly(MultiPoly::constant(std::move(vars), std::move(c)));
}

RatFunc RatFunc::variable(VarTablePtr vars, size_t index) {
    return from_poly(MultiPoly::variable(std::move(vars), index));
}

RatFunc RatFunc::variable(VarTablePtr vars, const std::string& name) {
    for (size_t i = 0; i < vars->size(); ++i) {
        if ((*vars)[i] == name) return variable(vars, i);
    }
    fail(Errc::unbound_variable, "variable '" + name + "' not in table");
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) fail(Errc::division_by_absorber, "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rational RatFunc::eval(const std::vector<Rational>& point) const {
    Rational d = den_.eval(point);
    if (d == 0) fail(Errc::division_by_absorber, "denominator vanishes at evaluation point");
    return num_.eval(point) / d;
}

std::string RatFunc::to_string() const {
    if (den_.term_count() == 1 && den_.total_degree() == 0 && den_.leading_coeff() == 1)
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool ratfunc_equal(const RatFunc& a, const RatFunc& b) {
    return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

}  // namespace trefl
