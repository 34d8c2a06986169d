#include "trefl/poly.hpp"

#include <atomic>
#include <numeric>
#include <sstream>

namespace trefl {

namespace {
std::atomic<size_t> g_term_limit{5'000'000};
std::atomic<uint64_t> g_degree_limit{4096};
}

size_t MultiPoly::term_limit() { return g_term_limit.load(); }
void MultiPoly::set_term_limit(size_t n) { g_term_limit.store(n); }
uint64_t MultiPoly::degree_limit() { return g_degree_limit.load(); }
void MultiPoly::set_degree_limit(uint64_t n) { g_degree_limit.store(n); }

bool GrlexGreater::operator()(const Expo& a, const Expo& b) const {
    uint64_t da = std::accumulate(a.begin(), a.end(), uint64_t{0});
    uint64_t db = std::accumulate(b.begin(), b.end(), uint64_t{0});
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponents, earlier variables dominate
}

MultiPoly::MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(VarTablePtr vars, Rational c) {
    MultiPoly p(vars);
    if (c != 0) p.terms_.emplace(Expo(p.vars_->size(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(VarTablePtr vars, size_t index) {
    MultiPoly p(std::move(vars));
    Expo e(p.vars_->size(), 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    fail(Errc::domain_mismatch, "polynomial arithmetic across different variable tables");
}

uint64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return 0;
    // Leading term has maximal degree under graded lex.
    const Expo& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), uint64_t{0});
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) fail(Errc::bad_state, "zero polynomial has no leading coefficient");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    if (out.terms_.size() > term_limit())
        fail(Errc::budget_exceeded, "polynomial term budget exceeded");
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    if (out.terms_.size() > term_limit())
        fail(Errc::budget_exceeded, "polynomial term budget exceeded");
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    if (!terms_.empty() && !o.terms_.empty() &&
        total_degree() + o.total_degree() > degree_limit())
        fail(Errc::budget_exceeded, "polynomial degree budget exceeded");
    const size_t limit = term_limit();
    MultiPoly out(vars_);
    Expo e(vars_ ? vars_->size() : 0, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
        if (out.terms_.size() > limit)
            fail(Errc::budget_exceeded, "polynomial term budget exceeded");
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (vars_ && point.size() != vars_->size())
        fail(Errc::bad_state, "evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < e.size(); ++i) {
            for (uint32_t k = 0; k < e[i]; ++k) term *= point[i];
        }
        acc += term;
    }
    return acc;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_var = false;
        std::ostringstream vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            vars << (*vars_)[i];
            if (e[i] > 1) vars << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << vars.str();
        }
    }
    return os.str();
}

}  // namespace trefl
