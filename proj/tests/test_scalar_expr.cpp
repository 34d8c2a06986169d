#include "doctest.h"

#include "trefl/expr.hpp"
#include "trefl/scalar.hpp"

#include <random>

using namespace trefl;

TEST_CASE("rational text round trip") {
    CHECK(rational_to_string(parse_rational("3/4")) == "3/4");
    CHECK(rational_to_string(parse_rational("5")) == "5");
    CHECK(rational_to_string(parse_rational("6/4")) == "3/2");  // lowest terms
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("scalar parsing per domain") {
    CHECK(parse_scalar("1/2", Dom::PosRat).rat() == Rational(1, 2));
    CHECK(parse_scalar("7", Dom::Trop).integer() == 7);
    CHECK(parse_scalar("1", Dom::Bit).integer() == 1);
    CHECK_THROWS_AS(parse_scalar("2", Dom::Bit), Error);
    CHECK_THROWS_AS(parse_scalar("-1", Dom::Trop), Error);
    auto p = parse_scalar("2:3/5", Dom::RatPair).rat_pair();
    CHECK(p.x == Rational(2));
    CHECK(p.y == Rational(3, 5));
    CHECK_THROWS_AS(parse_scalar("2", Dom::RatPair), Error);
}

TEST_CASE("domain value sets") {
    CHECK(Scalar(Rational(1, 2)).fits(Dom::PosRat));
    CHECK_FALSE(Scalar(Rational(0)).fits(Dom::PosRat));
    CHECK_FALSE(Scalar(Rational(-1)).fits(Dom::PosRat));
    CHECK(Scalar(Int(0)).fits(Dom::Trop));
    CHECK_FALSE(Scalar(Int(-1)).fits(Dom::Trop));
    CHECK(Scalar(Int(1)).fits(Dom::Bit));
    CHECK_FALSE(Scalar(Int(2)).fits(Dom::Bit));
    CHECK(dom_intersect(Dom::Trop, Dom::Bit) == Dom::Bit);
    CHECK(dom_intersect(Dom::Bit, Dom::Trop) == Dom::Bit);
    CHECK_THROWS_AS(dom_intersect(Dom::PosRat, Dom::Bit), Error);
}

TEST_CASE("semifield evaluation of the bulk formula") {
    auto e = parse_expr("x1*x2/(x1+x3)");
    std::map<std::string, Scalar> ones{{"x1", Scalar(Rational(1))},
                                       {"x2", Scalar(Rational(1))},
                                       {"x3", Scalar(Rational(1))}};
    CHECK(semifield_eval(*e, ones, SemifieldKind::PosRat).rat() == Rational(1, 2));

    std::map<std::string, Scalar> trop{{"x1", Scalar(Int(2))},
                                       {"x2", Scalar(Int(3))},
                                       {"x3", Scalar(Int(1))}};
    CHECK(semifield_eval(*e, trop, SemifieldKind::MinPlus).integer() == 4);

    auto id = parse_expr("x1");
    CHECK(semifield_eval(*id, ones, SemifieldKind::PosRat).rat() == Rational(1));
    CHECK(semifield_eval(*id, trop, SemifieldKind::MinPlus).integer() == 2);
}

TEST_CASE("expression parser errors and powers") {
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_expr("x1 + ")), doctest::Contains("offset"),
                         Error);
    CHECK_THROWS_AS(static_cast<void>(parse_expr("x1 - x2")), Error);
    CHECK_THROWS_AS(static_cast<void>(parse_expr("0")), Error);
    CHECK_THROWS_AS(static_cast<void>(parse_expr("(x1")), Error);

    auto sq = parse_expr("(x1+x4)^2");
    std::map<std::string, Rational> b{{"x1", Rational(2)}, {"x4", Rational(3)}};
    CHECK(eval_expr_posrat(*sq, b) == Rational(25));
    std::map<std::string, Int> t{{"x1", Int(2)}, {"x4", Int(3)}};
    CHECK(eval_expr_minplus(*sq, t) == 4);  // 2*min(2,3)

    std::map<std::string, Rational> missing{{"x1", Rational(1)}};
    CHECK_THROWS_AS(eval_expr_posrat(*sq, missing), Error);
}

TEST_CASE("division by an exact zero is flagged") {
    auto e = parse_expr("x1/(x2+x3)");
    std::map<std::string, Rational> b{
        {"x1", Rational(1)}, {"x2", Rational(0)}, {"x3", Rational(0)}};
    try {
        eval_expr_posrat(*e, b);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == Errc::division_by_absorber);
    }
}

TEST_CASE("constants are units under min-plus") {
    auto e = parse_expr("2*x1 + 7");
    std::map<std::string, Int> t{{"x1", Int(5)}};
    CHECK(eval_expr_minplus(*e, t) == 0);  // min(0+5, 0)
    std::map<std::string, Rational> r{{"x1", Rational(5)}};
    CHECK(eval_expr_posrat(*e, r) == Rational(17));
}

namespace {

// Independent generator: builds a random subtraction-free expression and
// its expected rational value in one pass, so the evaluator under test is
// checked against plain arithmetic done on the spot.
struct RandomExpr {
    std::mt19937_64 gen;
    std::vector<std::pair<std::string, Rational>> vars;

    explicit RandomExpr(uint64_t seed) : gen(seed) {
        for (int i = 1; i <= 4; ++i) {
            Rational v(1 + gen() % 20, 1 + gen() % 20);
            vars.emplace_back("x" + std::to_string(i), v);
        }
    }

    std::pair<ExprPtr, Rational> make(int depth) {
        if (depth == 0 || gen() % 4 == 0) {
            if (gen() % 3 == 0) {
                Int k(1 + gen() % 9);
                return {Expr::constant_int(k), Rational(k)};
            }
            const auto& [name, val] = vars[gen() % vars.size()];
            return {Expr::var(name), val};
        }
        auto [a, va] = make(depth - 1);
        auto [b, vb] = make(depth - 1);
        switch (gen() % 3) {
            case 0: return {Expr::add(a, b), va + vb};
            case 1: return {Expr::mul(a, b), va * vb};
            default: return {Expr::div(a, b), va / vb};
        }
    }
};

}  // namespace

TEST_CASE("posrat evaluation agrees with direct arithmetic on 1000 seeded expressions") {
    RandomExpr rng(20250810);
    for (int i = 0; i < 1000; ++i) {
        auto [e, expected] = rng.make(4);
        std::map<std::string, Rational> b(rng.vars.begin(), rng.vars.end());
        CHECK(eval_expr_posrat(*e, b) == expected);
        CHECK(expected > 0);  // subtraction-free formulas stay positive
    }
}

TEST_CASE("min-plus axioms on sampled triples") {
    std::mt19937_64 gen(99);
    for (int i = 0; i < 500; ++i) {
        Int a(int64_t(gen() % 2001) - 1000), b(int64_t(gen() % 2001) - 1000),
            c(int64_t(gen() % 2001) - 1000);
        CHECK(std::min(a, std::min(b, c)) == std::min(std::min(a, b), c));
        CHECK(std::min(a, b) == std::min(b, a));
        CHECK((a + b) - b == a);  // div(mul(a,b), b) = a in min-plus
        CHECK(a + b == b + a);
    }
}
