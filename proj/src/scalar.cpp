#include "trefl/scalar.hpp"

#include <sstream>

namespace trefl {

std::string dom_name(Dom d) {
    switch (d) {
        case Dom::PosRat: return "posrat";
        case Dom::Trop: return "trop";
        case Dom::Bit: return "bit";
        case Dom::RatPair: return "pair";
    }
    return "?";
}

Dom dom_from_name(const std::string& name) {
    if (name == "posrat") return Dom::PosRat;
    if (name == "trop") return Dom::Trop;
    if (name == "bit") return Dom::Bit;
    if (name == "pair") return Dom::RatPair;
    fail(Errc::parse_error, "unknown domain name '" + name + "'");
}

Dom dom_intersect(Dom a, Dom b) {
    if (a == b) return a;
    if ((a == Dom::Trop && b == Dom::Bit) || (a == Dom::Bit && b == Dom::Trop)) return Dom::Bit;
    fail(Errc::domain_mismatch,
         "slot domains " + dom_name(a) + " and " + dom_name(b) + " have no common values");
}

bool Scalar::fits(Dom d) const {
    switch (d) {
        case Dom::PosRat:
            if (is_symbolic()) return true;
            return is_rational() && rat() > 0;
        case Dom::Trop:
            return is_int() && integer() >= 0;
        case Dom::Bit:
            return is_int() && (integer() == 0 || integer() == 1);
        case Dom::RatPair:
            if (is_sym_pair()) return true;
            return is_rat_pair() && rat_pair().x > 0 && rat_pair().y > 0;
    }
    return false;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(Errc::parse_error, "empty rational");
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad rational '" + text + "'");
    }
}

Int parse_int(const std::string& text) {
    if (text.empty()) fail(Errc::parse_error, "empty integer");
    try {
        return Int(text);
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad integer '" + text + "'");
    }
}

Scalar parse_scalar(const std::string& text, Dom dom) {
    switch (dom) {
        case Dom::PosRat:
            return Scalar(parse_rational(text));
        case Dom::Trop:
        case Dom::Bit: {
            Scalar s{parse_int(text)};
            if (!s.fits(dom)) fail(Errc::domain_mismatch, "'" + text + "' not in " + dom_name(dom));
            return s;
        }
        case Dom::RatPair: {
            auto colon = text.find(':');
            if (colon == std::string::npos)
                fail(Errc::parse_error, "pair scalar needs 'a:b', got '" + text + "'");
            return Scalar(RatPair{parse_rational(text.substr(0, colon)),
                                  parse_rational(text.substr(colon + 1))});
        }
    }
    fail(Errc::parse_error, "bad domain");
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string scalar_to_string(const Scalar& s) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return rational_to_string(v);
            } else if constexpr (std::is_same_v<T, Int>) {
                return v.str();
            } else if constexpr (std::is_same_v<T, RatFunc>) {
                return v.to_string();
            } else if constexpr (std::is_same_v<T, RatPair>) {
                return rational_to_string(v.x) + ":" + rational_to_string(v.y);
            } else {
                return v.x.to_string() + ":" + v.y.to_string();
            }
        },
        s.v());
}

bool scalar_equal(const Scalar& a, const Scalar& b) {
    if (a.v().index() != b.v().index()) return false;
    return std::visit(
        [&b](const auto& va) -> bool {
            using T = std::decay_t<decltype(va)>;
            const auto& vb = std::get<T>(b.v());
            if constexpr (std::is_same_v<T, RatFunc>) {
                return ratfunc_equal(va, vb);
            } else if constexpr (std::is_same_v<T, SymPair>) {
                return ratfunc_equal(va.x, vb.x) && ratfunc_equal(va.y, vb.y);
            } else {
                return va == vb;
            }
        },
        a.v());
}

}  // namespace trefl
