/*
 * numeric.hpp
 * -----------
 * Arbitrary-precision integers and rationals, error plumbing, and the slot
 * domain enum shared by every module.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trefl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Errc {
    parse_error,
    unknown_map,
    unknown_label,
    arity_mismatch,
    domain_mismatch,
    not_in_folded_subset,
    unbound_variable,
    division_by_absorber,
    budget_exceeded,
    backend_incompatible,
    box_too_large,
    bad_state,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Slot domains. `Trop` is the min-plus integer line; catalog maps declared
// on nonnegative integers get the >= 0 restriction checked at apply time.
enum class Dom : uint8_t { PosRat, Trop, Bit, RatPair };

std::string dom_name(Dom d);
Dom dom_from_name(const std::string& name);

// Intersection of value sets (used by the symmetry checker which needs
// states valid under both slot orientations). Bit is contained in Trop.
Dom dom_intersect(Dom a, Dom b);

Rational parse_rational(const std::string& text);
Int parse_int(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace trefl
