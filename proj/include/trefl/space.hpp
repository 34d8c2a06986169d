/*
 * space.hpp
 * ---------
 * Product-space signatures and states. A signature is an ordered list of
 * labeled slots with domains; labels are short strings and support barred
 * forms written with a trailing 'b' (the 15-slot identities use labels
 * 1,2,2b,3,4,4b,5,5b,6,6b,7,8,8b,9,9b).
 */
#pragma once

#include "trefl/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trefl {

struct SlotSpec {
    std::string label;
    Dom dom = Dom::PosRat;
};

class SpaceSignature {
public:
    SpaceSignature() = default;
    explicit SpaceSignature(std::vector<SlotSpec> slots);

    // Homogeneous signature with labels "1".."n".
    static SpaceSignature homogeneous(size_t n, Dom dom);

    const std::vector<SlotSpec>& slots() const { return slots_; }
    size_t size() const { return slots_.size(); }
    Dom dom(size_t i) const { return slots_[i].dom; }
    const std::string& label(size_t i) const { return slots_[i].label; }

    // Position of a label; Errc::unknown_label if absent.
    size_t position(const std::string& label) const;
    std::optional<size_t> find(const std::string& label) const;

    std::string to_string() const;

private:
    std::vector<SlotSpec> slots_;
};

struct State {
    std::vector<Scalar> values;

    size_t size() const { return values.size(); }
    const Scalar& operator[](size_t i) const { return values[i]; }
    Scalar& operator[](size_t i) { return values[i]; }
    bool operator==(const State& o) const;
};

// Comma-separated scalars against the signature ("1/2,3,0" or pairs "a:b").
State parse_state(const std::string& text, const SpaceSignature& sig);
std::string state_to_string(const State& s);

// One fresh symbolic variable per name; repeated names share the variable
// (the folded 6-slot pattern passes x1,x2,x2,x3,x4,x4). Pair slots get a
// second variable with the "y" prefix swapped in. `extra_symbols` appends
// parameters (the electrical coupling) to the variable table.
State symbolic_state(const SpaceSignature& sig, const std::vector<std::string>& names,
                     const std::vector<std::string>& extra_symbols = {});

// Default slot names x<label>; barred labels keep their 'b' suffix.
std::vector<std::string> default_slot_names(const SpaceSignature& sig);

}  // namespace trefl
