#include "trefl/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace trefl {

SpaceSignature::SpaceSignature(std::vector<SlotSpec> slots) : slots_(std::move(slots)) {
    std::set<std::string> seen;
    for (const auto& s : slots_) {
        if (!seen.insert(s.label).second)
            fail(Errc::bad_state, "duplicate slot label '" + s.label + "'");
    }
}

SpaceSignature SpaceSignature::homogeneous(size_t n, Dom dom) {
    std::vector<SlotSpec> slots;
    slots.reserve(n);
    for (size_t i = 1; i <= n; ++i) slots.push_back({std::to_string(i), dom});
    return SpaceSignature(std::move(slots));
}

std::optional<size_t> SpaceSignature::find(const std::string& label) const {
    for (size_t i = 0; i < slots_.size(); ++i) {
        if (slots_[i].label == label) return i;
    }
    return std::nullopt;
}

size_t SpaceSignature::position(const std::string& label) const {
    if (auto p = find(label)) return *p;
    fail(Errc::unknown_label, "label '" + label + "' not in signature");
}

std::string SpaceSignature::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < slots_.size(); ++i) {
        if (i) os << " ";
        os << slots_[i].label << ":" << dom_name(slots_[i].dom);
    }
    return os.str();
}

bool State::operator==(const State& o) const {
    if (values.size() != o.values.size()) return false;
    for (size_t i = 0; i < values.size(); ++i) {
        if (!scalar_equal(values[i], o.values[i])) return false;
    }
    return true;
}

State parse_state(const std::string& text, const SpaceSignature& sig) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            toks.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !toks.empty()) toks.push_back(cur);
    if (toks.size() != sig.size())
        fail(Errc::bad_state, "state has " + std::to_string(toks.size()) + " values, signature has " +
                                  std::to_string(sig.size()) + " slots");
    State s;
    s.values.reserve(toks.size());
    for (size_t i = 0; i < toks.size(); ++i) s.values.push_back(parse_scalar(toks[i], sig.dom(i)));
    return s;
}

std::string state_to_string(const State& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.values.size(); ++i) {
        if (i) os << ", ";
        os << scalar_to_string(s.values[i]);
    }
    return os.str();
}

std::vector<std::string> default_slot_names(const SpaceSignature& sig) {
    std::vector<std::string> names;
    names.reserve(sig.size());
    for (size_t i = 0; i < sig.size(); ++i) names.push_back("x" + sig.label(i));
    return names;
}

// Pair slots carry a companion variable: x<label> pairs with y<label>.
static std::string pair_partner(const std::string& name) {
    if (!name.empty() && name[0] == 'x') return "y" + name.substr(1);
    return name + "_y";
}

State symbolic_state(const SpaceSignature& sig, const std::vector<std::string>& names,
                     const std::vector<std::string>& extra_symbols) {
    if (names.size() != sig.size())
        fail(Errc::bad_state, "one variable name per slot required");
    auto table = std::make_shared<VarTable>();
    auto intern = [&table](const std::string& n) {
        if (std::find(table->begin(), table->end(), n) == table->end()) table->push_back(n);
    };
    for (size_t i = 0; i < sig.size(); ++i) {
        switch (sig.dom(i)) {
            case Dom::PosRat:
                intern(names[i]);
                break;
            case Dom::RatPair:
                intern(names[i]);
                intern(pair_partner(names[i]));
                break;
            default:
                fail(Errc::backend_incompatible,
                     "symbolic states exist only over rational slot domains");
        }
    }
    for (const auto& s : extra_symbols) intern(s);

    VarTablePtr frozen = table;
    State out;
    out.values.reserve(sig.size());
    for (size_t i = 0; i < sig.size(); ++i) {
        if (sig.dom(i) == Dom::PosRat) {
            out.values.emplace_back(RatFunc::variable(frozen, names[i]));
        } else {
            out.values.emplace_back(SymPair{RatFunc::variable(frozen, names[i]),
                                            RatFunc::variable(frozen, pair_partner(names[i]))});
        }
    }
    return out;
}

}  // namespace trefl
