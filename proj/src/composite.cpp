#include "trefl/composite.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace trefl {

namespace {

bool label_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }
bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

}  // namespace

CompositeExpr parse_composite(const std::string& text) {
    CompositeExpr out;
    size_t pos = 0;
    auto die = [&pos](const std::string& msg) {
        fail(Errc::parse_error, "composite error at offset " + std::to_string(pos) + ": " + msg);
    };
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        Factor f;
        size_t start = pos;
        while (pos < text.size() && name_char(text[pos]) && text[pos] != '[') ++pos;
        f.map_name = text.substr(start, pos - start);
        if (f.map_name.empty()) die("expected map name");
        if (pos >= text.size() || text[pos] != '[') die("expected '[' after map name");
        ++pos;
        for (;;) {
            start = pos;
            while (pos < text.size() && label_char(text[pos])) ++pos;
            if (pos == start) die("expected label");
            f.labels.push_back(text.substr(start, pos - start));
            if (pos >= text.size()) die("unterminated factor");
            if (text[pos] == ',') {
                ++pos;
                continue;
            }
            if (text[pos] == ']') {
                ++pos;
                break;
            }
            die("expected ',' or ']'");
        }
        if (f.labels.size() != 3 && f.labels.size() != 4) die("factors take 3 or 4 labels");
        out.factors.push_back(std::move(f));
    }
    return out;
}

std::string composite_to_string(const CompositeExpr& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.factors.size(); ++i) {
        if (i) os << " ";
        os << e.factors[i].map_name << "[";
        for (size_t j = 0; j < e.factors[i].labels.size(); ++j) {
            if (j) os << ",";
            os << e.factors[i].labels[j];
        }
        os << "]";
    }
    return os.str();
}

// A Bit slot may feed a nonnegative-integer argument; everything else must
// match exactly.
static bool slot_feeds(Dom slot, Dom arg) {
    return slot == arg || (slot == Dom::Bit && arg == Dom::Trop);
}

BoundComposite bind_composite(const CompositeExpr& e, const SpaceSignature& sig,
                              const MapBindings& maps) {
    BoundComposite out;
    out.space_size = sig.size();
    out.factors.reserve(e.factors.size());
    for (const auto& f : e.factors) {
        auto it = maps.find(f.map_name);
        if (it == maps.end() || !it->second)
            fail(Errc::unknown_map, "no map bound to name '" + f.map_name + "'");
        const LocalMapPtr& map = it->second;
        if (static_cast<int>(f.labels.size()) != map->arity)
            fail(Errc::arity_mismatch, "factor " + f.map_name + " has " +
                                           std::to_string(f.labels.size()) + " labels, map " +
                                           map->id + " is arity " + std::to_string(map->arity));
        BoundFactor bf;
        bf.map = map;
        bf.positions.reserve(f.labels.size());
        for (size_t i = 0; i < f.labels.size(); ++i) {
            size_t p = sig.position(f.labels[i]);
            if (!slot_feeds(sig.dom(p), map->arg_doms[i]))
                fail(Errc::domain_mismatch,
                     "slot " + f.labels[i] + ":" + dom_name(sig.dom(p)) + " cannot feed " +
                         map->id + " argument " + std::to_string(i + 1) + ":" +
                         dom_name(map->arg_doms[i]));
            bf.positions.push_back(p);
        }
        for (size_t i = 0; i < bf.positions.size(); ++i)
            for (size_t j = i + 1; j < bf.positions.size(); ++j)
                if (bf.positions[i] == bf.positions[j])
                    fail(Errc::bad_state, "factor " + f.map_name + " repeats a label");
        out.factors.push_back(std::move(bf));
    }
    return out;
}

uint64_t BoundComposite::degree_bound() const {
    uint64_t d = 1;
    for (const auto& f : factors) d *= static_cast<uint64_t>(std::max(f.map->degree, 1));
    return d;
}

SpaceSignature infer_signature(const std::vector<CompositeExpr>& exprs,
                               const std::vector<std::string>& labels, const MapBindings& maps) {
    std::map<std::string, Dom> doms;
    for (const auto& e : exprs) {
        for (const auto& f : e.factors) {
            auto it = maps.find(f.map_name);
            if (it == maps.end() || !it->second)
                fail(Errc::unknown_map, "no map bound to name '" + f.map_name + "'");
            const LocalMapPtr& map = it->second;
            if (static_cast<int>(f.labels.size()) != map->arity)
                fail(Errc::arity_mismatch, "factor " + f.map_name + " arity mismatch");
            for (size_t i = 0; i < f.labels.size(); ++i) {
                Dom want = map->arg_doms[i];
                auto [slot, inserted] = doms.try_emplace(f.labels[i], want);
                if (!inserted) slot->second = dom_intersect(slot->second, want);
            }
        }
    }
    std::vector<SlotSpec> slots;
    slots.reserve(labels.size());
    for (const auto& l : labels) {
        auto it = doms.find(l);
        slots.push_back({l, it == doms.end() ? Dom::PosRat : it->second});
        if (it != doms.end()) doms.erase(it);
    }
    if (!doms.empty())
        fail(Errc::unknown_label, "factor label '" + doms.begin()->first + "' not in signature");
    return SpaceSignature(std::move(slots));
}

void apply_bound_factor(const BoundFactor& f, State& s) {
    std::array<Scalar, 4> args;
    const size_t n = f.positions.size();
    for (size_t i = 0; i < n; ++i) args[i] = s[f.positions[i]];
    f.map->apply(std::span<Scalar>(args.data(), n));
    for (size_t i = 0; i < n; ++i) s[f.positions[i]] = std::move(args[i]);
}

State apply_indexed(const LocalMap& map, const std::vector<std::string>& labels,
                    const SpaceSignature& sig, const State& in) {
    if (in.size() != sig.size()) fail(Errc::bad_state, "state does not fit signature");
    BoundFactor f;
    f.map = std::make_shared<LocalMap>(map);
    for (const auto& l : labels) f.positions.push_back(sig.position(l));
    if (static_cast<int>(f.positions.size()) != map.arity)
        fail(Errc::arity_mismatch, "label count does not match arity");
    State out = in;
    apply_bound_factor(f, out);
    return out;
}

State apply_indexed_sandwich(const LocalMap& map, const std::vector<std::string>& labels,
                             const SpaceSignature& sig, const State& in) {
    if (static_cast<int>(labels.size()) != map.arity)
        fail(Errc::arity_mismatch, "label count does not match arity");
    std::vector<size_t> pos;
    pos.reserve(labels.size());
    for (const auto& l : labels) pos.push_back(sig.position(l));
    std::vector<size_t> sorted = pos;
    std::sort(sorted.begin(), sorted.end());

    // Sort-permute: content of slot pos[m] moves to slot sorted[m].
    State tmp = in;
    for (size_t m = 0; m < pos.size(); ++m) tmp[sorted[m]] = in[pos[m]];
    // Ascending application.
    std::array<Scalar, 4> args;
    for (size_t m = 0; m < sorted.size(); ++m) args[m] = tmp[sorted[m]];
    map.apply(std::span<Scalar>(args.data(), sorted.size()));
    for (size_t m = 0; m < sorted.size(); ++m) tmp[sorted[m]] = std::move(args[m]);
    // Unsort-permute.
    State out = tmp;
    for (size_t m = 0; m < pos.size(); ++m) out[pos[m]] = tmp[sorted[m]];
    return out;
}

void eval_composite_inplace(const BoundComposite& c, State& scratch) {
    if (scratch.size() != c.space_size) fail(Errc::bad_state, "state does not fit composite");
    for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it) apply_bound_factor(*it, scratch);
}

State eval_composite(const BoundComposite& c, const State& in) {
    State out = in;
    eval_composite_inplace(c, out);
    return out;
}

}  // namespace trefl
