#include "trefl/boundarize.hpp"

#include <algorithm>

namespace trefl {

State fold_embed(const State& x4) {
    if (x4.size() != 4) fail(Errc::bad_state, "fold_embed takes 4 slots");
    State out;
    out.values = {x4[0], x4[1], x4[1], x4[2], x4[3], x4[3]};
    return out;
}

bool in_folded_subset(const State& x6) {
    if (x6.size() != 6) fail(Errc::bad_state, "folded subset lives in 6 slots");
    return scalar_equal(x6[1], x6[2]) && scalar_equal(x6[4], x6[5]);
}

State fold_project(const State& x6) {
    if (!in_folded_subset(x6))
        fail(Errc::not_in_folded_subset,
             "state not in folded subset (need slot2 = slot3 and slot5 = slot6): " +
                 state_to_string(x6));
    State out;
    out.values = {x6[0], x6[1], x6[3], x6[4]};
    return out;
}

CompositeExpr tetra_composite(const std::string& m) {
    return parse_composite(m + "[2,4,5] " + m + "[1,3,5] " + m + "[1,2,6] " + m + "[3,4,6]");
}

CompositeExpr tetra_composite_reversed(const std::string& m) {
    return parse_composite(m + "[3,4,6] " + m + "[1,2,6] " + m + "[1,3,5] " + m + "[2,4,5]");
}

CompositeExpr tetra_composite_mixed(const std::string& m, const std::string& n) {
    return parse_composite(n + "[2,4,5] " + m + "[1,3,5] " + m + "[1,2,6] " + n + "[3,4,6]");
}

SpaceSignature tetra_signature(const CompositeExpr& t, const MapBindings& maps) {
    return infer_signature({t}, {"1", "2", "3", "4", "5", "6"}, maps);
}

LocalMapPtr boundarize(const CompositeExpr& t, const MapBindings& maps, const std::string& id) {
    SpaceSignature sig = tetra_signature(t, maps);
    // The folded pattern forces slot 2 = slot 3 and slot 5 = slot 6; their
    // domains must agree for the embedding to typecheck.
    Dom d2 = dom_intersect(sig.dom(1), sig.dom(2));
    Dom d5 = dom_intersect(sig.dom(4), sig.dom(5));
    auto bound = std::make_shared<BoundComposite>(bind_composite(t, sig, maps));

    auto map = std::make_shared<LocalMap>();
    map->id = id;
    map->arity = 4;
    map->arg_doms = {sig.dom(0), d2, sig.dom(3), d5};
    map->degree = 1;
    for (const auto& f : bound->factors) {
        map->degree *= std::max(f.map->degree, 1);
        for (const auto& s : f.map->extra_symbols) {
            if (std::find(map->extra_symbols.begin(), map->extra_symbols.end(), s) ==
                map->extra_symbols.end())
                map->extra_symbols.push_back(s);
        }
    }
    map->kernel = [bound](std::span<Scalar> args) {
        State x;
        x.values.assign(args.begin(), args.end());
        State folded = fold_embed(x);
        eval_composite_inplace(*bound, folded);
        State y = fold_project(folded);
        for (size_t i = 0; i < 4; ++i) args[i] = std::move(y[i]);
    };
    return map;
}

LocalMapPtr boundarize(const LocalMapPtr& r, const std::string& id) {
    MapBindings maps{{"R", r}};
    return boundarize(tetra_composite("R"), maps, id);
}

}  // namespace trefl
