#include "trefl/verifier.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <fstream>
#include <sstream>

namespace trefl {

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Union of the symbolic parameters required by a set of maps.
std::vector<std::string> collect_symbols(const std::vector<LocalMapPtr>& maps) {
    std::vector<std::string> out;
    for (const auto& m : maps) {
        for (const auto& s : m->extra_symbols) {
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
    }
    return out;
}

std::vector<LocalMapPtr> bound_maps(const BoundComposite& c) {
    std::vector<LocalMapPtr> out;
    for (const auto& f : c.factors) out.push_back(f.map);
    return out;
}

bool signature_is_rational(const SpaceSignature& sig) {
    for (const auto& s : sig.slots())
        if (s.dom != Dom::PosRat && s.dom != Dom::RatPair) return false;
    return true;
}

std::string slot_detail(const State& lhs, const State& rhs) {
    for (size_t i = 0; i < lhs.size(); ++i) {
        if (!scalar_equal(lhs[i], rhs[i])) return "first difference at slot " + std::to_string(i + 1);
    }
    return "";
}

}  // namespace

Backend Backend::symbolic() {
    Backend b;
    b.kind = Kind::Symbolic;
    return b;
}

Backend Backend::sample(uint64_t count, uint64_t seed) {
    Backend b;
    b.kind = Kind::Sample;
    b.samples = count;
    b.seed = seed;
    return b;
}

Backend Backend::exhaustive(Int bound) {
    Backend b;
    b.kind = Kind::Exhaustive;
    b.bound = std::move(bound);
    return b;
}

std::string Backend::describe() const {
    switch (kind) {
        case Kind::Symbolic:
            return "symbolic";
        case Kind::Sample:
            return "sample(n=" + std::to_string(samples) + ")";
        case Kind::Exhaustive:
            return "exhaustive(bound=" + bound.str() + ")";
    }
    return "?";
}

Rational SampleGen::draw_rational() {
    uint64_t num = 1 + (gen_() % 65536);
    uint64_t den = 1 + (gen_() % 65536);
    return Rational(Int(num), Int(den));
}

Int SampleGen::draw_int(const Int& bound) {
    if (bound < 0) fail(Errc::bad_state, "negative sampling bound");
    uint64_t span = bound.convert_to<uint64_t>() + 1;
    return Int(gen_() % span);
}

State SampleGen::draw_state(const SpaceSignature& sig, const Int& bound) {
    State s;
    s.values.reserve(sig.size());
    for (size_t i = 0; i < sig.size(); ++i) {
        switch (sig.dom(i)) {
            case Dom::PosRat:
                s.values.emplace_back(draw_rational());
                break;
            case Dom::Trop:
                s.values.emplace_back(draw_int(bound));
                break;
            case Dom::Bit:
                s.values.emplace_back(draw_int(Int(1)));
                break;
            case Dom::RatPair:
                s.values.emplace_back(RatPair{draw_rational(), draw_rational()});
                break;
        }
    }
    return s;
}

uint64_t box_cardinality(const SpaceSignature& sig, const Int& bound) {
    Int card = 1;
    for (const auto& s : sig.slots()) {
        switch (s.dom) {
            case Dom::Trop:
                card *= bound + 1;
                break;
            case Dom::Bit:
                card *= 2;
                break;
            default:
                fail(Errc::backend_incompatible,
                     "exhaustive enumeration needs bounded integer or bit slots, slot " + s.label +
                         " is " + dom_name(s.dom));
        }
    }
    if (card > Int(std::numeric_limits<uint64_t>::max())) fail(Errc::box_too_large, "box too large");
    return card.convert_to<uint64_t>();
}

void enumerate_box(const SpaceSignature& sig, const Int& bound,
                   const std::function<void(const State&)>& fn, uint64_t card_ceiling) {
    uint64_t card = box_cardinality(sig, bound);
    if (card > card_ceiling)
        fail(Errc::box_too_large, "box holds " + std::to_string(card) +
                                      " states, ceiling is " + std::to_string(card_ceiling));
    const size_t n = sig.size();
    std::vector<Int> limit(n);
    for (size_t i = 0; i < n; ++i) limit[i] = sig.dom(i) == Dom::Bit ? Int(1) : bound;

    std::vector<Int> v(n, Int(0));
    State s;
    s.values.assign(n, Scalar(Int(0)));
    for (;;) {
        for (size_t i = 0; i < n; ++i) s.values[i] = Scalar(v[i]);
        fn(s);
        bool carried = true;
        for (size_t i = n; i-- > 0;) {
            if (v[i] < limit[i]) {
                ++v[i];
                carried = false;
                break;
            }
            v[i] = 0;
        }
        if (carried) return;
    }
}

namespace {

// Run `body` over the backend's instance set; `body` returns an optional
// counterexample. Shared by every check below.
VerificationReport run_backend(
    const std::string& target, const Backend& backend, const SpaceSignature& sig,
    uint64_t degree_bound,
    const std::function<std::optional<Counterexample>(const State&)>& numeric_body,
    const std::function<std::optional<Counterexample>()>& symbolic_body) {
    auto t0 = Clock::now();
    VerificationReport rep;
    rep.target = target;
    rep.backend = backend.describe();
    rep.seed = backend.kind == Backend::Kind::Sample ? backend.seed : 0;
    rep.pass = true;

    switch (backend.kind) {
        case Backend::Kind::Symbolic: {
            if (!signature_is_rational(sig))
                fail(Errc::backend_incompatible,
                     "symbolic backend needs rational slot domains (" + target + ")");
            rep.instances = "proved";
            if (auto cx = symbolic_body()) {
                rep.pass = false;
                rep.counterexample = std::move(cx);
            }
            break;
        }
        case Backend::Kind::Sample: {
            rep.instances = std::to_string(backend.samples);
            rep.degree_bound = signature_is_rational(sig) ? degree_bound : 0;
            SampleGen gen(backend.seed);
            for (uint64_t k = 0; k < backend.samples; ++k) {
                State s = gen.draw_state(sig, backend.bound);
                if (auto cx = numeric_body(s)) {
                    rep.pass = false;
                    rep.counterexample = std::move(cx);
                    break;
                }
            }
            break;
        }
        case Backend::Kind::Exhaustive: {
            rep.instances = std::to_string(box_cardinality(sig, backend.bound));
            std::optional<Counterexample> found;
            enumerate_box(sig, backend.bound, [&](const State& s) {
                if (found) return;
                if (auto cx = numeric_body(s)) found = std::move(cx);
            });
            if (found) {
                rep.pass = false;
                rep.counterexample = std::move(found);
            }
            break;
        }
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace

VerificationReport check_equation(const EquationSpec& eq, const MapBindings& overrides,
                                  const Backend& backend) {
    MapBindings maps = eq.bindings_with(overrides);
    SpaceSignature sig = eq.signature(maps);
    BoundComposite lhs = bind_composite(eq.lhs, sig, maps);
    BoundComposite rhs = bind_composite(eq.rhs, sig, maps);
    uint64_t degree_bound = std::max(lhs.degree_bound(), rhs.degree_bound());

    auto numeric = [&](const State& s) -> std::optional<Counterexample> {
        State l = eval_composite(lhs, s);
        State r = eval_composite(rhs, s);
        if (l == r) return std::nullopt;
        return Counterexample{state_to_string(s), state_to_string(l), state_to_string(r),
                              slot_detail(l, r)};
    };
    auto symbolic = [&]() -> std::optional<Counterexample> {
        auto lm = bound_maps(lhs);
        auto rm = bound_maps(rhs);
        lm.insert(lm.end(), rm.begin(), rm.end());
        auto syms = collect_symbols(lm);
        State s = symbolic_state(sig, default_slot_names(sig), syms);
        State l = eval_composite(lhs, s);
        State r = eval_composite(rhs, s);
        if (l == r) return std::nullopt;
        return Counterexample{state_to_string(s), state_to_string(l), state_to_string(r),
                              slot_detail(l, r)};
    };
    return run_backend(eq.id, backend, sig, degree_bound, numeric, symbolic);
}

VerificationReport check_equation(const std::string& id, const Backend& backend) {
    return check_equation(Catalog::instance().equation(id), {}, backend);
}

namespace {

SpaceSignature map_signature(const LocalMap& m) {
    std::vector<SlotSpec> slots;
    for (int i = 0; i < m.arity; ++i) slots.push_back({std::to_string(i + 1), m.arg_doms[i]});
    return SpaceSignature(std::move(slots));
}

std::optional<Counterexample> compare_states(const State& in, const State& got,
                                             const State& want) {
    if (got == want) return std::nullopt;
    return Counterexample{state_to_string(in), state_to_string(got), state_to_string(want),
                          slot_detail(got, want)};
}

}  // namespace

VerificationReport check_involutive(const LocalMapPtr& map, const Backend& backend) {
    SpaceSignature sig = map_signature(*map);
    auto twice = [&](const State& s) {
        std::vector<Scalar> a = s.values;
        map->apply(a);
        map->apply(a);
        State out;
        out.values = std::move(a);
        return out;
    };
    auto numeric = [&](const State& s) { return compare_states(s, twice(s), s); };
    auto symbolic = [&]() {
        State s = symbolic_state(sig, default_slot_names(sig), map->extra_symbols);
        return compare_states(s, twice(s), s);
    };
    return run_backend(map->id + " involutive", backend, sig, 0, numeric, symbolic);
}

VerificationReport check_symmetric(const LocalMapPtr& map, const Backend& backend) {
    if (map->arity != 3)
        fail(Errc::arity_mismatch, "symmetry check is for arity-3 maps");
    // States must be valid under both slot orientations.
    SpaceSignature sig(
        {{"1", dom_intersect(map->arg_doms[0], map->arg_doms[2])},
         {"2", map->arg_doms[1]},
         {"3", dom_intersect(map->arg_doms[2], map->arg_doms[0])}});
    auto both = [&](const State& s) -> std::pair<State, State> {
        std::vector<Scalar> fwd = s.values;
        map->apply(fwd);
        std::vector<Scalar> rev = {s.values[2], s.values[1], s.values[0]};
        map->apply(rev);
        std::reverse(rev.begin(), rev.end());
        State a, b;
        a.values = std::move(fwd);
        b.values = std::move(rev);
        return {std::move(a), std::move(b)};
    };
    auto numeric = [&](const State& s) {
        auto [a, b] = both(s);
        return compare_states(s, a, b);
    };
    auto symbolic = [&]() {
        State s = symbolic_state(sig, default_slot_names(sig), map->extra_symbols);
        auto [a, b] = both(s);
        return compare_states(s, a, b);
    };
    return run_backend(map->id + " symmetric", backend, sig, 0, numeric, symbolic);
}

namespace {

// Signature of the 4-slot space a tetrahedral composite folds down to.
SpaceSignature folded_signature(const SpaceSignature& sig6) {
    return SpaceSignature({{"1", sig6.dom(0)},
                           {"2", dom_intersect(sig6.dom(1), sig6.dom(2))},
                           {"3", sig6.dom(3)},
                           {"4", dom_intersect(sig6.dom(4), sig6.dom(5))}});
}

}  // namespace

VerificationReport check_boundarizable(const CompositeExpr& t, const MapBindings& maps,
                                       const Backend& backend, const std::string& target) {
    SpaceSignature sig6 = tetra_signature(t, maps);
    SpaceSignature sig4 = folded_signature(sig6);
    BoundComposite bound = bind_composite(t, sig6, maps);

    auto run = [&](const State& folded_in) -> std::optional<Counterexample> {
        State out = eval_composite(bound, folded_in);
        if (in_folded_subset(out)) return std::nullopt;
        return Counterexample{state_to_string(folded_in), state_to_string(out),
                              "a state with slot2 = slot3 and slot5 = slot6",
                              "image leaves the folded subset"};
    };
    auto numeric = [&](const State& x4) { return run(fold_embed(x4)); };
    auto symbolic = [&]() {
        auto syms = collect_symbols(bound_maps(bound));
        State x4 = symbolic_state(sig4, {"x1", "x2", "x3", "x4"}, syms);
        return run(fold_embed(x4));
    };
    return run_backend(target, backend, sig4, bound.degree_bound(), numeric, symbolic);
}

VerificationReport check_boundarizable(const LocalMapPtr& r, const Backend& backend) {
    MapBindings maps{{"R", r}};
    return check_boundarizable(tetra_composite("R"), maps, backend, r->id + " boundarizable");
}

VerificationReport check_boundarize_match(const CompositeExpr& t, const MapBindings& maps,
                                          const LocalMapPtr& match, const Backend& backend,
                                          const std::string& target) {
    LocalMapPtr built = boundarize(t, maps, "boundarization");
    SpaceSignature sig4 = folded_signature(tetra_signature(t, maps));

    auto run = [&](const State& x4) -> std::optional<Counterexample> {
        std::vector<Scalar> a = x4.values;
        std::vector<Scalar> b = x4.values;
        built->apply(a);
        match->apply(b);
        State ga, gb;
        ga.values = std::move(a);
        gb.values = std::move(b);
        return compare_states(x4, ga, gb);
    };
    auto symbolic = [&]() {
        auto syms = collect_symbols({built, match});
        State x4 = symbolic_state(sig4, {"x1", "x2", "x3", "x4"}, syms);
        return run(x4);
    };
    return run_backend(target, backend, sig4,
                       static_cast<uint64_t>(built->degree) * match->degree, run, symbolic);
}

TraceFile load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open trace file " + path);
    TraceFile out;
    std::string line;
    size_t lineno = 0;
    bool have_sig = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string first;
        if (!(is >> first)) continue;
        if (!have_sig) {
            if (first != "signature")
                fail(Errc::parse_error, path + ":" + std::to_string(lineno) +
                                            ": expected 'signature <labels...>' header");
            std::vector<SlotSpec> slots;
            std::string lab;
            while (is >> lab) slots.push_back({lab, Dom::PosRat});
            out.signature_labels = SpaceSignature(std::move(slots));
            have_sig = true;
            continue;
        }
        try {
            out.lines.push_back(parse_composite(line));
        } catch (const Error& e) {
            fail(Errc::parse_error, path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        out.line_numbers.push_back(lineno);
    }
    if (!have_sig || out.lines.empty())
        fail(Errc::parse_error, path + ": missing signature header or composite lines");
    return out;
}

VerificationReport check_trace(const TraceFile& file, const MapBindings& maps,
                               const Backend& backend, const std::string& target) {
    std::vector<std::string> labels;
    for (const auto& s : file.signature_labels.slots()) labels.push_back(s.label);
    SpaceSignature sig = infer_signature(file.lines, labels, maps);

    std::vector<BoundComposite> bound;
    bound.reserve(file.lines.size());
    for (const auto& e : file.lines) bound.push_back(bind_composite(e, sig, maps));

    uint64_t deg = 0;
    for (const auto& b : bound) deg = std::max(deg, b.degree_bound());

    auto numeric = [&](const State& s) -> std::optional<Counterexample> {
        State first = eval_composite(bound[0], s);
        for (size_t k = 1; k < bound.size(); ++k) {
            State other = eval_composite(bound[k], s);
            if (!(other == first)) {
                return Counterexample{state_to_string(s), state_to_string(first),
                                      state_to_string(other),
                                      "line " + std::to_string(k + 1) + " (file line " +
                                          std::to_string(file.line_numbers[k]) +
                                          ") differs from line 1"};
            }
        }
        return std::nullopt;
    };
    auto symbolic = [&]() -> std::optional<Counterexample> {
        fail(Errc::backend_incompatible, "trace replay uses sampled or enumerated states");
    };
    return run_backend(target, backend, sig, deg, numeric, symbolic);
}

std::string VerificationReport::to_human() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " " << target << " [" << backend;
    if (backend.rfind("sample", 0) == 0) os << ", seed " << seed;
    os << "] instances: " << instances;
    if (degree_bound > 0) os << ", degree bound " << degree_bound;
    os << ", " << elapsed_ms << " ms";
    if (counterexample) {
        os << "\n  counterexample input: " << counterexample->input;
        os << "\n  lhs: " << counterexample->lhs;
        os << "\n  rhs: " << counterexample->rhs;
        if (!counterexample->where.empty()) os << "\n  where: " << counterexample->where;
    }
    return os.str();
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["equation"] = target;
    j["backend"] = backend;
    j["seed"] = seed;
    j["instances"] = instances;
    if (degree_bound > 0) j["degree_bound"] = degree_bound;
    j["result"] = pass ? "pass" : "fail";
    if (counterexample) {
        j["counterexample"] = nlohmann::ordered_json{{"input", counterexample->input},
                                                     {"lhs", counterexample->lhs},
                                                     {"rhs", counterexample->rhs},
                                                     {"where", counterexample->where}};
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::parse_error, std::string("bad report: ") + e.what());
    }
    VerificationReport rep;
    rep.target = j.at("equation").get<std::string>();
    rep.backend = j.at("backend").get<std::string>();
    rep.seed = j.at("seed").get<uint64_t>();
    rep.instances = j.at("instances").get<std::string>();
    rep.degree_bound = j.value("degree_bound", uint64_t{0});
    rep.pass = j.at("result").get<std::string>() == "pass";
    if (j.contains("counterexample")) {
        const auto& c = j.at("counterexample");
        rep.counterexample = Counterexample{
            c.at("input").get<std::string>(), c.at("lhs").get<std::string>(),
            c.at("rhs").get<std::string>(), c.value("where", std::string{})};
    }
    rep.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
    return rep;
}

}  // namespace trefl
