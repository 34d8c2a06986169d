// Command-line front end: verify registered equations, boundarize maps,
// evaluate composites, and replay the bundled derivation traces.
//
// Exit codes: 0 = pass, 1 = verification failure, 2 = usage or input error.

#include "CLI11.hpp"
#include "trefl/verifier.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace trefl;

namespace {

struct CommonOpts {
    std::string backend = "sample";
    uint64_t samples = 200;
    uint64_t seed = 0;
    std::string bound = "8";
    std::string lambda;
    std::string format = "human";
    std::vector<std::string> map_overrides;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--backend", o.backend, "symbolic | sample | exhaustive")
        ->check(CLI::IsMember({"symbolic", "sample", "exhaustive"}));
    cmd->add_option("--samples", o.samples, "sample count for the sampling backend");
    cmd->add_option("--seed", o.seed, "seed for the sampling backend");
    cmd->add_option("--bound", o.bound, "inclusive ceiling for integer slots");
    cmd->add_option("--lambda", o.lambda,
                    "coupling for the electrical maps (rational, or 'symbolic')");
    cmd->add_option("--format", o.format, "human | structured")
        ->check(CLI::IsMember({"human", "structured"}));
    cmd->add_option("--map", o.map_overrides, "bind a composite name to a map id (NAME=ID)");
}

Backend make_backend(const CommonOpts& o) {
    Backend b;
    if (o.backend == "symbolic") {
        b = Backend::symbolic();
    } else if (o.backend == "exhaustive") {
        b = Backend::exhaustive(parse_int(o.bound));
    } else {
        b = Backend::sample(o.samples, o.seed);
        b.bound = parse_int(o.bound);
    }
    return b;
}

std::optional<Rational> parse_lambda(const std::string& text) {
    if (text == "symbolic") return std::nullopt;
    return parse_rational(text);
}

// Map id -> instance, honoring --lambda for the electrical pair.
LocalMapPtr resolve_map(const std::string& id, const CommonOpts& o) {
    const auto& cat = Catalog::instance();
    if (!o.lambda.empty()) {
        if (id == "3dr-electrical") return Catalog::make_3dr_electrical(parse_lambda(o.lambda));
        if (id == "3dj-electrical") return Catalog::make_3dj_electrical(parse_lambda(o.lambda));
    }
    if (!cat.has_map(id)) {
        std::string known;
        for (const auto& m : cat.map_ids()) known += " " + m;
        fail(Errc::unknown_map, "unknown map id '" + id + "'; known maps:" + known);
    }
    return cat.map(id);
}

MapBindings parse_overrides(const CommonOpts& o) {
    MapBindings out;
    for (const auto& spec : o.map_overrides) {
        auto eq = spec.find('=');
        if (eq == std::string::npos)
            fail(Errc::parse_error, "--map expects NAME=ID, got '" + spec + "'");
        out[spec.substr(0, eq)] = resolve_map(spec.substr(eq + 1), o);
    }
    return out;
}

int emit(const VerificationReport& rep, const std::string& format) {
    if (format == "structured")
        std::cout << rep.to_json() << "\n";
    else
        std::cout << rep.to_human() << "\n";
    return rep.pass ? 0 : 1;
}

int run_verify(const std::string& id, const CommonOpts& o) {
    const auto& cat = Catalog::instance();
    if (!cat.has_equation(id)) {
        std::string known;
        for (const auto& e : cat.equation_ids()) known += " " + e;
        fail(Errc::unknown_map, "unknown equation id '" + id + "'; known equations:" + known);
    }
    const EquationSpec& eq = cat.equation(id);
    MapBindings overrides = parse_overrides(o);
    if (!o.lambda.empty()) {
        auto lam = parse_lambda(o.lambda);
        for (const auto& [name, map] : eq.default_bindings) {
            if (overrides.count(name)) continue;
            if (map->id == "3dr-electrical") overrides[name] = Catalog::make_3dr_electrical(lam);
            if (map->id == "3dj-electrical") overrides[name] = Catalog::make_3dj_electrical(lam);
        }
    }
    return emit(check_equation(eq, overrides, make_backend(o)), o.format);
}

int run_boundarize(const std::string& id, const std::string& point, const std::string& match,
                   const CommonOpts& o) {
    const auto& cat = Catalog::instance();
    CompositeExpr t;
    MapBindings maps;
    if (id == "super-T") {
        t = cat.super_tetra();
        maps = cat.super_tetra_bindings();
    } else {
        LocalMapPtr r = resolve_map(id, o);
        if (r->arity != 3) fail(Errc::arity_mismatch, "boundarize needs an arity-3 map");
        t = tetra_composite("R");
        maps = {{"R", r}};
    }

    if (!point.empty()) {
        SpaceSignature sig6 = tetra_signature(t, maps);
        SpaceSignature sig4({{"1", sig6.dom(0)},
                             {"2", dom_intersect(sig6.dom(1), sig6.dom(2))},
                             {"3", sig6.dom(3)},
                             {"4", dom_intersect(sig6.dom(4), sig6.dom(5))}});
        State x = parse_state(point, sig4);
        LocalMapPtr j = boundarize(t, maps, "boundarization of " + id);
        std::vector<Scalar> a = x.values;
        j->apply(a);
        State out;
        out.values = std::move(a);
        std::cout << state_to_string(out) << "\n";
        return 0;
    }

    Backend backend = make_backend(o);
    VerificationReport cond = check_boundarizable(t, maps, backend, id + " boundarizable");
    if (!cond.pass) {
        std::cerr << "not boundarizable:\n";
        return emit(cond, o.format);
    }
    if (match.empty()) return emit(cond, o.format);
    LocalMapPtr m = resolve_map(match, o);
    return emit(check_boundarize_match(t, maps, m, backend,
                                       "boundarize(" + id + ") == " + match),
                o.format);
}

int run_eval(const std::string& dsl, const std::string& state_text,
             const std::string& labels_text, const CommonOpts& o) {
    CompositeExpr expr = parse_composite(dsl);
    MapBindings maps = parse_overrides(o);

    std::vector<std::string> labels;
    if (!labels_text.empty()) {
        std::string cur;
        for (char c : labels_text + ",") {
            if (c == ',') {
                if (!cur.empty()) labels.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
    } else {
        size_t n = std::count(state_text.begin(), state_text.end(), ',') + 1;
        for (size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    }

    SpaceSignature sig = infer_signature({expr}, labels, maps);
    State in = parse_state(state_text, sig);
    BoundComposite bound = bind_composite(expr, sig, maps);
    State out = eval_composite(bound, in);
    std::cout << state_to_string(out) << "\n";
    return 0;
}

int run_trace(const std::string& which, std::string data_dir, const CommonOpts& o) {
    const auto& cat = Catalog::instance();
    std::string path;
    MapBindings maps;
    if (which == "A" || which == "a") {
        path = data_dir + "/trace_a.dsl";
        maps = {{"R", cat.map("3dr")}};
    } else if (which == "B" || which == "b") {
        path = data_dir + "/trace_b.dsl";
        maps = {{"M", cat.map("3dm")}, {"N", cat.map("3dn")}, {"R", cat.map("3dr-crystal")}};
    } else {
        fail(Errc::parse_error, "trace id must be A or B");
    }
    for (const auto& [name, map] : parse_overrides(o)) maps[name] = map;
    Backend backend = make_backend(o);
    if (backend.kind == Backend::Kind::Symbolic)
        fail(Errc::backend_incompatible, "trace replay uses sampled or enumerated states");
    TraceFile file = load_trace(path);
    return emit(check_trace(file, maps, backend, "trace-" + which), o.format);
}

int run_list() {
    const auto& cat = Catalog::instance();
    std::cout << "maps:\n";
    for (const auto& id : cat.map_ids()) {
        const auto& e = cat.entry(id);
        std::cout << "  " << id << "  arity " << e.map->arity
                  << (e.map->involutive ? ", involutive" : "")
                  << (e.map->symmetric ? ", symmetric" : "")
                  << (e.boundarizable ? ", boundarizable" : "");
        if (!e.partner.empty()) std::cout << ", partner " << e.partner;
        std::cout << "  -- " << e.description << "\n";
    }
    std::cout << "equations:\n";
    for (const auto& id : cat.equation_ids()) {
        const auto& eq = cat.equation(id);
        std::cout << "  " << id << "  [" << eq.signature().to_string() << "]  -- "
                  << eq.description << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification engine for tetrahedron and 3D reflection maps"};
    app.require_subcommand(1);

    CommonOpts vo, bo, eo, to;
    std::string verify_id, bd_id, bd_point, bd_match, eval_dsl, eval_state, eval_labels,
        trace_id, trace_dir = "data";

    auto* verify = app.add_subcommand("verify", "check a registered equation");
    verify->add_option("equation", verify_id, "equation id")->required();
    add_common(verify, vo);

    auto* bd = app.add_subcommand("boundarize", "fold a bulk map to its boundary map");
    bd->add_option("map-id", bd_id, "arity-3 map id, or super-T")->required();
    bd->add_option("--point", bd_point, "evaluate the boundary map at a 4-slot state");
    bd->add_option("--match", bd_match, "certify equality with a registered arity-4 map");
    add_common(bd, bo);

    auto* ev = app.add_subcommand("eval", "apply a composite to a state");
    ev->add_option("composite", eval_dsl, "composite in DSL form (may be empty)");
    ev->add_option("--state", eval_state, "comma-separated input state")->required();
    ev->add_option("--labels", eval_labels, "slot labels (default 1..n)");
    add_common(ev, eo);

    auto* tr = app.add_subcommand("trace", "replay a bundled derivation trace");
    tr->add_option("which", trace_id, "A or B")->required();
    tr->add_option("--data-dir", trace_dir, "directory holding the trace files");
    add_common(tr, to);

    app.add_subcommand("list", "list registered maps and equations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_id, vo);
        if (bd->parsed()) return run_boundarize(bd_id, bd_point, bd_match, bo);
        if (ev->parsed()) return run_eval(eval_dsl, eval_state, eval_labels, eo);
        if (tr->parsed()) return run_trace(trace_id, trace_dir, to);
        return run_list();
    } catch (const Error& e) {
        if (e.code() == Errc::not_in_folded_subset) {
            std::cerr << "not boundarizable: " << e.what() << "\n";
            return 1;
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
