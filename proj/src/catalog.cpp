#include "trefl/catalog.hpp"

#include "trefl/maps.hpp"

#include <algorithm>
#include <array>

namespace trefl {

namespace {

bool all_rational(std::span<Scalar> a) {
    for (const auto& s : a)
        if (!s.is_rational()) return false;
    return true;
}

bool all_symbolic(std::span<Scalar> a) {
    for (const auto& s : a)
        if (!s.is_symbolic()) return false;
    return true;
}

[[noreturn]] void reject_kind(const std::string& id) {
    fail(Errc::backend_incompatible, id + " cannot evaluate on this scalar kind");
}

LocalMapPtr make_3dr() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dr";
    m->arity = 3;
    m->arg_doms = {Dom::PosRat, Dom::PosRat, Dom::PosRat};
    m->degree = 2;
    m->kernel = [](std::span<Scalar> a) {
        if (all_rational(a)) {
            auto r = maps::r3d(a[0].rat(), a[1].rat(), a[2].rat());
            for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
        } else if (all_symbolic(a)) {
            auto r = maps::r3d_sym(a[0].sym(), a[1].sym(), a[2].sym());
            for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
        } else {
            reject_kind("3dr");
        }
    };
    return m;
}

LocalMapPtr make_3dj() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dj";
    m->arity = 4;
    m->arg_doms = std::vector<Dom>(4, Dom::PosRat);
    m->degree = 4;
    m->kernel = [](std::span<Scalar> a) {
        if (all_rational(a)) {
            auto r = maps::j3d(a[0].rat(), a[1].rat(), a[2].rat(), a[3].rat());
            for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
        } else if (all_symbolic(a)) {
            auto r = maps::j3d_sym(a[0].sym(), a[1].sym(), a[2].sym(), a[3].sym());
            for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
        } else {
            reject_kind("3dj");
        }
    };
    return m;
}

LocalMapPtr make_3dr_crystal() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dr-crystal";
    m->arity = 3;
    m->arg_doms = {Dom::Trop, Dom::Trop, Dom::Trop};
    m->kernel = [](std::span<Scalar> a) {
        auto r = maps::r3d_crystal(a[0].integer(), a[1].integer(), a[2].integer());
        for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
    };
    return m;
}

LocalMapPtr make_3dj_crystal() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dj-crystal";
    m->arity = 4;
    m->arg_doms = std::vector<Dom>(4, Dom::Trop);
    m->kernel = [](std::span<Scalar> a) {
        auto r = maps::j3d_crystal(a[0].integer(), a[1].integer(), a[2].integer(), a[3].integer());
        for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
    };
    return m;
}

LocalMapPtr make_3dm() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dm";
    m->arity = 3;
    m->arg_doms = {Dom::Trop, Dom::Bit, Dom::Bit};
    m->kernel = [](std::span<Scalar> a) {
        auto r = maps::m_mixed(a[0].integer(), a[1].integer(), a[2].integer());
        for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
    };
    return m;
}

LocalMapPtr make_3dn() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dn";
    m->arity = 3;
    m->arg_doms = {Dom::Bit, Dom::Trop, Dom::Bit};
    m->kernel = [](std::span<Scalar> a) {
        auto r = maps::n_mixed(a[0].integer(), a[1].integer(), a[2].integer());
        for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
    };
    return m;
}

LocalMapPtr make_3dx() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dx";
    m->arity = 4;
    m->arg_doms = {Dom::Trop, Dom::Bit, Dom::Trop, Dom::Bit};
    m->kernel = [](std::span<Scalar> a) {
        auto r = maps::x_mixed(a[0].integer(), a[1].integer(), a[2].integer(), a[3].integer());
        for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
    };
    return m;
}

bool all_rat_pair(std::span<Scalar> a) {
    for (const auto& s : a)
        if (!s.is_rat_pair()) return false;
    return true;
}

bool all_sym_pair(std::span<Scalar> a) {
    for (const auto& s : a)
        if (!s.is_sym_pair()) return false;
    return true;
}

LocalMapPtr make_3dr_vec() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dr-vec";
    m->arity = 3;
    m->arg_doms = std::vector<Dom>(3, Dom::RatPair);
    m->degree = 3;
    m->kernel = [](std::span<Scalar> a) {
        if (all_rat_pair(a)) {
            auto r = maps::r3d_vec(a[0].rat_pair(), a[1].rat_pair(), a[2].rat_pair());
            for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
        } else if (all_sym_pair(a)) {
            auto r = maps::r3d_vec_sym(a[0].sym_pair(), a[1].sym_pair(), a[2].sym_pair());
            for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
        } else {
            reject_kind("3dr-vec");
        }
    };
    return m;
}

LocalMapPtr make_3dj_vec() {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dj-vec";
    m->arity = 4;
    m->arg_doms = std::vector<Dom>(4, Dom::RatPair);
    m->degree = 8;
    m->kernel = [](std::span<Scalar> a) {
        if (all_rat_pair(a)) {
            auto r = maps::j3d_vec(a[0].rat_pair(), a[1].rat_pair(), a[2].rat_pair(),
                                   a[3].rat_pair());
            for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
        } else if (all_sym_pair(a)) {
            auto r = maps::j3d_vec(a[0].sym_pair(), a[1].sym_pair(), a[2].sym_pair(),
                                   a[3].sym_pair());
            for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
        } else {
            reject_kind("3dj-vec");
        }
    };
    return m;
}

// Coupling scalar for the symbolic path: a fixed rational, or the ambient
// "lam" variable when the map was built with a symbolic coupling.
RatFunc coupling_sym(const std::optional<Rational>& lam, const VarTablePtr& vars) {
    if (lam) return RatFunc::constant(vars, *lam);
    return RatFunc::variable(vars, "lam");
}

}  // namespace

LocalMapPtr Catalog::make_3dr_electrical(std::optional<Rational> lam) {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dr-electrical";
    m->arity = 3;
    m->arg_doms = std::vector<Dom>(3, Dom::PosRat);
    m->degree = 4;
    if (!lam) m->extra_symbols = {"lam"};
    m->kernel = [lam](std::span<Scalar> a) {
        if (all_rational(a)) {
            if (!lam)
                fail(Errc::backend_incompatible,
                     "3dr-electrical with symbolic coupling needs symbolic arguments");
            auto r = maps::r3d_electrical(Rational(*lam), a[0].rat(), a[1].rat(), a[2].rat());
            for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
        } else if (all_symbolic(a)) {
            RatFunc l = coupling_sym(lam, a[0].sym().vars());
            auto r = maps::r3d_electrical_sym(l, a[0].sym(), a[1].sym(), a[2].sym());
            for (int i = 0; i < 3; ++i) a[i] = Scalar(std::move(r[i]));
        } else {
            reject_kind("3dr-electrical");
        }
    };
    return m;
}

LocalMapPtr Catalog::make_3dj_electrical(std::optional<Rational> lam) {
    auto m = std::make_shared<LocalMap>();
    m->id = "3dj-electrical";
    m->arity = 4;
    m->arg_doms = std::vector<Dom>(4, Dom::PosRat);
    m->degree = 6;
    if (!lam) m->extra_symbols = {"lam"};
    m->kernel = [lam](std::span<Scalar> a) {
        if (all_rational(a)) {
            if (!lam)
                fail(Errc::backend_incompatible,
                     "3dj-electrical with symbolic coupling needs symbolic arguments");
            auto r = maps::j3d_electrical(Rational(*lam), a[0].rat(), a[1].rat(), a[2].rat(),
                                          a[3].rat());
            for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
        } else if (all_symbolic(a)) {
            RatFunc l = coupling_sym(lam, a[0].sym().vars());
            auto r = maps::j3d_electrical(l, a[0].sym(), a[1].sym(), a[2].sym(), a[3].sym());
            for (int i = 0; i < 4; ++i) a[i] = Scalar(std::move(r[i]));
        } else {
            reject_kind("3dj-electrical");
        }
    };
    return m;
}

namespace {

// Registration-time probes for the involutive/symmetric flags. Discrete
// maps are probed on a small exhaustive box, rational ones on a handful of
// fixed points; the test suite re-establishes every flag with the strong
// backends.
std::vector<State> probe_points(const std::vector<Dom>& doms) {
    std::vector<State> out;
    const std::array<Rational, 6> rats = {Rational(1),      Rational(2), Rational(1, 2),
                                           Rational(3, 5),  Rational(7), Rational(5, 3)};
    bool discrete = true;
    for (Dom d : doms)
        if (d == Dom::PosRat || d == Dom::RatPair) discrete = false;
    if (discrete) {
        size_t n = doms.size();
        std::vector<Int> v(n, Int(0));
        for (;;) {
            State s;
            for (const auto& x : v) s.values.emplace_back(x);
            out.push_back(std::move(s));
            size_t i = 0;
            for (; i < n; ++i) {
                Int limit = doms[i] == Dom::Bit ? 1 : 3;
                if (v[i] < limit) {
                    ++v[i];
                    break;
                }
                v[i] = 0;
            }
            if (i == n) break;
        }
        return out;
    }
    for (size_t k = 0; k < 5; ++k) {
        State s;
        for (size_t i = 0; i < doms.size(); ++i) {
            const Rational& r1 = rats[(k + 2 * i) % rats.size()];
            const Rational& r2 = rats[(k + 2 * i + 1) % rats.size()];
            if (doms[i] == Dom::RatPair)
                s.values.emplace_back(RatPair{r1, r2});
            else
                s.values.emplace_back(r1);
        }
        out.push_back(std::move(s));
    }
    return out;
}

bool probe_involutive(const LocalMap& m) {
    for (const auto& p : probe_points(m.arg_doms)) {
        std::vector<Scalar> a = p.values;
        m.apply(a);
        m.apply(a);
        for (size_t i = 0; i < a.size(); ++i)
            if (!scalar_equal(a[i], p.values[i])) return false;
    }
    return true;
}

bool probe_symmetric(const LocalMap& m) {
    if (m.arity != 3) return false;
    std::vector<Dom> doms = {dom_intersect(m.arg_doms[0], m.arg_doms[2]), m.arg_doms[1],
                             dom_intersect(m.arg_doms[0], m.arg_doms[2])};
    for (const auto& p : probe_points(doms)) {
        std::vector<Scalar> fwd = p.values;
        m.apply(fwd);
        std::vector<Scalar> rev = {p.values[2], p.values[1], p.values[0]};
        m.apply(rev);
        std::reverse(rev.begin(), rev.end());
        for (size_t i = 0; i < 3; ++i)
            if (!scalar_equal(fwd[i], rev[i])) return false;
    }
    return true;
}

void set_flags(const LocalMapPtr& m) {
    auto* mm = const_cast<LocalMap*>(m.get());
    mm->involutive = probe_involutive(*m);
    if (m->arity == 3) mm->symmetric = probe_symmetric(*m);
}

const char* kTreLhs = "R[4,8,9] J[3,5,7,9] R[2,6,9] R[2,5,8] J[1,6,7,8] J[1,2,3,4] R[4,5,6]";
const char* kTreRhs = "R[4,5,6] J[1,2,3,4] J[1,6,7,8] R[2,5,8] R[2,6,9] J[3,5,7,9] R[4,8,9]";

const char* kR20Lhs =
    "R[4,8,9] R[4b,8b,9b] R[5,7,9] R[3,5b,9] R[3,5,9b] R[5b,7,9b] R[2,6,9b] R[2b,6b,9] "
    "R[2,5b,8] R[2b,5,8b] R[6b,7,8b] R[1,6,8b] R[1,6b,8] R[6,7,8] R[2,3,4] R[1,2b,4] "
    "R[1,2,4b] R[2b,3,4b] R[4b,5b,6b] R[4,5,6]";
const char* kR20Rhs =
    "R[4,5,6] R[4b,5b,6b] R[2,3,4] R[1,2b,4] R[1,2,4b] R[2b,3,4b] R[6b,7,8b] R[1,6,8b] "
    "R[1,6b,8] R[6,7,8] R[2b,5,8b] R[2,5b,8] R[2b,6b,9] R[2,6,9b] R[5,7,9] R[3,5b,9] "
    "R[3,5,9b] R[5b,7,9b] R[4b,8b,9b] R[4,8,9]";

const char* kR20SuperLhs =
    "M[4,8,9] M[4b,8b,9b] N[5,7,9] M[3,5b,9] M[3,5,9b] N[5b,7,9b] M[2,6,9b] M[2b,6b,9] "
    "M[2,5b,8] M[2b,5,8b] N[6b,7,8b] M[1,6,8b] M[1,6b,8] N[6,7,8] R[2,3,4] R[1,2b,4] "
    "R[1,2,4b] R[2b,3,4b] M[4b,5b,6b] M[4,5,6]";
const char* kR20SuperRhs =
    "M[4,5,6] M[4b,5b,6b] R[2,3,4] R[1,2b,4] R[1,2,4b] R[2b,3,4b] N[6b,7,8b] M[1,6,8b] "
    "M[1,6b,8] N[6,7,8] M[2b,5,8b] M[2,5b,8] M[2b,6b,9] M[2,6,9b] N[5,7,9] M[3,5b,9] "
    "M[3,5,9b] N[5b,7,9b] M[4b,8b,9b] M[4,8,9]";

std::vector<std::string> labels_n(size_t n) {
    std::vector<std::string> out;
    for (size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

std::vector<std::string> labels_15() {
    return {"1", "2", "2b", "3", "4", "4b", "5", "5b", "6", "6b", "7", "8", "8b", "9", "9b"};
}

}  // namespace

SpaceSignature EquationSpec::signature(const MapBindings& bindings) const {
    return infer_signature({lhs, rhs}, labels, bindings);
}

MapBindings EquationSpec::bindings_with(const MapBindings& overrides) const {
    MapBindings out = default_bindings;
    for (const auto& [name, map] : overrides) {
        if (!out.count(name))
            fail(Errc::unknown_map, "equation " + id + " has no map named '" + name + "'");
        out[name] = map;
    }
    return out;
}

Catalog::Catalog() {
    auto add_map = [this](LocalMapPtr m, std::string description, bool boundarizable,
                          std::string partner, std::vector<std::string> exprs = {}) {
        set_flags(m);
        CatalogEntry e;
        e.map = m;
        e.description = std::move(description);
        e.boundarizable = boundarizable;
        e.partner = std::move(partner);
        for (const auto& s : exprs) e.component_exprs.push_back(parse_expr(s));
        map_order_.push_back(m->id);
        entries_.emplace(m->id, std::move(e));
    };

    add_map(make_3dr(), "birational bulk map on positive rationals", true, "3dj",
            {"x1*x2/(x1+x3)", "x1+x3", "x2*x3/(x1+x3)"});
    add_map(make_3dj(), "boundary closed form for 3dr", false, "3dr",
            {"x1*x2^2*x3/(x1*(x2+x4)^2+x3*x4^2)",
             "(x1*(x2+x4)^2+x3*x4^2)/(x1*(x2+x4)+x3*x4)",
             "(x1*(x2+x4)+x3*x4)^2/(x1*(x2+x4)^2+x3*x4^2)",
             "x2*x3*x4/(x1*(x2+x4)+x3*x4)"});
    add_map(make_3dr_crystal(), "tropical limit of 3dr on nonnegative integers", true,
            "3dj-crystal");
    add_map(make_3dj_crystal(), "tropical limit of 3dj", false, "3dr-crystal");
    add_map(make_3dr_electrical(Rational(1)), "electrical one-parameter bulk map (default lam=1)",
            true, "3dj-electrical");
    add_map(make_3dj_electrical(Rational(1)), "boundary closed form for 3dr-electrical", false,
            "3dr-electrical");
    add_map(make_3dr_vec(), "two-component bulk map", true, "3dj-vec");
    add_map(make_3dj_vec(), "boundary closed form for 3dr-vec", false, "3dr-vec");
    add_map(make_3dm(), "mixed-domain bulk map on Z x bit x bit", false, "");
    add_map(make_3dn(), "mixed-domain bulk map on bit x Z x bit", false, "");
    add_map(make_3dx(), "mixed-domain boundary map on Z x bit x Z x bit", false, "");

    auto add_eq = [this](std::string id, std::string description, std::vector<std::string> labels,
                         const std::string& lhs, const std::string& rhs, MapBindings bindings) {
        EquationSpec eq;
        eq.id = std::move(id);
        eq.description = std::move(description);
        eq.labels = std::move(labels);
        eq.lhs = parse_composite(lhs);
        eq.rhs = parse_composite(rhs);
        eq.default_bindings = std::move(bindings);
        eq.signature();  // registration-time consistency check of the slot typing
        equation_order_.push_back(eq.id);
        equations_.emplace(eq.id, std::move(eq));
    };

    const auto r = map("3dr");
    const auto j = map("3dj");
    const auto rc = map("3dr-crystal");
    const auto jc = map("3dj-crystal");
    const auto re = map("3dr-electrical");
    const auto je = map("3dj-electrical");
    const auto mm = map("3dm");
    const auto nn = map("3dn");
    const auto xx = map("3dx");

    add_eq("te", "tetrahedron equation on six slots",
           labels_n(6), "R[2,4,5] R[1,3,5] R[1,2,6] R[3,4,6]",
           "R[3,4,6] R[1,2,6] R[1,3,5] R[2,4,5]", {{"R", r}});
    add_eq("te-usual", "tetrahedron equation, conventional index pattern",
           labels_n(6), "R[1,2,3] R[1,4,5] R[2,4,6] R[3,5,6]",
           "R[3,5,6] R[2,4,6] R[1,4,5] R[1,2,3]", {{"R", r}});
    add_eq("tre", "reflection equation on nine slots", labels_n(9), kTreLhs, kTreRhs,
           {{"R", r}, {"J", j}});
    add_eq("tre-crystal", "reflection equation, tropical pair", labels_n(9), kTreLhs, kTreRhs,
           {{"R", rc}, {"J", jc}});
    add_eq("tre-1para", "reflection equation, electrical pair", labels_n(9), kTreLhs, kTreRhs,
           {{"R", re}, {"J", je}});
    add_eq("te-super-1", "tetrahedron equation for the mixed M/N pair", labels_n(6),
           "N[2,4,5] M[1,3,5] M[1,2,6] N[3,4,6]", "N[3,4,6] M[1,2,6] M[1,3,5] N[2,4,5]",
           {{"M", mm}, {"N", nn}});
    add_eq("te-super-2", "tetrahedron equation mixing the tropical map with M", labels_n(6),
           "R[1,2,3] M[1,4,5] M[2,4,6] M[3,5,6]", "M[3,5,6] M[2,4,6] M[1,4,5] R[1,2,3]",
           {{"R", rc}, {"M", mm}});
    add_eq("tre-super", "reflection equation for the mixed boundary maps", labels_n(9),
           "M[4,8,9] X[3,5,7,9] M[2,6,9] M[2,5,8] X[1,6,7,8] J[1,2,3,4] M[4,5,6]",
           "M[4,5,6] J[1,2,3,4] X[1,6,7,8] M[2,5,8] M[2,6,9] X[3,5,7,9] M[4,8,9]",
           {{"M", mm}, {"X", xx}, {"J", jc}});
    add_eq("r20", "twenty-factor identity on the 15-slot doubled space", labels_15(), kR20Lhs,
           kR20Rhs, {{"R", r}});
    add_eq("r20-super", "twenty-factor identity, mixed-domain variant", labels_15(), kR20SuperLhs,
           kR20SuperRhs, {{"M", mm}, {"N", nn}, {"R", rc}});
}

const Catalog& Catalog::instance() {
    static Catalog c;
    return c;
}

const CatalogEntry& Catalog::entry(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) fail(Errc::unknown_map, "unknown map id '" + id + "'");
    return it->second;
}

LocalMapPtr Catalog::map(const std::string& id) const { return entry(id).map; }

const EquationSpec& Catalog::equation(const std::string& id) const {
    auto it = equations_.find(id);
    if (it == equations_.end()) fail(Errc::unknown_map, "unknown equation id '" + id + "'");
    return it->second;
}

std::vector<std::string> Catalog::map_ids() const { return map_order_; }
std::vector<std::string> Catalog::equation_ids() const { return equation_order_; }

bool Catalog::has_map(const std::string& id) const { return entries_.count(id) != 0; }
bool Catalog::has_equation(const std::string& id) const { return equations_.count(id) != 0; }

CompositeExpr Catalog::super_tetra() const { return tetra_composite_mixed("M", "N"); }

MapBindings Catalog::super_tetra_bindings() const {
    return {{"M", map("3dm")}, {"N", map("3dn")}};
}

}  // namespace trefl
