// Acceptance suite: one line per criterion, exact (zero-tolerance) checks
// throughout, fixed seeds, fixed bounds, fixed sample counts. Exits
// nonzero if any criterion fails or exceeds its runtime ceiling.

#include "test_support.hpp"

#include "trefl/catalog.hpp"
#include "trefl/verifier.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace trefl;

namespace {

const Catalog& cat() { return Catalog::instance(); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        pass &= ok;
        notes.push_back((ok ? "" : "FAILED: ") + what);
    }
    void require(const VerificationReport& rep) { require(rep.pass, rep.target + " [" + rep.backend + "] " + rep.instances); }
};

bool run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    std::string error;
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        error = e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = elapsed < budget_seconds;
    bool ok = out.pass && in_budget;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << title << "  ["
         << static_cast<int>(elapsed * 1000) << " ms / budget " << budget_seconds << " s]";
    std::cout << line.str() << "\n";
    if (!error.empty()) std::cout << "      error: " << error << "\n";
    if (!out.pass)
        for (const auto& n : out.notes)
            if (n.rfind("FAILED", 0) == 0) std::cout << "      " << n << "\n";
    if (!in_budget) std::cout << "      runtime budget exceeded\n";
    return ok;
}

State rat4(const char* csv) {
    return parse_state(csv, SpaceSignature::homogeneous(4, Dom::PosRat));
}

LocalMapPtr perturbed_3dr(int which) { return testing::perturbed_3dr(which); }

}  // namespace

int main() {
    bool all = true;
    const EquationSpec& te = cat().equation("te");
    const EquationSpec& tre = cat().equation("tre");

    all &= run_criterion(1, "tetrahedron equation for 3dr, symbolic proof + 1000 samples", 5.0,
                         [&](Outcome& o) {
                             o.require(check_equation("te", Backend::symbolic()));
                             o.require(check_equation("te", Backend::sample(1000, 20250101)));
                         });

    all &= run_criterion(
        2, "boundarizability, symbolic proofs (plain, electrical with symbolic coupling, "
           "two-component)",
        30.0, [&](Outcome& o) {
            o.require(check_boundarizable(cat().map("3dr"), Backend::symbolic()));
            o.require(check_boundarizable(Catalog::make_3dr_electrical(std::nullopt),
                                          Backend::symbolic()));
            o.require(check_boundarizable(cat().map("3dr-vec"), Backend::symbolic()));
        });

    all &= run_criterion(
        3, "boundarizations equal the closed forms, symbolic, all components", 30.0,
        [&](Outcome& o) {
            MapBindings mr{{"R", cat().map("3dr")}};
            o.require(check_boundarize_match(tetra_composite("R"), mr, cat().map("3dj"),
                                             Backend::symbolic(), "boundarize(3dr) == 3dj"));
            MapBindings me{{"R", Catalog::make_3dr_electrical(std::nullopt)}};
            o.require(check_boundarize_match(
                tetra_composite("R"), me, Catalog::make_3dj_electrical(std::nullopt),
                Backend::symbolic(), "boundarize(3dr-electrical) == 3dj-electrical"));
            MapBindings mv{{"R", cat().map("3dr-vec")}};
            o.require(check_boundarize_match(tetra_composite("R"), mv, cat().map("3dj-vec"),
                                             Backend::symbolic(),
                                             "boundarize(3dr-vec) == 3dj-vec"));
            // spot value from the worked chain
            auto j = boundarize(cat().map("3dr"), "bd");
            std::vector<Scalar> a = rat4("1,1,1,1").values;
            j->apply(a);
            o.require(state_to_string(State{a}) == "1/5, 5/3, 9/5, 1/3",
                      "boundarize(3dr)(1,1,1,1) == (1/5, 5/3, 9/5, 1/3)");
        });

    all &= run_criterion(
        4, "reflection equation, 500 samples per pair; electrical coupling at 1, 2, 1/3", 60.0,
        [&](Outcome& o) {
            o.require(check_equation("tre", Backend::sample(500, 41)));
            MapBindings vec{{"R", cat().map("3dr-vec")}, {"J", cat().map("3dj-vec")}};
            o.require(check_equation(tre, vec, Backend::sample(500, 42)));
            int sub = 0;
            for (const Rational& lam : {Rational(1), Rational(2), Rational(1, 3)}) {
                MapBindings el{{"R", Catalog::make_3dr_electrical(lam)},
                               {"J", Catalog::make_3dj_electrical(lam)}};
                o.require(check_equation(tre, el, Backend::sample(500, 43 + sub++)));
            }
        });

    all &= run_criterion(
        5, "tropical suite, exhaustive (117649 + 1953125 + 2401 states)", 300.0, [&](Outcome& o) {
            MapBindings rc{{"R", cat().map("3dr-crystal")}};
            o.require(check_equation(te, rc, Backend::exhaustive(Int(6))));
            o.require(check_equation("tre-crystal", Backend::exhaustive(Int(4))));
            o.require(check_boundarize_match(tetra_composite("R"), rc, cat().map("3dj-crystal"),
                                             Backend::exhaustive(Int(6)),
                                             "boundarize(3dr-crystal) == 3dj-crystal"));
        });

    all &= run_criterion(
        6, "mixed-domain suite, exhaustive, including the three verbatim proof chains", 600.0,
        [&](Outcome& o) {
            o.require(check_equation("te-super-1", Backend::exhaustive(Int(8))));
            o.require(check_equation("te-super-2", Backend::exhaustive(Int(8))));

            // verbatim chain replay on (x1,0,0,x4,0,0)
            auto m = cat().map("3dm");
            auto n = cat().map("3dn");
            SpaceSignature sig = cat().equation("te-super-1").signature();
            auto mk = [](std::initializer_list<Int> xs) {
                State s;
                for (const Int& x : xs) s.values.emplace_back(x);
                return s;
            };
            auto step = [&](State& s, const LocalMapPtr& map, std::vector<std::string> l) {
                s = apply_indexed(*map, l, sig, s);
            };
            bool chains = true;
            for (Int x1 = 1; x1 <= 8; ++x1)
                for (Int x4 = 1; x4 <= 8; ++x4) {
                    State s = mk({x1, 0, 0, x4, 0, 0});
                    step(s, n, {"3", "4", "6"});
                    chains &= s == mk({x1, 0, 1, Int(x4 - 1), 0, 1});
                    step(s, m, {"1", "2", "6"});
                    chains &= s == mk({Int(x1 - 1), 1, 1, Int(x4 - 1), 0, 0});
                    step(s, m, {"1", "3", "5"});
                    chains &= s == mk({x1, 1, 0, Int(x4 - 1), 1, 0});
                    step(s, n, {"2", "4", "5"});
                    chains &= s == mk({x1, 0, 0, x4, 0, 0});
                }
            for (Int x4 = 1; x4 <= 8; ++x4) {
                State s = mk({0, 0, 0, x4, 0, 0});
                step(s, n, {"3", "4", "6"});
                chains &= s == mk({0, 0, 1, Int(x4 - 1), 0, 1});
                step(s, m, {"1", "2", "6"});
                chains &= s == mk({0, 0, 1, Int(x4 - 1), 0, 1});
                step(s, m, {"1", "3", "5"});
                chains &= s == mk({1, 0, 0, Int(x4 - 1), 1, 1});
                step(s, n, {"2", "4", "5"});
                chains &= s == mk({1, 0, 0, Int(x4 - 1), 1, 1});
            }
            for (Int x1 = 0; x1 <= 8; ++x1) {
                State fixed = mk({x1, 0, 0, 0, 0, 0});
                State s = fixed;
                step(s, n, {"3", "4", "6"});
                chains &= s == fixed;
                step(s, m, {"1", "2", "6"});
                chains &= s == fixed;
                step(s, m, {"1", "3", "5"});
                chains &= s == fixed;
                step(s, n, {"2", "4", "5"});
                chains &= s == fixed;
            }
            o.require(chains, "verbatim proof chains on (x1,0,0,x4,0,0)");

            o.require(check_boundarize_match(cat().super_tetra(), cat().super_tetra_bindings(),
                                             cat().map("3dx"), Backend::exhaustive(Int(8)),
                                             "boundarize(super-T) == 3dx"));
            o.require(check_equation("tre-super", Backend::exhaustive(Int(4))));
        });

    all &= run_criterion(
        7, "twenty-factor identity on the 15-slot space", 300.0, [&](Outcome& o) {
            o.require(check_equation("r20", Backend::sample(200, 71)));
            const EquationSpec& r20 = cat().equation("r20");
            MapBindings el{{"R", Catalog::make_3dr_electrical(Rational(1))}};
            o.require(check_equation(r20, el, Backend::sample(200, 72)));
            o.require(check_equation("r20-super", Backend::exhaustive(Int(2))));
        });

    all &= run_criterion(8, "derivation traces, every line equals line 1", 120.0, [&](Outcome& o) {
        TraceFile a = load_trace(std::string(TREFL_DATA_DIR) + "/trace_a.dsl");
        o.require(check_trace(a, {{"R", cat().map("3dr")}}, Backend::sample(50, 81), "trace-A"));
        TraceFile b = load_trace(std::string(TREFL_DATA_DIR) + "/trace_b.dsl");
        Backend sampled = Backend::sample(50, 82);
        sampled.bound = 8;
        MapBindings mb{{"M", cat().map("3dm")},
                       {"N", cat().map("3dn")},
                       {"R", cat().map("3dr-crystal")}};
        o.require(check_trace(b, mb, sampled, "trace-B"));
    });

    all &= run_criterion(
        9, "involutivity and symmetry matrix matches the registered flags", 120.0,
        [&](Outcome& o) {
            auto expect = [&](const VerificationReport& rep, bool want, bool flag,
                              const std::string& what) {
                o.require(rep.pass == want && flag == want, what);
            };
            // involutivity: every catalog map
            for (const char* id : {"3dr", "3dj", "3dr-electrical", "3dj-electrical"})
                expect(check_involutive(cat().map(id), Backend::symbolic()), true,
                       cat().map(id)->involutive, std::string(id) + " involutive (symbolic)");
            expect(check_involutive(cat().map("3dr-vec"), Backend::symbolic()), true,
                   cat().map("3dr-vec")->involutive, "3dr-vec involutive (symbolic)");
            expect(check_involutive(cat().map("3dj-vec"), Backend::sample(200, 91)), true,
                   cat().map("3dj-vec")->involutive, "3dj-vec involutive (200 samples)");
            for (const char* id : {"3dr-crystal", "3dj-crystal", "3dm", "3dn", "3dx"})
                expect(check_involutive(cat().map(id), Backend::exhaustive(Int(8))), true,
                       cat().map(id)->involutive, std::string(id) + " involutive (exhaustive)");
            // the boundarization of an involutive map is involutive
            o.require(check_involutive(boundarize(cat().map("3dr"), "bd"), Backend::symbolic()));

            // symmetry
            for (const char* id : {"3dr", "3dr-electrical", "3dr-vec"})
                expect(check_symmetric(cat().map(id), Backend::symbolic()), true,
                       cat().map(id)->symmetric, std::string(id) + " symmetric (symbolic)");
            expect(check_symmetric(cat().map("3dr-crystal"), Backend::exhaustive(Int(8))), true,
                   cat().map("3dr-crystal")->symmetric, "3dr-crystal symmetric");
            expect(check_symmetric(cat().map("3dn"), Backend::exhaustive(Int(8))), true,
                   cat().map("3dn")->symmetric, "3dn symmetric");
            // expected negative, witness required
            auto rep = check_symmetric(cat().map("3dm"), Backend::exhaustive(Int(8)));
            o.require(!rep.pass && rep.counterexample.has_value() && !cat().map("3dm")->symmetric,
                      "3dm recorded non-symmetric with witness " +
                          (rep.counterexample ? rep.counterexample->input : ""));
        });

    all &= run_criterion(
        10, "negative controls: single-coefficient perturbations break the identities", 120.0,
        [&](Outcome& o) {
            for (int which = 0; which < 3; ++which) {
                auto broken = perturbed_3dr(which);
                MapBindings ov{{"R", broken}};
                auto c1s = check_equation(te, ov, Backend::symbolic());
                o.require(!c1s.pass && c1s.counterexample.has_value(),
                          broken->id + " fails the symbolic tetrahedron proof");
                auto c1 = check_equation(te, ov, Backend::sample(1000, 101 + which));
                o.require(!c1.pass && c1.counterexample.has_value(),
                          broken->id + " fails the sampled tetrahedron check");
                auto c4 = check_equation(tre, ov, Backend::sample(500, 104 + which));
                o.require(!c4.pass && c4.counterexample.has_value(),
                          broken->id + " fails the sampled reflection check");
            }
        });

    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << "\n";
    return all ? 0 : 1;
}
