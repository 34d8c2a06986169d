/*
 * verifier.hpp
 * ------------
 * Backend-pluggable identity checking. Three backends: symbolic proof via
 * rational-function equality, exact-rational sampling with a seeded
 * generator, and exhaustive enumeration over bounded boxes. Everything is
 * exact; a check passes only on literal equality of states.
 */
#pragma once

#include "trefl/catalog.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

namespace trefl {

struct Backend {
    enum class Kind { Symbolic, Sample, Exhaustive };

    Kind kind = Kind::Sample;
    uint64_t seed = 0;
    uint64_t samples = 200;
    Int bound = 8;  // inclusive ceiling for nonnegative-integer slots

    static Backend symbolic();
    static Backend sample(uint64_t count, uint64_t seed);
    static Backend exhaustive(Int bound);

    std::string describe() const;
};

struct Counterexample {
    std::string input;
    std::string lhs;
    std::string rhs;
    std::string where;  // slot/component/line detail
};

struct VerificationReport {
    std::string target;
    std::string backend;
    uint64_t seed = 0;
    std::string instances;  // decimal count, or "proved" for symbolic
    bool pass = false;
    std::optional<Counterexample> counterexample;
    int64_t elapsed_ms = 0;
    uint64_t degree_bound = 0;  // sampling evidence metadata; 0 = not applicable

    std::string to_human() const;
    std::string to_json() const;  // stable key order
    static VerificationReport from_json(const std::string& text);
};

// Deterministic sampling: rational numerators/denominators uniform on
// [1, 2^16], integer slots uniform on [0, bound], bits on {0,1}. The
// generator sequence is fixed by the seed, independent of platform.
class SampleGen {
public:
    explicit SampleGen(uint64_t seed) : gen_(seed) {}

    Rational draw_rational();
    Int draw_int(const Int& bound);
    State draw_state(const SpaceSignature& sig, const Int& bound);

private:
    std::mt19937_64 gen_;
};

// Lexicographic, duplicate-free enumeration of the box over a signature
// (integer slots run 0..bound, bits 0..1). Errc::backend_incompatible for
// rational slots, Errc::box_too_large past `card_ceiling`.
uint64_t box_cardinality(const SpaceSignature& sig, const Int& bound);
void enumerate_box(const SpaceSignature& sig, const Int& bound,
                   const std::function<void(const State&)>& fn,
                   uint64_t card_ceiling = 200'000'000);

// LHS(x) == RHS(x) over the backend's instance set.
VerificationReport check_equation(const EquationSpec& eq, const MapBindings& overrides,
                                  const Backend& backend);
VerificationReport check_equation(const std::string& id, const Backend& backend);

// map^2 == id on the map's own argument domains.
VerificationReport check_involutive(const LocalMapPtr& map, const Backend& backend);

// map == reversal . map . reversal, on arguments valid both ways.
VerificationReport check_symmetric(const LocalMapPtr& map, const Backend& backend);

// T maps the folded subset into itself.
VerificationReport check_boundarizable(const CompositeExpr& t, const MapBindings& maps,
                                       const Backend& backend, const std::string& target);
VerificationReport check_boundarizable(const LocalMapPtr& r, const Backend& backend);

// Boundarization of `t` equals the closed-form arity-4 map `match`.
VerificationReport check_boundarize_match(const CompositeExpr& t, const MapBindings& maps,
                                          const LocalMapPtr& match, const Backend& backend,
                                          const std::string& target);

// Replay a derivation trace: every line of the file must equal line 1 as a
// map, on sampled (rational or mixed) states. Fails name the first
// differing line.
struct TraceFile {
    SpaceSignature signature_labels;  // labels only; domains inferred at bind time
    std::vector<CompositeExpr> lines;
    std::vector<size_t> line_numbers;  // 1-based file lines, for diagnostics
};

TraceFile load_trace(const std::string& path);
VerificationReport check_trace(const TraceFile& file, const MapBindings& maps,
                               const Backend& backend, const std::string& target);

}  // namespace trefl
