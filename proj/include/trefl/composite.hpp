/*
 * composite.hpp
 * -------------
 * Indexed application of local maps on product spaces and composites of
 * them, with a small text DSL:
 *
 *     R[2,4,5] R[1,3,5] R[1,2,6] R[3,4,6]
 *
 * Whitespace-separated factors NAME[l1,l2,l3] or NAME[l1,l2,l3,l4]; the
 * rightmost factor is applied first. Labels are alphanumeric, with a
 * trailing 'b' for barred copies.
 *
 * Indexed application: for labels (i,j,k) in ascending signature order the
 * map's components land on slots i,j,k with arguments read in that order;
 * for any other label order the action is the ascending one conjugated by
 * the permutation sorting the labels. Both readings are implemented (the
 * direct rule in apply_indexed, the literal sandwich in
 * apply_indexed_sandwich) and tested to agree.
 */
#pragma once

#include "trefl/local_map.hpp"
#include "trefl/space.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace trefl {

struct Factor {
    std::string map_name;
    std::vector<std::string> labels;
};

struct CompositeExpr {
    std::vector<Factor> factors;  // leftmost first; evaluation starts at the back

    bool empty() const { return factors.empty(); }
};

// DSL <-> text. parse_composite reports syntax errors with the byte offset.
CompositeExpr parse_composite(const std::string& text);
std::string composite_to_string(const CompositeExpr& e);

using MapBindings = std::map<std::string, LocalMapPtr>;

// A composite resolved against a signature and bindings: label positions
// looked up, arities checked, slot domains matched against argument
// domains (a Bit slot may feed a Trop argument).
struct BoundFactor {
    LocalMapPtr map;
    std::vector<size_t> positions;
};

struct BoundComposite {
    std::vector<BoundFactor> factors;
    size_t space_size = 0;

    // Product of factor degrees: a crude upper bound on the composite's
    // component degrees, reported with sampling evidence.
    uint64_t degree_bound() const;
};

BoundComposite bind_composite(const CompositeExpr& e, const SpaceSignature& sig,
                              const MapBindings& maps);

// Infer slot domains by unifying the argument domains of every factor
// touching each label. Labels no factor touches default to PosRat.
// Conflicting requirements raise Errc::domain_mismatch.
SpaceSignature infer_signature(const std::vector<CompositeExpr>& exprs,
                               const std::vector<std::string>& labels,
                               const MapBindings& maps);

// Single indexed application; `labels` in any order, direct rule.
State apply_indexed(const LocalMap& map, const std::vector<std::string>& labels,
                    const SpaceSignature& sig, const State& in);

// Literal sorting-permutation sandwich, for the conjugation-law tests.
State apply_indexed_sandwich(const LocalMap& map, const std::vector<std::string>& labels,
                             const SpaceSignature& sig, const State& in);

// Functional evaluation, rightmost factor first.
State eval_composite(const BoundComposite& c, const State& in);

// In-place variant for hot loops; `scratch` must already hold the input.
void eval_composite_inplace(const BoundComposite& c, State& scratch);

// Apply one bound factor in place.
void apply_bound_factor(const BoundFactor& f, State& s);

}  // namespace trefl
