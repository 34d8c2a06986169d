/*
 * catalog.hpp
 * -----------
 * Registry of every concrete map and named equation, with declared
 * properties and bulk/boundary partner links. Declared flags are starting
 * claims only; the verifier re-establishes each one at test time.
 */
#pragma once

#include "trefl/boundarize.hpp"
#include "trefl/composite.hpp"
#include "trefl/expr.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trefl {

struct CatalogEntry {
    LocalMapPtr map;
    std::string description;
    bool boundarizable = false;
    std::string partner;                  // bulk <-> boundary closed form, if any
    std::vector<ExprPtr> component_exprs; // subtraction-free component formulas, if registered
};

struct EquationSpec {
    std::string id;
    std::string description;
    std::vector<std::string> labels;   // slot labels in order
    CompositeExpr lhs, rhs;
    MapBindings default_bindings;

    // Signature under the given bindings; domains inferred by unifying the
    // argument domains of every factor on both sides. The mixed-domain
    // equations are not typed anywhere explicitly: unification is what
    // forces Z slots {1,2,3,4,7} (and the barred copies on the 15-slot
    // space) against bit slots everywhere else, and a conflict here means
    // the equation was registered wrong.
    SpaceSignature signature(const MapBindings& bindings) const;
    SpaceSignature signature() const { return signature(default_bindings); }

    // Default bindings overlaid with `overrides` (names must exist).
    MapBindings bindings_with(const MapBindings& overrides) const;
};

class Catalog {
public:
    static const Catalog& instance();

    const CatalogEntry& entry(const std::string& id) const;
    LocalMapPtr map(const std::string& id) const;
    const EquationSpec& equation(const std::string& id) const;

    std::vector<std::string> map_ids() const;
    std::vector<std::string> equation_ids() const;

    bool has_map(const std::string& id) const;
    bool has_equation(const std::string& id) const;

    // Parametric electrical maps; lam = nullopt gives the symbolic-lambda
    // variant usable only under symbolic evaluation.
    static LocalMapPtr make_3dr_electrical(std::optional<Rational> lam);
    static LocalMapPtr make_3dj_electrical(std::optional<Rational> lam);

    // The mixed tetrahedral composite N[2,4,5] M[1,3,5] M[1,2,6] N[3,4,6]
    // with the catalog M and N bound ("super-T" on the command line).
    CompositeExpr super_tetra() const;
    MapBindings super_tetra_bindings() const;

private:
    Catalog();

    std::map<std::string, CatalogEntry> entries_;
    std::vector<std::string> map_order_;
    std::map<std::string, EquationSpec> equations_;
    std::vector<std::string> equation_order_;
};

}  // namespace trefl
