/*
 * boundarize.hpp
 * --------------
 * The folded subset of a 6-slot space (slots 2=3 and 5=6), the bijections
 * between it and the 4-slot space, the tetrahedral composite, and the
 * boundarization turning a bulk arity-3 map into an arity-4 boundary map.
 */
#pragma once

#include "trefl/composite.hpp"

namespace trefl {

// (x1,x2,x3,x4) -> (x1,x2,x2,x3,x4,x4)
State fold_embed(const State& x4);

// Inverse on the folded subset; Errc::not_in_folded_subset when slot 2 != 3
// or slot 5 != 6.
State fold_project(const State& x6);

bool in_folded_subset(const State& x6);

// The canonical tetrahedral composite R[2,4,5] R[1,3,5] R[1,2,6] R[3,4,6]
// over a single map name, plus its reversed factorization (the two are
// equal exactly when the map satisfies the tetrahedron equation).
CompositeExpr tetra_composite(const std::string& map_name);
CompositeExpr tetra_composite_reversed(const std::string& map_name);

// The mixed-map composite N[2,4,5] M[1,3,5] M[1,2,6] N[3,4,6].
CompositeExpr tetra_composite_mixed(const std::string& m_name, const std::string& n_name);

// 6-slot signature for a tetrahedral composite of the given bindings
// (labels "1".."6", domains inferred by unification).
SpaceSignature tetra_signature(const CompositeExpr& t, const MapBindings& maps);

// J(x) = project(T(embed(x))) as a new arity-4 local map. The returned
// map raises Errc::not_in_folded_subset at evaluation time if the
// composite was not actually boundarizable.
LocalMapPtr boundarize(const CompositeExpr& t, const MapBindings& maps, const std::string& id);

// Convenience for a homogeneous bulk map.
LocalMapPtr boundarize(const LocalMapPtr& r, const std::string& id);

}  // namespace trefl
