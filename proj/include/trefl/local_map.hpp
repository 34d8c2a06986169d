#pragma once

#include "trefl/scalar.hpp"

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace trefl {

// An arity-3 or arity-4 map on a fixed tuple of slot domains. The kernel
// mutates the gathered scalars in place and must preserve the declared
// domains (domain closure is checked by the caller after every
// application). Kernels dispatch on the scalar kind, so one map serves
// numeric and symbolic evaluation; kernels without a symbolic rule reject
// RatFunc inputs with Errc::backend_incompatible.
struct LocalMap {
    std::string id;
    int arity = 3;
    std::vector<Dom> arg_doms;
    bool involutive = false;   // verified at registration, re-checked in tests
    bool symmetric = false;
    int degree = 1;            // max total degree over components, for sample evidence
    std::vector<std::string> extra_symbols;  // symbolic parameters required in scope
    std::function<void(std::span<Scalar>)> kernel;

    void apply(std::span<Scalar> args) const;
};

using LocalMapPtr = std::shared_ptr<const LocalMap>;

}  // namespace trefl
