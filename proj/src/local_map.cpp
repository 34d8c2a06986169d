#include "trefl/local_map.hpp"

#include "trefl/ratfunc.hpp"

namespace trefl {

void LocalMap::apply(std::span<Scalar> args) const {
    if (static_cast<int>(args.size()) != arity)
        fail(Errc::arity_mismatch, id + " is arity " + std::to_string(arity));
    for (int i = 0; i < arity; ++i) {
        if (!args[i].fits(arg_doms[i]))
            fail(Errc::domain_mismatch, id + " argument " + std::to_string(i + 1) + " = " +
                                            scalar_to_string(args[i]) + " not in " +
                                            dom_name(arg_doms[i]));
    }
    kernel(args);
    // Domain closure: outputs must land back in the argument domains.
    for (int i = 0; i < arity; ++i) {
        if (!args[i].fits(arg_doms[i]))
            fail(Errc::domain_mismatch, id + " output " + std::to_string(i + 1) + " = " +
                                            scalar_to_string(args[i]) + " left " +
                                            dom_name(arg_doms[i]));
    }
}

}  // namespace trefl
