/*
 * maps.hpp
 * --------
 * Evaluation kernels for every cataloged map. The birational kernels are
 * templates over the coefficient field so the same formula serves exact
 * rationals and (for one-shot use on fresh variables) naive symbolic
 * values. Separate *_sym kernels give the composition-friendly symbolic
 * rules: they build each component as an explicit numerator/denominator
 * pair with the common factors already cancelled, which keeps degrees flat
 * under repeated application. The piecewise-linear kernels work on plain
 * integers and are total on all of Z, including the intermediate negative
 * values some of the formulas pass through.
 */
#pragma once

#include "trefl/scalar.hpp"

#include <array>

namespace trefl {
namespace maps {

// (x1,x2,x3) -> (x1*x2/d, d, x2*x3/d),  d = x1+x3
template <class F>
std::array<F, 3> r3d(const F& x1, const F& x2, const F& x3) {
    F d = x1 + x3;
    return {x1 * x2 / d, d, x2 * x3 / d};
}

// Electrical variant: d = x1 + x3 + lam*x1*x2*x3; lam = 0 recovers r3d.
template <class F>
std::array<F, 3> r3d_electrical(const F& lam, const F& x1, const F& x2, const F& x3) {
    F d = x1 + x3 + lam * x1 * x2 * x3;
    return {x1 * x2 / d, d, x2 * x3 / d};
}

// Two-component variant; first components follow r3d, second components
// couple through s = x1*y1 + x3*y3.
template <class F>
std::array<PairT<F>, 3> r3d_vec(const PairT<F>& a, const PairT<F>& b, const PairT<F>& c) {
    F d = a.x + c.x;
    F s = a.x * a.y + c.x * c.y;
    return {PairT<F>{a.x * b.x / d, d * a.y * b.y / s},
            PairT<F>{d, s / d},
            PairT<F>{b.x * c.x / d, d * b.y * c.y / s}};
}

// Boundary map with y1 = x1*(x2+x4)^2 + x3*x4^2, y2 = x1*(x2+x4) + x3*x4.
template <class F>
std::array<F, 4> j3d(const F& x1, const F& x2, const F& x3, const F& x4) {
    F s = x2 + x4;
    F y1 = x1 * s * s + x3 * x4 * x4;
    F y2 = x1 * s + x3 * x4;
    return {x1 * x2 * x2 * x3 / y1, y1 / y2, y2 * y2 / y1, x2 * x3 * x4 / y2};
}

// One-parameter boundary map:
//   y1 = x1*(x2+x4)*(x2+x4+2*lam*x2*x3*x4) + x3*x4^2
//   y2 = x1*(x2+x4+2*lam*x2*x3*x4) + x3*x4
template <class F>
std::array<F, 4> j3d_electrical(const F& lam, const F& x1, const F& x2, const F& x3,
                                const F& x4) {
    F s = x2 + x4;
    F t = s + (lam + lam) * x2 * x3 * x4;
    F y1 = x1 * s * t + x3 * x4 * x4;
    F y2 = x1 * t + x3 * x4;
    return {x1 * x2 * x2 * x3 / y1, y1 / y2, y2 * y2 / y1, x2 * x3 * x4 / y2};
}

// Two-component boundary map; z follow j3d on first components, w couple
// both components.
template <class F>
std::array<PairT<F>, 4> j3d_vec(const PairT<F>& a, const PairT<F>& b, const PairT<F>& c,
                                const PairT<F>& d) {
    F sx = b.x + d.x;
    F z1 = a.x * sx * sx + c.x * d.x * d.x;
    F z2 = a.x * sx + c.x * d.x;
    F sw = b.x * b.y + d.x * d.y;
    F w1 = a.x * a.y * sw * sw + c.x * d.x * d.x * c.y * d.y * d.y;
    F w2 = a.x * a.y * sw + c.x * d.x * c.y * d.y;
    return {PairT<F>{a.x * b.x * b.x * c.x / z1, a.y * b.y * b.y * c.y * z1 / w1},
            PairT<F>{z1 / z2, z2 * w1 / (z1 * w2)},
            PairT<F>{z2 * z2 / z1, z1 * w2 * w2 / (z2 * z2 * w1)},
            PairT<F>{b.x * c.x * d.x / z2, b.y * c.y * d.y * z2 / w2}};
}

// Tropical limit of r3d: (x1+x2-m, m, x2+x3-m), m = min(x1,x3).
std::array<Int, 3> r3d_crystal(const Int& x1, const Int& x2, const Int& x3);

// Tropical limit of j3d.
std::array<Int, 4> j3d_crystal(const Int& x1, const Int& x2, const Int& x3, const Int& x4);

// Mixed-domain kernels on Z x {0,1} x {0,1} and {0,1} x Z x {0,1}.
std::array<Int, 3> m_mixed(const Int& x1, const Int& x2, const Int& x3);
std::array<Int, 3> n_mixed(const Int& x1, const Int& x2, const Int& x3);

// Mixed-domain boundary map on Z x {0,1} x Z x {0,1}.
std::array<Int, 4> x_mixed(const Int& x1, const Int& x2, const Int& x3, const Int& x4);

// Composition-friendly symbolic rules (cancelled common denominators).
std::array<RatFunc, 3> r3d_sym(const RatFunc& a, const RatFunc& b, const RatFunc& c);
std::array<RatFunc, 3> r3d_electrical_sym(const RatFunc& lam, const RatFunc& a,
                                          const RatFunc& b, const RatFunc& c);
std::array<SymPair, 3> r3d_vec_sym(const SymPair& a, const SymPair& b, const SymPair& c);
std::array<RatFunc, 4> j3d_sym(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                               const RatFunc& d);

}  // namespace maps
}  // namespace trefl
