#include "trefl/maps.hpp"

#include <algorithm>

namespace trefl {
namespace maps {

std::array<Int, 3> r3d_crystal(const Int& x1, const Int& x2, const Int& x3) {
    Int m = std::min(x1, x3);
    return {Int(x1 + x2 - m), m, Int(x2 + x3 - m)};
}

std::array<Int, 4> j3d_crystal(const Int& x1, const Int& x2, const Int& x3, const Int& x4) {
    Int m = std::min(x2, x4);
    Int y1 = std::min(Int(x1 + 2 * m), Int(x3 + 2 * x4));
    Int y2 = std::min(Int(x1 + m), Int(x3 + x4));
    return {Int(x1 + 2 * x2 + x3 - y1), Int(y1 - y2), Int(2 * y2 - y1),
            Int(x2 + x3 + x4 - y2)};
}

std::array<Int, 3> m_mixed(const Int& x1, const Int& x2, const Int& x3) {
    Int v = std::min(Int(x1 + x2), x3);
    return {Int(x1 + x2 - v), v, Int(x2 + x3 - v)};
}

std::array<Int, 3> n_mixed(const Int& x1, const Int& x2, const Int& x3) {
    // 1-x1-x3 can go negative; the min keeps the outputs in domain.
    Int w = std::min(x2, Int(1 - x1 - x3));
    return {Int(x1 + w), Int(x2 - w), Int(x3 + w)};
}

std::array<Int, 4> x_mixed(const Int& x1, const Int& x2, const Int& x3, const Int& x4) {
    Int y1 = std::max(Int(x3 + std::min(Int(x1 + 2 * x2 + x4 - 1), Int(2 * x4))), Int(0));
    Int y2 = std::max(Int(x3 + std::min(Int(x1 + x2 + x4 - 1), x4)), Int(0));
    return {Int(x1 + 2 * x2 + x3 - y1), Int(y1 - y2), Int(2 * y2 - y1),
            Int(x2 + x3 + x4 - y2)};
}

// The *_sym rules build outputs directly as num/den pairs over the inputs'
// shared variable table, with the factors that a naive operator chain
// would duplicate already cancelled. Each is checked against the generic
// template rule in the tests (single application, ratfunc_equal).

std::array<RatFunc, 3> r3d_sym(const RatFunc& a, const RatFunc& b, const RatFunc& c) {
    const MultiPoly &na = a.num(), &da = a.den();
    const MultiPoly &nb = b.num(), &db = b.den();
    const MultiPoly &nc = c.num(), &dc = c.den();
    MultiPoly w = na * dc + nc * da;  // numerator of a + c over da*dc
    MultiPoly dbw = db * w;
    return {RatFunc(na * nb * dc, dbw), RatFunc(w, da * dc), RatFunc(nb * nc * da, dbw)};
}

std::array<RatFunc, 3> r3d_electrical_sym(const RatFunc& lam, const RatFunc& a, const RatFunc& b,
                                          const RatFunc& c) {
    const MultiPoly &na = a.num(), &da = a.den();
    const MultiPoly &nb = b.num(), &db = b.den();
    const MultiPoly &nc = c.num(), &dc = c.den();
    const MultiPoly &nl = lam.num(), &dl = lam.den();
    // d = a + c + lam*a*b*c over the common denominator dl*da*db*dc; the
    // db of that denominator cancels against the db of a*b and b*c.
    MultiPoly w = na * dc * db * dl + nc * da * db * dl + nl * (na * nb * nc);
    return {RatFunc(na * nb * dl * dc, w), RatFunc(w, dl * da * db * dc),
            RatFunc(nb * nc * dl * da, w)};
}

std::array<SymPair, 3> r3d_vec_sym(const SymPair& a, const SymPair& b, const SymPair& c) {
    const MultiPoly &nax = a.x.num(), &dax = a.x.den(), &nay = a.y.num(), &day = a.y.den();
    const MultiPoly &nbx = b.x.num(), &dbx = b.x.den(), &nby = b.y.num(), &dby = b.y.den();
    const MultiPoly &ncx = c.x.num(), &dcx = c.x.den(), &ncy = c.y.num(), &dcy = c.y.den();
    MultiPoly wx = nax * dcx + ncx * dax;                        // a.x + c.x
    MultiPoly wy = nax * nay * (dcx * dcy) + ncx * ncy * (dax * day);  // a.x*a.y + c.x*c.y
    MultiPoly dbx_wx = dbx * wx;
    MultiPoly dby_wy = dby * wy;
    return {SymPair{RatFunc(nax * nbx * dcx, dbx_wx), RatFunc(wx * nay * nby * dcy, dby_wy)},
            SymPair{RatFunc(wx, dax * dcx), RatFunc(wy, day * dcy * wx)},
            SymPair{RatFunc(nbx * ncx * dax, dbx_wx), RatFunc(wx * nby * ncy * day, dby_wy)}};
}

std::array<RatFunc, 4> j3d_sym(const RatFunc& a, const RatFunc& b, const RatFunc& c,
                               const RatFunc& d) {
    const MultiPoly &na = a.num(), &da = a.den();
    const MultiPoly &nb = b.num(), &db = b.den();
    const MultiPoly &nc = c.num(), &dc = c.den();
    const MultiPoly &nd = d.num(), &dd = d.den();
    MultiPoly p = nb * dd + nd * db;  // b + d over db*dd
    // y1 = a*(b+d)^2 + c*d^2 over da*db^2*dd^2*dc, y2 likewise to one power.
    MultiPoly w1 = na * (p * p) * dc + nc * (nd * nd) * (da * (db * db));
    MultiPoly w2 = na * p * dc + nc * nd * (da * db);
    return {RatFunc(na * (nb * nb) * nc * (dd * dd), w1), RatFunc(w1, db * dd * w2),
            RatFunc(w2 * w2, da * dc * w1), RatFunc(nb * nc * nd * da, w2)};
}

}  // namespace maps
}  // namespace trefl
