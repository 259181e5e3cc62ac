#pragma once
// Geometry of the genus-zero spectral curve
//   y^2 = 4 (x - q0)^2 (x + 2 q0),
// rationally parametrized by x = z^2 - 2 q0, y = 2 z^3 - 6 q0 z, with the
// flow-time coordinate t = -6 q0^2. The ramification point of x sits at
// z = 0 and the deck transformation of x is z -> -z. The second sheet
// crossing, where y vanishes away from the ramification point, sits at
// z = s with s^2 = 3 q0.

#include "toprec/coeff.hpp"
#include "toprec/series.hpp"
#include "toprec/zpoly.hpp"

namespace toprec {

inline ZLaurentPoly curve_x() {
    ZLaurentPoly p;
    p.add_term(2, CoeffFrac(1));
    p.add_term(0, CoeffFrac::monomial(BigRational(-2), 1));
    return p;
}

inline ZLaurentPoly curve_y() {
    ZLaurentPoly p;
    p.add_term(3, CoeffFrac(2));
    p.add_term(1, CoeffFrac::monomial(BigRational(-6), 1));
    return p;
}

// t as an element of the coefficient ring.
inline CoeffFrac curve_t() { return CoeffFrac::monomial(BigRational(-6), 2); }

// Primitive of y dx along the curve: phi' = y x' gives
// phi = (4/5) z^5 - 4 q0 z^3.
inline ZLaurentPoly curve_phi() {
    ZLaurentPoly p;
    p.add_term(5, CoeffFrac(BigRational(4, 5)));
    p.add_term(3, CoeffFrac::monomial(BigRational(-4), 1));
    return p;
}

// x - q0 = z^2 - 3 q0, the factor whose roots are the off-ramification
// zeros of y.
inline ZLaurentPoly x_minus_q0() {
    ZLaurentPoly p;
    p.add_term(2, CoeffFrac(1));
    p.add_term(0, CoeffFrac::monomial(BigRational(-3), 1));
    return p;
}

// 2 y / x' = 2 (z^2 - 3 q0).
inline ZLaurentPoly two_y_over_xprime() {
    ZLaurentPoly p;
    p.add_term(2, CoeffFrac(2));
    p.add_term(0, CoeffFrac::monomial(BigRational(-6), 1));
    return p;
}

// 1 / (2 y x') = 1 / (8 z^2 (z^2 - 3 q0)).
inline ZRationalFn inv_two_y_xprime() {
    ZLaurentPoly den = x_minus_q0().shifted(2).scaled(CoeffFrac(8));
    return ZRationalFn(ZLaurentPoly(1), den);
}

inline CoeffFrac three_q0() { return CoeffFrac::monomial(BigRational(3), 1); }

// s / (y'(s) x'(s)) = 1 / (24 q0), the weight of the residue at the
// off-ramification zero of y.
inline CoeffFrac branch_residue_factor() { return CoeffFrac::monomial(BigRational(1, 24), -1); }

// Recursion kernel about the ramification point. With the integration
// variable z and a spectator point z1,
//   K = -1 / (8 z (z^2 - 3 q0) (z^2 - z1^2))
// expands in odd powers of z; the coefficient of z^(2m-1) is
//   kappa_m(z1) = (-1/8) sum_{i+j=m} (3 q0)^(-(i+1)) z1^(-2(j+1)).
// The returned polynomial lives in the spectator variable.
inline ZLaurentPoly kernel_kappa(int m) {
    if (m < 0) throw domain_error("kernel_kappa: negative order");
    ZLaurentPoly out;
    const CoeffFrac inv3q0 = three_q0().inverse();
    CoeffFrac w = CoeffFrac(BigRational(-1, 8)) * inv3q0;
    for (int i = 0; i <= m; ++i) {
        const int j = m - i;
        out.add_term(-2 * (j + 1), w);
        w *= inv3q0;
    }
    return out;
}

} // namespace toprec
