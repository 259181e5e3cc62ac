#include <catch2/catch_amalgamated.hpp>

#include "toprec/curve.hpp"

using namespace toprec;

namespace {

CoeffFrac qmono(long num, long den, int exp) {
    return CoeffFrac::monomial(BigRational(num, den), exp);
}

} // namespace

TEST_CASE("parametrization satisfies the curve equation", "[curve]") {
    // y^2 = 4 (x - q0)^2 (x + 2 q0) with x + 2 q0 = z^2.
    const ZLaurentPoly lhs = curve_y() * curve_y();
    const ZLaurentPoly rhs =
        (x_minus_q0() * x_minus_q0() * ZLaurentPoly::z_power(2)).scaled(CoeffFrac(4));
    CHECK(lhs == rhs);

    ZLaurentPoly x_plus_2q0 = curve_x();
    x_plus_2q0.add_term(0, qmono(2, 1, 1));
    CHECK(x_plus_2q0 == ZLaurentPoly::z_power(2));

    CHECK(curve_t() == qmono(-6, 1, 2));
    CHECK(d_dt(curve_t()).is_one());
}

TEST_CASE("phi is the primitive of y dx", "[curve]") {
    const ZLaurentPoly xprime = curve_x().dz();
    CHECK(curve_phi().dz() == curve_y() * xprime);
    CHECK(curve_phi().coeff(5) == CoeffFrac(BigRational(4, 5)));
}

TEST_CASE("ramification data", "[curve]") {
    // dx = 2z dz vanishes only at z = 0; y has its other zeros at z = +-s.
    CHECK(curve_x().dz() == ZLaurentPoly::z_power(1).scaled(CoeffFrac(2)));
    CHECK(x_minus_q0().eval_s().is_zero());
    CHECK(curve_y().eval_s().is_zero());

    CHECK(two_y_over_xprime() == x_minus_q0().scaled(CoeffFrac(2)));
    CHECK(inv_two_y_xprime() ==
          ZRationalFn(ZLaurentPoly(1), (x_minus_q0() * ZLaurentPoly::z_power(2)).scaled(CoeffFrac(8))));
    CHECK(branch_residue_factor() == qmono(1, 24, -1));
    CHECK(three_q0() == qmono(3, 1, 1));
}

TEST_CASE("kernel coefficients expand the recursion kernel", "[curve]") {
    // kappa_m is the z^(2m-1) coefficient of -1/(8 z (z^2 - 3 q0)(z^2 - z1^2)),
    // viewed as a polynomial in the spectator z1. Cross-check against the
    // geometric expansion of both pole factors.
    for (int m = 0; m <= 3; ++m) {
        const ZLaurentPoly km = kernel_kappa(m);
        ZLaurentPoly want;
        CoeffFrac w = qmono(-1, 8, 0);
        for (int i = 0; i <= m; ++i) {
            const int j = m - i;
            want.add_term(-2 * (j + 1), w * three_q0().pow(-(i + 1)));
        }
        CHECK(km == want);
    }

    // Lowest order explicitly: kappa_0 = -1/(24 q0) z1^-2.
    CHECK(kernel_kappa(0) == ZLaurentPoly::monomial(qmono(-1, 24, -1), -2));
    CHECK_THROWS_AS(kernel_kappa(-1), domain_error);
}
