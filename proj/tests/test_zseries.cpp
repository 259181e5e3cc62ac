#include <catch2/catch_amalgamated.hpp>

#include "toprec/curve.hpp"
#include "toprec/hseries.hpp"
#include "toprec/series.hpp"
#include "toprec/zpoly.hpp"

using namespace toprec;

namespace {

CoeffFrac qmono(long num, long den, int exp) {
    return CoeffFrac::monomial(BigRational(num, den), exp);
}

// z^2 - 3 q0, the branch factor that appears in most denominators.
ZLaurentPoly branch_factor() {
    ZLaurentPoly p = ZLaurentPoly::z_power(2);
    p.add_term(0, qmono(-3, 1, 1));
    return p;
}

} // namespace

TEST_CASE("Laurent polynomial arithmetic and derivations", "[zseries]") {
    ZLaurentPoly p = ZLaurentPoly::z_power(3);
    p.add_term(-2, qmono(5, 2, 1));
    CHECK(p.min_exp() == -2);
    CHECK(p.max_exp() == 3);
    CHECK(p.coeff(0).is_zero());

    // d/dz then d/dx = (1/2z) d/dz.
    ZLaurentPoly dp = p.dz();
    CHECK(dp.coeff(2) == CoeffFrac(3));
    CHECK(dp.coeff(-3) == qmono(-5, 1, 1));
    ZLaurentPoly dxp = p.dx();
    CHECK(dxp.coeff(1) == qmono(3, 2, 0));
    CHECK(dxp.coeff(-4) == qmono(-5, 2, 1));

    CHECK(p.subst_neg().coeff(3) == CoeffFrac(-1));
    CHECK(p.subst_neg().coeff(-2) == qmono(5, 2, 1));
    CHECK((p - p).is_zero());
    CHECK(p.pow(2) == p * p);
    CHECK_THROWS_AS(p.pow(-1), domain_error);
}

TEST_CASE("d/dt at fixed x couples coefficients and z-motion", "[zseries]") {
    // x = z^2 - 2 q0 is t-independent by construction.
    CHECK(curve_x().dt_fixed_x().is_zero());

    // On z-free input it reduces to the coefficient derivation.
    const ZLaurentPoly c = ZLaurentPoly::monomial(CoeffFrac::q0_power(2), 0);
    CHECK(c.dt_fixed_x() == ZLaurentPoly::monomial(qmono(-1, 6, 0), 0));

    // Derivation property on products.
    const ZLaurentPoly a = curve_y();
    const ZLaurentPoly b = branch_factor();
    CHECK((a * b).dt_fixed_x() == a.dt_fixed_x() * b + a * b.dt_fixed_x());
}

TEST_CASE("polynomial division with remainder", "[zseries]") {
    const ZLaurentPoly den = branch_factor();
    const ZLaurentPoly num = den * den * curve_y();
    ZLaurentPoly rem;
    const ZLaurentPoly quo = detail::zpoly_divmod(num, den, &rem);
    CHECK(rem.is_zero());
    CHECK(quo == den * curve_y());

    ZLaurentPoly off = num;
    off.add_term(0, CoeffFrac(1));
    detail::zpoly_divmod(off, den, &rem);
    CHECK(rem == ZLaurentPoly(1));
    CHECK_THROWS_AS(detail::zpoly_divmod(num, ZLaurentPoly(), nullptr), arithmetic_error);
}

TEST_CASE("rational functions normalize to coprime form", "[zseries]") {
    const ZLaurentPoly bf = branch_factor();

    // Pure z-powers fold into the Laurent numerator.
    const ZRationalFn a(curve_y(), ZLaurentPoly::z_power(2));
    CHECK(a.is_laurent());
    CHECK(a.laurent().coeff(1) == CoeffFrac(2));

    // y = 2 z (z^2 - 3 q0) is divisible by the branch factor outright.
    CHECK(ZRationalFn(curve_y(), bf).is_laurent());

    // Common polynomial factors cancel; x and the branch factor are coprime.
    const ZRationalFn b(bf * curve_x(), bf * bf);
    CHECK(b == ZRationalFn(curve_x(), bf));
    CHECK_FALSE(b.is_laurent());
    CHECK(b.den() == bf);

    CHECK(b * ZRationalFn(bf) == ZRationalFn(curve_x()));
    CHECK(b.inverse() * b == ZRationalFn(1));
    CHECK((b - b).is_zero());
    CHECK_THROWS_AS(ZRationalFn(curve_y(), ZLaurentPoly()), arithmetic_error);
}

TEST_CASE("rational derivations obey the quotient rule", "[zseries]") {
    const ZRationalFn f(curve_x(), branch_factor());
    const ZRationalFn g(ZLaurentPoly::z_power(4), branch_factor());
    CHECK((f * g).dx() == f.dx() * g + f * g.dx());
    CHECK((f * g).dt_fixed_x() == f.dt_fixed_x() * g + f * g.dt_fixed_x());
    CHECK(f.inverse().dx() == -(f.dx() * f.inverse() * f.inverse()));
}

TEST_CASE("evaluation at the branch point z = s", "[zseries]") {
    CHECK(branch_factor().eval_s().is_zero());
    // y(s) = 2 s^3 - 6 q0 s = 2 s (s^2 - 3 q0) = 0.
    CHECK(curve_y().eval_s().is_zero());
    CHECK_FALSE(curve_x().eval_s().is_zero());
    CHECK_THROWS_AS(ZRationalFn(ZLaurentPoly(1), branch_factor()).eval_s(), pole_error);
}

TEST_CASE("series expansion about infinity", "[zseries]") {
    // In zeta = 1/z: 1/(z^2 - 3 q0) = zeta^2 + 3 q0 zeta^4 + 9 q0^2 zeta^6 + ...
    const ZRationalFn f(ZLaurentPoly(1), branch_factor());
    const auto s = expand_at_infinity(f, 8);
    CHECK(s.coeff(2) == CoeffFrac(1));
    CHECK(s.coeff(3).is_zero());
    CHECK(s.coeff(4) == qmono(3, 1, 1));
    CHECK(s.coeff(6) == qmono(9, 1, 2));
    CHECK_THROWS_AS(s.coeff(8), truncation_error);

    // Laurent input is reproduced verbatim (negative zeta powers).
    const auto y = expand_at_infinity(ZRationalFn(curve_y()), 4);
    CHECK(y.coeff(-3) == CoeffFrac(2));
    CHECK(y.coeff(-1) == qmono(-6, 1, 1));
    CHECK(y.coeff(0).is_zero());
}

TEST_CASE("binomial series for half-integer powers", "[zseries]") {
    // (1 + u)^(1/2) squared must reproduce 1 + u for u = -2 q0 zeta^2.
    ZetaSeries u(SeriesVar::Zeta, 2, 10);
    u.add_term(2, qmono(-2, 1, 1));
    const ZetaSeries r = puiseux_binomial(u, BigRational(1, 2));
    ZetaSeries sq = r * r;
    sq.truncate_to(10);
    CHECK(sq.coeff(0) == CoeffFrac(1));
    CHECK(sq.coeff(2) == qmono(-2, 1, 1));
    for (int e = 3; e < 10; ++e)
        if (e != 2) CHECK(sq.coeff(e).is_zero());

    // Integer exponent agrees with plain multiplication of 1 + u.
    ZetaSeries onep(SeriesVar::Zeta, 0, 10);
    onep.add_term(0, CoeffFrac(1));
    onep.add_term(2, qmono(-2, 1, 1));
    const ZetaSeries cube = puiseux_binomial(u, BigRational(3));
    ZetaSeries ref = onep * onep;
    ref.truncate_to(10);
    ref = ref * onep;
    ref.truncate_to(10);
    for (int e = 0; e < 10; ++e) CHECK(cube.coeff(e) == ref.coeff(e));

    // The correction term must vanish at the base point.
    ZetaSeries bad(SeriesVar::Zeta, 0, 4);
    bad.add_term(0, CoeffFrac(1));
    CHECK_THROWS_AS(puiseux_binomial(bad, BigRational(1, 2)), normalization_error);
}

TEST_CASE("hbar series windows and products", "[zseries]") {
    HSeries a(0, 4);
    a.add_term(0, ZRationalFn(1));
    a.add_term(2, ZRationalFn(curve_y()));
    CHECK(a.coeff(1).is_zero());
    CHECK_THROWS_AS(a.coeff(4), truncation_error);
    CHECK_THROWS_AS(a.truncate_to(5), truncation_error);
    CHECK_THROWS_AS(HSeries(3, 2), domain_error);

    // Product truncation follows min(a.trunc + b.base, b.trunc + a.base).
    HSeries b(1, 3);
    b.add_term(1, ZRationalFn(curve_x()));
    const HSeries ab = a * b;
    CHECK(ab.base() == 1);
    CHECK(ab.trunc() == 3);
    CHECK(ab.coeff(1) == ZRationalFn(curve_x()));

    // shifted multiplies by a power of hbar.
    CHECK(a.shifted(2).coeff(2) == ZRationalFn(1));
    CHECK(a.shifted(2).trunc() == 6);

    // inverse: (1 + h^2 y) * inverse == 1 within the window.
    HSeries inv = a.inverse();
    HSeries prod = a * inv;
    CHECK(prod.coeff(0) == ZRationalFn(1));
    for (int m = 1; m < prod.trunc(); ++m) CHECK(prod.coeff(m).is_zero());

    // Parity split.
    CHECK(a.order_parity_part(0).coeff(2) == ZRationalFn(curve_y()));
    CHECK(a.order_parity_part(1).is_zero());
}

TEST_CASE("hbar series derivations act coefficientwise", "[zseries]") {
    HSeries a(0, 3);
    a.add_term(0, ZRationalFn(curve_y()));
    a.add_term(2, ZRationalFn(ZLaurentPoly(1), branch_factor()));
    const HSeries d = a.dx();
    CHECK(d.coeff(0) == ZRationalFn(curve_y()).dx());
    CHECK(d.coeff(2) == ZRationalFn(ZLaurentPoly(1), branch_factor()).dx());
    const HSeries dt = a.dt_fixed_x();
    CHECK(dt.coeff(0) == ZRationalFn(curve_y()).dt_fixed_x());
}
