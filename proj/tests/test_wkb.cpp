#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include "toprec/verify.hpp"
#include "toprec/wkb.hpp"

using namespace toprec;

namespace {

CoeffFrac qmono(long num, long den, int exp) {
    return CoeffFrac::monomial(BigRational(num, den), exp);
}

// num / (den_c * q0^den_q * (z^2 - 3 q0)^den_b), num given as (c, qe, ze)
// monomials. Builder for the pinned scalar Lax coefficients.
ZRationalFn lax_fn(const std::vector<std::array<long, 3>>& num_terms, long den_c, int den_q,
                   int den_b) {
    ZLaurentPoly num;
    for (const auto& [c, qe, ze] : num_terms)
        num.add_term(static_cast<int>(ze), qmono(c, 1, static_cast<int>(qe)));
    const ZLaurentPoly den = x_minus_q0().pow(den_b).scaled(qmono(den_c, 1, den_q));
    return ZRationalFn(num, den);
}

} // namespace

TEST_CASE("equilibrium branch of the flow equation", "[wkb]") {
    PainleveData pd(12);
    CHECK(pd.q_coeff(0) == CoeffFrac::q0_power(1));
    CHECK(pd.q_coeff(2) == qmono(-1, 1728, -4));
    CHECK(pd.q_coeff(4) == qmono(-49, 5971968, -9));
    CHECK(pd.q_coeff(6) == qmono(-1225, 2579890176, -14));
    CHECK(pd.q_coeff(8) == qmono(-4412401, 71328803586048, -19));
    CHECK(pd.q_coeff(10) == qmono(-73560025, 5135673858195456, -24));

    CHECK(pd.p_coeff(1) == qmono(-1, 12, -1));
    CHECK(pd.p_coeff(3) == qmono(-1, 5184, -6));
    CHECK(pd.p_coeff(5) == qmono(-49, 7962624, -11));
    CHECK(pd.p_coeff(7) == qmono(-8575, 15479341056, -16));
    CHECK(pd.p_coeff(9) == qmono(-83835619, 855945643032576, -21));

    CHECK(pd.sigma_coeff(0) == qmono(4, 1, 3));
    CHECK(pd.sigma_coeff(2) == qmono(1, 288, -2));
    CHECK(pd.sigma_coeff(4) == qmono(7, 497664, -7));
    CHECK(pd.sigma_coeff(6) == qmono(1225, 2579890176, -12));
    CHECK(pd.sigma_coeff(8) == qmono(259553, 5944066965504, -17));
    CHECK(pd.sigma_coeff(10) == qmono(6687275, 855945643032576, -22));

    // q solves q'' = 6 q^2 + t, and sigma' = -q, order by order.
    for (int k = 1; 2 * k < pd.trunc(); ++k) {
        CoeffFrac acc = d_dt(d_dt(pd.q_coeff(2 * k - 2)));
        for (int k1 = 1; k1 < k; ++k1)
            acc -= CoeffFrac(6) * pd.q_coeff(2 * k1) * pd.q_coeff(2 * (k - k1));
        CHECK(pd.q_coeff(2 * k) == acc * qmono(1, 12, -1));
        CHECK(d_dt(pd.sigma_coeff(2 * k)) == -pd.q_coeff(2 * k));
    }
}

TEST_CASE("scalar Lax functions", "[wkb]") {
    PainleveData pd(8);
    const HSeries f = lax_f(pd);
    const HSeries g = lax_g(pd);

    CHECK(f.coeff(1) == lax_fn({{{-1, 0, 0}}}, 1, 0, 1));
    CHECK(f.coeff(3) == lax_fn({{{1, 0, 0}}}, 1728, 4, 2));
    CHECK(f.coeff(5) == lax_fn({{{49, 0, 2}, {-149, 1, 0}}}, 5971968, 9, 3));

    CHECK(g.coeff(0) == ZRationalFn(-(curve_y() * curve_y())));
    CHECK(g.coeff(2) == lax_fn({{{-1, 0, 2}, {-9, 1, 0}}}, 144, 2, 1));
    CHECK(g.coeff(4) == lax_fn({{{-7, 0, 4}, {-6, 1, 2}, {93, 2, 0}}}, 248832, 7, 2));

    // Parity in hbar.
    for (int m = 0; m < f.trunc(); m += 2) CHECK(f.coeff(m).is_zero());
    for (int m = 1; m < g.trunc(); m += 2) CHECK(g.coeff(m).is_zero());
}

TEST_CASE("Riccati coefficients match the pinned closed forms", "[wkb]") {
    PainleveData pd(10);
    const HSeries hp = riccati_hp(pd);
    CHECK(hp.coeff(0) == ZRationalFn(curve_y()));
    for (int m = 1; m <= 9; ++m) {
        INFO("m = " << m);
        CHECK(hp.coeff(m) == verify_detail::pinned_p(m));
    }

    // The defining property: the Riccati combination vanishes identically.
    CHECK(riccati_residual(pd, hp).is_zero());

    // z-parity alternates with the hbar order.
    for (int m = 0; m < hp.trunc(); ++m) {
        const ZRationalFn pm = hp.coeff(m);
        CHECK(pm.subst_neg() == (m % 2 == 0 ? -pm : pm));
    }

    // Denominators are pure z powers: each coefficient is Laurent.
    for (int m = 0; m < hp.trunc(); ++m) CHECK(hp.coeff(m).is_laurent());
}

TEST_CASE("odd part determines the even part", "[wkb]") {
    PainleveData pd(10);
    const HSeries hp = riccati_hp(pd);
    CHECK(odd_even_residual(pd, hp).is_zero());
    CHECK(odd_even_check(pd, hp));
}

TEST_CASE("x- and t-derivatives exchange through the Lax structure", "[wkb]") {
    PainleveData pd(10);
    const HSeries hp = riccati_hp(pd);
    const auto [full, odd] = dt_exchange_residuals(pd, hp);
    CHECK(full.is_zero());
    CHECK(odd.is_zero());
    CHECK(dt_exchange_check(pd, hp));
}

TEST_CASE("asymptotics at large x pin the Hamiltonian value", "[wkb]") {
    PainleveData pd(10);
    const HSeries hp = riccati_hp(pd);
    CHECK(asymp_check(pd, hp));
    CHECK(sigma_from_hp(hp, 0) == pd.sigma_coeff(0));
    CHECK(sigma_from_hp(hp, 2) == pd.sigma_coeff(2));
    CHECK(sigma_from_hp(hp, 4) == pd.sigma_coeff(4));
    CHECK(sigma_from_hp(hp, 6) == pd.sigma_coeff(6));
}

TEST_CASE("monodromy pairing recovers sigma", "[wkb]") {
    PainleveData pd(8);
    const HSeries hp = riccati_hp(pd);
    for (int m : {0, 2, 4}) {
        INFO("m = " << m);
        const auto [bad, value] = jmu_pairing(pd, hp, m);
        CHECK(bad.is_zero());
        CHECK(value == pd.sigma_coeff(m));
        CHECK(jmu_check(pd, hp, m));
    }
}

TEST_CASE("quantum curve identification", "[wkb]") {
    WStore store;
    PainleveData pd(8);
    CHECK(quantum_curve_check(store, pd, 6));
    CHECK_THROWS_AS(quantum_curve_check(store, pd, 9), truncation_error);
}

TEST_CASE("tau function derivatives", "[wkb]") {
    WStore store;
    PainleveData pd(8);
    CHECK(tau_check(store, pd, 3));
}

TEST_CASE("construction guards", "[wkb]") {
    CHECK_THROWS_AS(PainleveData(0), domain_error);
    PainleveData pd(4);
    CHECK(pd.trunc() == 4);
    CHECK_THROWS_AS(pd.q_coeff(4), truncation_error);
}
