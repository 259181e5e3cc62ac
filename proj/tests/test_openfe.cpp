#include <catch2/catch_amalgamated.hpp>

#include <utility>
#include <vector>

#include "toprec/openfe.hpp"

using namespace toprec;

namespace {

CoeffFrac qmono(long num, long den, int exp) {
    return CoeffFrac::monomial(BigRational(num, den), exp);
}

struct PinnedTerm {
    SymKey key;
    CoeffFrac coeff;
};

// Open free energies, term for term.
std::vector<PinnedTerm> pinned_f(int g, int n) {
    if (g == 0 && n == 3) return {{{-1, -1, -1}, qmono(-1, 12, -1)}};
    if (g == 0 && n == 4)
        return {{{-3, -1, -1, -1}, qmono(1, 144, -2)}, {{-1, -1, -1, -1}, qmono(1, 144, -3)}};
    if (g == 1 && n == 1) return {{{-3}, qmono(-1, 288, -1)}, {{-1}, qmono(-1, 288, -2)}};
    if (g == 1 && n == 2)
        return {{{-5, -1}, qmono(1, 1152, -2)},
                {{-3, -3}, qmono(1, 3456, -2)},
                {{-3, -1}, qmono(1, 1728, -3)},
                {{-1, -1}, qmono(1, 1728, -4)}};
    if (g == 2 && n == 1)
        return {{{-9}, qmono(-525, 9953280, -3)},
                {{-7}, qmono(-435, 9953280, -4)},
                {{-5}, qmono(-252, 9953280, -5)},
                {{-3}, qmono(-140, 9953280, -6)},
                {{-1}, qmono(-140, 9953280, -7)}};
    return {};
}

} // namespace

TEST_CASE("open free energies integrate the correlators", "[openfe]") {
    WStore store;
    for (const auto& [g, n] : {std::pair<int, int>{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        const SymTable f = open_f_table(store, g, n);
        const auto want = pinned_f(g, n);
        REQUIRE(f.terms().size() == want.size());
        for (const auto& pt : want) {
            INFO("key " << Catch::StringMaker<SymKey>::convert(pt.key));
            CHECK(f.coeff(pt.key) == pt.coeff);
        }
    }
}

TEST_CASE("integration and differentiation are inverse on tables", "[openfe]") {
    WStore store;
    for (const auto& [g, n] : {std::pair<int, int>{0, 3}, {1, 2}, {2, 1}}) {
        const SymTable f = open_f_table(store, g, n);
        const SymTable back = f.map_all_slots(
            [](int v) { return std::make_pair(v - 1, CoeffFrac(v)); });
        CHECK(back == store.get(g, n));
    }
}

TEST_CASE("principal specializations match their closed forms", "[openfe]") {
    WStore store;

    ZLaurentPoly s2;
    s2.add_term(-1, qmono(-1, 288, -2));
    s2.add_term(-3, qmono(-5, 288, -1));
    CHECK(s_principal(store, 2) == s2);

    ZLaurentPoly s3;
    s3.add_term(-2, qmono(1, 3456, -4));
    s3.add_term(-4, qmono(1, 1152, -3));
    s3.add_term(-6, qmono(5, 2304, -2));
    CHECK(s_principal(store, 3) == s3);

    ZLaurentPoly s4;
    s4.add_term(-1, qmono(-140, 9953280, -7));
    s4.add_term(-3, qmono(-460, 9953280, -6));
    s4.add_term(-5, qmono(-1356, 9953280, -5));
    s4.add_term(-7, qmono(-3315, 9953280, -4));
    s4.add_term(-9, qmono(-5525, 9953280, -3));
    CHECK(s_principal(store, 4) == s4);

    CHECK_THROWS_AS(s_principal(store, 1), domain_error);
}

TEST_CASE("x-derivatives of the specializations", "[openfe]") {
    WStore store;
    // S_0' = y and S_1' = -1/(4 z^2) come from the unstable part.
    CHECK(s_prime(store, 0) == curve_y());
    CHECK(s_prime(store, 1) == ZLaurentPoly::monomial(qmono(-1, 4, 0), -2));
    CHECK(s_prime(store, 2) == s_principal(store, 2).dx());
    CHECK(s_prime(store, 3) == s_principal(store, 3).dx());
}

TEST_CASE("t-derivatives of the specializations", "[openfe]") {
    WStore store;
    CHECK(s_t(store, 0) == ZLaurentPoly::z_power(1));
    CHECK(s_t(store, 1) == ZLaurentPoly::monomial(qmono(1, 24, -1), -2));
    CHECK(s_t(store, 2) == s_principal(store, 2).dt_fixed_x());
}

TEST_CASE("diagonal E-function at low order", "[openfe]") {
    WStore store;
    ZLaurentPoly e11;
    e11.add_term(-1, qmono(-1, 1728, -4));
    e11.add_term(-3, qmono(-1, 1728, -3));
    e11.add_term(-5, qmono(-1, 1152, -2));
    CHECK(e_diag(store, 1, 1) == ZRationalFn(e11));
}

TEST_CASE("differential recursion residuals vanish", "[openfe]") {
    WStore store;
    for (const auto& [g, n] : {std::pair<int, int>{1, 2}, {0, 4}, {2, 1}, {1, 3}, {0, 5}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        CHECK(diffrec_residual(store, g, n).is_zero());
        CHECK(diffrec_check(store, g, n));
    }
}

TEST_CASE("E-function equals the t-derivative of F", "[openfe]") {
    WStore store;
    for (const auto& [g, n] : {std::pair<int, int>{1, 1}, {0, 3}, {1, 2}, {0, 4}, {2, 1}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        CHECK(e_residual(store, g, n).is_zero());
    }
}

TEST_CASE("specialized Riccati identities", "[openfe]") {
    WStore store;
    for (int m = 2; m <= 4; ++m) {
        INFO("m = " << m);
        CHECK(partial_riccati_residual(store, m).is_zero());
        CHECK(principal_g_e_sum_residual(store, m).is_zero());
        CHECK(e_sum_dt_residual(store, m).is_zero());
    }
    for (const auto& [g, n] : {std::pair<int, int>{1, 2}, {0, 4}, {1, 3}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        CHECK(principal_g_e_pointwise_residual(store, g, n).is_zero());
    }
}

TEST_CASE("one-point route comparison", "[openfe]") {
    WStore store;
    for (int g = 2; g <= 3; ++g) {
        INFO("g = " << g);
        for (const auto& r : g1_residuals(store, g)) CHECK(r.is_zero());
        CHECK(g1_check(store, g));
    }
}
