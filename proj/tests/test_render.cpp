#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "toprec/openfe.hpp"
#include "toprec/recursion.hpp"
#include "toprec/render.hpp"
#include "toprec/wkb.hpp"

using namespace toprec;

TEST_CASE("scalar coefficients render as q0 monomials", "[render]") {
    WStore store;
    CHECK(render_coeff(closed_F0()) == "-48/5 * q0^5");
    CHECK(render_coeff(closed_F(2, store)) == "7/207360 * q0^-5");
    CHECK(render_coeff(closed_F(3, store)) == "245/429981696 * q0^-10");
    CHECK(render_rational(BigRational(-5, 8)) == "-5/8");
}

TEST_CASE("rational functions render in both coordinates", "[render]") {
    PainleveData pd(8);
    const HSeries hp = riccati_hp(pd);
    CHECK(render_fn(hp.coeff(1)) == "-1/4 * z^-2");
    CHECK(latex_fn(hp.coeff(1)) == "-\\frac{1}{4 z^{2}}");
    CHECK(latex_fn(hp.coeff(2)) == "\\frac{z^{2} + 15 q_0}{576 q_0^{2} z^{5}}");
    CHECK(latex_fn(hp.coeff(3)) ==
          "-\\frac{2 z^{4} + 12 q_0 z^{2} + 45 q_0^{2}}{6912 q_0^{4} z^{8}}");

    // Denominator branch factors print as powers of x - q0.
    const HSeries f = lax_f(pd);
    CHECK(render_fn(f.coeff(3), Coord::X) == "(1/1728 * q0^-4) / ((x - q0)^2)");
    CHECK(latex_fn(f.coeff(3), Coord::X) ==
          "\\frac{1}{1728 q_0^{4} \\left(x - q_0\\right)^{2}}");
    CHECK(latex_fn(f.coeff(1), Coord::X) == "-\\frac{1}{\\left(x - q_0\\right)}");
}

TEST_CASE("principal specializations render with half-integer powers", "[render]") {
    WStore store;
    const ZLaurentPoly s2 = s_principal(store, 2);
    CHECK(render_poly(s2) == "-1/288 * q0^-2 * z^-1 - 5/288 * q0^-1 * z^-3");
    CHECK(render_poly(s2, Coord::X) ==
          "-1/288 * q0^-2 * (x + 2*q0)^(-1/2) - 5/288 * q0^-1 * (x + 2*q0)^(-3/2)");
    CHECK(latex_poly(s2, Coord::X) ==
          "-\\frac{\\left(x + 2 q_0\\right) + 5 q_0}{288 q_0^{2} \\left(x + 2 q_0\\right)^{3/2}}");
}

TEST_CASE("correlator tables render least singular first", "[render]") {
    WStore store;
    CHECK(render_table(store.get(0, 3), true) ==
          "1/12 * q0^-1 * z1^-2 * z2^-2 * z3^-2 * dz1 dz2 dz3");
    CHECK(render_table(store.get(1, 1)) == "1/288 * q0^-2 * z1^-2 + 1/96 * q0^-1 * z1^-4");
    CHECK(render_table(store.get(1, 2)) ==
          "1/1728 * q0^-4 * z1^-2 * z2^-2 + 1/576 * q0^-3 * (z1^-4 * z2^-2 + z1^-2 * z2^-4) + "
          "1/384 * q0^-2 * z1^-4 * z2^-4 + 5/1152 * q0^-2 * (z1^-6 * z2^-2 + z1^-2 * z2^-6)");
    CHECK(latex_table(store.get(1, 1)) ==
          "\\frac{1}{288 q_0^{2}} \\, \\frac{1}{z_{1}^{2}} + \\frac{1}{96 q_0} \\, "
          "\\frac{1}{z_{1}^{4}}");
}

TEST_CASE("hbar series renderings", "[render]") {
    PainleveData pd(8);
    CHECK(render_hseries(pd.q()) ==
          "h^0: q0\n"
          "h^2: -1/1728 * q0^-4\n"
          "h^4: -49/5971968 * q0^-9\n"
          "h^6: -1225/2579890176 * q0^-14\n");
    CHECK(latex_hseries(pd.q()) ==
          "q_0 - \\frac{1}{1728 q_0^{4}} \\hbar^{2} - \\frac{49}{5971968 q_0^{9}} \\hbar^{4} "
          "- \\frac{1225}{2579890176 q_0^{14}} \\hbar^{6}");
    CHECK(render_hseries(HSeries(0, 3)) == "0\n");
}

TEST_CASE("JSON uses decimal strings for big integers", "[render]") {
    WStore store;
    PainleveData pd(4);
    const HSeries hp = riccati_hp(pd);
    CHECK(json_coeff(closed_F(2, store)).dump() ==
          "{\"den\":[{\"den\":\"1\",\"exp\":0,\"num\":\"1\"}],"
          "\"num\":[{\"den\":\"207360\",\"exp\":-5,\"num\":\"7\"}]}");
    CHECK(json_fn(hp.coeff(1)).dump() ==
          "{\"den\":[{\"coeff\":{\"den\":[{\"den\":\"1\",\"exp\":0,\"num\":\"1\"}],"
          "\"num\":[{\"den\":\"1\",\"exp\":0,\"num\":\"1\"}]},\"z\":0}],"
          "\"num\":[{\"coeff\":{\"den\":[{\"den\":\"1\",\"exp\":0,\"num\":\"1\"}],"
          "\"num\":[{\"den\":\"4\",\"exp\":0,\"num\":\"-1\"}]},\"z\":-2}]}");

    // Round trip through the JSON encoding of a table.
    const nlohmann::json jt = json_table(store.get(1, 1));
    REQUIRE(jt.size() == 2);
    CHECK(jt[0]["exponents"] == nlohmann::json::array({-2}));
    CHECK(jt[0]["coeff"]["num"][0]["den"] == "288");
    CHECK(jt[1]["exponents"] == nlohmann::json::array({-4}));

    const nlohmann::json jh = json_hseries(pd.sigma());
    CHECK(jh["trunc"] == 4);
    CHECK(jh["orders"][0]["order"] == 0);
}
