#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "toprec/cache_io.hpp"
#include "toprec/recursion.hpp"

using namespace toprec;

namespace {

CoeffFrac qmono(long num, long den, int exp) {
    return CoeffFrac::monomial(BigRational(num, den), exp);
}

struct PinnedTerm {
    SymKey key;
    CoeffFrac coeff;
};

// The five low correlators, term for term.
std::vector<PinnedTerm> pinned_w(int g, int n) {
    if (g == 0 && n == 3) return {{{-2, -2, -2}, qmono(1, 12, -1)}};
    if (g == 0 && n == 4)
        return {{{-4, -2, -2, -2}, qmono(1, 48, -2)}, {{-2, -2, -2, -2}, qmono(1, 144, -3)}};
    if (g == 1 && n == 1) return {{{-4}, qmono(1, 96, -1)}, {{-2}, qmono(1, 288, -2)}};
    if (g == 1 && n == 2)
        return {{{-6, -2}, qmono(5, 1152, -2)},
                {{-4, -4}, qmono(1, 384, -2)},
                {{-4, -2}, qmono(1, 576, -3)},
                {{-2, -2}, qmono(1, 1728, -4)}};
    if (g == 2 && n == 1)
        return {{{-10}, qmono(35, 73728, -3)},
                {{-8}, qmono(203, 663552, -4)},
                {{-6}, qmono(7, 55296, -5)},
                {{-4}, qmono(7, 165888, -6)},
                {{-2}, qmono(7, 497664, -7)}};
    return {};
}

void check_table(const SymTable& t, const std::vector<PinnedTerm>& want) {
    REQUIRE(t.terms().size() == want.size());
    for (const auto& pt : want) {
        INFO("key " << Catch::StringMaker<SymKey>::convert(pt.key));
        CHECK(t.coeff(pt.key) == pt.coeff);
    }
}

} // namespace

TEST_CASE("low correlators match their closed forms", "[recursion]") {
    WStore store;
    for (const auto& [g, n] : {std::pair<int, int>{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        check_table(store.get(g, n), pinned_w(g, n));
    }
}

TEST_CASE("correlators are independent of the profile window", "[recursion]") {
    WStore narrow(1), standard, wide(9);
    for (const auto& [g, n] : {std::pair<int, int>{0, 5}, {1, 3}, {2, 1}, {3, 1}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        CHECK(narrow.get(g, n) == standard.get(g, n));
        CHECK(wide.get(g, n) == standard.get(g, n));
    }
    CHECK_THROWS_AS(WStore(0), domain_error);
}

TEST_CASE("stability bounds on correlator requests", "[recursion]") {
    WStore store;
    CHECK_THROWS_AS(store.get(0, 1), domain_error);
    CHECK_THROWS_AS(store.get(0, 2), domain_error);
    CHECK_THROWS_AS(store.get(1, 0), domain_error);
    CHECK_THROWS_AS(store.get(-1, 3), domain_error);
}

TEST_CASE("structural invariants hold for computed tables", "[recursion]") {
    WStore store;
    for (const auto& [g, n] : {std::pair<int, int>{0, 3}, {0, 6}, {1, 4}, {2, 2}, {3, 1}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        CHECK_NOTHROW(detail::verify_w_invariants(g, n, store.get(g, n)));
    }
}

TEST_CASE("closed free energies", "[recursion]") {
    WStore store;
    CHECK(closed_F0() == qmono(-48, 5, 5));
    CHECK(closed_F1_dt() == qmono(1, 288, -2));
    CHECK(closed_F(2, store) == qmono(7, 207360, -5));
    CHECK(closed_F(3, store) == qmono(245, 429981696, -10));
    CHECK(closed_F(4, store) == qmono(259553, 7430083706880, -15));
    CHECK_THROWS_AS(closed_F(0, store), domain_error);
    CHECK_THROWS_AS(closed_F(1, store), domain_error);
}

TEST_CASE("t-derivatives of the free energies", "[recursion]") {
    WStore store;
    CHECK(closed_F_dt(0, store) == qmono(4, 1, 3));
    CHECK(closed_F_dt(1, store) == qmono(1, 288, -2));
    CHECK(closed_F_dt(2, store) == qmono(7, 497664, -7));
    CHECK(closed_F_dt(3, store) == qmono(1225, 2579890176, -12));
    // Consistency with the closed forms where both exist.
    CHECK(closed_F_dt(2, store) == d_dt(closed_F(2, store)));
    CHECK(closed_F_dt(3, store) == d_dt(closed_F(3, store)));
}

TEST_CASE("variation formula", "[recursion]") {
    WStore store;
    for (const auto& [g, n] : {std::pair<int, int>{0, 3}, {1, 1}, {1, 2}, {0, 4}, {2, 1}}) {
        INFO("(g, n) = (" << g << ", " << n << ")");
        const auto [lhs, rhs] = variation_sides(g, n, store);
        CHECK(lhs == rhs);
        CHECK(variation_check(g, n, store));
    }
}

TEST_CASE("cache round trip preserves every table", "[recursion][cache]") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "toprec_cache_test.json";
    WStore store;
    store.get(0, 4);
    store.get(1, 2);
    store.get(2, 1);
    cache_save(store, path);

    WStore warm;
    cache_load(warm, path);
    CHECK(warm.has(0, 4));
    CHECK(warm.has(1, 2));
    CHECK(warm.has(2, 1));
    for (const auto& [gn, table] : store.tables()) CHECK(warm.get(gn.first, gn.second) == table);

    // Saving the reloaded store reproduces the file byte for byte.
    const fs::path path2 = fs::temp_directory_path() / "toprec_cache_test2.json";
    cache_save(warm, path2);
    std::ifstream a(path), b(path2);
    const std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    const std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
    fs::remove(path);
    fs::remove(path2);
}

TEST_CASE("malformed caches are rejected as a whole", "[recursion][cache]") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "toprec_cache_bad.json";
    auto write_file = [&](const std::string& body) {
        std::ofstream out(path, std::ios::trunc);
        out << body;
    };

    WStore store;
    write_file("this is not json");
    CHECK_THROWS_AS(cache_load(store, path), io_error);

    write_file("{\"version\": 99, \"entries\": {}}");
    CHECK_THROWS_AS(cache_load(store, path), io_error);

    write_file("{\"version\": 1}");
    CHECK_THROWS_AS(cache_load(store, path), io_error);

    // Wrong arity inside a table.
    write_file("{\"version\": 1, \"entries\": {\"1,1\": [{\"k\": [-2, -2], \"coeff\": "
               "{\"terms\": [{\"exp\": -2, \"num\": \"1\", \"den\": \"288\"}]}}]}}");
    CHECK_THROWS_AS(cache_load(store, path), consistency_error);

    // Two orderings of one key with different coefficients.
    write_file("{\"version\": 1, \"entries\": {\"1,2\": [{\"k\": [-4, -2], \"coeff\": "
               "{\"terms\": [{\"exp\": -3, \"num\": \"1\", \"den\": \"576\"}]}}, "
               "{\"k\": [-2, -4], \"coeff\": "
               "{\"terms\": [{\"exp\": -3, \"num\": \"1\", \"den\": \"999\"}]}}]}}");
    CHECK_THROWS_AS(cache_load(store, path), consistency_error);

    CHECK_THROWS_AS(cache_load(store, fs::temp_directory_path() / "toprec_no_such_file.json"),
                    io_error);
    fs::remove(path);
}
