#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "toprec/verify.hpp"

using namespace toprec;

TEST_CASE("every suite passes at desk scale", "[verify]") {
    WStore store;
    const Report rep = run_suite(store, "all", 4, 3, 2);
    INFO(report_text(rep));
    CHECK(rep.all_pass());
    CHECK(rep.failed() == 0);
    CHECK(rep.passed() == static_cast<int>(rep.checks.size()));
}

TEST_CASE("suite filters select their own checks", "[verify]") {
    WStore store;
    const Report tau = run_suite(store, "tau", 4, 2, 2);
    CHECK(tau.checks.size() == 3);
    for (const auto& c : tau.checks) CHECK(c.id.substr(0, 4) == "tau-");
    CHECK(tau.all_pass());

    const Report diffrec = run_suite(store, "diff-rec", 0, 3, 0);
    CHECK(diffrec.all_pass());
    for (const auto& c : diffrec.checks) CHECK(c.id.substr(0, 8) == "diffrec-");

    CHECK_THROWS_AS(run_suite(store, "bogus", 4, 3, 2), domain_error);
    CHECK_THROWS_AS(run_suite(store, "all", 4, 1, 2), domain_error);
    CHECK_THROWS_AS(run_suite(store, "all", -1, 3, 2), domain_error);
}

TEST_CASE("semiclassical runs skip the expansion checks with notes", "[verify]") {
    WStore store;
    const Report rep = run_suite(store, "all", 0, 3, 2);
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.notes.empty());
    for (const auto& c : rep.checks) {
        CHECK(c.id.substr(0, 3) != "qc-");
        CHECK(c.id.substr(0, 4) != "tau-");
        CHECK(c.id.substr(0, 4) != "jmu-");
    }
}

TEST_CASE("reports serialize deterministically", "[verify]") {
    WStore store1, store2;
    const Report a = run_suite(store1, "tau", 4, 2, 2);
    const Report b = run_suite(store2, "tau", 4, 2, 2);
    CHECK(report_to_json(a, false).dump() == report_to_json(b, false).dump());

    const nlohmann::json doc = report_to_json(a, true);
    CHECK(doc["summary"]["total"] == static_cast<int>(a.checks.size()));
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["parameters"]["gmax"] == 2);
    // Checks are sorted by id and carry timings only when asked.
    CHECK(doc["checks"][0]["id"] == "tau-g0");
    CHECK(doc["checks"][0].contains("elapsed_ms"));
    CHECK_FALSE(report_to_json(a, false)["checks"][0].contains("elapsed_ms"));
    // Passing checks carry no residual detail.
    CHECK_FALSE(doc["checks"][0].contains("detail"));
}

TEST_CASE("report text summarizes pass counts", "[verify]") {
    WStore store;
    const Report rep = run_suite(store, "tau", 4, 2, 1);
    const std::string text = report_text(rep);
    CHECK(text.find("PASS tau-g0") != std::string::npos);
    CHECK(text.find("passed 2/2") != std::string::npos);
}
