#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "ruijops/suites.hpp"

using namespace ruijops;

namespace {

SuiteConfig small_config() {
    SuiteConfig cfg;
    cfg.suite = "wronski";
    cfg.flavor = Flavor::rational;
    cfg.n = 2;
    cfg.lmax = 2;
    cfg.rmax = 2;
    cfg.precision = 48;
    cfg.seed = 7;
    return cfg;
}

}  // namespace

TEST_CASE("suite names are closed under lookup") {
    for (const auto& name : suite_names()) CHECK(is_suite_name(name));
    CHECK_FALSE(is_suite_name("everything"));
    CHECK(is_suite_name("all"));
}

TEST_CASE("runner rejects unusable configurations") {
    SuiteConfig cfg = small_config();
    cfg.suite = "everything";
    CHECK_THROWS_AS(run_suite(cfg), invalid_parameters);
    cfg = small_config();
    cfg.n = 0;
    CHECK_THROWS_AS(run_suite(cfg), invalid_parameters);
    cfg = small_config();
    cfg.precision = 8;
    CHECK_THROWS_AS(run_suite(cfg), invalid_parameters);
}

TEST_CASE("identical configurations replay identical residuals") {
    auto r1 = run_suite(small_config());
    auto r2 = run_suite(small_config());
    CHECK(r1.passed());
    REQUIRE(r1.checks.size() == r2.checks.size());
    for (std::size_t i = 0; i < r1.checks.size(); ++i) {
        CHECK(r1.checks[i].id == r2.checks[i].id);
        CHECK(r1.checks[i].max_residual == r2.checks[i].max_residual);
        CHECK(r1.checks[i].pass == r2.checks[i].pass);
    }
}

TEST_CASE("changing the seed moves the sampled residuals") {
    auto r1 = run_suite(small_config());
    SuiteConfig other = small_config();
    other.seed = 8;
    auto r2 = run_suite(other);
    bool any_differ = false;
    for (std::size_t i = 0; i < r1.checks.size(); ++i)
        any_differ = any_differ || (r1.checks[i].max_residual != r2.checks[i].max_residual);
    CHECK(any_differ);
}

TEST_CASE("json report carries config, checks and overall status") {
    auto rep = run_suite(small_config());
    auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["status"] == "pass");
    CHECK(j["suite"] == "wronski");
    CHECK(j["config"]["n"] == 2);
    CHECK(j["config"]["flavor"] == "rational");
    CHECK(j["checks"].size() == rep.checks.size());
    CHECK(j["checks"][0].contains("max_residual"));
    CHECK(j["checks"][0].contains("elapsed_ms"));

    // a failing record flips the status
    rep.checks[0].pass = false;
    auto j2 = nlohmann::json::parse(rep.to_json());
    CHECK(j2["status"] == "fail");
    CHECK(rep.failed_count() == 1);
}

TEST_CASE("table rendering ends with a status summary") {
    auto rep = run_suite(small_config());
    std::ostringstream os;
    rep.print_table(os);
    auto text = os.str();
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("status: pass") != std::string::npos);
    CHECK(text.find("wronski/l=1") != std::string::npos);
}

TEST_CASE("tolerance override applies to every recorded check") {
    SuiteConfig cfg = small_config();
    cfg.tol = "1e-2";
    auto rep = run_suite(cfg);
    for (const auto& c : rep.checks) CHECK(c.tol == to_decimal_string(Real("1e-2"), 3));
}

TEST_CASE("exact macdonald suite records carry the exact flag") {
    SuiteConfig cfg;
    cfg.suite = "macdonald";
    cfg.flavor = Flavor::rational;
    cfg.n = 2;
    cfg.lmax = 2;
    cfg.rmax = 2;
    cfg.precision = 48;
    auto rep = run_suite(cfg);
    CHECK(rep.passed());
    for (const auto& c : rep.checks) {
        CHECK(c.exact);
        CHECK(c.max_residual == "0");
    }
}
