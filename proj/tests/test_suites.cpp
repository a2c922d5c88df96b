#include "kklab/suites.hpp"

#include "json.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <regex>

using namespace kklab;

namespace {

std::string strip_elapsed(const std::string& json) {
    return std::regex_replace(json, std::regex("\"elapsed_ms\": \\d+"), "\"elapsed_ms\": 0");
}

} // namespace

TEST_CASE("unknown suite and missing seed") {
    SuiteConfig cfg;
    cfg.suite = "no-such-suite";
    cfg.seed = 1;
    CHECK_THROWS_AS(run_suite(cfg), Error);
    try {
        run_suite(cfg);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownSuite);
    }

    SuiteConfig noseed;
    noseed.suite = "growth";
    CHECK_THROWS_AS(run_suite(noseed), Error);
    try {
        run_suite(noseed);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConfigInvalid);
    }
}

TEST_CASE("report schema and determinism") {
    SuiteConfig cfg;
    cfg.suite = "growth";
    cfg.seed = 42;
    SuiteReport a = run_suite(cfg);
    SuiteReport b = run_suite(cfg);
    CHECK(a.ok());
    CHECK(strip_elapsed(a.to_json()) == strip_elapsed(b.to_json()));

    auto j = nlohmann::ordered_json::parse(a.to_json());
    auto it = j.begin();
    CHECK(it.key() == "suite");
    CHECK((++it).key() == "anchors");
    CHECK((++it).key() == "config");
    CHECK((++it).key() == "results");
    CHECK((++it).key() == "elapsed_ms");
    CHECK(j["suite"] == "growth");
    CHECK(j["config"]["seed"] == "42");
    for (const auto& r : j["results"]) {
        CHECK(r.contains("property"));
        CHECK(r.contains("status"));
        if (r["status"] == "fail") CHECK(r.contains("witness"));
    }
}

TEST_CASE("config files and overrides") {
    const char* path = "kklab_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# comment\n";
        out << "seed = 9\n";
        out << "mu_max = 12\n";
        out << "tuples=5\n";
    }
    SuiteConfig cfg = SuiteConfig::from_file("growth", path);
    std::remove(path);
    CHECK(cfg.seed == 9);
    CHECK(cfg.get_int("mu_max", 0) == 12);
    CHECK(cfg.get_int("tuples", 0) == 5);
    cfg.apply_override("mu_max", "20");
    CHECK(cfg.get_int("mu_max", 0) == 20);
    SuiteReport rep = run_suite(cfg);
    CHECK(rep.ok());
    bool saw_mu_max = false;
    for (const auto& [k, v] : rep.config_echo)
        if (k == "mu_max") {
            saw_mu_max = true;
            CHECK(v == "20");
        }
    CHECK(saw_mu_max);

    CHECK_THROWS_AS(SuiteConfig::from_file("growth", "does-not-exist.cfg"), Error);
}

TEST_CASE("suite name listing") {
    auto names = suite_names();
    CHECK(names.size() == 11);
    for (const char* expect :
         {"lang-correspondence", "growth", "normic", "weil-restrict", "t-expand", "cw-scan",
          "index-divisibility", "reciprocity", "hensel", "insep-norm", "norm-group-finite"}) {
        CHECK(std::find(names.begin(), names.end(), expect) != names.end());
    }
}

TEST_CASE("norm group reports") {
    Field f3 = make_field(3, 1);
    MultiPoly sq = parse_multipoly("3^1:[1]*X0^2 + 3^1:[1]*X1^2", f3, 2);
    Variety v({Hypersurface(sq)});

    NormGroupReport r = norm_group_finite(v, 4);
    CHECK(!r.inconclusive);
    CHECK(r.full_group);
    CHECK(r.degrees_with_points == std::set<uint32_t>{2, 4});

    NormGroupReport r1 = norm_group_finite(v, 1);
    CHECK(r1.inconclusive);
    CHECK(!r1.full_group);

    // a variety with a rational point fills the group at bound 1 already
    MultiPoly conic = parse_multipoly("3^1:[1]*X0^1*X1^1 + 3^1:[2]*X2^2", f3, 3);
    NormGroupReport r2 = norm_group_finite(Variety({Hypersurface(conic)}), 1);
    CHECK(!r2.inconclusive);
    CHECK(r2.full_group);
}
