#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "padic/report.hpp"

using namespace padic;

TEST_CASE("record round trip") {
    ReportRecord r;
    r.theorem = "thm-1.2-gauss";
    r.p = 13;
    r.params = {"1/3", "1/4"};
    r.z = "5/7";
    r.verdict = "holds";
    r.detail = "eq-1.11";
    r.lhs = "126";
    r.rhs = "126";
    r.modulus = 169;
    r.duration_ms = 0;
    CHECK(record_from_json(record_to_json(r)) == r);
    r.z.reset();
    r.detail = "has, comma";
    CHECK(record_from_json(record_to_json(r)) == r);
}

TEST_CASE("report json carries the documented fields") {
    SweepReport rep;
    rep.theorem = "eq-1.6-sun";
    rep.prime_lo = 3;
    rep.prime_hi = 97;
    rep.pool_desc = "20 pool values";
    rep.cases = 10;
    rep.holds = 9;
    rep.condition_not_met = 1;
    auto j = nlohmann::json::parse(report_to_json(rep));
    for (const char* key :
         {"theorem", "prime_range", "pool", "cases", "holds", "condition_not_met", "fails",
          "errors", "duration_ms"})
        CHECK(j.contains(key));
    CHECK(j["prime_range"][0] == 3);
    CHECK(j["prime_range"][1] == 97);
    CHECK(j["fails"].is_array());
}

TEST_CASE("csv has the fixed column order") {
    std::ostringstream os;
    write_report_csv_header(os);
    CHECK(os.str() == "theorem,p,params,z,verdict,detail,lhs,rhs,modulus,duration_ms\n");
    SweepReport rep;
    rep.theorem = "x";
    ReportRecord f;
    f.theorem = "x";
    f.p = 7;
    f.params = {"1/2"};
    f.verdict = "fails";
    f.lhs = "1";
    f.rhs = "2";
    f.modulus = 49;
    rep.fails.push_back(f);
    std::ostringstream body;
    write_report_csv(body, rep);
    CHECK(body.str().rfind("x,7,1/2,,fails,,1,2,49,0", 0) == 0);
}

TEST_CASE("schema file parses and pins the shapes") {
    std::ifstream in(SCHEMA_PATH);
    REQUIRE(in.good());
    nlohmann::json schema = nlohmann::json::parse(in);
    CHECK(schema.contains("oneOf"));
    CHECK(schema["definitions"].contains("sweep_report"));
    auto req = schema["definitions"]["sweep_report"]["required"];
    std::vector<std::string> want = {"theorem", "prime_range", "pool",   "cases",      "holds",
                                     "condition_not_met", "fails", "errors", "duration_ms"};
    for (const auto& k : want)
        CHECK(std::find(req.begin(), req.end(), nlohmann::json(k)) != req.end());
}
