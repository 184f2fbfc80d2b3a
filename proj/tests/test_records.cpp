#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <string>

#include "hyperg/records.hpp"

using namespace hyperg;

namespace {

json load_schema() {
    std::ifstream in(SCHEMA_PATH);
    REQUIRE(in.good());
    return json::parse(in);
}

// Structural check against the published schema: required keys present,
// no keys outside the declared property set, and primitive types agree.
void check_against_schema(const json& rec, const json& schema) {
    std::set<std::string> allowed;
    for (const auto& [key, val] : schema["properties"].items()) allowed.insert(key);
    for (const auto& [key, val] : rec.items()) {
        INFO("key " << key);
        CHECK(allowed.count(key) == 1);
    }
    for (const auto& req : schema["required"]) {
        INFO("required " << req.get<std::string>());
        CHECK(rec.contains(req.get<std::string>()));
    }
    const auto type_ok = [](const json& v, const std::string& t) {
        if (t == "string") return v.is_string();
        if (t == "number") return v.is_number();
        if (t == "boolean") return v.is_boolean();
        if (t == "object") return v.is_object();
        return true;
    };
    for (const auto& [key, val] : rec.items())
        CHECK(type_ok(val, schema["properties"][key]["type"].get<std::string>()));
}

}  // namespace

TEST_CASE("job parsing accepts the documented field set") {
    const json j{{"command", "eval"},
                 {"params", {0.5, 0.6, 0.7, 2.0, 2.5}},
                 {"tol_rel", 1e-11},
                 {"max_terms", 1000},
                 {"tail_correction", true}};
    const JobSpec s = job_from_json(j);
    CHECK(s.command == "eval");
    REQUIRE(s.params);
    CHECK(s.params->size() == 5);
    CHECK(s.tol_rel == 1e-11);
    CHECK(s.max_terms == 1000);
    CHECK(s.tail_correction == true);
    CHECK_FALSE(s.x);
    CHECK_FALSE(s.seed);
}

TEST_CASE("job parsing rejects unknown fields") {
    const json j{{"command", "eval"}, {"params", {1.0, 1.0, 2.0}}, {"tolrel", 1e-11}};
    CHECK_THROWS_AS(job_from_json(j), DomainError);
}

TEST_CASE("job parsing requires a command") {
    CHECK_THROWS_AS(job_from_json(json{{"params", {1.0, 1.0, 2.0}}}), DomainError);
}

TEST_CASE("rational job fields accept strings and integers, not floats") {
    CHECK(job_from_json(json{{"command", "verify"}, {"a", "1/2"}}).a == "1/2");
    CHECK(job_from_json(json{{"command", "verify"}, {"a", 3}}).a == "3");
    CHECK_THROWS_AS(job_from_json(json{{"command", "verify"}, {"a", 0.5}}), DomainError);
}

TEST_CASE("job specs round-trip through json") {
    JobSpec s;
    s.command = "verify";
    s.identity = "thomae";
    s.random = 25;
    s.seed = 99;
    s.tol_rel = 1e-9;
    const JobSpec back = job_from_json(to_json(s));
    CHECK(back.command == s.command);
    CHECK(back.identity == s.identity);
    CHECK(back.random == s.random);
    CHECK(back.seed == s.seed);
    CHECK(back.tol_rel == s.tol_rel);
    CHECK_FALSE(back.params);
}

TEST_CASE("result records conform to the published schema") {
    const json schema = load_schema();
    CHECK(schema["required"].size() == 4);

    ResultRecord full;
    full.command = "verify";
    full.inputs["identity"] = "gauss";
    full.value = 1.25;
    full.exact = "5/4";
    full.diagnostics["cases"] = json::array();
    full.pass = true;
    full.wall_ms = 3.5;
    check_against_schema(to_json(full), schema);

    ResultRecord minimal;
    minimal.command = "invalid";
    minimal.error = "input: line 3: bad";
    minimal.wall_ms = 0.0;
    check_against_schema(to_json(minimal), schema);
}

TEST_CASE("result records round-trip through json") {
    ResultRecord r;
    r.command = "eval";
    r.inputs["params"] = {1.0, 1.0, 2.0};
    r.value = 1.3862943611198906;
    r.diagnostics["terms_used"] = 30;
    r.wall_ms = 0.2;
    const ResultRecord back = record_from_json(to_json(r));
    CHECK(back.command == r.command);
    CHECK(back.value == r.value);
    CHECK(back.inputs == r.inputs);
    CHECK(back.diagnostics == r.diagnostics);
    CHECK_FALSE(back.pass);
    CHECK_FALSE(back.error);
}

TEST_CASE("record key order is stable for line-oriented consumers") {
    ResultRecord r;
    r.command = "eval";
    r.value = 2.0;
    r.pass = true;
    r.wall_ms = 1.0;
    const std::string line = to_json(r).dump();
    CHECK(line.find("\"command\"") < line.find("\"inputs\""));
    CHECK(line.find("\"inputs\"") < line.find("\"value\""));
    CHECK(line.find("\"value\"") < line.find("\"diagnostics\""));
    CHECK(line.find("\"diagnostics\"") < line.find("\"wall_ms\""));
}
