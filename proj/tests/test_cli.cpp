#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hyperg/records.hpp"

using hyperg::json;

namespace {

struct RunResult {
    std::string out;
    int status = -1;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLI_BIN_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::vector<json> parse_lines(const std::string& out) {
    std::vector<json> recs;
    std::size_t pos = 0;
    while (pos < out.size()) {
        const std::size_t eol = out.find('\n', pos);
        const std::string line = out.substr(pos, eol - pos);
        if (!line.empty()) recs.push_back(json::parse(line));
        if (eol == std::string::npos) break;
        pos = eol + 1;
    }
    return recs;
}

}  // namespace

TEST_CASE("eval prints the reference value in text form") {
    const RunResult r = run("eval --params 0.5,0.6,0.7,2,2.5");
    CHECK(r.status == 0);
    CHECK(r.out.find("value = 1.05545989607611") != std::string::npos);
    CHECK(r.out.find("converged = yes") != std::string::npos);
    CHECK(r.out.find("tail corrected = yes") != std::string::npos);
}

TEST_CASE("json output is a schema-shaped record") {
    const RunResult r = run("eval --params 0.5,0.6,0.7,2,2.5 --format json");
    CHECK(r.status == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["command"] == "eval");
    CHECK(rec["value"].get<double>() == Catch::Approx(1.0554598960761149).epsilon(1e-11));
    CHECK(rec["diagnostics"]["converged"].get<bool>());
    CHECK(rec.contains("inputs"));
    CHECK(rec.contains("wall_ms"));

    std::ifstream in(SCHEMA_PATH);
    REQUIRE(in.good());
    const json schema = json::parse(in);
    std::set<std::string> allowed;
    for (const auto& [key, val] : schema["properties"].items()) allowed.insert(key);
    for (const auto& [key, val] : rec.items()) CHECK(allowed.count(key) == 1);
}

TEST_CASE("two-numerator eval takes an argument") {
    const RunResult r = run("eval --params 1,1,2 --x 0.5 --format json --tol-rel 1e-13");
    CHECK(r.status == 0);
    CHECK(json::parse(r.out)["value"].get<double>() ==
          Catch::Approx(1.3862943611198906).epsilon(1e-12));
}

TEST_CASE("global tolerance flags reach the engine") {
    const RunResult loose = run("eval --params 0.5,0.6,0.7,2,2.5 --format json --max-terms 100");
    CHECK(loose.status == 1);  // accuracy failure is in-band, not input error
    const json rec = json::parse(loose.out);
    CHECK_FALSE(rec["diagnostics"]["converged"].get<bool>());
    CHECK(rec["error"].get<std::string>().find("accuracy") == 0);
}

TEST_CASE("invalid input exits with the input code and no record") {
    CHECK(run("eval --params 1,1,1,2,2 --x 0.5").status == 2);
    CHECK(run("eval --params 1,2").status == 2);
    CHECK(run("transform --identity thomae --params -0.5,0.6,0.7,2,2.5").status == 2);
    CHECK(run("eval --params 1,1,1,1.5,1.5").status == 2);  // divergent
    const RunResult r = run("eval --params 1,1,1,1.5,1.5 --format json");
    CHECK(r.out.empty());  // nothing on stdout, reason goes to stderr
}

TEST_CASE("transform prints the image and prefactor") {
    const RunResult r = run("transform --identity thomae --params 0.5,0.6,0.7,2,2.5 --format json");
    CHECK(r.status == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["diagnostics"]["representation"] == "thomae");
    const auto img = rec["diagnostics"]["image_params"];
    CHECK(img[0].get<double>() == Catch::Approx(1.5));
    CHECK(rec["diagnostics"]["image_excess"].get<double>() == Catch::Approx(0.5));
    CHECK(rec["diagnostics"]["prefactor"].contains("numerator_args"));
}

TEST_CASE("verify runs seeded random batches deterministically") {
    const std::string args = "verify --identity gauss --random 4 --seed 77 --format json";
    const RunResult a = run(args);
    const RunResult b = run(args);
    CHECK(a.status == 0);
    const json ra = json::parse(a.out), rb = json::parse(b.out);
    CHECK(ra["pass"].get<bool>());
    CHECK(ra["diagnostics"]["cases"] == rb["diagnostics"]["cases"]);
    CHECK(ra["diagnostics"]["pass_count"].get<int>() == 4);
}

TEST_CASE("verify single explicit case") {
    const RunResult r = run("verify --identity saalschutz --n 3 --a 1/2 --b 2/3 --c 5/4");
    CHECK(r.status == 0);
    CHECK(r.out.find("1 pass / 0 fail") != std::string::npos);
}

TEST_CASE("prove emits all eight stages and passes") {
    const RunResult r = run("prove --params 0.5,0.6,0.7,2,2.5 --format json");
    CHECK(r.status == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["pass"].get<bool>());
    CHECK(rec["diagnostics"]["stages"].size() == 8);
    CHECK(rec["diagnostics"]["max_pairwise_discrepancy"].get<double>() < 1e-8);
}

TEST_CASE("closed form produces exact rationals") {
    const RunResult r = run("closed-form --identity saalschutz --n 3 --a 1/2 --b 2/3 --c 5/4 "
                            "--format json");
    CHECK(r.status == 0);
    const json rec = json::parse(r.out);
    CHECK(rec["exact"].is_string());
    CHECK(json::parse(run("closed-form --identity gauss --params 0.5,0.5,2 --format json").out)
              ["value"].get<double>() == Catch::Approx(1.2732395447351627));
}

TEST_CASE("batch preserves order, isolates bad lines, and reports failure") {
    const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string path = dir + "/hyperg_cli_jobs.jsonl";
    {
        std::ofstream f(path);
        f << R"({"command":"eval","params":[0.5,0.6,0.7,2,2.5]})" << "\n";
        f << "this is not json\n";
        f << R"({"command":"closed-form","identity":"gauss","params":[0.5,0.5,2]})" << "\n";
        f << R"({"command":"eval","params":[1,1,1,1.5,1.5]})" << "\n";
    }
    const RunResult r = run("batch --input " + path);
    CHECK(r.status == 1);
    const auto recs = parse_lines(r.out);
    REQUIRE(recs.size() == 4);
    CHECK(recs[0]["command"] == "eval");
    CHECK(recs[0]["value"].get<double>() == Catch::Approx(1.0554598960761149).epsilon(1e-11));
    CHECK(recs[1]["command"] == "invalid");
    CHECK(recs[1]["error"].get<std::string>().find("line 2") != std::string::npos);
    CHECK(recs[2]["command"] == "closed-form");
    CHECK(recs[3]["error"].get<std::string>().find("divergence") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("batch of clean jobs exits zero") {
    const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string path = dir + "/hyperg_cli_ok.jsonl";
    {
        std::ofstream f(path);
        f << R"({"command":"closed-form","identity":"gauss","params":[0.5,0.5,2]})" << "\n";
        f << R"({"command":"verify","identity":"gauss","random":2,"seed":5})" << "\n";
    }
    const RunResult r = run("batch --input " + path);
    CHECK(r.status == 0);
    CHECK(parse_lines(r.out).size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("empty batch input is not a failure") {
    CHECK(run("batch --input /dev/null").status == 0);
}

TEST_CASE("unknown flags and subcommands are rejected") {
    CHECK(run("evaluate --params 1,1,2").status != 0);
    CHECK(run("eval --params 1,1,2 --bogus 3").status != 0);
}
