#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mtab/cli.hpp"

using nlohmann::json;

namespace {

struct CliRun {
    int code;
    json out;
    std::string raw;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = mtab::run_cli(args, out, err);
    CliRun r{code, json(), out.str(), err.str()};
    if (!r.raw.empty() && (r.raw[0] == '{' || r.raw[0] == '[')) r.out = json::parse(r.raw);
    return r;
}

}  // namespace

TEST_CASE("dims subcommand") {
    CliRun r = run({"dims", "--kind", "is", "--n", "3", "--lambda", "2,1"});
    CHECK(r.code == 0);
    CHECK(r.out["dim"] == 2);
    CHECK(r.out["schema_version"] == 1);
}

TEST_CASE("tableaux subcommand") {
    CliRun r = run({"tableaux", "--shape", "2,1", "--n", "3", "--kind", "standard_distinct"});
    CHECK(r.code == 0);
    CHECK(r.out["count"] == 2);
    // skew shape serialization uses null padding for inner cells
    CliRun s = run({"tableaux", "--shape", "2,1/1", "--n", "2", "--kind", "all"});
    CHECK(s.code == 0);
    CHECK(s.out["tableaux"][0][0][0].is_null());
}

TEST_CASE("monoid subcommand") {
    CliRun r = run({"monoid", "--kind", "pt", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out["cardinality"] == 9);
    CHECK(r.out["closed_form"] == 9);

    CliRun e = run({"monoid", "--kind", "is", "--n", "3", "--element", "2,-,1"});
    CHECK(e.code == 0);
    CHECK(e.out["injective"] == true);
    CHECK(e.out["total"] == false);
    CHECK(e.out["matrix"][1][0] == "1");
}

TEST_CASE("module subcommand dumps generator matrices") {
    CliRun r = run({"module", "--kind", "t", "--n", "2", "--lambda", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out["dim"] == 1);
    CHECK(r.out["generators"].size() >= 2);
}

TEST_CASE("harmonics subcommand") {
    CliRun r = run({"harmonics", "--kind", "t", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out["total"] == 4);
    CHECK(r.out["gr_equals_J"] == true);
    CHECK(r.out["hilbert"] == json({1, 2, 1}));
}

TEST_CASE("branching subcommands") {
    CHECK(run({"branch1", "--n", "3", "--lambda", "2"}).code == 0);
    CHECK(run({"branch2", "--kind", "is", "--n", "3", "--s", "1", "--lambda", "2",
               "--structural"})
              .code == 0);
    CHECK(run({"branch3", "--kind", "t", "--n", "3", "--lambda", "2,1"}).code == 0);
}

TEST_CASE("cauchy subcommands") {
    CliRun r = run({"cauchy", "--kind", "is", "--m", "2", "--n", "2", "--r", "2", "--format",
                    "json"});
    CHECK(r.code == 0);
    CHECK(r.out["status"] == "pass");
    CHECK(run({"skew-cauchy", "--kind", "is", "--m", "2", "--n", "2", "--r", "2"}).code == 0);
}

TEST_CASE("distinct and irreducible subcommands") {
    CliRun d = run({"distinct", "--kind", "is", "--n", "3"});
    CHECK(d.code == 0);
    CHECK(d.out["consistent"] == true);

    CliRun i = run({"irreducible", "--kind", "is", "--n", "3", "--lambda", "2,1", "--seed", "9"});
    CHECK(i.code == 0);
    CHECK(i.out["status"] == "irreducible");
    CHECK(i.out["seed"] == 9);
}

TEST_CASE("config errors exit with 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"dims", "--kind", "is", "--n", "3"}).code == 2);          // missing lambda
    CHECK(run({"dims", "--kind", "bogus", "--n", "3", "--lambda", "1"}).code == 2);
    CHECK(run({"tableaux", "--shape", "1,2", "--n", "2"}).code == 2);    // not a partition
}

TEST_CASE("fixtures match the committed goldens") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "mtab-fixtures-test";
    fs::remove_all(tmp);
    CliRun r = run({"fixtures", "--out", tmp.string()});
    CHECK(r.code == 0);
    fs::path golden = fs::path(MTAB_SOURCE_DIR) / "tests" / "goldens" / "v1";
    REQUIRE(fs::exists(golden));
    for (auto& entry : fs::directory_iterator(golden)) {
        std::ifstream got(tmp / "v1" / entry.path().filename());
        std::ifstream want(entry.path());
        REQUIRE(got.good());
        json jg, jw;
        got >> jg;
        want >> jw;
        CHECK(jg == jw);
    }
    fs::remove_all(tmp);
}
