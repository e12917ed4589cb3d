#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using pancyc::cli::ExitCode;
using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = pancyc::cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kFig2 = R"({"n": 14, "chords": [[1, 13], [3, 14], [9, 14]]})";

} // namespace

TEST_CASE("spectrum and verify") {
    auto s = run({"spectrum"}, kFig2);
    REQUIRE(s.code == ExitCode::ok);
    auto j = Json::parse(s.out);
    CHECK(j["pancyclic"] == true);
    CHECK(j["cycle_count"] == 13);
    CHECK(j["shi_bound"] == 15);
    CHECK(j["within_shi_bound"] == true);

    auto v = run({"verify", "-", "--oracle"}, R"({"n": 6, "chords": [[1, 3]]})");
    REQUIRE(v.code == ExitCode::ok);
    auto vj = Json::parse(v.out);
    CHECK(vj["pancyclic"] == false);
    CHECK(vj["missing_lengths"] == Json::parse("[4]"));
    CHECK(vj["oracle"]["agreement"] == "methods agree");

    auto big = run({"verify", "--oracle"}, R"({"n": 30, "chords": [[1, 3]]})");
    CHECK(big.code == ExitCode::invalid_data);
    CHECK(run({"verify"}, R"({"n": 30, "chords": [[1, 3]]})").code == ExitCode::ok);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run({"spectrum"}, "{not json").code == ExitCode::usage);
    CHECK(run({"spectrum"}, R"({"n": 6, "chords": [[1, 2]]})").code == ExitCode::invalid_data);
    CHECK(run({"spectrum", "/nonexistent/graph.json"}).code == ExitCode::usage);
    CHECK(run({}).code == ExitCode::usage);
    CHECK(run({"frobnicate"}).code == ExitCode::usage);
    CHECK(run({"search"}).code == ExitCode::usage);
    CHECK(run({"search", "--n", "2"}).code == ExitCode::usage);
    CHECK(run({"table", "--from", "9", "--to", "5"}).code == ExitCode::usage);
    CHECK(run({"construct", "--n", "10"}).code == ExitCode::usage);
    CHECK(run({"reduce"}, R"({"n": 6, "chords": [[1, 3]]})").code == ExitCode::invalid_data);
    CHECK(run({"--help"}).code == ExitCode::ok);
}

TEST_CASE("search, prove-none and table") {
    auto s = run({"search", "--n", "9", "--jobs", "1"});
    REQUIRE(s.code == ExitCode::ok);
    auto j = Json::parse(s.out);
    CHECK(j["m"] == 12);
    CHECK(j["k"] == 3);
    CHECK_FALSE(j.contains("wall_time_seconds"));
    CHECK(Json::parse(run({"search", "--n", "9", "--timing"}).out).contains("wall_time_seconds"));
    CHECK(run({"search", "--n", "15", "--max-k", "3"}).code == ExitCode::failure);

    auto p = run({"prove-none", "--n", "15", "--k", "3"});
    REQUIRE(p.code == ExitCode::ok);
    auto pj = Json::parse(p.out);
    CHECK(pj["complete"] == true);
    CHECK(pj["pancyclic_found"] == false);
    auto found = run({"prove-none", "--n", "14", "--k", "3"});
    CHECK(found.code == ExitCode::ok);
    CHECK(Json::parse(found.out)["pancyclic_found"] == true);

    auto t = run({"table", "--from", "3", "--to", "8"});
    REQUIRE(t.code == ExitCode::ok);
    CHECK(t.out == "n,k,m\n3,0,3\n4,1,5\n5,1,6\n6,2,8\n7,2,9\n8,2,10\n");
    auto tj = run({"table", "--from", "3", "--to", "4", "--format", "json"});
    REQUIRE(tj.code == ExitCode::ok);
    CHECK(Json::parse(tj.out).size() == 2);
}

TEST_CASE("bounds, construct and reduce") {
    auto b = Json::parse(run({"bounds", "--n", "25"}).out);
    CHECK(b["bondy_lower"] == 29);
    CHECK(b["construction_upper"] == 30);

    auto c = run({"construct", "--n", "30"});
    REQUIRE(c.code == ExitCode::ok);
    auto cj = Json::parse(c.out);
    CHECK(cj["graph"]["n"] == 30);
    CHECK(cj["verification"]["pancyclic"] == true);
    CHECK(cj["verification"]["edge_count"] == 35);
    CHECK(Json::parse(run({"construct", "--n", "38"}).out)["verification"]["pancyclic"] == false);
    CHECK(Json::parse(run({"construct", "--figure2"}).out)["verification"]["edge_count"] == 17);

    auto r = run({"reduce", "-"}, kFig2);
    REQUIRE(r.code == ExitCode::ok);
    auto rj = Json::parse(r.out);
    CHECK(rj["prop3"].is_null());
    CHECK(rj["thm4"].empty());
    REQUIRE(rj["prop5"].size() >= 1);
    bool saw_case2 = false;
    for (const auto& p : rj["prop5"]) saw_case2 = saw_case2 || p["case"] == 2;
    CHECK(saw_case2);
}

TEST_CASE("journal directory from the environment") {
    const auto dir = std::filesystem::temp_directory_path() / "pancyc-cli-journal";
    std::filesystem::remove_all(dir);
    setenv("PANCYC_OUTDIR", dir.c_str(), 1);
    auto first = run({"prove-none", "--n", "12", "--k", "2"});
    auto second = run({"prove-none", "--n", "12", "--k", "2"});
    unsetenv("PANCYC_OUTDIR");
    REQUIRE(first.code == ExitCode::ok);
    CHECK(std::filesystem::exists(dir / "search-12-2.journal"));
    auto a = Json::parse(first.out);
    auto b = Json::parse(second.out);
    CHECK(a["resumed_shards"] == 0);
    CHECK(b["resumed_shards"] == b["shards"]);
    CHECK(a["examined"] == b["examined"]);
    std::filesystem::remove_all(dir);
}
