#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

RunResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string in_file = temp_path("stdin.json");
    std::string out_file = temp_path("stdout.txt");
    {
        std::ofstream f(in_file);
        f << stdin_text;
    }
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " < " + in_file + " > " +
                      out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(status);
    std::ifstream f(out_file);
    std::ostringstream buf;
    buf << f.rdbuf();
    res.out = buf.str();
    return res;
}

json run_json(const std::string& args, const std::string& stdin_text, int expect_code) {
    auto res = run_cli(args, stdin_text);
    REQUIRE(res.exit_code == expect_code);
    return json::parse(res.out);
}

std::set<std::pair<int, int>> diagonal_set(const json& diags) {
    std::set<std::pair<int, int>> out;
    for (const auto& d : diags) {
        int a = d.at(0).get<int>(), b = d.at(1).get<int>();
        out.insert({std::min(a, b), std::max(a, b)});
    }
    return out;
}

const char* kSixDistinct =
    R"({"angles_deg": [0, 47, 110, 162, 223, 300]})";
const char* kSquare =
    R"({"points": [[1, 0], [0, 1], [-1, 0], [0, -1]]})";

} // namespace

TEST_CASE("gen --regular emits exact turn fractions") {
    auto doc = run_json("gen --regular 6", "", 0);
    std::vector<std::string> want = {"0/6", "1/6", "2/6", "3/6", "4/6", "5/6"};
    CHECK(doc.at("angles_turns").get<std::vector<std::string>>() == want);
    CHECK(doc.at("mode") == "exact");

    auto checked = run_json("check -", doc.dump(), 0);
    CHECK(checked.at("degeneracy") == "Degenerate");
}

TEST_CASE("check classifies the fixtures") {
    auto doc = run_json("check -", kSquare, 0);
    CHECK(doc.at("degeneracy") == "Degenerate");
    REQUIRE(doc.at("witnesses").size() >= 1);
    CHECK(doc.at("witnesses")[0] == json({0, 1, 2, 3}));

    doc = run_json("check -", kSixDistinct, 0);
    CHECK(doc.at("degeneracy") == "DistinctDiagonals");
}

TEST_CASE("malformed input exits 1 with a parse error") {
    auto res = run_cli("check -", "this is not json");
    CHECK(res.exit_code == 1);
    CHECK(json::parse(res.out).at("error") == "parse");
}

TEST_CASE("triangulate auto on the distinct fixture") {
    auto doc = run_json("triangulate -", kSixDistinct, 0);
    CHECK(doc.at("mode") == "simplified");
    CHECK(diagonal_set(doc.at("diagonals")) ==
          std::set<std::pair<int, int>>{{1, 3}, {0, 3}, {3, 5}});
    CHECK(doc.at("diagonals").size() == 3);
    CHECK(doc.at("dual_path").size() == 4);
    CHECK(doc.at("ears").size() == 2);
}

TEST_CASE("forcing simplified mode on a degenerate input exits 2") {
    auto res = run_cli("triangulate --mode simplified -", kSquare);
    CHECK(res.exit_code == 2);
    CHECK(json::parse(res.out).at("error") == "precondition_violated");
}

TEST_CASE("triangulate auto on the regular hexagon is stable") {
    auto gen = run_json("gen --regular 6", "", 0);
    auto first = run_json("triangulate -", gen.dump(), 0);
    CHECK(first.at("mode") == "canonical");
    CHECK(first.at("frame") == "angle");
    for (int i = 0; i < 3; ++i) {
        auto again = run_json("triangulate -", gen.dump(), 0);
        CHECK(again.at("diagonals") == first.at("diagonals"));
    }
}

TEST_CASE("enumerate counts winners") {
    auto gen = run_json("gen --regular 6", "", 0);
    auto doc = run_json("enumerate -", gen.dump(), 0);
    CHECK(doc.at("count") == 12);
    CHECK(doc.at("winners").size() == 12);

    doc = run_json("enumerate -", kSquare, 0);
    CHECK(doc.at("count") == 2);

    doc = run_json("enumerate -", kSixDistinct, 0);
    CHECK(doc.at("count") == 1);

    doc = run_json("enumerate --limit 5 -", gen.dump(), 0);
    CHECK(doc.at("count") == 5);
    CHECK(doc.at("truncated") == true);
}

TEST_CASE("oracle subcommand with guard") {
    auto gen5 = run_json("gen --regular 5", "", 0);
    auto doc = run_json("oracle -", gen5.dump(), 0);
    CHECK(doc.at("count") == 5);

    auto tri = run_json("triangulate -", kSixDistinct, 0);
    doc = run_json("oracle -", kSixDistinct, 0);
    REQUIRE(doc.at("count") == 1);
    CHECK(diagonal_set(doc.at("winners")[0]) == diagonal_set(tri.at("diagonals")));

    auto gen20 = run_json("gen --regular 20", "", 0);
    auto res = run_cli("oracle -", gen20.dump());
    CHECK(res.exit_code == 2);
    CHECK(json::parse(res.out).at("error") == "too_large");
}

TEST_CASE("gen --random round-trips as DistinctDiagonals") {
    auto gen = run_json("gen --random 8 --seed 7", "", 0);
    CHECK(gen.at("angles_deg").size() == 8);
    auto checked = run_json("check -", gen.dump(), 0);
    CHECK(checked.at("degeneracy") == "DistinctDiagonals");
}

TEST_CASE("gen --equal-ears round-trips as NoSymmetricQuadruple") {
    auto gen = run_json("gen --equal-ears 9 --seed 1", "", 0);
    CHECK(gen.at("angles_turns").size() == 9);
    auto checked = run_json("check -", gen.dump(), 0);
    CHECK(checked.at("degeneracy") == "NoSymmetricQuadruple");
}

TEST_CASE("gen rejects invalid sizes") {
    CHECK(run_cli("gen --regular 3").exit_code == 1);
    CHECK(run_cli("gen --random 2 --seed 1").exit_code == 1);
}

TEST_CASE("SVG output contains the right element counts") {
    std::string svg_file = temp_path("drawing.svg");
    auto doc = run_json("triangulate --svg " + svg_file + " -", kSixDistinct, 0);
    CHECK(doc.at("svg") == svg_file);
    std::ifstream f(svg_file);
    std::ostringstream buf;
    buf << f.rdbuf();
    std::string svg = buf.str();
    auto count = [&](const std::string& needle) {
        std::size_t pos = 0, c = 0;
        while ((pos = svg.find(needle, pos)) != std::string::npos) {
            ++c;
            pos += needle.size();
        }
        return c;
    };
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(count("class=\"point\"") == 6);
    CHECK(count("class=\"chord\"") == 6);
    CHECK(count("class=\"diagonal\"") == 3);
    std::remove(svg_file.c_str());
}

TEST_CASE("bench runs on small sizes and reports linearity") {
    auto res = run_cli("bench --sizes 1024 2048 4096 --seed 3");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("ops/n") != std::string::npos);
    CHECK(res.out.find("OK") != std::string::npos);
}
