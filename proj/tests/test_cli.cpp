#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const char* bin = std::getenv("BIGALG_CLI");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t k = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args)
{
    auto r = run(args);
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

fs::path scratch()
{
    auto d = fs::temp_directory_path() / "bigalg_cli_test";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("qanalogue of the zero weight in the adjoint")
{
    auto j = run_json("qanalogue --n 3 --mu 1,1 --lambda 0,0");
    CHECK(j["m"] == nlohmann::json::parse("[[1,1],[2,1]]"));
    CHECK(j["config"]["n"] == 3);
    CHECK(j["config"]["seed"] == 0);
}

TEST_CASE("hilbert numerator of the decuplet")
{
    auto j = run_json("hilbert --n 3 --mu 3,0");
    CHECK(j["numerator"] == nlohmann::json::parse("[[0,1],[1,1],[2,2],[3,2],[4,2],[5,1],[6,1]]"));
    CHECK(j["status"] == "PASS");
    CHECK(j["value_at_1"] == 10);
}

TEST_CASE("bad arguments exit with code 2")
{
    CHECK(run("rep --n 3 --mu 1,1 --bogus").code == 2);
    CHECK(run("rep --n 3 --mu 1,-1").code == 2);
    CHECK(run("rep --n 3 --mu 1,1,1").code == 2);
    CHECK(run("qanalogue --n 3 --mu 1,1").code == 2);
    CHECK(run("brylinski --n 3 --mu 1,1 --lambda 0,0 --torus diagonal").code == 2);
    CHECK(run("spectrum --n 3 --mu 1,1 --grid 0:1 --out /dev/null").code == 2);
    CHECK(run("nosuchcommand").code == 2);
}

TEST_CASE("output is deterministic")
{
    auto a = run("relations --n 3 --mu 1,1 --seed 7");
    auto b = run("relations --n 3 --mu 1,1 --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run("multalg --n 3 --mu 1,1 --lambda 0,0");
    CHECK(c.out == run("multalg --n 3 --mu 1,1 --lambda 0,0").out);
}

TEST_CASE("relations verify accepts strings and term lists")
{
    auto path = scratch() / "octet_relations.json";
    auto derived = run_json("relations --n 3 --mu 1,1");
    {
        nlohmann::json in;
        in["relations"] = derived["relations"];
        in["relations"][1] = "3*M1^2 + N1^2 + 12*c2";
        std::ofstream f(path);
        f << in.dump();
    }
    auto j = run_json("relations --n 3 --mu 1,1 --verify " + path.string());
    CHECK(j["status"] == "PASS");
    CHECK(j["checks"].size() == derived["relations"].size());

    {
        std::ofstream f(path);
        f << R"({"relations": ["3*M1^2 + N1^2 + 12*c2", "M1*N1 + 3*M2"]})";
    }
    auto partial = run_json("relations --n 3 --mu 1,1 --verify " + path.string());
    CHECK(partial["checks"][0]["status"] == "PASS");
    CHECK(partial["graded_dims_match"] == false);

    {
        std::ofstream f(path);
        f << R"({"relations": ["3*M1^2 + N1^2 - 12*c2"]})";
    }
    auto bad = run_json("relations --n 3 --mu 1,1 --verify " + path.string());
    CHECK(bad["status"] == "FAIL");
    CHECK(bad["checks"][0].contains("first_nonzero"));
}

TEST_CASE("spectrum csv")
{
    auto path = scratch() / "sl2.csv";
    auto j = run_json("spectrum --n 2 --mu 4 --grid -4:1:5 --out " + path.string());
    CHECK(j["rows"] == 26);
    CHECK(j["status"] == "PASS");
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header == "param,generator,branch,value");
}

TEST_CASE("brylinski and multalg agree with the q-analogue")
{
    for (std::string torus : {"standard", "h_plus_e"}) {
        auto j = run_json("brylinski --n 3 --mu 2,2 --lambda 1,1 --torus " + torus);
        CHECK(j["jump_series"] == j["lusztig_m"]);
    }
    auto m = run_json("multalg --n 3 --mu 1,1 --lambda 0,0");
    CHECK(m["graded_dims"] == nlohmann::json::parse("[1,1]"));
    CHECK(m["nilpotency"]["N1"] == 2);
}
