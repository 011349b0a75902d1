#include "haal/json_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
    haal::Json json() const { return haal::Json::parse(out); }
};

Run run(const std::string& args, const std::string& env = "")
{
    std::string cmd = env + (env.empty() ? "" : " ") + "'" HAAL_CLI_PATH "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / ("haal_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("membership verb")
{
    Run r = run("poly delta-check 'x^2-3x+1'");
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["schema"] == "haal.v1");
    CHECK(j["member"] == true);
    CHECK(j["delta_prime"] == true);

    r = run("poly delta-check 'x^2-2x+1'");
    CHECK(r.code == 0);
    CHECK(r.json()["member"] == false);
    CHECK(r.json()["failed_condition"] == "RootsNotRealDistinctPositive");
}

TEST_CASE("class count verb")
{
    Run r = run("nilp count --n 4");
    CHECK(r.code == 0);
    CHECK(r.json()["total"] == 6);
    CHECK(run("nilp count --n 3").json()["total"] == 3);
}

TEST_CASE("diffeomorphism verb")
{
    Run r = run("solv equiv 'x^3-6x^2+7x-1' 'x^3-7x^2+6x-1'");
    CHECK(r.code == 0);
    CHECK(r.json()["diffeomorphic"] == true);
    CHECK(run("solv equiv 'x^3-6x^2+7x-1' 'x^3-6x^2+8x-1'").json()["diffeomorphic"] == false);
}

TEST_CASE("exit codes")
{
    Run r = run("poly delta-check 'x^2-3y+1'");
    CHECK(r.code == 2);
    CHECK(r.json()["error"]["kind"] == "parse");
    CHECK(r.json()["error"]["position"] == 5);

    r = run("solv build 'x^2-2x+1'");
    CHECK(r.code == 1);
    CHECK(r.json()["error"]["kind"] == "NotDeltaMember");

    CHECK(run("").code == 2);
    CHECK(run("poly").code == 2);
    CHECK(run("poly power 'x^2-3x+1'").code == 2);  // --k missing
    CHECK(run("solv product 'x^2-3x+1' 'x^2-3x+1'").code == 1);
}

TEST_CASE("polynomial verbs")
{
    CHECK(run("poly reciprocal 'x^3-6x^2+7x-1'").json()["reciprocal"] == "x^3 - 7x^2 + 6x - 1");
    CHECK(run("poly power 'x^2-3x+1' --k 2").json()["power"] == "x^2 - 7x + 1");
    CHECK(run("poly resultant 'x^2-4x+1' 'x^3-6x^2+7x-1'").json()["resultant"] == "-3");
    CHECK(run("poly product 'x^2-3x+1' 'x^2-4x+1'").json()["product"] == "x^4 - 7x^3 + 14x^2 - 7x + 1");
    CHECK(run("poly build-prime --n 5").json()["delta_prime"] == true);
    auto e1 = run("poly enumerate --n 3 --bound 12").json();
    auto e4 = run("poly enumerate --n 3 --bound 12 --jobs 4").json();
    CHECK(e1["count"] == 47);
    CHECK(e1["polys"] == e4["polys"]);
}

TEST_CASE("structure verbs")
{
    auto j = run("nilp canon --m 2 --p 1 --s 0 --ell 1").json();
    CHECK(j["n"] == 3);
    j = run("nilp admissible --parts 3:3,2:1 --d 0").json();
    CHECK(j["admissible"] == true);
    j = run("dim12 classify --case B1 --a 1 --c 2 --v0 zero").json();
    CHECK(j["family"] == "s9^{1/2}");
    j = run("dim12 classify --case B1 --a 1/2 --c -1/2 --d 1").json();
    CHECK(j["lattice"]["verdict"] == "No");

    std::string m = temp_file("jblock.json", R"({"rows":2,"cols":2,"entries":[["0","0"],["1","0"]]})");
    j = run("exp --A " + m + " --t 1 --v 1,0").json();
    CHECK(j["v_exact"] == haal::Json::array({"1", "1/2"}));
    CHECK(j["exp_invertible_for_all_t"] == true);

    auto w = run("lattice witness --family s13 --param 3 --verify").json();
    CHECK(w["verification"]["accepted"] == true);
}

TEST_CASE("rendered polynomials parse back and output is stable")
{
    auto j = run("poly enumerate --n 4 --bound 14").json();
    REQUIRE(j["count"].get<int>() > 0);
    for (const auto& p : j["polys"]) {
        std::string text = p.get<std::string>();
        CHECK(haal::parse_poly(text).str() == text);
        auto back = run("poly delta-check '" + text + "'").json();
        CHECK(back["poly"] == text);
        CHECK(back["member"] == true);
    }
    Run a = run("solv build 'x^3-6x^2+7x-1'"), b = run("solv build 'x^3-6x^2+7x-1'");
    CHECK(a.out == b.out);
    // keys are emitted in sorted order: the raw text equals a re-dump of the parsed (sorted) object
    CHECK(a.out == a.json().dump(2) + "\n");
}

TEST_CASE("precision override from the environment")
{
    auto coarse = run("solv build 'x^2-3x+1'", "HAAL_PRECISION=1e-3").json();
    auto fine = run("solv build 'x^2-3x+1'").json();
    double c = coarse["xp_numeric"][1].get<double>(), f = fine["xp_numeric"][1].get<double>();
    CHECK(std::abs(f - 0.9624236501192069) < 1e-11);
    CHECK(std::abs(c - f) < 1e-2);
}
