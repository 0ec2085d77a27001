#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "formale/io.hpp"

using namespace formale;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "formale-cli-test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

} // namespace

TEST_CASE("expand prints the central binomial stream") {
    const auto r = run({"expand", "--curve", "[0,0,0,1,0]", "--order", "16", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    const auto& b = j["b"];
    REQUIRE(b.size() == 16);
    for (std::size_t n = 1; n <= 16; ++n) {
        const std::string expected = n == 1 ? "1" : n == 5 ? "2" : n == 9 ? "6" : n == 13 ? "20" : "0";
        CHECK(b[n - 1] == expected);
    }
    CHECK(j["w"][7] == "1");
}

TEST_CASE("expand on the a3 family, text output") {
    const auto r = run({"expand", "--curve", "[0,0,1,0,0]", "--order", "10"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("b(1) = 1\n") != std::string::npos);
    CHECK(r.out.find("b(4) = 2\n") != std::string::npos);
    CHECK(r.out.find("b(7) = 6\n") != std::string::npos);
    CHECK(r.out.find("b(10) = 20\n") != std::string::npos);
}

TEST_CASE("exit codes for bad input") {
    CHECK(run({"expand", "--curve", "[0,0,0,0,0]"}).code == cli::kInvalidCurve);
    CHECK(run({"expand", "--curve", "[0,0,0]"}).code == cli::kParseError);
    CHECK(run({"expand", "--curve", "[0,0,0,1,0]", "--order", "three"}).code == cli::kParseError);
    CHECK(run({"frobnicate"}).code == cli::kParseError);
    CHECK(run({"check", "thm2", "--curve", "[0,0,0,1,0]", "--p", "5", "--n-max", "5", "--order", "10"}).code ==
          cli::kInsufficientOrder);
    CHECK(run({"check", "thm2", "--curve", "[0,0,0,5,0]", "--p", "5", "--n-max", "2"}).code == cli::kInvalidCurve);
    CHECK(run({"check", "thm2", "--curve", "[0,0,0,1,0]", "--p", "6", "--n-max", "2"}).code == cli::kParseError);
    CHECK(run({"check", "cor33", "--curve", "[0,0,1,0,0]", "--p-max", "20"}).code == cli::kParseError);
}

TEST_CASE("check thm2 worked example") {
    const auto r = run({"check", "thm2", "--curve", "[0,0,0,1,0]", "--p", "5", "--n-max", "5", "--s-max", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Thm2 p=5 n=5 s=2 residual=925 modulus=25 pass") != std::string::npos);
    const auto j = Json::parse(
        run({"check", "thm2", "--curve", "[0,0,0,1,0]", "--p", "5", "--n-max", "5", "--s-max", "2", "--json"}).out);
    for (const auto& rep : j) {
        const auto back = report_from_json(rep);
        CHECK(back.pass == divides(back.modulus, back.residual));
    }
}

TEST_CASE("check sweeps skip bad primes unless asserted") {
    const auto r = run({"check", "cor1", "--curve", "[0,-1,-1,0,0]", "--p-max", "13", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.err.find("skipping p = 11") != std::string::npos);
    const auto asserted =
        run({"check", "cor1", "--curve", "[0,-1,-1,0,0]", "--p-max", "13", "--n-max", "4", "--assert-minimal"});
    CHECK(asserted.code == 0);
    CHECK(asserted.out.find("Cor1-mult-b p=11") != std::string::npos);
}

TEST_CASE("check variants report the difference") {
    CHECK(run({"check", "cor33", "--curve", "[0,0,0,2,0]", "--p-max", "40", "--variant", "a-power"}).code == 0);
    CHECK(run({"check", "cor33", "--curve", "[0,0,0,2,0]", "--p-max", "40", "--variant", "printed"}).code ==
          cli::kCongruenceFailure);
    CHECK(run({"check", "cor34", "--curve", "[0,0,1,0,0]", "--p-max", "30"}).code == 0);
    CHECK(run({"check", "sec4", "--curve", "[0,0,0,0,1]", "--p-max", "60"}).code == 0);
    CHECK(run({"check", "remark11", "--n-max", "6", "--s-max", "2"}).code == 0);
    CHECK(run({"check", "cor33", "--curve", "[0,0,0,1,0]", "--p-max", "20", "--variant", "other"}).code ==
          cli::kParseError);
}

TEST_CASE("points lists local data") {
    const auto r = run({"points", "--curve", "[0,0,0,1,0]", "--p-max", "50", "--json"});
    REQUIRE(r.code == 0);
    const auto j = Json::parse(r.out);
    bool seen = false;
    for (const auto& d : j) {
        if (d["p"] == 7) {
            CHECK(d["t_p"] == 0);
            seen = true;
        }
    }
    CHECK(seen);
    CHECK(j[0]["type"] == "additive");
}

TEST_CASE("lseries matches the eta product") {
    const auto r = run({"lseries", "--curve", "[0,-1,-1,0,0]", "--n", "200", "--eta-compare"});
    CHECK(r.code == 0);
    CHECK(r.out.find("euler == eta: true") != std::string::npos);
    const auto wrong = run({"lseries", "--curve", "[0,0,0,1,0]", "--n", "20", "--eta-compare"});
    CHECK(wrong.code == cli::kCongruenceFailure);
    CHECK(wrong.out.find("euler == eta: false") != std::string::npos);
    const auto plain = run({"lseries", "--curve", "[0,-1,-1,0,0]", "--n", "5", "--json"});
    CHECK(plain.out == "[1,-2,-1,2,1]\n");
}

TEST_CASE("group-law and the isomorphism") {
    const auto r = run({"group-law", "--curve", "[0,-1,-1,0,0]", "--degree", "10", "--iso", "--json"});
    CHECK(r.code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["integral"] == true);
    CHECK(j["associative"] == true);
    CHECK(j["isomorphism"]["phi_integral"] == true);
    CHECK(j["isomorphism"]["chosen"] != "none");

    const auto c_path = temp_path("c.json");
    {
        std::ofstream c(c_path);
        c << "[1,-1,-1,2,1,2,-2,0,-2,-2]\n";
    }
    const auto bad = run({"group-law", "--curve", "[0,-1,-1,0,0]", "--degree", "10", "--iso", "--c", c_path});
    CHECK(bad.code == cli::kCongruenceFailure);
}

TEST_CASE("closed-form and tate-remark comparisons") {
    CHECK(run({"closed-form", "--curve", "[1,-2,3,-4,0]", "--order", "40"}).code == 0);
    CHECK(run({"closed-form", "--curve", "[0,0,2,0,-3]", "--order", "40"}).code == 0);
    CHECK(run({"closed-form", "--curve", "[1,2,3,4,5]"}).code == cli::kParseError);
    CHECK(run({"tate-remark", "--b", "2", "--c", "3", "--n-max", "15"}).code == 0);
    const auto unit = run({"tate-remark", "--unit", "--n-max", "6"});
    CHECK(unit.code == cli::kCongruenceFailure);
    CHECK(unit.out.find("b(2): double sum 1, closed form 0  <-- differs") != std::string::npos);
}

TEST_CASE("warm and cold cache runs are byte-identical") {
    const auto path = temp_path("traces.json");
    std::filesystem::remove(path);
    const std::vector<std::string> args{"check", "thm2", "--curve", "[1,-1,1,-3,5]", "--p-max", "23",
                                        "--n-max", "6",  "--s-max", "2", "--json", "--cache", path};
    const auto cold = run(args);
    REQUIRE(std::filesystem::exists(path));
    const auto warm = run(args);
    CHECK(cold.code == warm.code);
    CHECK(cold.out == warm.out);
    auto no_cache = args;
    no_cache.resize(no_cache.size() - 2);
    CHECK(run(no_cache).out == cold.out);

    ::setenv("FORMALE_CACHE", path.c_str(), 1);
    const auto env = run({"points", "--curve", "[1,-1,1,-3,5]", "--p-max", "23", "--json"});
    ::unsetenv("FORMALE_CACHE");
    CHECK(env.code == 0);
    std::ifstream in(path);
    const auto cache = Json::parse(in);
    CHECK(cache.contains("1,-1,1,-3,5|23"));
    std::filesystem::remove_all(std::filesystem::path(path).parent_path());
}
